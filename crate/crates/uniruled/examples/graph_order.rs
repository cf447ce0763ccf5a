//! The partial order on colored weighted graphs: the empty graph is a
//! global minimum, admissible graphs are compared by area, genus, tail
//! counts and partition data, and strictly sup-admissible graphs are only
//! comparable from below.
//!
//! Run with: cargo run -p uniruled --example graph_order

use std::collections::BTreeMap;

use num::BigRational;
use uniruled::graph::{
    ClassData, CohWeight, ColoredGraph, GraphContext, GraphList, WeightedPartition,
};
use uniruled::order::{graph_compare, GraphOrd};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn context() -> GraphContext {
    let mut classes = BTreeMap::new();
    classes.insert(
        "A".into(),
        ClassData {
            area: rat(1),
            c1: 2,
            d_dot: 1,
            in_iota_image: true,
        },
    );
    classes.insert(
        "B".into(),
        ClassData {
            area: rat(2),
            c1: 4,
            d_dot: 2,
            in_iota_image: false,
        },
    );
    classes.insert(
        "C".into(),
        ClassData {
            area: rat(3),
            c1: 6,
            d_dot: 3,
            in_iota_image: true,
        },
    );
    GraphContext {
        n: 3,
        c_min: rat(1),
        v: None,
        classes,
        theta: vec![
            CohWeight::new(4, "pt"),
            CohWeight::new(2, "h"),
            CohWeight::new(0, "one"),
        ],
        xi: vec![CohWeight::new(3, "x")],
    }
}

fn show(label: &str, ord: GraphOrd) {
    let symbol = match ord {
        GraphOrd::Less => "<",
        GraphOrd::Greater => ">",
        GraphOrd::Equal => "=",
        GraphOrd::Incomparable => "incomparable with",
    };
    println!("{label}: {symbol}");
}

fn main() -> uniruled::Result<()> {
    let ctx = context();
    let pt = CohWeight::new(4, "pt");

    let small = GraphList::singleton(ColoredGraph::new(
        0,
        "A",
        vec![],
        WeightedPartition::new(vec![(1, pt.clone())]),
    ));
    let large = GraphList::singleton(ColoredGraph::new(
        0,
        "B",
        vec![],
        WeightedPartition::new(vec![(2, pt.clone())]),
    ));
    let sup = GraphList::singleton(ColoredGraph::new(
        0,
        "C",
        vec![],
        WeightedPartition::new(vec![(4, pt.clone())]),
    ));

    show(
        "empty vs small",
        graph_compare(&GraphList::empty(), &small, &ctx, false)?,
    );
    show(
        "small (area 1) vs large (area 2)",
        graph_compare(&small, &large, &ctx, false)?,
    );
    show(
        "large (area 2) vs sup (area 3)",
        graph_compare(&large, &sup, &ctx, false)?,
    );
    show("sup vs sup with different tails", {
        let other = GraphList::singleton(ColoredGraph::new(
            0,
            "C",
            vec![],
            WeightedPartition::new(vec![(4, CohWeight::new(2, "h"))]),
        ));
        graph_compare(&sup, &other, &ctx, false)?
    });

    // The order is preserved under disjoint union of admissible graphs.
    let union = small.union(&large);
    let union_shifted = small.union(&small);
    show(
        "small+small vs small+large (union preserves the order)",
        graph_compare(&union_shifted, &union, &ctx, false)?,
    );

    // Genus-zero mode replaces the genus clause by component count reversed.
    let one_piece = GraphList::singleton(ColoredGraph::new(
        0,
        "B",
        vec![],
        WeightedPartition::new(vec![(2, pt.clone())]),
    ));
    let two_pieces = GraphList::new(vec![
        ColoredGraph::new(
            0,
            "A",
            vec![],
            WeightedPartition::new(vec![(1, pt.clone())]),
        ),
        ColoredGraph::new(0, "A", vec![], WeightedPartition::new(vec![(1, pt)])),
    ]);
    show(
        "two pieces vs one piece of equal area (genus-zero mode)",
        graph_compare(&two_pieces, &one_piece, &ctx, true)?,
    );
    Ok(())
}
