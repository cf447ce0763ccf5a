//! The finite lower set of a standard graph: every standard union of
//! admissible graphs at or below the root in the partial order, listed in
//! linear-extension order.
//!
//! Run with: cargo run -p uniruled --example lower_set

use std::collections::BTreeMap;

use num::BigRational;
use uniruled::graph::{
    ClassData, CohWeight, ColoredGraph, GraphContext, GraphList, WeightedPartition,
};
use uniruled::poset::lower_set;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn main() -> uniruled::Result<()> {
    // Half-dimension 4: the divisor point class has degree 6. Class areas
    // 1 and 2 with B = A + A in area.
    let mut classes = BTreeMap::new();
    classes.insert(
        "A".into(),
        ClassData {
            area: rat(1),
            c1: 1,
            d_dot: 1,
            in_iota_image: true,
        },
    );
    classes.insert(
        "B".into(),
        ClassData {
            area: rat(2),
            c1: 3,
            d_dot: 2,
            in_iota_image: false,
        },
    );
    let ctx = GraphContext {
        n: 4,
        c_min: rat(1),
        v: Some(rat(1)),
        classes,
        theta: vec![CohWeight::new(6, "pt"), CohWeight::new(0, "one")],
        xi: vec![],
    };

    // Root: the dimension-zero graph on B with two point tails.
    let root = GraphList::singleton(ColoredGraph::new(
        0,
        "B",
        vec![],
        WeightedPartition::new(vec![
            (1, CohWeight::new(6, "pt")),
            (1, CohWeight::new(6, "pt")),
        ]),
    ));

    let poset = lower_set(&root, &ctx, false)?;
    println!("lower set of the root ({} elements):", poset.len());
    for (i, element) in poset.elements().iter().enumerate() {
        println!("  {i}: {}", element.canonical_key());
    }

    // Every element sits at or below the root.
    let root_index = poset.index_of(&root).expect("the root is in its lower set");
    for i in 0..poset.len() {
        assert!(poset.compare(i, root_index)?.is_le());
    }
    println!("all elements verified at or below the root");
    Ok(())
}
