//! Exact lower-triangular transforms over a graph poset: apply by sparse
//! accumulation, invert by forward substitution along the linear extension.
//! Applying and inverting are exact inverses of each other, and a nonzero
//! vector never maps to zero.
//!
//! Run with: cargo run -p uniruled --example triangular_solve

use std::collections::BTreeMap;
use std::sync::Arc;

use num::BigRational;
use uniruled::graph::{
    ClassData, CohWeight, ColoredGraph, GraphContext, GraphList, WeightedPartition,
};
use uniruled::poset::lower_set;
use uniruled::surface::rational_to_string;
use uniruled::triangular::{InvariantVector, TriangularMap};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn main() -> uniruled::Result<()> {
    let mut classes = BTreeMap::new();
    classes.insert(
        "A".into(),
        ClassData {
            area: rat(1, 1),
            c1: 1,
            d_dot: 1,
            in_iota_image: true,
        },
    );
    classes.insert(
        "B".into(),
        ClassData {
            area: rat(2, 1),
            c1: 3,
            d_dot: 2,
            in_iota_image: false,
        },
    );
    let ctx = GraphContext {
        n: 4,
        c_min: rat(1, 1),
        v: Some(rat(1, 1)),
        classes,
        theta: vec![CohWeight::new(6, "pt"), CohWeight::new(0, "one")],
        xi: vec![],
    };
    let root = GraphList::singleton(ColoredGraph::new(
        0,
        "B",
        vec![],
        WeightedPartition::new(vec![
            (1, CohWeight::new(6, "pt")),
            (1, CohWeight::new(6, "pt")),
        ]),
    ));

    let poset = Arc::new(lower_set(&root, &ctx, false)?);
    println!("poset of {} elements", poset.len());

    // Diagonal 1s plus a few comparable off-diagonal couplings.
    let mut entries: Vec<(usize, usize, BigRational)> =
        (0..poset.len()).map(|i| (i, i, rat(1, 1))).collect();
    for i in 0..poset.len() {
        for j in 0..i {
            if poset.entry_allowed(i, j)? {
                entries.push((i, j, rat((i + j) as i64 + 1, 3)));
            }
        }
    }
    let map = TriangularMap::new(Arc::clone(&poset), entries)?;

    let relative = InvariantVector::new(
        Arc::clone(&poset),
        (0..poset.len()).map(|i| rat(i as i64 + 1, 2)).collect(),
    )?;
    let absolute = map.apply(&relative)?;
    let recovered = map.invert(&absolute)?;

    println!("relative -> absolute -> relative:");
    for i in 0..poset.len() {
        println!(
            "  {}: {} -> {} -> {}",
            i,
            rational_to_string(&relative.values()[i]),
            rational_to_string(&absolute.values()[i]),
            rational_to_string(&recovered.values()[i]),
        );
    }
    assert_eq!(relative, recovered);
    println!("round trip is exact");

    // Invertibility propagates nonzeroness.
    assert!(!absolute.is_zero());
    println!("nonzero input stays nonzero under the transform");
    Ok(())
}
