//! The restricted index of genus-zero graphs with a divisor point
//! insertion: admissible graphs of area at most V carrying a point tail,
//! plus the strictly sup-admissible graphs on divisor classes of area
//! exactly V whose total multiplicity overshoots the intersection number
//! by one.
//!
//! Run with: cargo run -p uniruled --example dpt_index

use std::collections::BTreeMap;

use num::BigRational;
use uniruled::graph::{ClassData, CohWeight, GraphContext};
use uniruled::poset::build_dpt_index;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn main() -> uniruled::Result<()> {
    // One divisor class of area V = 1 with D.A = 1; the point class of the
    // divisor has degree 6 (half-dimension 4).
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
    let ctx = GraphContext {
        n: 4,
        c_min: rat(1),
        v: Some(rat(1)),
        classes,
        theta: vec![CohWeight::new(6, "pt"), CohWeight::new(0, "one")],
        xi: vec![],
    };

    let poset = build_dpt_index(&ctx, "A", 8)?;
    println!("restricted index ({} graphs):", poset.len());
    for (i, element) in poset.elements().iter().enumerate() {
        let total: i64 = element.components().iter().map(|c| c.d_tails.total()).sum();
        println!(
            "  {i}: {}  (total multiplicity {total})",
            element.canonical_key()
        );
    }

    // The divisor must be uniruled (finite V) for the index to exist.
    let mut bad = ctx.clone();
    bad.v = None;
    match build_dpt_index(&bad, "A", 8) {
        Err(e) => println!("without a finite V: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
