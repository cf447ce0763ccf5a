//! Enumerate fiber classes on the blow-ups of the plane.
//!
//! A fiber class (a|b1,...,bk) is a primitive class with non-negative
//! coefficients, square zero and 3a = sum(b) + 2. For each k this prints
//! one descending representative per permutation orbit, and the size of the
//! expanded orbit.
//!
//! Run with: cargo run -p uniruled --example fiber_classes

use uniruled::classes::{enumerate_fiber_classes, leading_coefficient};

fn main() -> uniruled::Result<()> {
    for k in 1..=8 {
        let orbits = enumerate_fiber_classes(k, false)?;
        let expanded = enumerate_fiber_classes(k, true)?;
        println!(
            "k = {k}: {} orbits, {} classes",
            orbits.len(),
            expanded.len()
        );
        for rep in &orbits {
            let a = leading_coefficient(rep.class());
            let orbit_size = expanded
                .iter()
                .filter(|f| {
                    let mut b: Vec<_> = f.class().coeffs()[1..].to_vec();
                    b.sort_unstable_by(|x, y| y.cmp(x));
                    leading_coefficient(f.class()) == a && b == rep.class().coeffs()[1..]
                })
                .count();
            println!("  {}  (orbit of {})", rep.class().to_paren(), orbit_size);
        }
    }
    Ok(())
}
