//! Enumerate the -1 classes (square -1, first Chern pairing 1) on blow-ups
//! of the plane. For k <= 8 the list is finite; the count at k = 6 is the
//! classical 27.
//!
//! Run with: cargo run -p uniruled --example minus_one_classes

use uniruled::classes::enumerate_minus_one_classes;

fn main() -> uniruled::Result<()> {
    for k in 1..=8 {
        let list = enumerate_minus_one_classes(k, None)?;
        println!("k = {k}: {} classes", list.len());
    }

    println!("\nthe 27 classes at k = 6:");
    for m in enumerate_minus_one_classes(6, None)? {
        println!("  {}  =  {}", m.class().to_paren(), m.class());
    }

    // For k >= 9 the set is infinite; a bound on |a| keeps it finite.
    let bounded = enumerate_minus_one_classes(9, Some(2))?;
    println!("\nk = 9 with |a| <= 2: {} classes", bounded.len());
    Ok(())
}
