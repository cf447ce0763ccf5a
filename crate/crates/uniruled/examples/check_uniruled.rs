//! Necessary conditions for a class to be uniruled: first Chern pairing at
//! least 2, non-negative square, and non-negative intersection with every
//! class carrying a non-trivial invariant (witnessed here by the -1 classes
//! and the hyperplane).
//!
//! Run with: cargo run -p uniruled --example check_uniruled

use uniruled::classes::uniruled_necessary;
use uniruled::surface::DivisorClass;

fn main() -> uniruled::Result<()> {
    for text in ["(1|0,0)", "(1|1,0)", "(0|-1,0)", "(3|2,2,0)", "(2|1,1,1,1)"] {
        let class = DivisorClass::parse_blowup(text)?;
        let report = uniruled_necessary(&class, None)?;
        println!("{} = {}", text, class);
        println!("  C1 >= 2: {}", report.c1_ok);
        println!("  square >= 0: {}", report.square_ok);
        println!("  pairings >= 0: {}", report.pairing_ok);
        for w in &report.violating_witnesses {
            println!("    negative against {}", w);
        }
        println!(
            "  necessary conditions {}",
            if report.passes_all() { "hold" } else { "fail" }
        );
    }
    Ok(())
}
