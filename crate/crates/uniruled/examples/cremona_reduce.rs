//! Reduce blow-up classes to reduced form (descending non-negative b with
//! a >= b1 + b2 + b3) by Cremona moves. Every move preserves the square and
//! the first Chern pairing; every fiber class lands on (1|1,0,...,0).
//!
//! Run with: cargo run -p uniruled --example cremona_reduce

use uniruled::classes::{cremona_reduce, enumerate_fiber_classes};
use uniruled::surface::DivisorClass;

fn main() -> uniruled::Result<()> {
    for text in ["(2|1,1,1,1)", "(7|4,3,2,2,2,2,2,2)", "(6|3,3,2,2,2,2,1,1)"] {
        let class = DivisorClass::parse_blowup(text)?;
        let (reduced, log) = cremona_reduce(&class)?;
        println!(
            "{} reduces to {} in {} moves",
            text,
            reduced.to_paren(),
            log.len()
        );
        for step in &log {
            println!("  {} -> {}", step.input.to_paren(), step.output.to_paren());
        }
    }

    // Exceptional classes have negative coefficients and no reduced form.
    let e1 = DivisorClass::exceptional(2, 1)?;
    match cremona_reduce(&e1) {
        Err(e) => println!("\nE1: {e}"),
        Ok(_) => unreachable!(),
    }

    // The whole k = 8 fiber list reduces to the line through one point.
    let all_reduce = enumerate_fiber_classes(8, true)?.iter().all(|f| {
        let (reduced, _) = cremona_reduce(f.class()).unwrap();
        reduced == DivisorClass::parse_blowup("(1|1,0,0,0,0,0,0,0)").unwrap()
    });
    println!("\nall 1346 fiber classes at k = 8 reduce to (1|1,0,...,0): {all_reduce}");
    Ok(())
}
