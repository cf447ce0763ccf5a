//! Minimal-area uniruled classes under a symplectic form.
//!
//! On a blow-up the candidates are the fiber classes; the minimizer depends
//! on the form. On the product bundle one of the two factors wins; on the
//! twisted bundle the fiber class F0 wins for every form.
//!
//! Run with: cargo run -p uniruled --example minimal_area

use uniruled::classes::{minimal_fiber_class, minimal_uniruled_for_bundle};
use uniruled::surface::{rational_to_string, SurfaceModel, SymplecticForm};

fn main() -> uniruled::Result<()> {
    // Form H - E1/5 - E2/10 on the two-point blow-up.
    let form = SymplecticForm::from_rationals(SurfaceModel::blowup(2), &[(1, 1), (1, 5), (1, 10)])?;
    let minimizers = minimal_fiber_class(&form, 2)?;
    let area = form.area(minimizers[0].class())?;
    println!("blow-up of 2 points, form (1; 1/5, 1/10):");
    for f in &minimizers {
        println!(
            "  minimal fiber class {} of area {}",
            f.class(),
            rational_to_string(&area)
        );
    }

    // Equal exceptional areas tie the two candidates.
    let tie = SymplecticForm::from_rationals(SurfaceModel::blowup(2), &[(1, 1), (1, 3), (1, 3)])?;
    let minimizers = minimal_fiber_class(&tie, 2)?;
    println!("form (1; 1/3, 1/3) ties {} classes", minimizers.len());

    // Product bundle: coefficients (3, 2) give areas (2, 3) on (A1, A2).
    let product = SurfaceModel::ProductS2xS2;
    let form = SymplecticForm::from_rationals(product.clone(), &[(3, 1), (2, 1)])?;
    let result = minimal_uniruled_for_bundle(&product, &form)?;
    println!(
        "product bundle with areas (2, 3): minimal class {}",
        result.minimal
    );

    // Twisted bundle: F0 regardless of the form.
    let twisted = SurfaceModel::TwistedS2xS2;
    let form = SymplecticForm::from_rationals(twisted.clone(), &[(7, 1), (3, 1)])?;
    let result = minimal_uniruled_for_bundle(&twisted, &form)?;
    println!("twisted bundle: minimal class {} (always)", result.minimal);
    Ok(())
}
