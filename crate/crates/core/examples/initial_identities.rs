//! Closed-form entropies of a diagonal mixture at tau = 0 next to the
//! numerically computed ones.

use spinflavour::prelude::*;

fn main() -> Result<()> {
    // weights on (e,L), (mu,L), (e,R), (mu,R)
    let a = [0.4, 0.1, 0.3, 0.2];
    let closed = initial_report(a)?;
    let numeric = analyze(&DensityMatrix4::diagonal_mixture(a)?, 0.0, &MeasurementSet::two_axis())?;
    for (name, (c, n)) in spinflavour::entropy::COLUMNS.iter().zip(closed.row().into_iter().zip(numeric.row())) {
        println!("{name:18} {c:+.12} {n:+.12}");
    }
    Ok(())
}
