//! Classical correlation and discord over the two-axis measurement set and
//! over a hemisphere grid of spin directions.

use spinflavour::entropy::{classical_correlation, discord};
use spinflavour::prelude::*;

fn main() -> Result<()> {
    let p = DimensionlessParams::default();
    let rho0 = DensityMatrix4::pure(SpinFlavourIndex::new(Flavour::E, Helicity::R));
    let grid = [0.0, 0.3, 1.0, 3.0];
    let traj = evolve(&rho0, &p, &DissipatorSpec::reduced(p.beta), &grid)?;

    let sets = [
        ("z/x", MeasurementSet::two_axis()),
        ("grid 8", MeasurementSet::bloch_grid(8)?),
        ("grid 32", MeasurementSet::bloch_grid(32)?),
    ];
    for (tau, rho) in grid.iter().zip(&traj.states) {
        for (name, ms) in &sets {
            let j = classical_correlation(rho, ms)?;
            let d = discord(rho, ms)?;
            println!("tau {tau:3.1}  {name:8} ({:4} directions)  J = {j:.6}  D = {:.6}", ms.len(), d.raw);
        }
    }
    Ok(())
}
