//! Compares the closed-form evolution against RK4 integration of the full
//! master equation in the flavour basis.

use std::time::Instant;

use spinflavour::lindblad::{evolve, evolve_oracle, max_deviation, DissipatorSpec};
use spinflavour::prelude::*;

fn main() -> Result<()> {
    let p = DimensionlessParams::default();
    let d = DissipatorSpec::reduced(p.beta);
    let rho0 = DensityMatrix4::pure(SpinFlavourIndex::new(Flavour::E, Helicity::R));
    let grid: Vec<f64> = (0..=200).map(|i| i as f64 * 0.1).collect();

    let t = Instant::now();
    let exact = evolve(&rho0, &p, &d, &grid)?;
    let t_exact = t.elapsed();
    for step in [1e-2, 5e-3, 1e-3] {
        let t = Instant::now();
        let rk = evolve_oracle(&rho0, &p, &d, &grid, step)?;
        println!(
            "step {step:.0e}: max deviation {:.3e} ({:.0?}, closed form {:.0?})",
            max_deviation(&exact, &rk)?,
            t.elapsed(),
            t_exact
        );
    }
    Ok(())
}
