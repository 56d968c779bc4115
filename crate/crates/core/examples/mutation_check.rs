//! Flips the sign of the rotation terms in the generator and shows that the
//! RK4 cross-check notices.

use spinflavour::prelude::*;
use spinflavour::scenario::{run_with, RunOptions};

fn main() -> Result<()> {
    let cfg = ScenarioConfig { tau_max: 5.0, oracle_check: true, ..ScenarioConfig::reference() };
    let good = run(&cfg)?;
    println!("correct generator: deviation {:.3e}", good.oracle_deviation.unwrap_or(f64::NAN));
    match run_with(&cfg, RunOptions { flip_rotation: true, ..RunOptions::default() }) {
        Ok(out) => println!("flipped generator: deviation {:.3e}", out.oracle_deviation.unwrap_or(f64::NAN)),
        Err(e) => println!("flipped generator rejected: {e}"),
    }
    Ok(())
}
