//! Converts interstellar parameters to reduced units and runs the resulting
//! scenario.

use spinflavour::prelude::*;
use spinflavour::scenario::{describe, reduce_physical, Mode};

fn main() -> Result<()> {
    let phys = PhysicalParams { e_nu: 1e19, ..PhysicalParams::default() };
    let red = reduce_physical(&phys, std::f64::consts::FRAC_PI_4)?;
    println!("omega_nu = {:.4e} eV", red.omega_nu);
    println!("mu B     = {:.4e} eV", red.mu_b);
    println!("W^2      = {:.4e} eV", red.big_w2);
    println!("reduced  = {:?}", red.params);

    let cfg = ScenarioConfig {
        mode: Mode::Physical,
        physical: Some(phys),
        dimensionless: None,
        tau_max: 5.0,
        ..ScenarioConfig::reference()
    };
    println!("{}", serde_json::to_string_pretty(&describe(&cfg)?)?);
    let out = run(&cfg)?;
    let last = out.reports.last().unwrap();
    println!("tau = {}: S_nu = {:.6}, d_eur = {:.3e}", last.tau, last.S_nu, last.d_eur);
    Ok(())
}
