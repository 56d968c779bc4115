//! Evaluates every entropic quantity on one evolved state.

use spinflavour::entropy::{discord, eur_terms};
use spinflavour::prelude::*;

fn main() -> Result<()> {
    let p = DimensionlessParams::default();
    let rho0 = DensityMatrix4::pure(SpinFlavourIndex::new(Flavour::E, Helicity::R));
    let traj = evolve(&rho0, &p, &DissipatorSpec::reduced(p.beta), &[0.0, 0.8])?;
    let rho = &traj.states[1];
    let ms = MeasurementSet::two_axis();

    let r = analyze(rho, 0.8, &ms)?;
    println!("spectrum          {:?}", r.lam);
    println!("S(sigma,nu)       {:.6}", r.S_full);
    println!("S(nu), S(sigma)   {:.6} {:.6}", r.S_nu, r.S_sigma);
    println!("S(sigma|nu)       {:.6}", r.S_sigma_given_nu);
    println!("S(R|nu), S(Q|nu)  {:.6} {:.6}", r.S_R_given_nu, r.S_Q_given_nu);
    println!("I, I_z, I_x       {:.6} {:.6} {:.6}", r.I_sigma_nu, r.I_sigmaz_nu, r.I_sigmax_nu);

    let d = discord(rho, &ms)?;
    println!("J, D (raw), D     {:.6} {:.6} {:.6}", r.J_classical, d.raw, d.clamped);
    let e = eur_terms(rho, &ms)?;
    println!("EUR lhs           {:.6}", e.lhs);
    println!("EUR rhs           {:.6} = {:.6} + {:.6}", e.rhs, e.rhs_bound, e.rhs_correction);
    println!("EUR gap           {:.6}", e.d_eur);
    Ok(())
}
