//! Builds the effective Hamiltonian, diagonalises it and compares the numeric
//! spectrum with the closed-form eigenfrequencies.

use spinflavour::hamiltonian::{build_effective_mass_hamiltonian, eigenfrequencies, kappa_equal_moments, magnetic_angle};
use spinflavour::linalg::real_symmetric_eigenvalues4;
use spinflavour::params::DimensionlessParams;

fn main() -> spinflavour::Result<()> {
    let p = DimensionlessParams::default();
    let c = p.couplings();
    let h = build_effective_mass_hamiltonian(&c);
    println!("H (mass basis) ={}", h.matrix);

    let numeric = real_symmetric_eigenvalues4(&h.matrix);
    let closed = kappa_equal_moments(c.omega_nu, c.mu11_b);
    for (n, k) in numeric.iter().zip(closed) {
        println!("eigenvalue {n:+.9}  closed form {k:+.9}");
    }

    let f = eigenfrequencies(&c);
    println!("theta_B  = {:.7}", magnetic_angle(&c)?);
    println!("omega_B  = {:.6}", f.omega_b);
    println!("omega_N  = {:.6}", f.omega_n);
    println!("levels   = {:?}", f.levels);
    Ok(())
}
