//! Fixed-step RK4 integration of the full master equation in the flavour
//! basis. Shares nothing with the closed-form path except the basis
//! transforms used to place V.

use crate::basis::{BasisTag, DensityMatrix4, Transforms};
use crate::error::{Error, Result};
use crate::hamiltonian;
use crate::linalg::{kron2, max_abs_diff, pauli, to_complex, CMat2, CMat4, C64, I};
use crate::params::DimensionlessParams;

use super::{validate_grid, DissipatorSpec, Trajectory};

/// V = I ⊗ (v·σ) in the B basis, re-expressed in the flavour basis.
pub fn flavour_dissipator(t: &Transforms, d: &DissipatorSpec) -> CMat4 {
    let [sx, _, sz] = pauli();
    let [vx, _, vz] = d.v_vector();
    let v_b = kron2(&CMat2::identity(), &(sx * C64::new(vx, 0.0) + sz * C64::new(vz, 0.0)));
    let u = to_complex(&t.from_flavour(BasisTag::BEigen));
    u.transpose() * v_b * u
}

fn rhs(h: &CMat4, v: &CMat4, half_w2: f64, rho: &CMat4) -> CMat4 {
    let comm = h * rho - rho * h;
    -(comm * I) - (rho - v * rho * v) * C64::new(half_w2, 0.0)
}

/// Integrates dρ/dτ = −i[H, ρ] − (w²/2)(ρ − VρV) with substeps no longer than `step`.
pub fn evolve_oracle_with(
    h: &CMat4,
    v: &CMat4,
    w2: f64,
    rho0: &DensityMatrix4,
    grid: &[f64],
    step: f64,
) -> Result<Trajectory> {
    rho0.require_basis(BasisTag::Flavour)?;
    validate_grid(grid)?;
    if !(step > 0.0) {
        return Err(Error::Domain(format!("oracle step {step} must be positive")));
    }
    if let Some(w) = grid.windows(2).find(|w| w[1] - w[0] < step * (1.0 - 1e-12)) {
        return Err(Error::InvalidGrid(format!(
            "oracle step {step} exceeds grid spacing {}",
            w[1] - w[0]
        )));
    }
    let half_w2 = 0.5 * w2;
    let f = |r: &CMat4| rhs(h, v, half_w2, r);
    let mut rho = *rho0.entries();
    let mut states = Vec::with_capacity(grid.len());
    states.push(DensityMatrix4::new_unchecked(rho, BasisTag::Flavour));
    for w in grid.windows(2) {
        let span = w[1] - w[0];
        let n = (span / step - 1e-9).ceil().max(1.0) as usize;
        let dt = span / n as f64;
        let (half, sixth) = (C64::new(0.5 * dt, 0.0), C64::new(dt / 6.0, 0.0));
        let full = C64::new(dt, 0.0);
        for _ in 0..n {
            let k1 = f(&rho);
            let k2 = f(&(rho + k1 * half));
            let k3 = f(&(rho + k2 * half));
            let k4 = f(&(rho + k3 * full));
            rho += (k1 + k2 * C64::new(2.0, 0.0) + k3 * C64::new(2.0, 0.0) + k4) * sixth;
        }
        states.push(DensityMatrix4::new_unchecked(rho, BasisTag::Flavour));
    }
    Ok(Trajectory {
        tau: grid.to_vec(),
        states,
    })
}

/// RK4 reference trajectory for reduced parameters, built from the
/// flavour-basis Hamiltonian.
pub fn evolve_oracle(
    rho0: &DensityMatrix4,
    params: &DimensionlessParams,
    d: &DissipatorSpec,
    grid: &[f64],
    step: f64,
) -> Result<Trajectory> {
    params.validate()?;
    let c = params.couplings();
    let h = to_complex(&hamiltonian::flavour_hamiltonian(&c).matrix);
    let v = flavour_dissipator(&hamiltonian::transforms(&c)?, d);
    evolve_oracle_with(&h, &v, d.w2, rho0, grid, step)
}

/// Largest elementwise difference between two trajectories on the same grid.
pub fn max_deviation(a: &Trajectory, b: &Trajectory) -> Result<f64> {
    if a.tau != b.tau {
        return Err(Error::InvalidGrid("trajectories sampled on different grids".into()));
    }
    Ok(a.states
        .iter()
        .zip(&b.states)
        .map(|(x, y)| max_abs_diff(x.entries(), y.entries()))
        .fold(0.0, f64::max))
}
