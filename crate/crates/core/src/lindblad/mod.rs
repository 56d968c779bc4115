//! Exact propagation of the density matrix under the stochastic-field
//! dissipator, in the eigenbasis of the effective Hamiltonian.
//!
//! In that basis the master equation
//!
//! ```text
//! dρ/dτ = −i[H̄, ρ] − (w²/2)(ρ − VρV),   V = I ⊗ (v·σ),  v = (sin β, 0, cos β)
//! ```
//!
//! splits into four 2×2 quadrants. Writing each as r₀·I + r·σ, r₀ is
//! conserved and r(τ) = exp(Mτ)·r(0) with one 3×3 generator M shared by all
//! quadrants; the off-diagonal quadrants also pick up the phase e^{±iω̄_N τ}.

mod cubic;
mod oracle;

pub use cubic::cubic_roots;
pub use oracle::{evolve_oracle, evolve_oracle_with, flavour_dissipator, max_deviation};

use nalgebra::{Matrix3, Vector3};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basis::{change_basis, BasisTag, DensityMatrix4, Transforms};
use crate::error::{Error, Result};
use crate::hamiltonian;
use crate::linalg::{pauli, CMat2, CMat4, C64, I};
use crate::params::DimensionlessParams;

/// Relative separation below which two eigenvalues of M count as equal.
pub const DEGENERACY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DissipatorSpec {
    pub beta: f64,
    /// Strength of the dissipator relative to the τ scale; 1 in reduced units.
    pub w2: f64,
}

impl DissipatorSpec {
    pub fn new(beta: f64, w2: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&beta) {
            return Err(Error::Domain(format!("beta = {beta} outside [0, π/2]")));
        }
        if !(w2.is_finite() && w2 >= 0.0) {
            return Err(Error::Domain(format!("w2 = {w2} must be finite and non-negative")));
        }
        Ok(DissipatorSpec { beta, w2 })
    }

    /// Reduced units: the noise strength is absorbed into τ.
    pub fn reduced(beta: f64) -> Self {
        DissipatorSpec { beta, w2: 1.0 }
    }

    pub fn v_vector(&self) -> [f64; 3] {
        let (s, c) = self.beta.sin_cos();
        [s, 0.0, c]
    }
}

/// Which Bloch-vector generator to use.
///
/// `MasterEquation` is derived from the dissipator above: the transverse
/// component r₂ relaxes at unit rate and the field rotates r as
/// dr₁/dτ = −ω̄_B r₂. `AsPublished` keeps the alternative printed form with
/// the rotation sense reversed and r₂ relaxing at cos²β; it is not the
/// generator of a completely positive map and is offered only for comparison.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorForm {
    #[default]
    MasterEquation,
    AsPublished,
}

/// The 3×3 Bloch generator for unit dissipation strength.
pub fn build_m(omega_b_bar: f64, beta: f64, form: GeneratorForm) -> Matrix3<f64> {
    generator(omega_b_bar, &DissipatorSpec::reduced(beta), form)
}

pub fn generator(omega_b_bar: f64, d: &DissipatorSpec, form: GeneratorForm) -> Matrix3<f64> {
    let (s, c) = d.beta.sin_cos();
    let w = d.w2;
    let wb = omega_b_bar;
    match form {
        GeneratorForm::MasterEquation => Matrix3::new(
            -w * c * c, -wb, w * s * c,
            wb, -w, 0.0,
            w * s * c, 0.0, -w * s * s,
        ),
        GeneratorForm::AsPublished => Matrix3::new(
            -w * c * c, wb, w * s * c,
            -wb, -w * c * c, 0.0,
            w * s * c, 0.0, -w * s * s,
        ),
    }
}

/// Spectral data of M used by the closed-form propagator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagatorM {
    pub m: Matrix3<f64>,
    pub nu: [C64; 3],
    degenerate: bool,
}

/// B₀ = r(0), B₁ = M r(0), B₂ = M² r(0) and the mode amplitudes C_k with
/// r(τ) = Σ_k C_k e^{ν_k τ}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeConstants {
    pub b0: Vector3<C64>,
    pub b1: Vector3<C64>,
    pub b2: Vector3<C64>,
    pub c: [Vector3<C64>; 3],
}

impl PropagatorM {
    pub fn from_matrix(m: Matrix3<f64>) -> Self {
        let tr = m.trace();
        let minors = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)] + m[(0, 0)] * m[(2, 2)]
            - m[(0, 2)] * m[(2, 0)]
            + m[(1, 1)] * m[(2, 2)]
            - m[(1, 2)] * m[(2, 1)];
        let nu = cubic_roots(-tr, minors, -m.determinant());
        let scale = nu.iter().map(|x| x.norm()).fold(1.0, f64::max);
        let degenerate = (0..3).any(|i| (i + 1..3).any(|j| (nu[i] - nu[j]).norm() < DEGENERACY_TOL * scale));
        PropagatorM { m, nu, degenerate }
    }

    pub fn new(omega_b_bar: f64, d: &DissipatorSpec, form: GeneratorForm) -> Self {
        Self::from_matrix(generator(omega_b_bar, d, form))
    }

    /// True when the closed form is ill-conditioned and the matrix
    /// exponential is used instead.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// Copy with the rotation terms of M negated. Used to check that the
    /// validation suite notices a wrong sign.
    pub fn with_flipped_rotation(&self) -> Self {
        let mut m = self.m;
        m[(0, 1)] = -m[(0, 1)];
        m[(1, 0)] = -m[(1, 0)];
        Self::from_matrix(m)
    }

    pub fn constants(&self, r0: &Vector3<C64>) -> ModeConstants {
        let mc = self.m.map(|x| C64::new(x, 0.0));
        let b0 = *r0;
        let b1 = mc * b0;
        let b2 = mc * b1;
        let [n1, n2, n3] = self.nu;
        let amp = |k: C64, j: C64, l: C64| (b2 - b1 * (j + l) + b0 * (j * l)) / ((k - j) * (k - l));
        ModeConstants {
            b0,
            b1,
            b2,
            c: [amp(n1, n2, n3), amp(n2, n1, n3), amp(n3, n1, n2)],
        }
    }

    /// r(τ) = exp(Mτ)·r(0).
    pub fn apply(&self, r0: &Vector3<C64>, tau: f64) -> Vector3<C64> {
        if tau == 0.0 {
            return *r0;
        }
        if self.degenerate {
            let e = (self.m * tau).exp().map(|x| C64::new(x, 0.0));
            return e * r0;
        }
        let k = self.constants(r0);
        self.nu
            .iter()
            .zip(k.c.iter())
            .fold(Vector3::zeros(), |acc, (nu, c)| acc + c * (nu * tau).exp())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quadrant {
    Q11,
    Q22,
    Q12,
    Q21,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::Q11, Quadrant::Q22, Quadrant::Q12, Quadrant::Q21];

    fn offsets(self) -> (usize, usize) {
        match self {
            Quadrant::Q11 => (0, 0),
            Quadrant::Q22 => (2, 2),
            Quadrant::Q12 => (0, 2),
            Quadrant::Q21 => (2, 0),
        }
    }

    /// ε in the phase e^{iεω̄_N τ}.
    pub fn epsilon(self) -> f64 {
        match self {
            Quadrant::Q12 => 1.0,
            Quadrant::Q21 => -1.0,
            _ => 0.0,
        }
    }
}

/// One 2×2 minor written as r₀·I + r·σ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadrantState {
    pub quadrant: Quadrant,
    pub r0: C64,
    pub r: Vector3<C64>,
}

impl QuadrantState {
    pub fn from_minor(quadrant: Quadrant, m: &CMat2) -> Self {
        let half = 0.5;
        QuadrantState {
            quadrant,
            r0: (m[(0, 0)] + m[(1, 1)]) * half,
            r: Vector3::new(
                (m[(0, 1)] + m[(1, 0)]) * half,
                I * (m[(0, 1)] - m[(1, 0)]) * half,
                (m[(0, 0)] - m[(1, 1)]) * half,
            ),
        }
    }

    pub fn minor(&self) -> CMat2 {
        let [x, y, z] = pauli();
        CMat2::identity() * self.r0 + x * self.r[0] + y * self.r[1] + z * self.r[2]
    }

    pub fn bloch_norm(&self) -> f64 {
        self.r.norm()
    }
}

/// Splits a B-basis density matrix into its quadrants, ordered (11), (22), (12), (21).
pub fn decompose_quadrants(rho: &DensityMatrix4) -> Result<[QuadrantState; 4]> {
    rho.require_basis(BasisTag::BEigen)?;
    Ok(decompose_entries(rho.entries()))
}

fn decompose_entries(m: &CMat4) -> [QuadrantState; 4] {
    Quadrant::ALL.map(|q| {
        let (i, j) = q.offsets();
        QuadrantState::from_minor(q, &m.fixed_view::<2, 2>(i, j).into_owned())
    })
}

/// Rebuilds the B-basis matrix from quadrants (11), (22), (12); quadrant
/// (21) is taken as the adjoint of (12).
pub fn recompose(q: &[QuadrantState; 4]) -> DensityMatrix4 {
    let mut m = CMat4::zeros();
    for s in &q[..3] {
        let (i, j) = s.quadrant.offsets();
        m.fixed_view_mut::<2, 2>(i, j).copy_from(&s.minor());
    }
    let upper = q[2].minor().adjoint();
    m.fixed_view_mut::<2, 2>(2, 0).copy_from(&upper);
    DensityMatrix4::new_unchecked(m, BasisTag::BEigen)
}

pub fn propagate_quadrant(q: &QuadrantState, p: &PropagatorM, tau: f64, omega_n_bar: f64) -> QuadrantState {
    let phase = (I * (q.quadrant.epsilon() * omega_n_bar * tau)).exp();
    QuadrantState {
        quadrant: q.quadrant,
        r0: q.r0 * phase,
        r: p.apply(&q.r, tau) * phase,
    }
}

pub fn validate_grid(grid: &[f64]) -> Result<()> {
    let Some(first) = grid.first() else {
        return Err(Error::InvalidGrid("empty grid".into()));
    };
    if *first != 0.0 {
        return Err(Error::InvalidGrid(format!("grid starts at {first}, not 0")));
    }
    if grid.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidGrid("non-finite grid point".into()));
    }
    if let Some(w) = grid.windows(2).find(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid(format!("grid not strictly increasing at {}", w[1])));
    }
    Ok(())
}

/// Density matrices on a τ-grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub tau: Vec<f64>,
    pub states: Vec<DensityMatrix4>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }
}

/// Closed-form propagator for one parameter set.
#[derive(Debug, Clone, Copy)]
pub struct Propagation {
    pub transforms: Transforms,
    pub propagator: PropagatorM,
    pub omega_n_bar: f64,
}

impl Propagation {
    pub fn new(params: &DimensionlessParams, d: &DissipatorSpec, form: GeneratorForm) -> Result<Self> {
        params.validate()?;
        Ok(Propagation {
            transforms: hamiltonian::transforms(&params.couplings())?,
            propagator: PropagatorM::new(params.omega_b_bar, d, form),
            omega_n_bar: params.omega_n_bar(),
        })
    }

    pub fn with_propagator(self, propagator: PropagatorM) -> Self {
        Propagation { propagator, ..self }
    }

    pub fn initial_quadrants(&self, rho0: &DensityMatrix4) -> Result<[QuadrantState; 4]> {
        rho0.require_basis(BasisTag::Flavour)?;
        decompose_quadrants(&change_basis(rho0, BasisTag::BEigen, &self.transforms))
    }

    /// Quadrants of a flavour-basis state after re-expressing it in the B basis.
    pub fn quadrants_of(&self, rho: &DensityMatrix4) -> Result<[QuadrantState; 4]> {
        self.initial_quadrants(rho)
    }

    pub fn state_at(&self, q0: &[QuadrantState; 4], tau: f64) -> DensityMatrix4 {
        let q = q0.map(|q| propagate_quadrant(&q, &self.propagator, tau, self.omega_n_bar));
        change_basis(&recompose(&q), BasisTag::Flavour, &self.transforms)
    }

    pub fn evolve(&self, rho0: &DensityMatrix4, grid: &[f64]) -> Result<Trajectory> {
        validate_grid(grid)?;
        let q0 = self.initial_quadrants(rho0)?;
        let states = grid.par_iter().map(|&t| self.state_at(&q0, t)).collect();
        Ok(Trajectory {
            tau: grid.to_vec(),
            states,
        })
    }
}

/// Evolves a flavour-basis state over `grid` with the master-equation generator.
pub fn evolve(
    rho0: &DensityMatrix4,
    params: &DimensionlessParams,
    d: &DissipatorSpec,
    grid: &[f64],
) -> Result<Trajectory> {
    Propagation::new(params, d, GeneratorForm::MasterEquation)?.evolve(rho0, grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{Flavour, Helicity, SpinFlavourIndex};
    use crate::linalg::{max_abs_diff, ONE, ZERO};
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn cvec(x: f64, y: f64, z: f64) -> Vector3<C64> {
        Vector3::new(C64::new(x, 0.0), C64::new(y, 0.0), C64::new(z, 0.0))
    }

    fn zero_vec() -> Vector3<C64> {
        Vector3::new(ZERO, ZERO, ZERO)
    }

    fn rk4_bloch(m: &Matrix3<f64>, r0: Vector3<f64>, tau: f64, n: usize) -> Vector3<f64> {
        let h = tau / n as f64;
        let mut r = r0;
        for _ in 0..n {
            let k1 = m * r;
            let k2 = m * (r + k1 * (h / 2.0));
            let k3 = m * (r + k2 * (h / 2.0));
            let k4 = m * (r + k3 * h);
            r += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        }
        r
    }

    #[test]
    fn published_matrix_at_quarter_pi() {
        let m = build_m(1.0, FRAC_PI_4, GeneratorForm::AsPublished);
        let expect = Matrix3::new(-0.5, 1.0, 0.5, -1.0, -0.5, 0.0, 0.5, 0.0, -0.5);
        assert!((m - expect).abs().max() < 1e-15);
    }

    #[test]
    fn half_pi_spectrum() {
        for form in [GeneratorForm::MasterEquation, GeneratorForm::AsPublished] {
            let m = build_m(1.7, FRAC_PI_2, form);
            assert!(m[(0, 0)].abs() < 1e-15 && m[(2, 2)] == -1.0);
            let p = PropagatorM::from_matrix(m);
            // with cos β = 0 the published form has exactly ±iω̄_B; the master
            // equation keeps a unit damping on r₂
            if form == GeneratorForm::AsPublished {
                assert!((p.nu[0] - C64::new(0.0, 1.7)).norm() < 1e-12);
                assert!((p.nu[1] - C64::new(0.0, -1.7)).norm() < 1e-12);
                assert!((p.nu[2] + 1.0).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn trace_identity() {
        for &wb in &[0.0, 0.3, 4.0] {
            for &b in &[0.0_f64, 0.4, 1.2] {
                let c2 = b.cos().powi(2);
                let published = build_m(wb, b, GeneratorForm::AsPublished);
                assert_relative_eq!(published.trace(), -(1.0 + c2), epsilon = 1e-14);
                let me = build_m(wb, b, GeneratorForm::MasterEquation);
                assert_relative_eq!(me.trace(), -2.0, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn eigenvalues_match_library_solver() {
        for &(wb, b) in &[(1.0, FRAC_PI_4), (0.2, 0.1), (5.0, 1.3), (0.0, 0.7)] {
            for form in [GeneratorForm::MasterEquation, GeneratorForm::AsPublished] {
                let m = build_m(wb, b, form);
                let p = PropagatorM::from_matrix(m);
                for e in m.complex_eigenvalues().iter() {
                    let nearest = p.nu.iter().map(|a| (a - e).norm()).fold(f64::INFINITY, f64::min);
                    assert!(nearest < 1e-9, "{form:?} {wb} {b}: {e} not in {:?}", p.nu);
                }
            }
        }
    }

    #[test]
    fn master_equation_spectrum_is_contractive() {
        for i in 0..40 {
            let wb = 0.25 * i as f64;
            let b = FRAC_PI_2 * (i % 9) as f64 / 8.0;
            let p = PropagatorM::new(wb, &DissipatorSpec::reduced(b), GeneratorForm::MasterEquation);
            assert!(p.nu.iter().all(|n| n.re <= 1e-12));
        }
    }

    #[test]
    fn constants_sum_to_initial_vector() {
        let p = PropagatorM::new(1.0, &DissipatorSpec::reduced(FRAC_PI_4), GeneratorForm::MasterEquation);
        let r0 = cvec(0.3, -0.2, 0.5);
        let k = p.constants(&r0);
        let s = k.c[0] + k.c[1] + k.c[2];
        assert!((s - r0).norm() < 1e-13);
        assert_eq!(k.b0, r0);
    }

    #[test]
    fn closed_form_matches_rk4() {
        let r0 = Vector3::new(1.0, 0.0, 0.0);
        for form in [GeneratorForm::MasterEquation, GeneratorForm::AsPublished] {
            let p = PropagatorM::new(1.0, &DissipatorSpec::reduced(FRAC_PI_4), form);
            let exact = p.apply(&r0.map(|x| C64::new(x, 0.0)), 1.0);
            let rk = rk4_bloch(&p.m, r0, 1.0, 2000);
            for i in 0..3 {
                assert!((exact[i].re - rk[i]).abs() < 1e-9);
                assert!(exact[i].im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn degenerate_fallback_uses_matrix_exponential() {
        // β = 0, ω̄_B = 0: M = diag(−1, −1, 0)
        let p = PropagatorM::new(0.0, &DissipatorSpec::reduced(0.0), GeneratorForm::MasterEquation);
        assert!(p.is_degenerate());
        let r = p.apply(&cvec(1.0, 1.0, 1.0), 2.0);
        assert!((r[0].re - (-2f64).exp()).abs() < 1e-14);
        assert!((r[1].re - (-2f64).exp()).abs() < 1e-14);
        assert!((r[2].re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn decoupled_z_component_at_half_pi() {
        let p = PropagatorM::new(1.0, &DissipatorSpec::reduced(FRAC_PI_2), GeneratorForm::MasterEquation);
        let q = QuadrantState {
            quadrant: Quadrant::Q11,
            r0: C64::new(0.5, 0.0),
            r: cvec(0.0, 0.0, 1.0),
        };
        for &t in &[0.3, 1.0, 4.0] {
            let out = propagate_quadrant(&q, &p, t, 3.0);
            assert!((out.r[2].re - (-t).exp()).abs() < 1e-12);
            assert!(out.r[0].norm() < 1e-12 && out.r[1].norm() < 1e-12);
            assert_eq!(out.r0, q.r0);
        }
    }

    #[test]
    fn zero_time_is_identity() {
        let p = PropagatorM::new(1.0, &DissipatorSpec::reduced(0.3), GeneratorForm::MasterEquation);
        let q = QuadrantState {
            quadrant: Quadrant::Q12,
            r0: C64::new(0.1, 0.2),
            r: cvec(0.3, 0.1, -0.2),
        };
        assert_eq!(propagate_quadrant(&q, &p, 0.0, 10.0), q);
    }

    #[test]
    fn minor_traces() {
        let q = QuadrantState::from_minor(Quadrant::Q11, &CMat2::new(ONE, ZERO, ZERO, ZERO));
        assert_eq!(q.r0, C64::new(0.5, 0.0));
        assert_eq!(q.r, cvec(0.0, 0.0, 0.5));
        let q = QuadrantState::from_minor(Quadrant::Q22, &(CMat2::identity() * C64::new(0.5, 0.0)));
        assert_eq!(q.r0, C64::new(0.5, 0.0));
        assert_eq!(q.r, zero_vec());
    }

    #[test]
    fn decompose_recompose_round_trip() {
        let mut m = CMat4::from_fn(|i, j| C64::new((i * 4 + j) as f64 * 0.1 - 0.7, (j as f64 - i as f64) * 0.05));
        m = (m + m.adjoint()) * C64::new(0.5, 0.0);
        let rho = DensityMatrix4::new_unchecked(m, BasisTag::BEigen);
        let q = decompose_quadrants(&rho).unwrap();
        assert!(max_abs_diff(recompose(&q).entries(), &m) < 1e-14);
        let wrong = DensityMatrix4::new_unchecked(m, BasisTag::Mass);
        assert!(matches!(decompose_quadrants(&wrong), Err(Error::BasisMismatch { .. })));
    }

    #[test]
    fn grid_validation() {
        assert!(validate_grid(&[0.0]).is_ok());
        assert!(validate_grid(&[]).is_err());
        assert!(validate_grid(&[0.1, 0.2]).is_err());
        assert!(validate_grid(&[0.0, 0.2, 0.2]).is_err());
    }

    #[test]
    fn maximally_mixed_is_stationary() {
        let rho = DensityMatrix4::maximally_mixed(BasisTag::Flavour);
        let grid: Vec<f64> = (0..50).map(|i| i as f64 * 0.4).collect();
        let tr = evolve(&rho, &DimensionlessParams::default(), &DissipatorSpec::reduced(FRAC_PI_4), &grid).unwrap();
        for s in &tr.states {
            assert!(max_abs_diff(s.entries(), rho.entries()) < 1e-14);
        }
    }

    #[test]
    fn unitary_limit_preserves_spectrum() {
        let rho = DensityMatrix4::diagonal_mixture([0.1, 0.2, 0.3, 0.4]).unwrap();
        let grid: Vec<f64> = (0..40).map(|i| i as f64 * 0.37).collect();
        let d = DissipatorSpec::new(FRAC_PI_4, 0.0).unwrap();
        let tr = evolve(&rho, &DimensionlessParams::default(), &d, &grid).unwrap();
        let l0 = rho.eigenvalues();
        for s in &tr.states {
            let l = s.eigenvalues();
            for k in 0..4 {
                assert!((l[k] - l0[k]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn pure_state_trajectory_keeps_trace() {
        let rho = DensityMatrix4::pure(SpinFlavourIndex::new(Flavour::E, Helicity::R));
        let grid: Vec<f64> = (0..200).map(|i| i as f64 * 0.1).collect();
        let tr = evolve(&rho, &DimensionlessParams::default(), &DissipatorSpec::reduced(FRAC_PI_4), &grid).unwrap();
        assert_eq!(tr.len(), 200);
        assert!(max_abs_diff(tr.states[0].entries(), rho.entries()) < 1e-15);
        for s in &tr.states {
            assert!((s.trace() - ONE).norm() < 1e-12);
            assert!(s.hermiticity_residual() < 1e-14);
            assert!(s.min_eigenvalue() > -1e-10);
        }
    }

    #[test]
    fn wrong_input_basis_is_rejected() {
        let rho = DensityMatrix4::maximally_mixed(BasisTag::Mass);
        let r = evolve(&rho, &DimensionlessParams::default(), &DissipatorSpec::reduced(0.5), &[0.0]);
        assert!(matches!(r, Err(Error::BasisMismatch { .. })));
    }
}
