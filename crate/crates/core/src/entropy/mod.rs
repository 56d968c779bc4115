//! Reduced and measured states, von Neumann entropies, mutual informations,
//! classical correlation, discord and the memory-assisted entropic
//! uncertainty relation. All entropies are in bits.

mod measurement;
pub mod spectra;

pub use measurement::{
    eigenvectors, incompatibility_bits, projector_pair, MeasurementMode, MeasurementSet, DEFAULT_GRID_RESOLUTION,
    X_AXIS, Z_AXIS,
};

use serde::Serialize;

use crate::basis::{check_simplex, BasisTag, DensityMatrix4};
use crate::error::{Error, Result};
use crate::linalg::{self, kron2, pauli, CMat2, CMat4, C64};

/// Eigenvalues below this are treated as zero inside the logarithm.
pub const EIGEN_CLAMP: f64 = 1e-14;
const TRACE_TOL: f64 = 1e-8;

/// −Σ λ log₂ λ over a spectrum, with 0·log 0 = 0.
pub fn entropy_of_spectrum(lambda: &[f64]) -> f64 {
    lambda
        .iter()
        .filter(|&&l| l > EIGEN_CLAMP)
        .map(|&l| -l * l.log2())
        .sum::<f64>()
        .max(0.0)
}

/// h(x) = −x log₂ x − (1−x) log₂(1−x).
pub fn binary_entropy(x: f64) -> f64 {
    entropy_of_spectrum(&[x, 1.0 - x])
}

/// Hermitian matrices whose spectrum can be taken.
pub trait Spectrum {
    fn spectrum(&self) -> Vec<f64>;
    fn trace_re(&self) -> f64;
}

impl Spectrum for CMat2 {
    fn spectrum(&self) -> Vec<f64> {
        spectra::eigenvalues2(self).to_vec()
    }
    fn trace_re(&self) -> f64 {
        self.trace().re
    }
}

impl Spectrum for CMat4 {
    fn spectrum(&self) -> Vec<f64> {
        linalg::hermitian_eigenvalues4(self).to_vec()
    }
    fn trace_re(&self) -> f64 {
        self.trace().re
    }
}

impl Spectrum for DensityMatrix4 {
    fn spectrum(&self) -> Vec<f64> {
        self.eigenvalues().to_vec()
    }
    fn trace_re(&self) -> f64 {
        self.trace().re
    }
}

pub fn vn_entropy(m: &impl Spectrum) -> Result<f64> {
    let tr = m.trace_re();
    if (tr - 1.0).abs() > TRACE_TOL {
        return Err(Error::InvalidState(format!("entropy of a matrix with trace {tr}")));
    }
    Ok(entropy_of_spectrum(&m.spectrum()))
}

/// ρ_ν = Tr_σ ρ.
pub fn reduce_flavour(rho: &DensityMatrix4) -> Result<CMat2> {
    rho.require_basis(BasisTag::Flavour)?;
    let m = rho.entries();
    Ok(CMat2::from_fn(|f, g| m[(2 * f, 2 * g)] + m[(2 * f + 1, 2 * g + 1)]))
}

/// ρ_σ = Tr_ν ρ, in (R, L) ordering.
pub fn reduce_spin(rho: &DensityMatrix4) -> Result<CMat2> {
    rho.require_basis(BasisTag::Flavour)?;
    let m = rho.entries();
    Ok(CMat2::from_fn(|h, k| m[(h, k)] + m[(2 + h, 2 + k)]))
}

/// Post-measurement state Σ_± (I ⊗ P_±) ρ (I ⊗ P_±) for the spin direction n.
pub fn project_spin(rho: &DensityMatrix4, n: &[f64; 3]) -> Result<DensityMatrix4> {
    rho.require_basis(BasisTag::Flavour)?;
    let (p, q) = projector_pair(n);
    let id = CMat2::identity();
    let (pp, qq) = (kron2(&id, &p), kron2(&id, &q));
    let m = rho.entries();
    Ok(DensityMatrix4::new_unchecked(pp * m * pp + qq * m * qq, BasisTag::Flavour))
}

/// Dephasing in the σ_z spin basis: entries between different helicities vanish.
pub fn project_r(rho: &DensityMatrix4) -> Result<DensityMatrix4> {
    rho.require_basis(BasisTag::Flavour)?;
    let m = rho.entries();
    let out = CMat4::from_fn(|i, j| if i % 2 == j % 2 { m[(i, j)] } else { linalg::ZERO });
    Ok(DensityMatrix4::new_unchecked(out, BasisTag::Flavour))
}

/// Dephasing in the σ_x spin basis: ½(ρ + XρX) with X = I ⊗ σ₁.
pub fn project_q(rho: &DensityMatrix4) -> Result<DensityMatrix4> {
    rho.require_basis(BasisTag::Flavour)?;
    let x = kron2(&CMat2::identity(), &pauli()[0]);
    let m = rho.entries();
    Ok(DensityMatrix4::new_unchecked(
        (m + x * m * x) * C64::new(0.5, 0.0),
        BasisTag::Flavour,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConditionalEntropies {
    pub sigma: f64,
    pub r: f64,
    pub q: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MutualInformations {
    pub sigma: f64,
    pub sigma_z: f64,
    pub sigma_x: f64,
}

/// Everything needed for the entropic quantities, computed once per state.
#[derive(Debug, Clone, PartialEq)]
struct Parts {
    lam: [f64; 4],
    lam_nu: [f64; 2],
    lam_sigma: [f64; 2],
    lam_r: [f64; 4],
    lam_q: [f64; 4],
    s_full: f64,
    s_nu: f64,
    s_sigma: f64,
    s_rnu: f64,
    s_qnu: f64,
    /// Spin entropy after the σ_z and σ_x measurements.
    s_z: f64,
    s_x: f64,
}

fn parts(rho: &DensityMatrix4) -> Result<Parts> {
    rho.require_basis(BasisTag::Flavour)?;
    let tr = rho.trace().re;
    if (tr - 1.0).abs() > TRACE_TOL {
        return Err(Error::InvalidState(format!("trace {tr}")));
    }
    let lam = rho.eigenvalues();
    let lam_nu = spectra::flavour_eigenvalues(rho)?;
    let sigma = reduce_spin(rho)?;
    let lam_sigma = spectra::eigenvalues2(&sigma);
    let lam_r = spectra::r_eigenvalues(rho)?;
    let lam_q = spectra::q_eigenvalues(rho)?;
    let p_up = sigma[(0, 0)].re;
    let p_plus = 0.5 + sigma[(0, 1)].re;
    Ok(Parts {
        s_full: entropy_of_spectrum(&lam),
        s_nu: entropy_of_spectrum(&lam_nu),
        s_sigma: entropy_of_spectrum(&lam_sigma),
        s_rnu: entropy_of_spectrum(&lam_r),
        s_qnu: entropy_of_spectrum(&lam_q),
        s_z: binary_entropy(p_up),
        s_x: binary_entropy(p_plus),
        lam,
        lam_nu,
        lam_sigma,
        lam_r,
        lam_q,
    })
}

/// S(X|ν) = S(ρ_Xν) − S(ρ_ν) for X = σ (no measurement), R (σ_z) and Q (σ_x).
pub fn conditional_entropies(rho: &DensityMatrix4) -> Result<ConditionalEntropies> {
    let p = parts(rho)?;
    Ok(ConditionalEntropies {
        sigma: p.s_full - p.s_nu,
        r: p.s_rnu - p.s_nu,
        q: p.s_qnu - p.s_nu,
    })
}

pub fn mutual_informations(rho: &DensityMatrix4) -> Result<MutualInformations> {
    let p = parts(rho)?;
    Ok(mutual_from_parts(&p))
}

fn mutual_from_parts(p: &Parts) -> MutualInformations {
    MutualInformations {
        sigma: p.s_sigma + p.s_nu - p.s_full,
        sigma_z: p.s_z - (p.s_rnu - p.s_nu),
        sigma_x: p.s_x - (p.s_qnu - p.s_nu),
    }
}

/// I(X,ν) for the spin measurement along n: the spin entropy of the outcome
/// distribution minus S(X|ν) of the post-measurement state.
pub fn measured_mutual_information(rho: &DensityMatrix4, n: &[f64; 3]) -> Result<f64> {
    let s_nu = entropy_of_spectrum(&spectra::flavour_eigenvalues(rho)?);
    Ok(measured_mi(rho, n, s_nu))
}

fn measured_mi(rho: &DensityMatrix4, n: &[f64; 3], s_nu: f64) -> f64 {
    let [b_plus, b_minus] = spectra::measured_blocks(rho, n);
    let p_plus = b_plus.trace().re;
    let lam: Vec<f64> = spectra::eigenvalues2(&b_plus)
        .into_iter()
        .chain(spectra::eigenvalues2(&b_minus))
        .collect();
    binary_entropy(p_plus) - (entropy_of_spectrum(&lam) - s_nu)
}

/// J = max over the measurement set of I(X,ν).
pub fn classical_correlation(rho: &DensityMatrix4, ms: &MeasurementSet) -> Result<f64> {
    if ms.is_empty() {
        return Err(Error::InvalidMeasurement("empty measurement set".into()));
    }
    let s_nu = entropy_of_spectrum(&spectra::flavour_eigenvalues(rho)?);
    Ok(ms
        .directions()
        .iter()
        .map(|n| measured_mi(rho, n, s_nu))
        .fold(f64::NEG_INFINITY, f64::max))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Discord {
    pub raw: f64,
    pub clamped: f64,
}

/// D = I(σ,ν) − J.
pub fn discord(rho: &DensityMatrix4, ms: &MeasurementSet) -> Result<Discord> {
    let i = mutual_informations(rho)?.sigma;
    let raw = i - classical_correlation(rho, ms)?;
    Ok(Discord {
        raw,
        clamped: raw.max(0.0),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EurTerms {
    pub lhs: f64,
    /// 1 + S(σ|ν): the memory-assisted bound for σ_z and σ_x.
    pub rhs_bound: f64,
    /// max(0, D − J).
    pub rhs_correction: f64,
    pub rhs: f64,
    pub d_eur: f64,
}

/// S(R|ν) + S(Q|ν) ≥ −2log₂c + S(σ|ν) + max(0, D − J).
pub fn eur_terms(rho: &DensityMatrix4, ms: &MeasurementSet) -> Result<EurTerms> {
    let r = analyze(rho, 0.0, ms)?;
    Ok(r.eur())
}

/// Entropic summary of one state. Field names follow the CSV columns.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[allow(non_snake_case)]
pub struct EntropyReport {
    pub tau: f64,
    pub S_full: f64,
    pub S_nu: f64,
    pub S_sigma: f64,
    pub S_Rnu: f64,
    pub S_Qnu: f64,
    pub S_sigma_given_nu: f64,
    pub S_R_given_nu: f64,
    pub S_Q_given_nu: f64,
    pub I_sigma_nu: f64,
    pub I_sigmaz_nu: f64,
    pub I_sigmax_nu: f64,
    pub J_classical: f64,
    /// Raw I − J; may dip below zero at rounding level.
    pub D_discord: f64,
    pub D_discord_clamped: f64,
    pub eur_lhs: f64,
    pub eur_rhs: f64,
    pub d_eur: f64,
    pub lam: [f64; 4],
    pub lam_nu: [f64; 2],
    pub lam_sigma: [f64; 2],
    pub lam_r: [f64; 4],
    pub lam_q: [f64; 4],
}

/// Column names of the time-series output, in order.
pub const COLUMNS: [&str; 29] = [
    "tau",
    "lam1",
    "lam2",
    "lam3",
    "lam4",
    "lamR1",
    "lamR2",
    "lamR3",
    "lamR4",
    "lamQ1",
    "lamQ2",
    "lamQ3",
    "lamQ4",
    "S_full",
    "S_nu",
    "S_sigma",
    "S_Rnu",
    "S_Qnu",
    "S_sigma_given_nu",
    "S_R_given_nu",
    "S_Q_given_nu",
    "I_sigma_nu",
    "I_sigmaz_nu",
    "I_sigmax_nu",
    "J_classical",
    "D_discord",
    "eur_lhs",
    "eur_rhs",
    "d_eur",
];

impl EntropyReport {
    /// Values in the order of [`COLUMNS`].
    pub fn row(&self) -> Vec<f64> {
        let mut v = vec![self.tau];
        v.extend(self.lam);
        v.extend(self.lam_r);
        v.extend(self.lam_q);
        v.extend([
            self.S_full,
            self.S_nu,
            self.S_sigma,
            self.S_Rnu,
            self.S_Qnu,
            self.S_sigma_given_nu,
            self.S_R_given_nu,
            self.S_Q_given_nu,
            self.I_sigma_nu,
            self.I_sigmaz_nu,
            self.I_sigmax_nu,
            self.J_classical,
            self.D_discord,
            self.eur_lhs,
            self.eur_rhs,
            self.d_eur,
        ]);
        v
    }

    pub fn eur(&self) -> EurTerms {
        let rhs_bound = incompatibility_bits(&Z_AXIS, &X_AXIS) + self.S_sigma_given_nu;
        let rhs_correction = (self.D_discord - self.J_classical).max(0.0);
        EurTerms {
            lhs: self.eur_lhs,
            rhs_bound,
            rhs_correction,
            rhs: self.eur_rhs,
            d_eur: self.d_eur,
        }
    }
}

fn build_report(tau: f64, p: &Parts, j: f64) -> EntropyReport {
    let mi = mutual_from_parts(p);
    let s_sigma_nu = p.s_full - p.s_nu;
    let s_r_nu = p.s_rnu - p.s_nu;
    let s_q_nu = p.s_qnu - p.s_nu;
    let d = mi.sigma - j;
    let lhs = s_r_nu + s_q_nu;
    let rhs = incompatibility_bits(&Z_AXIS, &X_AXIS) + s_sigma_nu + (d - j).max(0.0);
    EntropyReport {
        tau,
        S_full: p.s_full,
        S_nu: p.s_nu,
        S_sigma: p.s_sigma,
        S_Rnu: p.s_rnu,
        S_Qnu: p.s_qnu,
        S_sigma_given_nu: s_sigma_nu,
        S_R_given_nu: s_r_nu,
        S_Q_given_nu: s_q_nu,
        I_sigma_nu: mi.sigma,
        I_sigmaz_nu: mi.sigma_z,
        I_sigmax_nu: mi.sigma_x,
        J_classical: j,
        D_discord: d,
        D_discord_clamped: d.max(0.0),
        eur_lhs: lhs,
        eur_rhs: rhs,
        d_eur: lhs - rhs,
        lam: p.lam,
        lam_nu: p.lam_nu,
        lam_sigma: p.lam_sigma,
        lam_r: p.lam_r,
        lam_q: p.lam_q,
    }
}

/// Full entropic report of a flavour-basis state at time τ.
pub fn analyze(rho: &DensityMatrix4, tau: f64, ms: &MeasurementSet) -> Result<EntropyReport> {
    let p = parts(rho)?;
    let j = if ms.mode() == MeasurementMode::TwoAxis && ms.directions() == [Z_AXIS, X_AXIS] {
        let mi = mutual_from_parts(&p);
        mi.sigma_z.max(mi.sigma_x)
    } else {
        classical_correlation(rho, ms)?
    };
    Ok(build_report(tau, &p, j))
}

/// Closed-form report for the diagonal mixture with weights on
/// (e,L), (μ,L), (e,R), (μ,R) at τ = 0.
pub fn initial_report(a: [f64; 4]) -> Result<EntropyReport> {
    check_simplex(&a, 1e-12)?;
    let s0 = entropy_of_spectrum(&a);
    let p_nu = a[0] + a[2];
    let p_sigma = a[2] + a[3];
    let h_nu = binary_entropy(p_nu);
    let h_sigma = binary_entropy(p_sigma);
    let mut lam = a;
    linalg::sort_desc(&mut lam);
    let mut lam_nu = [p_nu, 1.0 - p_nu];
    linalg::sort_desc(&mut lam_nu);
    let mut lam_sigma = [p_sigma, 1.0 - p_sigma];
    linalg::sort_desc(&mut lam_sigma);
    let mut lam_q = [0.5 * p_nu, 0.5 * p_nu, 0.5 * (1.0 - p_nu), 0.5 * (1.0 - p_nu)];
    linalg::sort_desc(&mut lam_q);
    let i_sigma = h_sigma + h_nu - s0;
    let lhs = (s0 - h_nu) + 1.0;
    Ok(EntropyReport {
        tau: 0.0,
        S_full: s0,
        S_nu: h_nu,
        S_sigma: h_sigma,
        S_Rnu: s0,
        S_Qnu: 1.0 + h_nu,
        S_sigma_given_nu: s0 - h_nu,
        S_R_given_nu: s0 - h_nu,
        S_Q_given_nu: 1.0,
        I_sigma_nu: i_sigma,
        I_sigmaz_nu: i_sigma,
        I_sigmax_nu: 0.0,
        J_classical: i_sigma,
        D_discord: 0.0,
        D_discord_clamped: 0.0,
        eur_lhs: lhs,
        eur_rhs: lhs,
        d_eur: 0.0,
        lam,
        lam_nu,
        lam_sigma,
        lam_r: lam,
        lam_q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{Flavour, Helicity, SpinFlavourIndex};
    use crate::linalg::{max_abs_diff, ONE, ZERO};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn e_r() -> DensityMatrix4 {
        DensityMatrix4::pure(SpinFlavourIndex::new(Flavour::E, Helicity::R))
    }

    fn mixed() -> DensityMatrix4 {
        DensityMatrix4::maximally_mixed(BasisTag::Flavour)
    }

    fn random_state(rng: &mut StdRng) -> DensityMatrix4 {
        let a = CMat4::from_fn(|_, _| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        let m = a * a.adjoint();
        let tr = m.trace();
        DensityMatrix4::new(m / tr, BasisTag::Flavour).unwrap()
    }

    fn random_simplex(rng: &mut StdRng) -> [f64; 4] {
        let mut a = [0.0; 4];
        for x in a.iter_mut() {
            *x = -rng.random_range(1e-12..1.0f64).ln();
        }
        let s: f64 = a.iter().sum();
        a.map(|x| x / s)
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn reductions_of_basis_states() {
        assert_eq!(reduce_flavour(&e_r()).unwrap(), CMat2::new(ONE, ZERO, ZERO, ZERO));
        assert_eq!(reduce_spin(&e_r()).unwrap(), CMat2::new(ONE, ZERO, ZERO, ZERO));
        let half = CMat2::identity() * C64::new(0.5, 0.0);
        assert_eq!(reduce_flavour(&mixed()).unwrap(), half);
        assert_eq!(reduce_spin(&mixed()).unwrap(), half);
        let wrong = DensityMatrix4::maximally_mixed(BasisTag::Mass);
        assert!(reduce_flavour(&wrong).is_err() && reduce_spin(&wrong).is_err());
    }

    #[test]
    fn partial_traces_are_linear() {
        let mut rng = StdRng::seed_from_u64(7);
        let (r1, r2) = (random_state(&mut rng), random_state(&mut rng));
        let alpha = C64::new(0.3, 0.0);
        let mix = DensityMatrix4::new_unchecked(
            r1.entries() * alpha + r2.entries() * (ONE - alpha),
            BasisTag::Flavour,
        );
        let lhs = reduce_spin(&mix).unwrap();
        let rhs = reduce_spin(&r1).unwrap() * alpha + reduce_spin(&r2).unwrap() * (ONE - alpha);
        assert!((lhs - rhs).norm() < 1e-15);
    }

    #[test]
    fn projections_are_idempotent() {
        let mut rng = StdRng::seed_from_u64(8);
        let rho = random_state(&mut rng);
        let r = project_r(&rho).unwrap();
        assert!(max_abs_diff(project_r(&r).unwrap().entries(), r.entries()) < 1e-16);
        let q = project_q(&rho).unwrap();
        assert!(max_abs_diff(project_q(&q).unwrap().entries(), q.entries()) < 1e-15);
        assert!(max_abs_diff(project_r(&mixed()).unwrap().entries(), mixed().entries()) == 0.0);
        assert!(max_abs_diff(project_q(&mixed()).unwrap().entries(), mixed().entries()) < 1e-16);
        // the generic projector agrees with both special cases
        assert!(max_abs_diff(project_spin(&rho, &Z_AXIS).unwrap().entries(), r.entries()) < 1e-15);
        assert!(max_abs_diff(project_spin(&rho, &X_AXIS).unwrap().entries(), q.entries()) < 1e-15);
    }

    #[test]
    fn entropy_values() {
        assert!(close(vn_entropy(mixed().entries()).unwrap(), 2.0, 1e-14));
        assert_eq!(vn_entropy(&e_r()).unwrap(), 0.0);
        let m = CMat4::from_diagonal(&nalgebra::Vector4::new(0.5, 0.25, 0.125, 0.125).map(|x| C64::new(x, 0.0)));
        assert!(close(vn_entropy(&m).unwrap(), 1.75, 1e-14));
        assert!(vn_entropy(&(m * C64::new(2.0, 0.0))).is_err());
        assert_eq!(binary_entropy(0.5), 1.0);
        assert_eq!(binary_entropy(0.0), 0.0);
    }

    #[test]
    fn product_state_has_no_mutual_information() {
        let spin = CMat2::new(C64::new(0.7, 0.0), C64::new(0.1, 0.2), C64::new(0.1, -0.2), C64::new(0.3, 0.0));
        let flav = CMat2::new(C64::new(0.4, 0.0), C64::new(0.0, 0.1), C64::new(0.0, -0.1), C64::new(0.6, 0.0));
        let rho = DensityMatrix4::new(kron2(&flav, &spin), BasisTag::Flavour).unwrap();
        let mi = mutual_informations(&rho).unwrap();
        assert!(mi.sigma.abs() < 1e-12);
        assert!(mi.sigma_z.abs() < 1e-12 && mi.sigma_x.abs() < 1e-12);
    }

    #[test]
    fn maximally_mixed_has_no_correlations() {
        let ms = MeasurementSet::bloch_grid(6).unwrap();
        assert!(classical_correlation(&mixed(), &ms).unwrap().abs() < 1e-14);
        assert!(discord(&mixed(), &ms).unwrap().raw.abs() < 1e-14);
        assert!(discord(&mixed(), &MeasurementSet::two_axis()).unwrap().raw.abs() < 1e-14);
    }

    #[test]
    fn uniform_mixture_conditional_entropy() {
        let rho = DensityMatrix4::diagonal_mixture([0.25; 4]).unwrap();
        let c = conditional_entropies(&rho).unwrap();
        assert!(close(c.sigma, 1.0, 1e-14));
    }

    #[test]
    fn pipeline_reproduces_initial_report() {
        let mut rng = StdRng::seed_from_u64(11);
        let ms = MeasurementSet::two_axis();
        for _ in 0..100 {
            let a = random_simplex(&mut rng);
            let expect = initial_report(a).unwrap();
            let got = analyze(&DensityMatrix4::diagonal_mixture(a).unwrap(), 0.0, &ms).unwrap();
            for (x, y) in got.row().iter().zip(expect.row()) {
                assert!(close(*x, y, 1e-10), "{a:?}: {got:?} vs {expect:?}");
            }
        }
    }

    #[test]
    fn initial_report_special_points() {
        let r = initial_report([0.0, 0.0, 1.0, 0.0]).unwrap();
        assert_eq!((r.S_full, r.S_nu, r.S_Q_given_nu, r.I_sigmax_nu, r.D_discord), (0.0, 0.0, 1.0, 0.0, 0.0));
        let r = initial_report([0.25; 4]).unwrap();
        assert_eq!(r.S_full, 2.0);
        assert_eq!((r.lam_nu, r.lam_sigma), ([0.5, 0.5], [0.5, 0.5]));
        assert_eq!((r.I_sigma_nu, r.J_classical, r.D_discord), (0.0, 0.0, 0.0));
        assert!(initial_report([0.5, 0.5, 0.5, -0.5]).is_err());
    }

    #[test]
    fn spin_x_entropy_is_one_bit_at_start() {
        let mut rng = StdRng::seed_from_u64(12);
        for _ in 0..20 {
            let rho = DensityMatrix4::diagonal_mixture(random_simplex(&mut rng)).unwrap();
            let q = project_q(&rho).unwrap();
            let s = reduce_spin(&q).unwrap();
            // in the ± basis the σ_x-measured spin is maximally mixed
            let p_plus = 0.5 + s[(0, 1)].re;
            assert!(close(binary_entropy(p_plus), 1.0, 1e-14));
        }
    }

    #[test]
    fn measurement_cannot_increase_information() {
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..50 {
            let rho = random_state(&mut rng);
            let mi = mutual_informations(&rho).unwrap();
            assert!(mi.sigma >= mi.sigma_z - 1e-10);
            assert!(mi.sigma >= mi.sigma_x - 1e-10);
            let r = analyze(&rho, 0.0, &MeasurementSet::two_axis()).unwrap();
            assert!(r.d_eur >= -1e-8, "{r:?}");
        }
    }

    #[test]
    fn grid_search_dominates_two_axis_set() {
        let mut rng = StdRng::seed_from_u64(14);
        let grid = MeasurementSet::bloch_grid(8).unwrap();
        for _ in 0..20 {
            let rho = random_state(&mut rng);
            let jp = classical_correlation(&rho, &MeasurementSet::two_axis()).unwrap();
            let jg = classical_correlation(&rho, &grid).unwrap();
            assert!(jg >= jp - 1e-12);
        }
    }

    #[test]
    fn measured_information_matches_projection_route() {
        let mut rng = StdRng::seed_from_u64(15);
        let rho = random_state(&mut rng);
        let n = [0.48, -0.6, 0.64];
        let post = project_spin(&rho, &n).unwrap();
        let s_nu = vn_entropy(&reduce_flavour(&rho).unwrap()).unwrap();
        let (p, _) = projector_pair(&n);
        let prob = (reduce_spin(&rho).unwrap() * p).trace().re;
        let direct = binary_entropy(prob) - (vn_entropy(&post).unwrap() - s_nu);
        assert!(close(measured_mutual_information(&rho, &n).unwrap(), direct, 1e-12));
    }

    #[test]
    fn eur_split_adds_up() {
        let mut rng = StdRng::seed_from_u64(16);
        let rho = random_state(&mut rng);
        let e = eur_terms(&rho, &MeasurementSet::two_axis()).unwrap();
        assert!(close(e.rhs, e.rhs_bound + e.rhs_correction, 1e-14));
        assert!(close(e.d_eur, e.lhs - e.rhs, 1e-14));
    }
}
