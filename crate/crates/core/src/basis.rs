//! Spin⊗flavour bases, the orthogonal transforms between them, and the
//! basis-tagged density matrix.
//!
//! Canonical ordering of the flavour basis is (e,R), (e,L), (μ,R), (μ,L): the
//! flavour index is outer and helicity inner, so `index = 2·flavour + helicity`.
//! The mass and B-eigen bases use the same block layout with the mass (or
//! energy block) index outer.

use std::fmt;
use std::str::FromStr;

use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, CMat4, RMat4, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisTag {
    Flavour,
    Mass,
    BEigen,
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisTag::Flavour => "flavour",
            BasisTag::Mass => "mass",
            BasisTag::BEigen => "b_eigen",
        })
    }
}

impl FromStr for BasisTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "flavour" | "flavor" => Ok(BasisTag::Flavour),
            "mass" => Ok(BasisTag::Mass),
            "b_eigen" | "beigen" | "b" => Ok(BasisTag::BEigen),
            other => Err(Error::UnknownBasis(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavour {
    E,
    Mu,
}

/// Helicity. `R` carries spin label "1" and `L` spin label "0".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Helicity {
    R,
    L,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinFlavourIndex {
    pub flavour: Flavour,
    pub helicity: Helicity,
}

impl SpinFlavourIndex {
    pub const ALL: [SpinFlavourIndex; 4] = [
        SpinFlavourIndex::new(Flavour::E, Helicity::R),
        SpinFlavourIndex::new(Flavour::E, Helicity::L),
        SpinFlavourIndex::new(Flavour::Mu, Helicity::R),
        SpinFlavourIndex::new(Flavour::Mu, Helicity::L),
    ];

    pub const fn new(flavour: Flavour, helicity: Helicity) -> Self {
        SpinFlavourIndex { flavour, helicity }
    }

    pub fn index(self) -> usize {
        let f = match self.flavour {
            Flavour::E => 0,
            Flavour::Mu => 1,
        };
        let h = match self.helicity {
            Helicity::R => 0,
            Helicity::L => 1,
        };
        2 * f + h
    }

    /// Position of this state in the mixture weights (a₁, a₂, a₃, a₄), which
    /// are attached to (e,L), (μ,L), (e,R), (μ,R) in that order.
    pub fn mixture_slot(self) -> usize {
        match (self.flavour, self.helicity) {
            (Flavour::E, Helicity::L) => 0,
            (Flavour::Mu, Helicity::L) => 1,
            (Flavour::E, Helicity::R) => 2,
            (Flavour::Mu, Helicity::R) => 3,
        }
    }
}

const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-10;
const PSD_TOL: f64 = -1e-8;

/// A 4×4 density matrix over spin⊗flavour together with its basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix4 {
    entries: CMat4,
    basis: BasisTag,
}

impl DensityMatrix4 {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(entries: CMat4, basis: BasisTag) -> Result<Self> {
        let rho = DensityMatrix4 { entries, basis };
        let herm = rho.hermiticity_residual();
        if herm > HERMITIAN_TOL {
            return Err(Error::InvalidState(format!("not Hermitian (residual {herm:.3e})")));
        }
        let tr = rho.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace is {tr}")));
        }
        let min = rho.min_eigenvalue();
        if min < PSD_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:.3e}")));
        }
        Ok(rho)
    }

    /// Wraps a matrix without checking the density-matrix invariants.
    pub fn new_unchecked(entries: CMat4, basis: BasisTag) -> Self {
        DensityMatrix4 { entries, basis }
    }

    pub fn pure(state: SpinFlavourIndex) -> Self {
        let mut m = CMat4::zeros();
        let k = state.index();
        m[(k, k)] = linalg::ONE;
        DensityMatrix4::new_unchecked(m, BasisTag::Flavour)
    }

    pub fn maximally_mixed(basis: BasisTag) -> Self {
        DensityMatrix4::new_unchecked(CMat4::identity() * C64::new(0.25, 0.0), basis)
    }

    /// Flavour-basis mixture Σ aᵢ|i⟩⟨i| with weights on (e,L), (μ,L), (e,R), (μ,R).
    pub fn diagonal_mixture(a: [f64; 4]) -> Result<Self> {
        check_simplex(&a, 1e-12)?;
        let mut m = CMat4::zeros();
        for s in SpinFlavourIndex::ALL {
            let k = s.index();
            m[(k, k)] = C64::new(a[s.mixture_slot()], 0.0);
        }
        Ok(DensityMatrix4::new_unchecked(m, BasisTag::Flavour))
    }

    pub fn entries(&self) -> &CMat4 {
        &self.entries
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn into_entries(self) -> CMat4 {
        self.entries
    }

    pub fn trace(&self) -> C64 {
        self.entries.trace()
    }

    pub fn hermiticity_residual(&self) -> f64 {
        linalg::hermiticity_residual(&self.entries)
    }

    /// Spectrum in descending order.
    pub fn eigenvalues(&self) -> [f64; 4] {
        linalg::hermitian_eigenvalues4(&self.entries)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[3]
    }

    pub fn require_basis(&self, expected: BasisTag) -> Result<()> {
        if self.basis != expected {
            return Err(Error::BasisMismatch {
                expected,
                found: self.basis,
            });
        }
        Ok(())
    }

    /// ρ' = O ρ Oᵀ for a real orthogonal O, relabelled with `basis`.
    pub(crate) fn conjugated(&self, o: &RMat4, basis: BasisTag) -> Self {
        let oc = linalg::to_complex(o);
        DensityMatrix4::new_unchecked(oc * self.entries * oc.transpose(), basis)
    }
}

pub(crate) fn check_simplex(a: &[f64], tol: f64) -> Result<()> {
    if a.iter().any(|x| !x.is_finite() || *x < -tol) {
        return Err(Error::Domain(format!("mixture weights must be non-negative: {a:?}")));
    }
    let sum: f64 = a.iter().sum();
    if (sum - 1.0).abs() > tol {
        return Err(Error::Domain(format!("mixture weights sum to {sum}, not 1")));
    }
    Ok(())
}

fn rot2(c: f64, s: f64) -> Matrix2<f64> {
    Matrix2::new(c, -s, s, c)
}

/// The four orthogonal transforms of the diagonalisation chain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transforms {
    /// Symmetric/antisymmetric spin combinations within each mass block.
    pub t_s: RMat4,
    /// Rotation by θ_B completing the diagonalisation.
    pub t_b: RMat4,
    /// T_B = T_b·T_S, mass basis → B-eigenbasis.
    pub t_big_b: RMat4,
    /// Mixing-angle rotation between the flavour and mass blocks.
    pub t_f: RMat4,
    pub theta_nu: f64,
    pub theta_b: f64,
}

impl Transforms {
    pub fn new(theta_nu: f64, theta_b: f64) -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        #[rustfmt::skip]
        let t_s = RMat4::new(
            h,  h, 0.0, 0.0,
            h, -h, 0.0, 0.0,
            0.0, 0.0, h,  h,
            0.0, 0.0, h, -h,
        );
        let (sb, cb) = theta_b.sin_cos();
        #[rustfmt::skip]
        let t_b = RMat4::new(
            cb, 0.0, -sb, 0.0,
            0.0, cb, 0.0,  sb,
            sb, 0.0,  cb, 0.0,
            0.0, -sb, 0.0, cb,
        );
        let (sn, cn) = theta_nu.sin_cos();
        let r = rot2(cn, -sn);
        let t_f = RMat4::from_fn(|i, j| if i % 2 == j % 2 { r[(i / 2, j / 2)] } else { 0.0 });
        Transforms {
            t_s,
            t_b,
            t_big_b: t_b * t_s,
            t_f,
            theta_nu,
            theta_b,
        }
    }

    /// Orthogonal map taking flavour-basis coordinates to `tag` coordinates.
    ///
    /// Flavour → mass is T_Fᵀ: with this orientation the vacuum Hamiltonian
    /// becomes diag(−ω, −ω, ω, ω) and ν_e = cosθ ν₁ + sinθ ν₂.
    pub fn from_flavour(&self, tag: BasisTag) -> RMat4 {
        match tag {
            BasisTag::Flavour => RMat4::identity(),
            BasisTag::Mass => self.t_f.transpose(),
            BasisTag::BEigen => self.t_big_b * self.t_f.transpose(),
        }
    }

    /// Orthogonal map between any two bases.
    pub fn between(&self, from: BasisTag, to: BasisTag) -> RMat4 {
        self.from_flavour(to) * self.from_flavour(from).transpose()
    }
}

/// Re-expresses `rho` in the `to` basis.
pub fn change_basis(rho: &DensityMatrix4, to: BasisTag, t: &Transforms) -> DensityMatrix4 {
    if rho.basis() == to {
        return rho.clone();
    }
    rho.conjugated(&t.between(rho.basis(), to), to)
}
