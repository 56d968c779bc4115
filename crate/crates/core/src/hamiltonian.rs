//! Hamiltonian builders and the closed-form spectrum of the effective
//! mass-basis Hamiltonian in a transverse field.

use std::f64::consts::{FRAC_PI_2, SQRT_2};

use crate::basis::{BasisTag, Transforms};
use crate::error::{Error, Result};
use crate::params::{Couplings, PhysicalParams, HBARC_EV_CM};
use crate::linalg::RMat4;

/// A real symmetric 4×4 operator tagged with the basis it is written in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hamiltonian {
    pub matrix: RMat4,
    pub basis: BasisTag,
}

impl Hamiltonian {
    pub fn new(matrix: RMat4, basis: BasisTag) -> Self {
        Hamiltonian { matrix, basis }
    }

    /// Sum of two terms; both must be written in the same basis.
    pub fn try_add(&self, other: &Hamiltonian) -> Result<Hamiltonian> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis,
                found: other.basis,
            });
        }
        Ok(Hamiltonian::new(self.matrix + other.matrix, self.basis))
    }

    pub fn in_basis(&self, to: BasisTag, t: &Transforms) -> Hamiltonian {
        let o = t.between(self.basis, to);
        Hamiltonian::new(o * self.matrix * o.transpose(), to)
    }
}

/// ω·[[−c₂,0,s₂,0],[0,−c₂,0,s₂],[s₂,0,c₂,0],[0,s₂,0,c₂]] with c₂ = cos2θ, s₂ = sin2θ.
pub fn vacuum_matrix(omega: f64, theta_nu: f64) -> RMat4 {
    let (s2, c2) = (2.0 * theta_nu).sin_cos();
    #[rustfmt::skip]
    let m = RMat4::new(
        -c2, 0.0,  s2, 0.0,
        0.0, -c2, 0.0,  s2,
         s2, 0.0,  c2, 0.0,
        0.0,  s2, 0.0,  c2,
    );
    m * omega
}

pub fn build_vacuum_hamiltonian(p: &PhysicalParams) -> Result<Hamiltonian> {
    let omega = p.vacuum_frequency()?;
    Ok(Hamiltonian::new(vacuum_matrix(omega, p.theta_nu), BasisTag::Flavour))
}

/// Matter potential; acts only on the left-handed states (e,L) and (μ,L).
///
/// Not part of the evolution Hamiltonian: at interstellar densities it is
/// many orders of magnitude below the magnetic term.
pub fn build_matter_hamiltonian(p: &PhysicalParams) -> Result<Hamiltonian> {
    if !(p.n_e >= 0.0 && p.n_n >= 0.0) {
        return Err(Error::Domain("densities must be non-negative".into()));
    }
    let to_ev3 = HBARC_EV_CM.powi(3);
    let pref = p.g_f / SQRT_2;
    let n_eff_e = (p.n_e - 0.5 * p.n_n) * to_ev3;
    let n_eff_mu = -0.5 * p.n_n * to_ev3;
    let mut m = RMat4::zeros();
    m[(1, 1)] = pref * n_eff_e;
    m[(3, 3)] = pref * n_eff_mu;
    Ok(Hamiltonian::new(m, BasisTag::Flavour))
}

/// Flavour-basis magnetic moments and their Lorentz-suppressed counterparts.
///
/// The `*_gamma` fields hold (μ/γ)_ℓℓ' itself, i.e. the negative of the
/// rotated μ_jk/γ_jk combinations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlavourMoments {
    pub mu_ee: f64,
    pub mu_emu: f64,
    pub mu_mumu: f64,
    pub mu_gamma_ee: f64,
    pub mu_gamma_emu: f64,
    pub mu_gamma_mumu: f64,
}

fn rotate(m11: f64, m22: f64, m12: f64, theta: f64) -> (f64, f64, f64) {
    let (s, c) = theta.sin_cos();
    let (s2, c2) = (2.0 * theta).sin_cos();
    (
        m11 * c * c + m22 * s * s + m12 * s2,
        m12 * c2 + 0.5 * (m22 - m11) * s2,
        m11 * s * s + m22 * c * c - m12 * s2,
    )
}

pub fn rotate_moments(mu11: f64, mu22: f64, mu12: f64, gammas: (f64, f64), theta: f64) -> FlavourMoments {
    let (g1, g2) = gammas;
    let g12 = 2.0 / (1.0 / g1 + 1.0 / g2);
    let (ee, emu, mumu) = rotate(mu11, mu22, mu12, theta);
    let (gee, gemu, gmumu) = rotate(mu11 / g1, mu22 / g2, mu12 / g12, theta);
    FlavourMoments {
        mu_ee: ee,
        mu_emu: emu,
        mu_mumu: mumu,
        mu_gamma_ee: -gee,
        mu_gamma_emu: -gemu,
        mu_gamma_mumu: -gmumu,
    }
}

/// Flavour moments in units of μ_B.
pub fn flavour_moments(p: &PhysicalParams) -> FlavourMoments {
    rotate_moments(p.mu11, p.mu22, p.mu12, (p.gamma1, p.gamma2), p.theta_nu)
}

/// Magnetic interaction in the flavour basis for moments already expressed
/// as energy per unit field.
pub fn magnetic_matrix(m: &FlavourMoments, b_perp: f64, b_par: f64, drop_longitudinal: bool) -> RMat4 {
    let bl = if drop_longitudinal { 0.0 } else { b_par };
    let (dee, demu, dmm) = (-m.mu_gamma_ee * bl, -m.mu_gamma_emu * bl, -m.mu_gamma_mumu * bl);
    let (tee, temu, tmm) = (m.mu_ee * b_perp, m.mu_emu * b_perp, m.mu_mumu * b_perp);
    #[rustfmt::skip]
    let h = RMat4::new(
        dee,  tee,  demu, temu,
        tee,  dee,  temu, demu,
        demu, temu, dmm,  tmm,
        temu, demu, tmm,  dmm,
    );
    h
}

pub fn build_magnetic_hamiltonian(p: &PhysicalParams, drop_longitudinal: bool) -> Result<Hamiltonian> {
    p.validate()?;
    let mut m = flavour_moments(p);
    for v in [
        &mut m.mu_ee,
        &mut m.mu_emu,
        &mut m.mu_mumu,
        &mut m.mu_gamma_ee,
        &mut m.mu_gamma_emu,
        &mut m.mu_gamma_mumu,
    ] {
        *v *= p.mu_b;
    }
    Ok(Hamiltonian::new(
        magnetic_matrix(&m, p.b_perp, p.b_par, drop_longitudinal),
        BasisTag::Flavour,
    ))
}

/// Flavour-basis evolution Hamiltonian (vacuum plus transverse field) built
/// directly from the rotated moments, without going through the mass basis.
pub fn flavour_hamiltonian(c: &Couplings) -> Hamiltonian {
    let m = rotate_moments(c.mu11_b, c.mu22_b, c.mu12_b, (f64::INFINITY, f64::INFINITY), c.theta_nu);
    let h = vacuum_matrix(c.omega_nu, c.theta_nu) + magnetic_matrix(&m, 1.0, 0.0, true);
    Hamiltonian::new(h, BasisTag::Flavour)
}

pub fn build_effective_mass_hamiltonian(c: &Couplings) -> Hamiltonian {
    let w = c.omega_nu;
    let (a, b, d) = (c.mu11_b, c.mu12_b, c.mu22_b);
    #[rustfmt::skip]
    let h = RMat4::new(
        -w,   a,  0.0, b,
         a,  -w,  b,  0.0,
        0.0,  b,  w,   d,
         b,  0.0, d,   w,
    );
    Hamiltonian::new(h, BasisTag::Mass)
}

/// θ_B = ½ arctan[μ₁₂B / (ω_ν − (μ₁₁ − μ₂₂)B/2)], folded into [0, π/2).
pub fn magnetic_angle(c: &Couplings) -> Result<f64> {
    let num = c.mu12_b;
    let den = c.omega_nu - 0.5 * (c.mu11_b - c.mu22_b);
    if num == 0.0 && den == 0.0 {
        return Err(Error::DegenerateAngle);
    }
    let mut theta = 0.5 * num.atan2(den);
    if theta < 0.0 {
        theta += FRAC_PI_2;
    }
    if theta >= FRAC_PI_2 {
        theta -= FRAC_PI_2;
    }
    Ok(theta)
}

pub fn transforms(c: &Couplings) -> Result<Transforms> {
    Ok(Transforms::new(c.theta_nu, magnetic_angle(c)?))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenfrequencies {
    /// ω_B = (μ₁₁ + μ₂₂)B, equal to 2μ_νB for equal moments.
    pub omega_b: f64,
    /// Splitting between the two energy blocks; √(4ω_ν² + ω_B²) for equal moments.
    pub omega_n: f64,
    /// Levels E₁..E₄ in the order E₁,₂ = (−ω_N ± ω_B)/2, E₃,₄ = (ω_N ± ω_B)/2.
    pub levels: [f64; 4],
}

/// Exact levels of the effective Hamiltonian, from its two decoupled 2×2 blocks
/// after the spin symmetrisation.
pub fn eigenfrequencies(c: &Couplings) -> Eigenfrequencies {
    let sum = 0.5 * (c.mu11_b + c.mu22_b);
    let diff = 0.5 * (c.mu11_b - c.mu22_b);
    let r_a = (c.omega_nu - diff).hypot(c.mu12_b);
    let r_b = (c.omega_nu + diff).hypot(c.mu12_b);
    Eigenfrequencies {
        omega_b: 2.0 * sum,
        omega_n: r_a + r_b,
        levels: [sum - r_a, -sum - r_b, sum + r_a, -sum + r_b],
    }
}

/// κ = ±[√(ω_ν² + (μ_νB)²) ± μ_νB], the equal-moment spectrum, descending.
pub fn kappa_equal_moments(omega_nu: f64, mu_b: f64) -> [f64; 4] {
    let r = omega_nu.hypot(mu_b);
    let mut k = [r + mu_b, r - mu_b, -(r - mu_b), -(r + mu_b)];
    crate::linalg::sort_desc(&mut k);
    k
}
