//! Physical and reduced model parameters.
//!
//! Physical inputs are in natural units with energies in eV. Densities are
//! given in cm⁻³ and the noise correlation length in parsec; the constants
//! below convert both into powers of eV.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bohr magneton in eV/G.
pub const BOHR_MAGNETON_EV_PER_GAUSS: f64 = 5.79e-9;
/// One parsec expressed as an inverse energy, eV⁻¹ (ħ = c = 1).
pub const PARSEC_IN_INV_EV: f64 = 1.5637e23;
/// ħc in eV·cm, used to turn cm⁻³ into eV³.
pub const HBARC_EV_CM: f64 = 1.973_269_8e-5;
/// Fermi constant in eV⁻².
pub const FERMI_CONSTANT_INV_EV2: f64 = 1.166_378_7e-23;

/// Solar mass splitting Δm² in eV².
pub const SOLAR_DELTA_M2: f64 = 7.37e-5;
/// sin²θ for the solar mixing angle.
pub const SOLAR_SIN2_THETA: f64 = 0.297;

pub fn theta_from_sin2(sin2: f64) -> f64 {
    sin2.sqrt().asin()
}

/// Mass-basis couplings that fully determine the 4×4 effective Hamiltonian.
///
/// All energies share one unit: eV for physical input, or the reduced
/// frequency unit when built from [`DimensionlessParams`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Couplings {
    /// Vacuum term ω_ν on the diagonal of the mass-basis Hamiltonian.
    pub omega_nu: f64,
    pub mu11_b: f64,
    pub mu22_b: f64,
    pub mu12_b: f64,
    pub theta_nu: f64,
}

impl Couplings {
    pub fn equal_moments(omega_nu: f64, mu_b: f64, theta_nu: f64) -> Self {
        Couplings {
            omega_nu,
            mu11_b: mu_b,
            mu22_b: mu_b,
            mu12_b: mu_b,
            theta_nu,
        }
    }

    pub fn has_equal_moments(&self) -> bool {
        self.mu11_b == self.mu22_b && self.mu22_b == self.mu12_b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PhysicalParams {
    /// Δm² = m₂² − m₁², eV².
    pub delta_m2: f64,
    /// Neutrino energy, eV.
    pub e_nu: f64,
    /// Vacuum mixing angle, rad.
    pub theta_nu: f64,
    /// Transverse deterministic field, G.
    pub b_perp: f64,
    /// Longitudinal deterministic field, G.
    pub b_par: f64,
    /// Mass-basis magnetic moments in units of μ_B.
    pub mu11: f64,
    pub mu22: f64,
    pub mu12: f64,
    pub gamma1: f64,
    pub gamma2: f64,
    /// Net electron density, cm⁻³.
    pub n_e: f64,
    /// Neutron density, cm⁻³.
    pub n_n: f64,
    /// Fermi constant, eV⁻².
    pub g_f: f64,
    /// ⟨h²⟩/B² of the stochastic field.
    pub eta: f64,
    /// Correlation length of the stochastic field, pc.
    pub l0: f64,
    /// Bohr magneton, eV/G.
    pub mu_b: f64,
}

impl Default for PhysicalParams {
    fn default() -> Self {
        let mu = 2.6e-12;
        PhysicalParams {
            delta_m2: SOLAR_DELTA_M2,
            e_nu: 1e20,
            theta_nu: theta_from_sin2(SOLAR_SIN2_THETA),
            b_perp: 2.93e-6,
            b_par: 0.0,
            mu11: mu,
            mu22: mu,
            mu12: mu,
            gamma1: 1e22,
            gamma2: 1e22,
            n_e: 0.03,
            n_n: 0.0,
            g_f: FERMI_CONSTANT_INV_EV2,
            eta: 1.0,
            l0: 50.0,
            mu_b: BOHR_MAGNETON_EV_PER_GAUSS,
        }
    }
}

impl PhysicalParams {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::Domain(msg.to_string()));
        if !(self.e_nu > 0.0) {
            return fail("neutrino energy must be positive");
        }
        if !(self.b_perp >= 0.0) {
            return fail("transverse field must be non-negative");
        }
        if !(self.gamma1 > 1.0 && self.gamma2 > 1.0) {
            return fail("Lorentz factors must exceed 1");
        }
        if !(0.0..FRAC_PI_2).contains(&self.theta_nu) {
            return fail("mixing angle must lie in [0, π/2)");
        }
        if !(self.eta >= 0.0 && self.l0 >= 0.0) {
            return fail("noise strength and correlation length must be non-negative");
        }
        if !(self.mu_b > 0.0) {
            return fail("Bohr magneton must be positive");
        }
        Ok(())
    }

    /// 1/γ₁₂ = (1/γ₁ + 1/γ₂)/2.
    pub fn gamma12(&self) -> f64 {
        2.0 / (1.0 / self.gamma1 + 1.0 / self.gamma2)
    }

    /// ω = Δm²/(4E_ν) in eV.
    pub fn vacuum_frequency(&self) -> Result<f64> {
        if !(self.e_nu > 0.0) {
            return Err(Error::Domain("neutrino energy must be positive".into()));
        }
        Ok(self.delta_m2 / (4.0 * self.e_nu))
    }

    /// Magnetic interaction energy μB⊥ in eV for a moment given in units of μ_B.
    pub fn moment_energy(&self, mu: f64) -> f64 {
        mu * self.mu_b * self.b_perp
    }

    /// Returns the common moment when μ₁₁ = μ₂₂ = μ₁₂.
    pub fn common_moment(&self) -> Option<f64> {
        (self.mu11 == self.mu22 && self.mu22 == self.mu12).then_some(self.mu11)
    }

    pub fn couplings(&self) -> Result<Couplings> {
        self.validate()?;
        Ok(Couplings {
            omega_nu: self.vacuum_frequency()?,
            mu11_b: self.moment_energy(self.mu11),
            mu22_b: self.moment_energy(self.mu22),
            mu12_b: self.moment_energy(self.mu12),
            theta_nu: self.theta_nu,
        })
    }
}

/// Reduced parameters: frequencies in units of 2w² and the dissipation angle.
///
/// Only the equal-moment configuration is representable here; its single
/// magnetic frequency is ω̄_B = 2μ_νB/(2w²).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DimensionlessParams {
    /// ω̄_V, identified with ω̄_ν on the Hamiltonian diagonal.
    pub omega_v_bar: f64,
    pub omega_b_bar: f64,
    /// Dissipation angle β, rad.
    pub beta: f64,
    /// Vacuum mixing angle, rad.
    pub theta_nu: f64,
}

impl Default for DimensionlessParams {
    fn default() -> Self {
        DimensionlessParams {
            omega_v_bar: 5.0,
            omega_b_bar: 1.0,
            beta: std::f64::consts::FRAC_PI_4,
            theta_nu: theta_from_sin2(SOLAR_SIN2_THETA),
        }
    }
}

impl DimensionlessParams {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::Domain(msg.to_string()));
        if !(self.omega_v_bar.is_finite() && self.omega_v_bar >= 0.0) {
            return fail("omega_v_bar must be finite and non-negative");
        }
        if !(self.omega_b_bar.is_finite() && self.omega_b_bar >= 0.0) {
            return fail("omega_b_bar must be finite and non-negative");
        }
        if !(0.0..=FRAC_PI_2).contains(&self.beta) {
            return fail("beta must lie in [0, π/2]");
        }
        if !(0.0..FRAC_PI_2).contains(&self.theta_nu) {
            return fail("theta_nu must lie in [0, π/2)");
        }
        Ok(())
    }

    /// ω̄_N = √(4ω̄_V² + ω̄_B²).
    pub fn omega_n_bar(&self) -> f64 {
        (4.0 * self.omega_v_bar.powi(2) + self.omega_b_bar.powi(2)).sqrt()
    }

    pub fn couplings(&self) -> Couplings {
        Couplings::equal_moments(self.omega_v_bar, 0.5 * self.omega_b_bar, self.theta_nu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma12_is_harmonic_mean() {
        let p = PhysicalParams {
            gamma1: 2.0,
            gamma2: 6.0,
            ..Default::default()
        };
        assert!((p.gamma12() - 3.0).abs() < 1e-15);
    }

    #[test]
    fn vacuum_frequency_at_gzk_energy() {
        let p = PhysicalParams::default();
        let w = p.vacuum_frequency().unwrap();
        assert!((w - 1.8425e-25).abs() < 1e-30);
    }

    #[test]
    fn rejects_non_positive_energy() {
        let p = PhysicalParams {
            e_nu: 0.0,
            ..Default::default()
        };
        assert!(matches!(p.vacuum_frequency(), Err(Error::Domain(_))));
        assert!(p.validate().is_err());
    }

    #[test]
    fn dimensionless_defaults_are_valid() {
        let d = DimensionlessParams::default();
        d.validate().unwrap();
        assert!((d.omega_n_bar() - 101f64.sqrt()).abs() < 1e-14);
        assert!(DimensionlessParams { beta: 2.0, ..d }.validate().is_err());
        assert!(DimensionlessParams { omega_b_bar: -1.0, ..d }.validate().is_err());
    }
}
