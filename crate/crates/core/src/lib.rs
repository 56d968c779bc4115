//! Spin-flavour evolution of a two-generation Dirac neutrino in a transverse
//! magnetic field with a stochastic component, and the entropic quantities
//! built on the evolved state: conditional entropies, mutual informations,
//! classical correlation, discord and the memory-assisted entropic
//! uncertainty relation.
//!
//! The density matrix is evolved exactly in the eigenbasis of the effective
//! Hamiltonian, where the master equation splits into four 2×2 quadrants
//! driven by a single 3×3 Bloch generator. An RK4 integrator of the full
//! master equation in the flavour basis serves as an independent check.
//!
//! ```
//! use spinflavour::prelude::*;
//!
//! let cfg = ScenarioConfig { tau_max: 2.0, tau_step: 0.5, ..ScenarioConfig::reference() };
//! let out = run(&cfg).unwrap();
//! assert_eq!(out.reports.len(), 5);
//! assert!(out.reports.iter().all(|r| r.d_eur >= -1e-8));
//! ```

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod basis;
pub mod entropy;
pub mod error;
pub mod hamiltonian;
pub mod lindblad;
pub mod linalg;
pub mod params;
pub mod scenario;
pub mod validation;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::basis::{change_basis, BasisTag, DensityMatrix4, Flavour, Helicity, SpinFlavourIndex, Transforms};
    pub use crate::entropy::{analyze, initial_report, EntropyReport, MeasurementMode, MeasurementSet};
    pub use crate::error::{Error, Result};
    pub use crate::lindblad::{evolve, evolve_oracle, DissipatorSpec, GeneratorForm, Propagation, Trajectory};
    pub use crate::params::{Couplings, DimensionlessParams, PhysicalParams};
    pub use crate::scenario::{run, OutputFormat, ScenarioConfig};
}
