use std::f64::consts::FRAC_PI_4;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::basis::{check_simplex, DensityMatrix4, Flavour, Helicity, SpinFlavourIndex};
use crate::entropy::MeasurementMode;
use crate::error::{Error, Result};
use crate::lindblad::GeneratorForm;
use crate::params::{DimensionlessParams, PhysicalParams};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Dimensionless,
    Physical,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialState {
    /// Weights on (e,L), (μ,L), (e,R), (μ,R).
    Diagonal([f64; 4]),
    Pure { flavour: Flavour, helicity: Helicity },
}

impl Default for InitialState {
    fn default() -> Self {
        InitialState::Pure {
            flavour: Flavour::E,
            helicity: Helicity::R,
        }
    }
}

impl InitialState {
    pub fn density_matrix(&self) -> Result<DensityMatrix4> {
        match *self {
            InitialState::Diagonal(a) => DensityMatrix4::diagonal_mixture(a),
            InitialState::Pure { flavour, helicity } => {
                Ok(DensityMatrix4::pure(SpinFlavourIndex::new(flavour, helicity)))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Config(format!("unknown output format `{other}`"))),
        }
    }
}

/// When the σ_z measurement acts relative to the evolution.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasurementTiming {
    /// Both spin measurements act on the evolved state ρ(τ).
    #[default]
    Simultaneous,
    /// ρ(0) is dephased in σ_z before it evolves.
    Sequential,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScenarioConfig {
    pub mode: Mode,
    pub dimensionless: Option<DimensionlessParams>,
    pub physical: Option<PhysicalParams>,
    /// Dissipation angle for physical mode; reduced mode carries its own.
    pub beta: Option<f64>,
    pub tau_max: f64,
    pub tau_step: f64,
    pub initial_state: InitialState,
    pub measurement_mode: MeasurementMode,
    pub measurement_timing: MeasurementTiming,
    pub generator: GeneratorForm,
    pub oracle_check: bool,
    pub oracle_step: f64,
    pub output_format: OutputFormat,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            mode: Mode::Dimensionless,
            dimensionless: Some(DimensionlessParams::default()),
            physical: None,
            beta: None,
            tau_max: 20.0,
            tau_step: 0.01,
            initial_state: InitialState::default(),
            measurement_mode: MeasurementMode::TwoAxis,
            measurement_timing: MeasurementTiming::Simultaneous,
            generator: GeneratorForm::MasterEquation,
            oracle_check: false,
            oracle_step: 1e-3,
            output_format: OutputFormat::Csv,
        }
    }
}

/// Largest number of grid intervals accepted.
pub const MAX_GRID_INTERVALS: f64 = 1e7;

impl ScenarioConfig {
    /// The reference scenario: ω̄_V = 5, ω̄_B = 1, β = π/4, pure (e,R) start,
    /// τ ∈ [0, 20] in steps of 0.01.
    pub fn reference() -> Self {
        Self::default()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: ScenarioConfig = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if !(self.tau_step > 0.0 && self.tau_step.is_finite()) {
            return fail(format!("tau_step must be positive, got {}", self.tau_step));
        }
        if !(self.tau_max >= 0.0 && self.tau_max.is_finite()) {
            return fail(format!("tau_max must be non-negative, got {}", self.tau_max));
        }
        if self.tau_max / self.tau_step > MAX_GRID_INTERVALS {
            return fail("tau_max / tau_step exceeds 1e7".into());
        }
        if self.oracle_check && !(self.oracle_step > 0.0) {
            return fail(format!("oracle_step must be positive, got {}", self.oracle_step));
        }
        if let InitialState::Diagonal(a) = self.initial_state {
            check_simplex(&a, 1e-12).map_err(|e| Error::Config(e.to_string()))?;
        }
        if let MeasurementMode::BlochGrid(n) = self.measurement_mode {
            if n < 2 {
                return fail(format!("bloch_grid resolution must be at least 2, got {n}"));
            }
        }
        match self.mode {
            Mode::Dimensionless => {
                let Some(d) = &self.dimensionless else {
                    return fail("dimensionless mode needs a `dimensionless` block".into());
                };
                if self.beta.is_some() {
                    return fail("`beta` belongs inside the `dimensionless` block in this mode".into());
                }
                d.validate().map_err(|e| Error::Config(e.to_string()))?;
            }
            Mode::Physical => {
                let Some(p) = &self.physical else {
                    return fail("physical mode needs a `physical` block".into());
                };
                p.validate().map_err(|e| Error::Config(e.to_string()))?;
            }
        }
        Ok(())
    }

    pub fn physical_beta(&self) -> f64 {
        self.beta.unwrap_or(FRAC_PI_4)
    }

    /// τ-grid {0, Δτ, 2Δτ, …, τ_max}; the final interval is shortened if
    /// τ_max is not a multiple of Δτ.
    pub fn tau_grid(&self) -> Result<Vec<f64>> {
        self.validate()?;
        let n = (self.tau_max / self.tau_step - 1e-9).ceil().max(0.0) as usize;
        let mut grid: Vec<f64> = (0..=n).map(|i| (i as f64 * self.tau_step).min(self.tau_max)).collect();
        grid.dedup();
        Ok(grid)
    }
}
