//! Scenario configuration, unit reduction, trajectory orchestration and
//! file output.

mod config;
mod output;

pub use config::{
    InitialState, MeasurementTiming, Mode, OutputFormat, ScenarioConfig, MAX_GRID_INTERVALS,
};
pub use output::{figure_datasets, format_value, render_timeseries, write_timeseries, FIGURES};

use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{change_basis, BasisTag, DensityMatrix4};
use crate::entropy::{self, EntropyReport, MeasurementSet};
use crate::error::{Error, Result};
use crate::hamiltonian;
use crate::lindblad::{self, DissipatorSpec, Propagation, Trajectory};
use crate::params::{DimensionlessParams, PhysicalParams, PARSEC_IN_INV_EV};

/// Tolerances checked on every state of a run.
pub const TRACE_TOL: f64 = 1e-10;
pub const HERMITIAN_TOL: f64 = 1e-12;
pub const POSITIVITY_TOL: f64 = -1e-8;
pub const EUR_TOL: f64 = -1e-8;
pub const DISCORD_TOL: f64 = -1e-9;
pub const ORACLE_TOL: f64 = 1e-6;

/// Intermediate quantities of the physical → reduced conversion, all in eV.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Reduction {
    pub omega_nu: f64,
    pub mu_b: f64,
    pub omega_b: f64,
    pub big_w2: f64,
    pub params: DimensionlessParams,
}

/// ω_ν = Δm²/(4E), ω_B = 2μB⊥, W² = 2η(μB⊥)²L₀ and ω̄ = ω/(2W²).
pub fn reduce_physical(p: &PhysicalParams, beta: f64) -> Result<Reduction> {
    p.validate()?;
    let Some(mu) = p.common_moment() else {
        return Err(Error::Domain(
            "reduced units need equal moments μ11 = μ22 = μ12".into(),
        ));
    };
    let omega_nu = p.vacuum_frequency()?;
    let mu_b = p.moment_energy(mu);
    let big_w2 = 2.0 * p.eta * mu_b * mu_b * p.l0 * PARSEC_IN_INV_EV;
    if !(big_w2 > 0.0) {
        return Err(Error::Domain(
            "noise strength w² is zero; dimensionless time is undefined".into(),
        ));
    }
    let params = DimensionlessParams {
        omega_v_bar: omega_nu / (2.0 * big_w2),
        omega_b_bar: 2.0 * mu_b / (2.0 * big_w2),
        beta,
        theta_nu: p.theta_nu,
    };
    params.validate()?;
    Ok(Reduction {
        omega_nu,
        mu_b,
        omega_b: 2.0 * mu_b,
        big_w2,
        params,
    })
}

pub fn to_dimensionless(p: &PhysicalParams, beta: f64) -> Result<DimensionlessParams> {
    Ok(reduce_physical(p, beta)?.params)
}

impl ScenarioConfig {
    pub fn dimensionless_params(&self) -> Result<DimensionlessParams> {
        self.validate()?;
        match self.mode {
            Mode::Dimensionless => Ok(self.dimensionless.expect("validated")),
            Mode::Physical => to_dimensionless(&self.physical.expect("validated"), self.physical_beta()),
        }
    }
}

/// Result of one scenario run.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub params: DimensionlessParams,
    pub trajectory: Trajectory,
    pub reports: Vec<EntropyReport>,
    /// Largest elementwise analytic-vs-RK4 difference, when requested.
    pub oracle_deviation: Option<f64>,
}

/// Options that are not part of the scenario itself.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Negates the rotation terms of the Bloch generator; used only to check
    /// that the validation catches such an error.
    pub flip_rotation: bool,
    /// Skip the per-state invariant checks.
    pub unchecked: bool,
}

pub fn run(config: &ScenarioConfig) -> Result<RunOutput> {
    run_with(config, RunOptions::default())
}

pub fn run_with(config: &ScenarioConfig, opts: RunOptions) -> Result<RunOutput> {
    let params = config.dimensionless_params()?;
    let grid = config.tau_grid()?;
    let ms = MeasurementSet::from_mode(config.measurement_mode)?;
    let dissipator = DissipatorSpec::reduced(params.beta);
    let mut propagation = Propagation::new(&params, &dissipator, config.generator)?;
    if opts.flip_rotation {
        propagation = propagation.with_propagator(propagation.propagator.with_flipped_rotation());
    }
    let mut rho0 = config.initial_state.density_matrix()?;
    if config.measurement_timing == MeasurementTiming::Sequential {
        rho0 = entropy::project_r(&rho0)?;
    }
    let trajectory = propagation.evolve(&rho0, &grid)?;
    let reports = trajectory
        .tau
        .par_iter()
        .zip(trajectory.states.par_iter())
        .map(|(&t, rho)| entropy::analyze(rho, t, &ms))
        .collect::<Result<Vec<_>>>()?;

    let oracle_deviation = if config.oracle_check {
        let spacing = grid.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        let step = config.oracle_step.min(spacing);
        let oracle = lindblad::evolve_oracle(&rho0, &params, &dissipator, &grid, step)?;
        Some(lindblad::max_deviation(&trajectory, &oracle)?)
    } else {
        None
    };

    let out = RunOutput {
        params,
        trajectory,
        reports,
        oracle_deviation,
    };
    if !opts.unchecked {
        check_invariants(&out, &propagation, &rho0)?;
    }
    Ok(out)
}

/// Largest departures from the conservation laws along a trajectory.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct InvariantSummary {
    pub trace_drift: f64,
    pub hermiticity: f64,
    pub min_eigenvalue: f64,
    pub r0_drift: f64,
}

/// Trace, Hermiticity, positivity and conservation of every quadrant's r₀
/// (after removing the e^{±iω̄_N τ} phase of the off-diagonal ones).
pub fn invariant_summary(
    trajectory: &Trajectory,
    propagation: &Propagation,
    rho0: &DensityMatrix4,
) -> Result<InvariantSummary> {
    let q0 = propagation.initial_quadrants(rho0)?;
    let per_state = trajectory
        .tau
        .par_iter()
        .zip(trajectory.states.par_iter())
        .map(|(&t, rho)| -> Result<InvariantSummary> {
            let b = change_basis(rho, BasisTag::BEigen, &propagation.transforms);
            let q = lindblad::decompose_quadrants(&b)?;
            let mut drift = 0.0_f64;
            for (now, start) in q.iter().zip(q0.iter()) {
                let unphase = crate::linalg::C64::from_polar(1.0, -now.quadrant.epsilon() * propagation.omega_n_bar * t);
                drift = drift.max((now.r0 * unphase - start.r0).norm());
            }
            Ok(InvariantSummary {
                trace_drift: (rho.trace() - crate::linalg::ONE).norm(),
                hermiticity: rho.hermiticity_residual(),
                min_eigenvalue: rho.min_eigenvalue(),
                r0_drift: drift,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_state.into_iter().fold(
        InvariantSummary {
            min_eigenvalue: f64::INFINITY,
            ..Default::default()
        },
        |acc, s| InvariantSummary {
            trace_drift: acc.trace_drift.max(s.trace_drift),
            hermiticity: acc.hermiticity.max(s.hermiticity),
            min_eigenvalue: acc.min_eigenvalue.min(s.min_eigenvalue),
            r0_drift: acc.r0_drift.max(s.r0_drift),
        },
    ))
}

fn check_invariants(out: &RunOutput, propagation: &Propagation, rho0: &DensityMatrix4) -> Result<()> {
    let s = invariant_summary(&out.trajectory, propagation, rho0)?;
    let fail = |msg: String| Err(Error::Invariant(msg));
    if s.trace_drift > TRACE_TOL {
        return fail(format!("trace drift {:.3e}", s.trace_drift));
    }
    if s.hermiticity > HERMITIAN_TOL {
        return fail(format!("Hermiticity residual {:.3e}", s.hermiticity));
    }
    if s.min_eigenvalue < POSITIVITY_TOL {
        return fail(format!("negative eigenvalue {:.3e}", s.min_eigenvalue));
    }
    for r in &out.reports {
        if r.d_eur < EUR_TOL {
            return fail(format!("uncertainty relation violated at τ = {}: d = {:.3e}", r.tau, r.d_eur));
        }
        if r.D_discord < DISCORD_TOL {
            return fail(format!("negative discord at τ = {}: {:.3e}", r.tau, r.D_discord));
        }
    }
    if let Some(dev) = out.oracle_deviation {
        if dev > ORACLE_TOL {
            return fail(format!("analytic and RK4 trajectories differ by {dev:.3e}"));
        }
    }
    Ok(())
}

/// Derived parameters printed by `print-params`.
#[derive(Debug, Clone, Serialize)]
pub struct ParamSummary {
    pub mode: Mode,
    pub reduction: Option<Reduction>,
    pub dimensionless: DimensionlessParams,
    pub omega_n_bar: f64,
    pub theta_b: f64,
    pub levels: [f64; 4],
    pub generator: [[f64; 3]; 3],
    pub generator_eigenvalues: [[f64; 2]; 3],
    pub tau_points: usize,
}

pub fn describe(config: &ScenarioConfig) -> Result<ParamSummary> {
    let params = config.dimensionless_params()?;
    let reduction = match config.mode {
        Mode::Physical => Some(reduce_physical(&config.physical.expect("validated"), config.physical_beta())?),
        Mode::Dimensionless => None,
    };
    let c = params.couplings();
    let prop = lindblad::PropagatorM::new(params.omega_b_bar, &DissipatorSpec::reduced(params.beta), config.generator);
    let m = prop.m;
    Ok(ParamSummary {
        mode: config.mode,
        reduction,
        dimensionless: params,
        omega_n_bar: params.omega_n_bar(),
        theta_b: hamiltonian::magnetic_angle(&c)?,
        levels: hamiltonian::eigenfrequencies(&c).levels,
        generator: [0, 1, 2].map(|i| [m[(i, 0)], m[(i, 1)], m[(i, 2)]]),
        generator_eigenvalues: prop.nu.map(|z| [z.re, z.im]),
        tau_points: config.tau_grid()?.len(),
    })
}
