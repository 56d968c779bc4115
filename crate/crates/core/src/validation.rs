//! The acceptance checks, runnable from the command line.
//!
//! Each check yields one line `name status metric` so that the output can be
//! parsed by scripts.

use std::fmt;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::basis::{BasisTag, DensityMatrix4, Flavour, Helicity, SpinFlavourIndex};
use crate::entropy::{self, incompatibility_bits, initial_report, spectra, EntropyReport, MeasurementSet, X_AXIS, Z_AXIS};
use crate::error::Result;
use crate::hamiltonian;
use crate::linalg::{self, CMat4, C64};
use crate::lindblad::{self, DissipatorSpec, GeneratorForm, Propagation};
use crate::params::{Couplings, DimensionlessParams};
use crate::scenario::{self, invariant_summary, render_timeseries, OutputFormat, RunOptions, ScenarioConfig};

pub const T0_TOL: f64 = 1e-9;
pub const ORACLE_TOL: f64 = 1e-6;
pub const ORACLE_STEP: f64 = 1e-3;
pub const RANDOM_STATES: usize = 20;
pub const EUR_FLOOR: f64 = -1e-8;
pub const EUR_TRANSIENT_MIN: f64 = 0.01;
pub const LATE_MEAN_MAX: f64 = 0.02;
pub const DISCORD_T0_MAX: f64 = 1e-9;
pub const DISCORD_PEAK_MIN: f64 = 0.01;
pub const SPIN_STD_MAX: f64 = 0.01;
pub const FLAVOUR_AMPLITUDE_MIN: f64 = 0.02;
pub const SPECTRAL_TOL: f64 = 1e-10;
pub const LATE_WINDOW: (f64, f64) = (15.0, 20.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    /// The headline number compared against the threshold.
    pub metric: f64,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &'static str, ok: bool, metric: f64, detail: String) -> Self {
        CheckResult {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            metric,
            detail,
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {:.6e} {}", self.name, self.status, self.metric, self.detail)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ValidationOptions {
    /// Skip the random-state oracle sweep.
    pub quick: bool,
    /// Negate the rotation sign of M in the analytic path.
    pub inject_sign_error: bool,
}

pub fn e_r() -> DensityMatrix4 {
    DensityMatrix4::pure(SpinFlavourIndex::new(Flavour::E, Helicity::R))
}

pub fn random_state(rng: &mut StdRng) -> DensityMatrix4 {
    let a = CMat4::from_fn(|_, _| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    let m = a * a.adjoint();
    let tr = m.trace();
    DensityMatrix4::new_unchecked(m / tr, BasisTag::Flavour)
}

pub fn random_simplex(rng: &mut StdRng) -> [f64; 4] {
    let a: [f64; 4] = std::array::from_fn(|_| -rng.random_range(1e-12..1.0f64).ln());
    let s: f64 = a.iter().sum();
    a.map(|x| x / s)
}

fn window(reports: &[EntropyReport], f: impl Fn(&EntropyReport) -> f64) -> Vec<f64> {
    reports
        .iter()
        .filter(|r| r.tau >= LATE_WINDOW.0 && r.tau <= LATE_WINDOW.1)
        .map(f)
        .collect()
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

fn std_dev(v: &[f64]) -> f64 {
    let m = mean(v);
    (v.iter().map(|x| (x - m).powi(2)).sum::<f64>() / v.len() as f64).sqrt()
}

pub fn t0_identities() -> CheckResult {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(1);
    let ms = MeasurementSet::two_axis();
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let a = random_simplex(&mut rng);
        let expect = initial_report(a).expect("simplex point");
        let got = entropy::analyze(&DensityMatrix4::diagonal_mixture(a).expect("simplex point"), 0.0, &ms)
            .expect("valid state");
        for (x, y) in [
            (got.S_sigma_given_nu, expect.S_sigma_given_nu),
            (got.S_R_given_nu, expect.S_R_given_nu),
            (got.S_Q_given_nu, 1.0),
            (got.I_sigmax_nu, 0.0),
            (got.J_classical, got.I_sigmaz_nu),
            (got.D_discord, 0.0),
            (got.d_eur, 0.0),
        ] {
            worst = worst.max((x - y).abs());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    CheckResult::new(
        "t0_identities",
        worst <= T0_TOL && secs < 1.0,
        worst,
        format!("runtime={secs:.3}s"),
    )
}

pub fn incompatibility() -> CheckResult {
    let c = incompatibility_bits(&Z_AXIS, &X_AXIS);
    CheckResult::new("incompatibility_constant", c == 1.0, c, String::new())
}

fn reference_propagation(opts: ValidationOptions) -> Result<(DimensionlessParams, Propagation)> {
    let p = DimensionlessParams::default();
    let prop = Propagation::new(&p, &DissipatorSpec::reduced(p.beta), GeneratorForm::MasterEquation)?;
    let prop = if opts.inject_sign_error {
        prop.with_propagator(prop.propagator.with_flipped_rotation())
    } else {
        prop
    };
    Ok((p, prop))
}

fn reference_grid() -> Vec<f64> {
    ScenarioConfig::reference().tau_grid().expect("reference grid")
}

fn initial_states(quick: bool) -> Vec<DensityMatrix4> {
    let mut states = vec![e_r()];
    if !quick {
        let mut rng = StdRng::seed_from_u64(3);
        states.extend((0..RANDOM_STATES).map(|_| random_state(&mut rng)));
    }
    states
}

pub fn oracle_equivalence(opts: ValidationOptions) -> Result<CheckResult> {
    if opts.quick {
        return Ok(CheckResult {
            name: "oracle_equivalence",
            status: Status::Skip,
            metric: f64::NAN,
            detail: "skipped by --quick".into(),
        });
    }
    let start = Instant::now();
    let (p, prop) = reference_propagation(opts)?;
    let grid = reference_grid();
    let d = DissipatorSpec::reduced(p.beta);
    let mut worst = 0.0_f64;
    for rho0 in initial_states(false) {
        let exact = prop.evolve(&rho0, &grid)?;
        let rk = lindblad::evolve_oracle(&rho0, &p, &d, &grid, ORACLE_STEP)?;
        worst = worst.max(lindblad::max_deviation(&exact, &rk)?);
    }
    let secs = start.elapsed().as_secs_f64();
    Ok(CheckResult::new(
        "oracle_equivalence",
        worst <= ORACLE_TOL && secs < 30.0,
        worst,
        format!("states={} runtime={secs:.2}s", RANDOM_STATES + 1),
    ))
}

pub fn conservation(opts: ValidationOptions) -> Result<CheckResult> {
    let (_, prop) = reference_propagation(opts)?;
    let grid = reference_grid();
    let mut s = scenario::InvariantSummary {
        min_eigenvalue: f64::INFINITY,
        ..Default::default()
    };
    for rho0 in initial_states(opts.quick) {
        let tr = prop.evolve(&rho0, &grid)?;
        let now = invariant_summary(&tr, &prop, &rho0)?;
        s.trace_drift = s.trace_drift.max(now.trace_drift);
        s.hermiticity = s.hermiticity.max(now.hermiticity);
        s.min_eigenvalue = s.min_eigenvalue.min(now.min_eigenvalue);
        s.r0_drift = s.r0_drift.max(now.r0_drift);
    }
    let ok = s.trace_drift <= 1e-10 && s.hermiticity <= 1e-12 && s.min_eigenvalue >= -1e-8 && s.r0_drift <= 1e-12;
    let metric = s.trace_drift.max(s.hermiticity).max(s.r0_drift);
    Ok(CheckResult::new(
        "conservation",
        ok,
        metric,
        format!(
            "trace={:.2e} herm={:.2e} min_eig={:.2e} r0={:.2e}",
            s.trace_drift, s.hermiticity, s.min_eigenvalue, s.r0_drift
        ),
    ))
}

fn reference_reports(opts: ValidationOptions) -> Result<Vec<EntropyReport>> {
    let run = RunOptions {
        flip_rotation: opts.inject_sign_error,
        unchecked: true,
    };
    Ok(scenario::run_with(&ScenarioConfig::reference(), run)?.reports)
}

pub fn eur_inequality(reports: &[EntropyReport], opts: ValidationOptions) -> Result<CheckResult> {
    let mut floor = reports.iter().map(|r| r.d_eur).fold(f64::INFINITY, f64::min);
    let (_, prop) = reference_propagation(opts)?;
    let ms = MeasurementSet::two_axis();
    let grid: Vec<f64> = reference_grid().into_iter().step_by(10).collect();
    for rho0 in initial_states(opts.quick).into_iter().skip(1) {
        let tr = prop.evolve(&rho0, &grid)?;
        for (t, rho) in tr.tau.iter().zip(&tr.states) {
            floor = floor.min(entropy::analyze(rho, *t, &ms)?.d_eur);
        }
    }
    let peak = reports.iter().map(|r| r.d_eur).fold(f64::NEG_INFINITY, f64::max);
    let late = mean(&window(reports, |r| r.d_eur));
    Ok(CheckResult::new(
        "eur_inequality",
        floor >= EUR_FLOOR && peak >= EUR_TRANSIENT_MIN && late <= LATE_MEAN_MAX,
        peak,
        format!("min={floor:.2e} late_mean={late:.2e}"),
    ))
}

pub fn discord_lifecycle(reports: &[EntropyReport]) -> CheckResult {
    let d0 = reports[0].D_discord.abs();
    let peak = reports.iter().map(|r| r.D_discord).fold(f64::NEG_INFINITY, f64::max);
    let late = mean(&window(reports, |r| r.D_discord));
    CheckResult::new(
        "discord_lifecycle",
        d0 <= DISCORD_T0_MAX && peak >= DISCORD_PEAK_MIN && late <= LATE_MEAN_MAX,
        peak,
        format!("D0={d0:.2e} late_mean={late:.2e}"),
    )
}

/// Half the peak-to-peak excursion.
fn amplitude(v: &[f64]) -> f64 {
    let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
    0.5 * (hi - lo)
}

pub fn spin_thermalisation(reports: &[EntropyReport]) -> CheckResult {
    let spin_std = std_dev(&window(reports, |r| r.S_sigma));
    let flavour_amp = amplitude(&window(reports, |r| r.S_nu));
    CheckResult::new(
        "spin_thermalisation",
        spin_std <= SPIN_STD_MAX && flavour_amp >= FLAVOUR_AMPLITUDE_MIN,
        flavour_amp,
        format!("spin_std={spin_std:.2e} flavour_amplitude={flavour_amp:.2e}"),
    )
}

pub fn spectral_closed_forms() -> CheckResult {
    let mut rng = StdRng::seed_from_u64(5);
    let mut worst = 0.0_f64;
    let diff = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    for _ in 0..100 {
        let rho = random_state(&mut rng);
        let nu = entropy::reduce_flavour(&rho).expect("flavour basis");
        worst = worst.max(diff(
            &spectra::flavour_eigenvalues(&rho).expect("flavour basis"),
            &linalg::hermitian_eigenvalues2(&nu),
        ));
        let r = entropy::project_r(&rho).expect("flavour basis");
        worst = worst.max(diff(
            &spectra::r_eigenvalues(&rho).expect("flavour basis"),
            &linalg::hermitian_eigenvalues4(r.entries()),
        ));
        let q = entropy::project_q(&rho).expect("flavour basis");
        worst = worst.max(diff(
            &spectra::q_eigenvalues(&rho).expect("flavour basis"),
            &linalg::hermitian_eigenvalues4(q.entries()),
        ));
        let omega = rng.random_range(0.0..10.0);
        let mu_b = rng.random_range(0.0..5.0);
        let c = Couplings::equal_moments(omega, mu_b, rng.random_range(0.0..1.5));
        let h = hamiltonian::build_effective_mass_hamiltonian(&c).matrix;
        let scale = h.abs().max().max(1.0);
        worst = worst.max(
            diff(&hamiltonian::kappa_equal_moments(omega, mu_b), &linalg::real_symmetric_eigenvalues4(&h)) / scale,
        );
    }
    CheckResult::new("spectral_closed_forms", worst <= SPECTRAL_TOL, worst, String::new())
}

pub fn determinism() -> Result<CheckResult> {
    let cfg = ScenarioConfig::reference();
    let a = render_timeseries(&scenario::run(&cfg)?.reports, OutputFormat::Csv)?;
    let b = render_timeseries(&scenario::run(&cfg)?.reports, OutputFormat::Csv)?;
    Ok(CheckResult::new(
        "determinism",
        a.as_bytes() == b.as_bytes(),
        if a == b { 0.0 } else { 1.0 },
        format!("bytes={}", a.len()),
    ))
}

/// Runs all checks in order.
pub fn run(opts: ValidationOptions) -> Result<Vec<CheckResult>> {
    let reports = reference_reports(opts)?;
    Ok(vec![
        t0_identities(),
        incompatibility(),
        oracle_equivalence(opts)?,
        conservation(opts)?,
        eur_inequality(&reports, opts)?,
        discord_lifecycle(&reports),
        spin_thermalisation(&reports),
        spectral_closed_forms(),
        determinism()?,
    ])
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.status != Status::Fail)
}
