use std::path::Path;
use std::process::{Command, Output};

fn spinflavour(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinflavour")).args(args).output().unwrap()
}

fn write_config(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

const SHORT: &str = r#"{"tau_max": 2.0, "tau_step": 0.01}"#;

#[test]
fn simulate_writes_timeseries() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "short.json", SHORT);
    let out_path = dir.path().join("ts.csv");
    let out = spinflavour(&["simulate", "--config", &cfg, "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.starts_with("tau,lam1,"));
    assert_eq!(text.lines().count(), 202);
}

#[test]
fn simulate_json_format() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "short.json", SHORT);
    let out_path = dir.path().join("ts.json");
    let out = spinflavour(&["simulate", "--config", &cfg, "--out", out_path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 201);
}

#[test]
fn malformed_config_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "bad.json", "{ tau_max: ");
    let out = spinflavour(&["simulate", "--config", &cfg, "--out", dir.path().join("x.csv").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_field_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "bad.json", r#"{"tau_maximum": 3.0}"#);
    assert_eq!(spinflavour(&["print-params", "--config", &cfg]).status.code(), Some(2));
}

#[test]
fn non_positive_step_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    for step in ["0.0", "-0.01"] {
        let cfg = write_config(dir.path(), "step.json", &format!(r#"{{"tau_step": {step}}}"#));
        let out = spinflavour(&["simulate", "--config", &cfg, "--out", dir.path().join("x.csv").to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "tau_step={step}");
    }
}

#[test]
fn unwritable_output_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "short.json", SHORT);
    // a regular file standing where a directory is needed
    let blocker = dir.path().join("blocker");
    std::fs::write(&blocker, "").unwrap();
    let outdir = blocker.join("figs");
    let out = spinflavour(&["figures", "--config", &cfg, "--outdir", outdir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn figures_writes_seven_datasets_and_follows_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let base = write_config(dir.path(), "base.json", SHORT);
    let strong = write_config(
        dir.path(),
        "strong.json",
        r#"{"tau_max": 2.0, "tau_step": 0.01, "dimensionless": {"omega_v_bar": 5.0, "omega_b_bar": 2.0}}"#,
    );
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for (cfg, outdir) in [(&base, &a), (&strong, &b)] {
        let out = spinflavour(&["figures", "--config", cfg, "--outdir", outdir.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let mut names: Vec<_> = std::fs::read_dir(&a).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert_eq!(names.len(), 7);
    let differing = names
        .iter()
        .filter(|n| std::fs::read(a.join(n)).unwrap() != std::fs::read(b.join(n)).unwrap())
        .count();
    assert!(differing >= 6, "only {differing} datasets changed");
}

#[test]
fn print_params_reports_reference_angle() {
    let out = spinflavour(&["print-params"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["theta_b"].as_f64().unwrap() - 0.0498343).abs() < 1e-6);
    assert!((v["omega_n_bar"].as_f64().unwrap() - 101f64.sqrt()).abs() < 1e-12);
}

#[test]
fn validate_catches_injected_sign_error() {
    let out = spinflavour(&["validate", "--inject-sign-error"]);
    assert_eq!(out.status.code(), Some(3));
    let stdout = String::from_utf8_lossy(&out.stdout);
    let line = stdout.lines().find(|l| l.starts_with("oracle_equivalence")).unwrap();
    assert!(line.contains(" fail "), "{line}");
}

#[test]
fn validate_quick_prints_one_line_per_check() {
    let out = spinflavour(&["validate", "--quick"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    let names: Vec<_> = stdout.lines().filter_map(|l| l.split_whitespace().next()).collect();
    assert_eq!(
        names,
        [
            "t0_identities",
            "incompatibility_constant",
            "oracle_equivalence",
            "conservation",
            "eur_inequality",
            "discord_lifecycle",
            "spin_thermalisation",
            "spectral_closed_forms",
            "determinism"
        ]
    );
}
