//! Renders a short run as CSV and as JSON, and loads a scenario from JSON.

use spinflavour::prelude::*;
use spinflavour::scenario::render_timeseries;

fn main() -> Result<()> {
    let cfg = ScenarioConfig::from_json(
        r#"{
            "dimensionless": {"omega_v_bar": 5.0, "omega_b_bar": 2.0},
            "tau_max": 0.2,
            "tau_step": 0.1,
            "initial_state": {"diagonal": [0.5, 0.0, 0.5, 0.0]},
            "measurement_timing": "sequential"
        }"#,
    )?;
    let out = run(&cfg)?;
    println!("{}", render_timeseries(&out.reports, OutputFormat::Csv)?);
    println!("{}", render_timeseries(&out.reports, OutputFormat::Json)?);
    Ok(())
}
