//! Runs the reference scenario and prints the landmarks of the time series.

use spinflavour::prelude::*;

fn main() -> Result<()> {
    let out = run(&ScenarioConfig::reference())?;
    let peak = |f: fn(&EntropyReport) -> f64| {
        out.reports.iter().map(|r| (r.tau, f(r))).fold((0.0, f64::MIN), |a, b| if b.1 > a.1 { b } else { a })
    };
    let (t_eur, eur) = peak(|r| r.d_eur);
    let (t_d, d) = peak(|r| r.D_discord);
    println!("params          {:?}", out.params);
    println!("rows            {}", out.reports.len());
    println!("EUR gap peak    {eur:.4} at tau = {t_eur:.2}");
    println!("discord peak    {d:.4} at tau = {t_d:.2}");
    let last = out.reports.last().unwrap();
    println!("final S_nu      {:.6}", last.S_nu);
    println!("final S_sigma   {:.6}", last.S_sigma);
    Ok(())
}
