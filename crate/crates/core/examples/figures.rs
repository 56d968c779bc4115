//! Writes the seven figure datasets for the reference scenario.

use spinflavour::prelude::*;
use spinflavour::scenario::figure_datasets;

fn main() -> Result<()> {
    let outdir = std::env::args().nth(1).unwrap_or_else(|| "figures".into());
    let out = run(&ScenarioConfig::reference())?;
    for path in figure_datasets(&out.reports, &outdir)? {
        println!("{}", path.display());
    }
    Ok(())
}
