//! Full verification run as the CLI does it, printed as JSON.

use loopalg::run::{run_verify, Domain, RunConfig};
use loopalg::LieFamily;

fn main() -> loopalg::Result<()> {
    let cfg = RunConfig::new(LieFamily::SoEven, 4)?.with_coeffs(Domain::Integer).with_max_degree(8);
    let (report, code) = run_verify(&cfg)?;
    print!("{}", report.to_json());
    eprintln!("exit code {code}");
    Ok(())
}
