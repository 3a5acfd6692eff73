//! Degreewise Smith normal forms of an integral presentation.

use loopalg::catalog::catalog_entry;
use loopalg::envelop::graded_smith_report;
use loopalg::quotient::DEFAULT_BUDGET;
use loopalg::LieFamily;

fn main() -> loopalg::Result<()> {
    let family: LieFamily = std::env::args().nth(1).unwrap_or_else(|| "so-odd".into()).parse()?;
    let rank = std::env::args().nth(2).and_then(|r| r.parse().ok()).or(family.fixed_rank()).unwrap_or(3);
    let entry = catalog_entry(family, rank)?;
    for r in entry.expected_integral.relations() {
        println!("  {r} = 0");
    }
    let report = graded_smith_report(&entry.expected_integral, 10, DEFAULT_BUDGET)?;
    println!("ranks {}", report.ranks());
    match report.torsion_degrees().as_slice() {
        [] => println!("torsion free through degree 10"),
        t => t.iter().for_each(|(d, f)| println!("degree {d}: torsion {f:?}")),
    }
    Ok(())
}
