//! Homotopy Lie algebra brackets for a family, read off the quadratic part of d.
//!
//! cargo run --example brackets -- e6

use loopalg::catalog::cohomology_presentation;
use loopalg::lie::{brackets_from_d1, graded_lie_axioms_check};
use loopalg::sullivan::build_minimal_model;
use loopalg::LieFamily;

fn main() -> loopalg::Result<()> {
    let family: LieFamily = std::env::args().nth(1).unwrap_or_else(|| "g2".into()).parse()?;
    let rank = std::env::args().nth(2).and_then(|r| r.parse().ok()).or(family.fixed_rank()).unwrap_or(2);
    let m = build_minimal_model(&cohomology_presentation(family, rank)?)?;
    let l = brackets_from_d1(&m)?;
    let basis: Vec<String> = l.basis().iter().map(|b| format!("{}({})", b.name, b.degree)).collect();
    println!("{}: {}", family.group_name(rank), basis.join(" "));
    for ((x, y), value) in l.bracket_table() {
        let terms: Vec<String> = value.iter().map(|(n, c)| format!("{c}{n}")).collect();
        println!("[{x}, {y}] = {}", terms.join(" + "));
    }
    println!("graded Lie axioms: {}", graded_lie_axioms_check(&l));
    Ok(())
}
