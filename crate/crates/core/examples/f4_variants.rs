//! Both commutation variants of the F4 integral presentation, and the split
//! extension built from the loop group relations.

use loopalg::catalog::{expected_integral_presentation_with, split_extension_presentation, F4Variant};
use loopalg::envelop::{graded_dimensions, graded_smith_report};
use loopalg::catalog::expected_rational_presentation;
use loopalg::quotient::DEFAULT_BUDGET;
use loopalg::LieFamily;

fn main() -> loopalg::Result<()> {
    let n = 8;
    let rational = graded_dimensions(&expected_rational_presentation(LieFamily::F4, 4)?, n, DEFAULT_BUDGET)?;
    println!("{:<14}{rational}", "rational");
    for variant in [F4Variant::Commuting, F4Variant::Anticommuting] {
        let p = expected_integral_presentation_with(LieFamily::F4, 4, variant)?;
        let r = graded_smith_report(&p, n, DEFAULT_BUDGET)?;
        println!("{:<14}{}  torsion {:?}", format!("{variant:?}"), r.ranks(), r.torsion_degrees());
        let s = graded_smith_report(&split_extension_presentation(LieFamily::F4, 4, variant)?, n, DEFAULT_BUDGET)?;
        println!("{:<14}{}  torsion {:?}", "  split", s.ranks(), s.torsion_degrees());
    }
    Ok(())
}
