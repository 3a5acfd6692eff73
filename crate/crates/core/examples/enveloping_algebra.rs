//! Universal enveloping algebra of L for Sp(3)/T: presentation, graded
//! dimensions, and the PBW count.

use loopalg::catalog::{cohomology_presentation, splitting_series};
use loopalg::envelop::{graded_dimensions, pbw_series, simplify_presentation, uea_presentation};
use loopalg::lie::brackets_from_d1;
use loopalg::quotient::DEFAULT_BUDGET;
use loopalg::sullivan::build_minimal_model;
use loopalg::LieFamily;

fn main() -> loopalg::Result<()> {
    let (family, rank, n) = (LieFamily::Sp, 3, 10);
    let l = brackets_from_d1(&build_minimal_model(&cohomology_presentation(family, rank)?)?)?;
    let uea = uea_presentation(&l)?;
    let small = simplify_presentation(&uea, 2, DEFAULT_BUDGET)?;
    println!("generators: {}", small.generators().iter().map(|g| g.name.as_str()).collect::<Vec<_>>().join(" "));
    for r in small.relations() {
        println!("  {r} = 0");
    }
    println!("quotient   {}", graded_dimensions(&uea, n, DEFAULT_BUDGET)?);
    println!("PBW        {}", pbw_series(&l, n));
    println!("splitting  {}", splitting_series(family, rank, n)?);
    Ok(())
}
