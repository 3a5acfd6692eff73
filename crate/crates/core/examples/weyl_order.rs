//! Total dimension of H*(G/T;Q) from the Borel presentation against |W|.

use loopalg::catalog::{cohomology_presentation, weyl_order};
use loopalg::sullivan::quotient_dimensions;
use loopalg::LieFamily;

fn main() -> loopalg::Result<()> {
    let cases = [(LieFamily::Su, 2), (LieFamily::Su, 3), (LieFamily::Sp, 2), (LieFamily::SoOdd, 3), (LieFamily::SoEven, 3), (LieFamily::G2, 2)];
    for (family, rank) in cases {
        let c = cohomology_presentation(family, rank)?;
        let top = c.socle_degree().unwrap_or(0);
        let dims = quotient_dimensions(&c, top);
        println!("{:>8}  {}  total {} |W| {}", family.group_name(rank), dims, dims.total(), weyl_order(family, rank)?);
    }
    Ok(())
}
