//! Every catalog entry with its exponents, loop degrees and Weyl order.

use loopalg::catalog::{catalog_entry, checked_ranks};
use loopalg::LieFamily;

fn main() -> loopalg::Result<()> {
    use LieFamily::*;
    for family in [Su, Sp, SoOdd, SoEven, G2, F4, E6] {
        for rank in checked_ranks(family) {
            let e = catalog_entry(family, rank)?;
            println!(
                "{:<10} exponents {:?}  loop degrees {:?}  |W| = {}",
                family.group_name(rank),
                e.exponents,
                e.loop_degrees(),
                e.weyl_order
            );
            println!("           {}", e.commentary);
        }
    }
    Ok(())
}
