//! Minimal model of SU(3)/T: generators, differential and its quadratic part.

use loopalg::catalog::cohomology_presentation;
use loopalg::sullivan::{build_minimal_model, derivation_square_check, quadratic_part};
use loopalg::LieFamily;

fn main() -> loopalg::Result<()> {
    let c = cohomology_presentation(LieFamily::Su, 2)?;
    let m = build_minimal_model(&c)?;
    let d1 = quadratic_part(&m);
    for (i, g) in m.generators().iter().enumerate() {
        println!("d({}) = {}    d1 = {}", g.name, m.differential().image(i), d1.image(i));
    }
    println!("d^2 = 0: {}", derivation_square_check(&m));
    Ok(())
}
