//! Power sums through σ_k and the p_k recursion with y_i = e_i(t).

use loopalg::gca::{GcaElement, GeneratorSet, GradedGenerator};
use loopalg::symmetric::{elementary_symmetric, newton_sigma, power_sum, recursion_p};
use loopalg::Integer;

fn main() -> loopalg::Result<()> {
    let m = 3;
    let gens = GeneratorSet::new((1..=m).map(|j| GradedGenerator::new(format!("t{j}"), 2)).collect())?;
    let t: Vec<GcaElement<Integer>> = (0..m).map(|j| GcaElement::generator(&gens, j)).collect();
    let mut y: Vec<GcaElement<Integer>> = (1..=m).map(|i| elementary_symmetric(i, &t)).collect::<Result<_, _>>()?;
    y.extend((m..5).map(|_| GcaElement::zero(&gens)));
    for k in 1..=5 {
        let p = power_sum(k as u32, &t)?;
        println!("p{k} = {p}");
        println!("   newton {}  recursion {}", newton_sigma(k, &y)? == p, recursion_p(k, &y)? == p);
    }
    Ok(())
}
