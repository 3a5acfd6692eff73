//! Symmetric-function identities and the Weyl-invariant polynomials P_k.
//!
//! The P_k of each family are written in the reduced variable set used by
//! the minimal models: for types A and G2 the last root coordinate is
//! eliminated through the linear invariant, and for E6 the coordinate u6 is
//! eliminated the same way, leaving u1..u5 and u.

use num_traits::One;

use crate::coeff::{rational, Coefficient, Rational};
use crate::error::{Error, Result};
use crate::family::LieFamily;
use crate::gca::{GcaElement, GeneratorSet, GradedGenerator};

/// e_k of the given elements, 1 ≤ k ≤ len.
pub fn elementary_symmetric<C: Coefficient>(k: usize, vars: &[GcaElement<C>]) -> Result<GcaElement<C>> {
    if k < 1 || k > vars.len() {
        return Err(Error::IndexOutOfRange { index: k as i64, min: 1, max: vars.len() as i64 });
    }
    let gens = vars[0].generators();
    // partial[j] = e_j of the variables seen so far
    let mut partial = vec![GcaElement::zero(gens); k + 1];
    partial[0] = GcaElement::one(gens);
    for x in vars {
        for j in (1..=k).rev() {
            let term = partial[j - 1].try_mul(x)?;
            partial[j] = partial[j].try_add(&term)?;
        }
    }
    Ok(partial.swap_remove(k))
}

pub fn power_sum<C: Coefficient>(k: u32, vars: &[GcaElement<C>]) -> Result<GcaElement<C>> {
    let gens = vars.first().map(|v| v.generators().clone()).unwrap_or_else(GeneratorSet::empty);
    vars.iter()
        .try_fold(GcaElement::zero(&gens), |acc, x| acc.try_add(&x.pow(k)))
}

fn check_entries<C: Coefficient>(k: usize, y: &[GcaElement<C>]) -> Result<()> {
    if y.len() < k {
        return Err(Error::MissingEntry(y.len() + 1));
    }
    Ok(())
}

/// σ_k from σ_k = Σ_{i=1}^{k−1} (−1)^{i−1} σ_{k−i} y_i + (−1)^{k−1} k y_k.
/// `y[0]` holds y_1.
pub fn newton_sigma<C: Coefficient>(k: usize, y: &[GcaElement<C>]) -> Result<GcaElement<C>> {
    if k == 0 {
        return Err(Error::IndexOutOfRange { index: 0, min: 1, max: y.len() as i64 });
    }
    check_entries(k, y)?;
    let mut sigma: Vec<GcaElement<C>> = Vec::with_capacity(k);
    for m in 1..=k {
        let mut acc = y[m - 1].scale(&C::from_i64(m as i64));
        if m % 2 == 0 {
            acc = -&acc;
        }
        for i in 1..m {
            let term = sigma[m - i - 1].try_mul(&y[i - 1])?;
            acc = if i % 2 == 1 { acc.try_add(&term)? } else { acc.try_sub(&term)? };
        }
        sigma.push(acc);
    }
    Ok(sigma.pop().expect("k >= 1"))
}

/// p_k solved from p_k − p_{k−1} y_1 + p_{k−2} y_2 − … ± k y_k = 0, p_0 = 1.
pub fn recursion_p<C: Coefficient>(k: usize, y: &[GcaElement<C>]) -> Result<GcaElement<C>> {
    check_entries(k, y)?;
    let gens = match y.first() {
        Some(e) => e.generators().clone(),
        None => GeneratorSet::empty(),
    };
    let mut p = vec![GcaElement::one(&gens)];
    for m in 1..=k {
        // Σ_{i=1}^{m} (−1)^i p_{m−i} y_i with the i = m term weighted by m
        // instead of p_0 = 1; p_m is minus that sum.
        let mut rest = GcaElement::zero(&gens);
        for i in 1..=m {
            let factor = if i == m {
                y[i - 1].scale(&C::from_i64(m as i64))
            } else {
                p[m - i].try_mul(&y[i - 1])?
            };
            rest = if i % 2 == 1 { rest.try_sub(&factor)? } else { rest.try_add(&factor)? };
        }
        p.push(-&rest);
    }
    Ok(p.swap_remove(k))
}

/// Invariant indices k for which `invariant_polynomials` is defined.
pub fn invariant_indices(family: LieFamily, rank: u32) -> Vec<u32> {
    match family {
        LieFamily::Su | LieFamily::Sp | LieFamily::SoOdd | LieFamily::SoEven => (1..=rank).collect(),
        LieFamily::G2 => vec![2, 6],
        LieFamily::F4 => vec![2, 6, 8, 12],
        LieFamily::E6 => vec![2, 5, 6, 8, 9, 12],
    }
}

/// Degree-2 generators of the reduced polynomial ring for a family.
pub fn reduced_variables(family: LieFamily, rank: u32) -> Result<GeneratorSet> {
    family.validate_rank(rank)?;
    let mut gens: Vec<GradedGenerator> = match family {
        LieFamily::E6 => (1..=5).map(|i| GradedGenerator::new(format!("u{i}"), 2)).collect(),
        _ => (1..=rank).map(|i| GradedGenerator::new(format!("u{i}"), 2)).collect(),
    };
    if family == LieFamily::E6 {
        gens.push(GradedGenerator::new("u", 2));
    }
    GeneratorSet::new(gens)
}

fn variables(gens: &GeneratorSet) -> Vec<GcaElement<Rational>> {
    (0..gens.len()).map(|i| GcaElement::generator(gens, i)).collect()
}

fn negated_sum(vars: &[GcaElement<Rational>]) -> GcaElement<Rational> {
    let gens = vars[0].generators();
    let sum = vars.iter().fold(GcaElement::zero(gens), |acc, x| &acc + x);
    -&sum
}

/// The invariant P_k of a family in its reduced variables, with exact
/// rational coefficients.
pub fn invariant_polynomials(family: LieFamily, rank: u32, k: u32) -> Result<GcaElement<Rational>> {
    let gens = reduced_variables(family, rank)?;
    let indices = invariant_indices(family, rank);
    if !indices.contains(&k) {
        return Err(Error::IndexOutOfRange {
            index: k as i64,
            min: *indices.first().unwrap_or(&0) as i64,
            max: *indices.last().unwrap_or(&0) as i64,
        });
    }
    let u = variables(&gens);
    match family {
        LieFamily::Su | LieFamily::G2 => {
            // power sum over n+1 coordinates with the last one eliminated
            let degree = if family == LieFamily::Su { k + 1 } else { k };
            let mut all = u.clone();
            all.push(negated_sum(&u));
            power_sum(degree, &all)
        }
        LieFamily::Sp | LieFamily::SoOdd => power_sum(2 * k, &u),
        LieFamily::SoEven => {
            if k == rank {
                Ok(u.iter().fold(GcaElement::one(&gens), |acc, x| &acc * x))
            } else {
                power_sum(2 * k, &u)
            }
        }
        LieFamily::F4 => {
            let mut signed = GcaElement::zero(&gens);
            for mask in 0u32..16 {
                let lin = u.iter().enumerate().fold(GcaElement::zero(&gens), |acc, (i, x)| {
                    if mask & (1 << i) == 0 { &acc + x } else { &acc - x }
                });
                signed = &signed + &lin.pow(k);
            }
            let scale = Rational::new(One::one(), num_bigint::BigInt::from(2u32).pow(k + 1));
            Ok(&power_sum(k, &u)? + &signed.scale(&scale))
        }
        LieFamily::E6 => e6_invariant(&gens, k),
    }
}

fn e6_invariant(reduced: &GeneratorSet, k: u32) -> Result<GcaElement<Rational>> {
    // u6 := −(u1 + … + u5), substituted before expanding the powers
    let r = variables(reduced);
    let mut ui: Vec<GcaElement<Rational>> = r[..5].to_vec();
    ui.push(negated_sum(&r[..5]));
    let uu = &r[5];
    let mut p = GcaElement::zero(reduced);
    for a in &ui {
        p = &p + &(a + uu).pow(k);
        p = &p + &(a - uu).pow(k);
    }
    let sign = if k % 2 == 0 { rational(1, 1) } else { rational(-1, 1) };
    for i in 0..6 {
        for j in i + 1..6 {
            p = &p + &(&ui[i] + &ui[j]).pow(k).scale(&sign);
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Integer;

    fn ring(names: &[&str], degree: u32) -> GeneratorSet {
        GeneratorSet::new(names.iter().map(|n| GradedGenerator::new(*n, degree)).collect()).unwrap()
    }

    #[test]
    fn elementary_examples() {
        let s = ring(&["t1", "t2", "t3"], 2);
        let t: Vec<GcaElement<Integer>> = (0..3).map(|i| GcaElement::generator(&s, i)).collect();
        assert_eq!(elementary_symmetric(1, &t[..2]).unwrap(), &t[0] + &t[1]);
        assert_eq!(elementary_symmetric(2, &t[..2]).unwrap(), &t[0] * &t[1]);
        let e2 = &(&(&t[0] * &t[1]) + &(&t[0] * &t[2])) + &(&t[1] * &t[2]);
        assert_eq!(elementary_symmetric(2, &t).unwrap(), e2);
        assert!(elementary_symmetric(4, &t).is_err());
        assert!(elementary_symmetric(0, &t).is_err());
    }

    #[test]
    fn newton_small_cases() {
        let s = ring(&["y1", "y2", "y3"], 2);
        let y: Vec<GcaElement<Integer>> = (0..3).map(|i| GcaElement::generator(&s, i)).collect();
        assert_eq!(newton_sigma(1, &y).unwrap(), y[0]);
        let two = Integer::from(2);
        assert_eq!(newton_sigma(2, &y).unwrap(), &y[0].pow(2) - &y[1].scale(&two));
        assert_eq!(recursion_p(0, &y).unwrap(), GcaElement::one(&s));
        assert_eq!(recursion_p(1, &y).unwrap(), y[0]);
        assert_eq!(recursion_p(2, &y).unwrap(), &y[0].pow(2) - &y[1].scale(&two));
        assert_eq!(newton_sigma(4, &y), Err(Error::MissingEntry(4)));
        assert_eq!(recursion_p(4, &y), Err(Error::MissingEntry(4)));
    }

    #[test]
    fn g2_and_f4_quadratic_invariants() {
        let g2 = invariant_polynomials(LieFamily::G2, 2, 2).unwrap();
        assert_eq!(g2.to_string(), "2*u1^2 + 2*u1*u2 + 2*u2^2");
        let f4 = invariant_polynomials(LieFamily::F4, 4, 2).unwrap();
        assert_eq!(f4.to_string(), "3*u1^2 + 3*u2^2 + 3*u3^2 + 3*u4^2");
        let b = invariant_polynomials(LieFamily::SoOdd, 2, 1).unwrap();
        assert_eq!(b.to_string(), "u1^2 + u2^2");
    }

    #[test]
    fn invalid_indices() {
        assert!(invariant_polynomials(LieFamily::G2, 2, 3).is_err());
        assert!(invariant_polynomials(LieFamily::SoEven, 2, 1).is_err());
        assert!(invariant_polynomials(LieFamily::Su, 2, 3).is_err());
    }
}
