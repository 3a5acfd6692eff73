//! Graded components computed over the full word basis.
//!
//! The degree-d part of the ideal is spanned by all products `u·r·v` of
//! total degree d. This is the textbook definition with no reuse between
//! degrees, so it serves as an independent check of [`crate::quotient`] on
//! small presentations.

use std::collections::HashMap;

use crate::coeff::{clear_denominators, Coefficient, Integer, Rational};
use crate::error::{Error, Result};
use crate::linalg::{bareiss_rank, smith_normal_form};
use crate::nc::{NcWord, RingPresentation};

/// All words of degree `d` in generators of the given degrees, in
/// lexicographic order of generator indices.
pub fn words_of_degree(degrees: &[u32], d: u32) -> Vec<NcWord> {
    fn extend(degrees: &[u32], left: u32, prefix: &mut Vec<usize>, out: &mut Vec<NcWord>) {
        if left == 0 {
            out.push(NcWord(prefix.clone()));
            return;
        }
        for (g, &gd) in degrees.iter().enumerate() {
            if gd <= left {
                prefix.push(g);
                extend(degrees, left - gd, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(degrees, d, &mut Vec::new(), &mut out);
    out
}

/// Number of words of each degree `0..=max_degree`.
pub fn word_counts(degrees: &[u32], max_degree: u32) -> Vec<u128> {
    let mut counts = vec![0u128; max_degree as usize + 1];
    counts[0] = 1;
    for d in 1..=max_degree as usize {
        counts[d] = degrees.iter().filter(|&&g| g as usize <= d).map(|&g| counts[d - g as usize]).sum();
    }
    counts
}

fn relation_matrix<C: Coefficient>(p: &RingPresentation<C>, d: u32, budget: usize) -> Result<(usize, Vec<Vec<(usize, C)>>)> {
    let degrees: Vec<u32> = p.generators().iter().map(|g| g.degree).collect();
    let count = word_counts(&degrees, d)[d as usize];
    if count > budget as u128 {
        return Err(Error::BudgetExceeded { degree: d, words: count.min(usize::MAX as u128) as usize, budget });
    }
    let words = words_of_degree(&degrees, d);
    let index: HashMap<&NcWord, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut by_degree: HashMap<u32, Vec<NcWord>> = HashMap::new();
    let mut rows = Vec::new();
    for r in p.relations() {
        let Some(rd) = r.degree() else { continue };
        if rd > d {
            continue;
        }
        for a in 0..=d - rd {
            let left = by_degree.entry(a).or_insert_with(|| words_of_degree(&degrees, a)).clone();
            let right = by_degree.entry(d - rd - a).or_insert_with(|| words_of_degree(&degrees, d - rd - a)).clone();
            for u in &left {
                for v in &right {
                    let mut row: Vec<(usize, C)> = r
                        .terms()
                        .map(|(w, c)| (index[&u.concat(w).concat(v)], c.clone()))
                        .collect();
                    row.sort_by_key(|(i, _)| *i);
                    rows.push(row);
                }
            }
        }
    }
    Ok((words.len(), rows))
}

fn dense(ncols: usize, rows: &[Vec<(usize, Integer)>]) -> Vec<Vec<Integer>> {
    rows.iter()
        .map(|row| {
            let mut d = vec![Integer::from(0); ncols];
            for (i, v) in row {
                d[*i] += v;
            }
            d
        })
        .collect()
}

/// Dimension of the degree-d component over the rationals.
pub fn naive_dimension(p: &RingPresentation<Rational>, d: u32, budget: usize) -> Result<usize> {
    let (ncols, rows) = relation_matrix(p, d, budget)?;
    let int_rows: Vec<Vec<(usize, Integer)>> = rows
        .iter()
        .map(|row| {
            let ints = clear_denominators(row.iter().map(|(_, c)| c));
            row.iter().map(|(i, _)| *i).zip(ints).collect()
        })
        .collect();
    Ok(ncols - bareiss_rank(&dense(ncols, &int_rows)))
}

/// Free rank and invariant factors > 1 of the degree-d component over the
/// integers.
pub fn naive_smith(p: &RingPresentation<Integer>, d: u32, budget: usize) -> Result<(usize, Vec<Integer>)> {
    let (ncols, rows) = relation_matrix(p, d, budget)?;
    let snf = smith_normal_form(&dense(ncols, &rows), ncols, false);
    Ok((ncols - snf.rank(), snf.torsion()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gca::{GeneratorSet, GradedGenerator};
    use crate::nc::PresentationBuilder;
    use crate::quotient::{QuotientAlgebra, DEFAULT_BUDGET};

    #[test]
    fn word_enumeration() {
        assert_eq!(words_of_degree(&[1, 2], 3).len(), 3);
        assert_eq!(word_counts(&[1, 2], 5), vec![1, 1, 2, 3, 5, 8]);
        assert_eq!(words_of_degree(&[1], 0), vec![NcWord::unit()]);
    }

    #[test]
    fn su2_example_degree_two() {
        let mut b = PresentationBuilder::<Integer>::new(vec![GradedGenerator::new("x1", 1), GradedGenerator::new("y1", 2)]).unwrap();
        let (x, y) = (b.g("x1"), b.g("y1"));
        b.equate(&x * &x, y.scale(&Integer::from(2)));
        b.commute("x1", "y1", 1);
        let p = b.build().unwrap();
        assert_eq!(naive_smith(&p, 2, 1000).unwrap(), (1, vec![]));
        assert_eq!(naive_smith(&p, 0, 1000).unwrap(), (1, vec![]));
    }

    #[test]
    fn agrees_with_recursive_engine_on_torsion() {
        // 2y = x^2 with x, y commuting has torsion-free quotient; 2y = 0 has not
        let mut b = PresentationBuilder::<Integer>::new(vec![GradedGenerator::new("x", 1), GradedGenerator::new("y", 2)]).unwrap();
        let (x, y) = (b.g("x"), b.g("y"));
        b.relation(y.scale(&Integer::from(2)));
        b.equate(&x * &(&x * &x), &x * &y);
        let p = b.build().unwrap();
        let q = QuotientAlgebra::compute(p.clone(), 6, DEFAULT_BUDGET).unwrap();
        for d in 0..=6 {
            let (rank, torsion) = naive_smith(&p, d, 10_000).unwrap();
            assert_eq!(rank, q.rank(d), "degree {d}");
            assert_eq!(torsion, q.torsion(d), "degree {d}");
        }
    }

    use crate::envelop::graded_dimensions;
    use crate::nc::{NcPolynomial, RingPresentation};
    use proptest::prelude::*;

    const DEGREES: [u32; 3] = [1, 1, 2];

    /// Relations from (degree, word choices, coefficients); words are picked
    /// among all words of that degree.
    fn random_presentation(specs: &[(u32, Vec<usize>, Vec<i64>)]) -> RingPresentation<Integer> {
        let gens = GeneratorSet::new(
            ["x", "y", "z"].iter().zip(DEGREES).map(|(n, d)| GradedGenerator::new(*n, d)).collect(),
        )
        .unwrap();
        let mut b = PresentationBuilder::<Integer>::new(gens.as_slice().to_vec()).unwrap();
        for (d, picks, coeffs) in specs {
            let words = words_of_degree(&DEGREES, *d);
            let terms = picks.iter().zip(coeffs).map(|(&i, &c)| (words[i % words.len()].clone(), Integer::from(c)));
            let r = NcPolynomial::from_terms(&gens, terms);
            if !r.is_zero() {
                b.relation(r);
            }
        }
        b.build().unwrap()
    }

    fn specs() -> impl Strategy<Value = Vec<(u32, Vec<usize>, Vec<i64>)>> {
        prop::collection::vec(
            (2u32..=3, prop::collection::vec(0usize..64, 1..4), prop::collection::vec(-3i64..=3, 3)),
            1..4,
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn engine_matches_full_word_basis(specs in specs()) {
            let p = random_presentation(&specs);
            let q = QuotientAlgebra::compute(p.clone(), 5, DEFAULT_BUDGET).unwrap();
            let rational: RingPresentation<Rational> = p.map_coefficients(|c| Rational::from_integer(c.clone()));
            let dims = graded_dimensions(&rational, 5, DEFAULT_BUDGET).unwrap();
            for d in 0..=5 {
                let (rank, torsion) = naive_smith(&p, d, 100_000).unwrap();
                prop_assert_eq!(rank, q.rank(d));
                prop_assert_eq!(&torsion, &q.torsion(d));
                prop_assert_eq!(naive_dimension(&rational, d, 100_000).unwrap() as u64, dims.get(d).unwrap());
            }
        }

        #[test]
        fn relabeling_preserves_dimensions(specs in specs(), order in Just(vec![0usize, 1, 2]).prop_shuffle()) {
            let p = random_presentation(&specs).map_coefficients(|c| Rational::from_integer(c.clone()));
            let q = p.relabel(&order).unwrap();
            prop_assert_eq!(graded_dimensions(&p, 6, DEFAULT_BUDGET).unwrap(), graded_dimensions(&q, 6, DEFAULT_BUDGET).unwrap());
        }
    }
}
