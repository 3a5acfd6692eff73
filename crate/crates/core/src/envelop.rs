//! Universal enveloping algebras and graded invariants of presentations.

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::{Integer, Rational};
use crate::error::Result;
use crate::gca::{GeneratorSet, GradedGenerator};
use crate::lie::{graded_lie_axioms_report, HomotopyLieAlgebra};
use crate::nc::{NcPolynomial, NcWord, RingPresentation};
use crate::quotient::QuotientAlgebra;
use crate::series::PoincareSeries;

pub use crate::series::series_equal;

/// UL = T(L)/(xy − (−1)^{|x||y|}yx − [x,y]), one relation per unordered
/// pair of basis elements (the diagonal only for odd elements).
pub fn uea_presentation(l: &HomotopyLieAlgebra) -> Result<RingPresentation<Rational>> {
    graded_lie_axioms_report(l)?;
    let gens = GeneratorSet::new(
        l.basis().iter().map(|b| GradedGenerator::new(b.name.clone(), b.degree)).collect(),
    )?;
    let n = gens.len();
    let mut relations = Vec::new();
    for x in 0..n {
        for y in x..n {
            let (dx, dy) = (l.basis()[x].degree, l.basis()[y].degree);
            if x == y && dx % 2 == 0 {
                continue;
            }
            let sign = if (dx * dy) % 2 == 0 { Rational::one() } else { -Rational::one() };
            let mut r = NcPolynomial::word(&gens, NcWord(vec![x, y]), Rational::one());
            r = &r - &NcPolynomial::word(&gens, NcWord(vec![y, x]), sign);
            for (z, c) in l.bracket(x, y) {
                r = &r - &NcPolynomial::word(&gens, NcWord::letter(z), c);
            }
            relations.push(r);
        }
    }
    RingPresentation::new(gens, relations)
}

/// PBW series ∏_{odd z}(1 + t^{|z|}) · ∏_{even z}(1 − t^{|z|})^{-1}.
pub fn pbw_series(l: &HomotopyLieAlgebra, n: u32) -> PoincareSeries {
    let odd: Vec<u32> = l.basis().iter().filter(|b| b.degree % 2 == 1).map(|b| b.degree).collect();
    let even: Vec<u32> = l.basis().iter().filter(|b| b.degree % 2 == 0).map(|b| b.degree).collect();
    PoincareSeries::from_product(&odd, &even, &[], n)
}

/// Removes generators that some relation expresses through the others,
/// then drops relations of degree ≤ `prune_degree` already implied by the
/// remaining ones. The result presents an isomorphic algebra.
pub fn simplify_presentation(
    p: &RingPresentation<Rational>,
    prune_degree: u32,
    budget: usize,
) -> Result<RingPresentation<Rational>> {
    let mut current = p.clone();
    while let Some((ri, g)) = find_eliminable(&current) {
        current = eliminate(&current, ri, g)?;
    }
    let mut relations: Vec<NcPolynomial<Rational>> =
        current.relations().iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut i = relations.len();
    while i > 0 {
        i -= 1;
        let Some(deg) = relations[i].degree() else { continue };
        if deg > prune_degree {
            continue;
        }
        let others: Vec<NcPolynomial<Rational>> = relations
            .iter()
            .enumerate()
            .filter(|(j, r)| *j != i && r.degree().is_some_and(|d| d <= deg))
            .map(|(_, r)| r.clone())
            .collect();
        let q = QuotientAlgebra::compute(RingPresentation::new(current.generators().clone(), others)?, deg, budget)?;
        if q.is_zero(&relations[i])? {
            relations.remove(i);
        }
    }
    RingPresentation::new(current.generators().clone(), relations)
}

fn find_eliminable(p: &RingPresentation<Rational>) -> Option<(usize, usize)> {
    for (ri, r) in p.relations().iter().enumerate() {
        for (w, c) in r.terms() {
            if w.len() != 1 || c.is_zero() {
                continue;
            }
            let g = w.letters()[0];
            if r.terms().filter(|(v, _)| v.letters().contains(&g)).count() == 1 {
                return Some((ri, g));
            }
        }
    }
    None
}

fn eliminate(p: &RingPresentation<Rational>, ri: usize, g: usize) -> Result<RingPresentation<Rational>> {
    let r = &p.relations()[ri];
    let gens = p.generators();
    let c = r.coefficient(&NcWord::letter(g));
    let rest = &r.clone() - &NcPolynomial::word(gens, NcWord::letter(g), c.clone());
    let image = rest.scale(&(-c.recip()));
    let kept: Vec<usize> = (0..gens.len()).filter(|&i| i != g).collect();
    let target = GeneratorSet::new(kept.iter().map(|&i| gens.get(i).clone()).collect())?;
    let mut map = vec![usize::MAX; gens.len()];
    for (new, &old) in kept.iter().enumerate() {
        map[old] = new;
    }
    let mut relations = Vec::new();
    for (j, other) in p.relations().iter().enumerate() {
        if j == ri {
            continue;
        }
        let substituted = other.substitute(g, &image)?;
        if !substituted.is_zero() {
            relations.push(substituted.reindex(&target, &map));
        }
    }
    RingPresentation::new(target, relations)
}

/// Dimensions of the quotient over the rationals in degrees `0..=n`.
pub fn graded_dimensions(p: &RingPresentation<Rational>, n: u32, budget: usize) -> Result<PoincareSeries> {
    let q = QuotientAlgebra::compute(p.clone(), n, budget)?;
    Ok(PoincareSeries::new((0..=n).map(|d| q.rank(d) as u64).collect()))
}

pub fn graded_dimension(p: &RingPresentation<Rational>, d: u32, budget: usize) -> Result<u64> {
    Ok(graded_dimensions(p, d, budget)?.get(d).expect("computed through d"))
}

/// Rank and invariant factors > 1 of one degree of an integral quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmithEntry {
    pub degree: u32,
    pub rank: u64,
    pub torsion: Vec<u64>,
}

impl SmithEntry {
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedSmithReport {
    pub entries: Vec<SmithEntry>,
}

impl GradedSmithReport {
    pub fn ranks(&self) -> PoincareSeries {
        PoincareSeries::new(self.entries.iter().map(|e| e.rank).collect())
    }

    pub fn torsion_free(&self) -> bool {
        self.entries.iter().all(SmithEntry::is_free)
    }

    /// Degrees with torsion, with their invariant factors.
    pub fn torsion_degrees(&self) -> Vec<(u32, Vec<u64>)> {
        self.entries.iter().filter(|e| !e.is_free()).map(|e| (e.degree, e.torsion.clone())).collect()
    }
}

fn entry(q: &QuotientAlgebra<Integer>, d: u32) -> SmithEntry {
    let mut torsion: Vec<u64> =
        q.torsion(d).iter().map(|m| m.to_u64().expect("torsion order fits in 64 bits")).collect();
    torsion.sort_unstable();
    SmithEntry { degree: d, rank: q.rank(d) as u64, torsion }
}

pub fn graded_smith_report(p: &RingPresentation<Integer>, n: u32, budget: usize) -> Result<GradedSmithReport> {
    let q = QuotientAlgebra::compute(p.clone(), n, budget)?;
    Ok(GradedSmithReport { entries: (0..=n).map(|d| entry(&q, d)).collect() })
}

pub fn graded_smith(p: &RingPresentation<Integer>, d: u32, budget: usize) -> Result<SmithEntry> {
    let q = QuotientAlgebra::compute(p.clone(), d, budget)?;
    Ok(entry(&q, d))
}

pub fn torsion_free_check(p: &RingPresentation<Integer>, n: u32, budget: usize) -> Result<bool> {
    Ok(graded_smith_report(p, n, budget)?.torsion_free())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::error::Error;
    use crate::coeff::rational;
    use crate::lie::{brackets_from_d1, LieBasisElement};
    use crate::nc::PresentationBuilder;
    use crate::quotient::DEFAULT_BUDGET;
    use crate::sullivan::{build_minimal_model, CohomologyPresentation};
    use crate::gca::GcaElement;

    fn su3_lie() -> HomotopyLieAlgebra {
        let s = GeneratorSet::new(vec![GradedGenerator::new("u1", 2), GradedGenerator::new("u2", 2)]).unwrap();
        let u1: GcaElement<Rational> = GcaElement::generator(&s, 0);
        let u2 = GcaElement::generator(&s, 1);
        let sum = &u1 + &u2;
        let p1 = &(&u1.pow(2) + &u2.pow(2)) + &sum.pow(2);
        let p2 = &(&u1.pow(3) + &u2.pow(3)) - &sum.pow(3);
        let m = build_minimal_model(&CohomologyPresentation::new(s, vec![p1, p2]).unwrap()).unwrap();
        brackets_from_d1(&m).unwrap()
    }

    #[test]
    fn su3_enveloping_algebra() {
        let l = su3_lie();
        let p = uea_presentation(&l).unwrap();
        assert!(p.relation_strings().contains(&"1*a1.a1 - 2*b1".to_string()));
        let dims = graded_dimensions(&p, 5, DEFAULT_BUDGET).unwrap();
        assert_eq!(dims.coefficients(), &[1, 2, 2, 2, 3, 4]);
        assert_eq!(pbw_series(&l, 5), dims);
    }

    #[test]
    fn b1_elimination() {
        let p = uea_presentation(&su3_lie()).unwrap();
        let s = simplify_presentation(&p, 6, DEFAULT_BUDGET).unwrap();
        let names: Vec<&str> = s.generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, vec!["a1", "a2", "b2"]);
        let rels = s.relation_strings();
        assert!(rels.contains(&"-1*a1.a1 + 1*a1.a2 + 1*a2.a1".to_string()), "{rels:?}");
        assert!(rels.contains(&"-1*a1.a1 + 1*a2.a2".to_string()), "{rels:?}");
        assert_eq!(graded_dimensions(&s, 8, DEFAULT_BUDGET).unwrap(), graded_dimensions(&p, 8, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn empty_lie_algebra() {
        let l = HomotopyLieAlgebra::new(Vec::new(), BTreeMap::new()).unwrap();
        assert_eq!(pbw_series(&l, 3).coefficients(), &[1, 0, 0, 0]);
        let p = uea_presentation(&l).unwrap();
        assert_eq!(graded_dimensions(&p, 3, DEFAULT_BUDGET).unwrap().coefficients(), &[1, 0, 0, 0]);
    }

    #[test]
    fn axioms_guard_the_construction() {
        let basis = vec![
            LieBasisElement { name: "x".into(), degree: 2 },
            LieBasisElement { name: "y".into(), degree: 2 },
            LieBasisElement { name: "z".into(), degree: 4 },
        ];
        let mut br = BTreeMap::new();
        br.insert((0, 1), vec![(2, rational(1, 1))]);
        br.insert((1, 0), vec![(2, rational(1, 1))]);
        let l = HomotopyLieAlgebra::new(basis, br).unwrap();
        assert!(matches!(uea_presentation(&l), Err(Error::LieAxioms(_))));
    }

    #[test]
    fn smith_examples() {
        let mut b = PresentationBuilder::<Integer>::new(vec![GradedGenerator::new("x1", 1), GradedGenerator::new("y1", 2)]).unwrap();
        let (x, y) = (b.g("x1"), b.g("y1"));
        b.equate(&x * &x, y.scale(&Integer::from(2)));
        b.commute("x1", "y1", 1);
        let p = b.build().unwrap();
        assert_eq!(graded_smith(&p, 2, DEFAULT_BUDGET).unwrap(), SmithEntry { degree: 2, rank: 1, torsion: vec![] });
        assert_eq!(graded_smith(&p, 0, DEFAULT_BUDGET).unwrap(), SmithEntry { degree: 0, rank: 1, torsion: vec![] });
        let mut f = PresentationBuilder::<Integer>::new(vec![GradedGenerator::new("w", 2)]).unwrap();
        let w = f.g("w");
        f.relation(w.scale(&Integer::from(2)));
        let fab = f.build().unwrap();
        assert_eq!(graded_smith(&fab, 2, DEFAULT_BUDGET).unwrap().torsion, vec![2]);
        assert!(!torsion_free_check(&fab, 4, DEFAULT_BUDGET).unwrap());
        let free = RingPresentation::<Integer>::free(GeneratorSet::new(vec![GradedGenerator::new("w", 2)]).unwrap());
        assert!(torsion_free_check(&free, 6, DEFAULT_BUDGET).unwrap());
    }
}
