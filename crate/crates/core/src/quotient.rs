//! Degreewise structure of a finitely presented graded algebra.
//!
//! The degree-d component is computed from the lower ones as
//!
//! ```text
//! A_d = coker( ⊕_r A_{d−|r|} → ⊕_g A_{d−|g|}·g )
//! ```
//!
//! where the left side sends `e ⊗ r` to `e·r` written through right
//! multiplication by single generators, and `⊕_g A_{d−|g|}·g` is the
//! degree-d part of `T/I_{<d}` (the right ideal of degree-d words modulo
//! the ideal already imposed in lower degrees). Torsion coordinates of the
//! lower components contribute their order relations as extra rows. Every
//! component is stored with explicit coordinates, so torsion is reported
//! exactly and normal forms of arbitrary elements are available.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::linalg::{Cokernel, Coordinate, Eliminator, SparseRow};
use crate::nc::{NcPolynomial, NcWord, RingPresentation};

pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Clone, Debug)]
struct Piece<C: Coefficient> {
    offsets: Vec<Option<usize>>,
    cokernel: Option<Cokernel<C>>,
}

/// A presentation together with its components in degrees `0..=max_degree`.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra<C: Coefficient> {
    presentation: RingPresentation<C>,
    degrees: Vec<u32>,
    relation_degrees: Vec<u32>,
    pieces: Vec<Piece<C>>,
    unit: Vec<Coordinate<C>>,
    budget: usize,
}

impl<C: Coefficient> QuotientAlgebra<C> {
    pub fn new(presentation: RingPresentation<C>, budget: usize) -> Self {
        let degrees = presentation.generators().iter().map(|g| g.degree).collect();
        let relation_degrees = presentation.relations().iter().map(|r| r.degree().unwrap_or(0)).collect();
        let unit = Piece { offsets: Vec::new(), cokernel: None };
        Self {
            presentation,
            degrees,
            relation_degrees,
            pieces: vec![unit],
            unit: vec![Coordinate { modulus: None }],
            budget,
        }
    }

    pub fn compute(presentation: RingPresentation<C>, max_degree: u32, budget: usize) -> Result<Self> {
        let mut q = Self::new(presentation, budget);
        q.extend_to(max_degree)?;
        Ok(q)
    }

    pub fn presentation(&self) -> &RingPresentation<C> {
        &self.presentation
    }

    pub fn max_degree(&self) -> u32 {
        self.pieces.len() as u32 - 1
    }

    pub fn coordinates(&self, d: u32) -> &[Coordinate<C>] {
        match &self.pieces[d as usize].cokernel {
            Some(k) => k.coordinates(),
            None => &self.unit,
        }
    }

    /// Number of coordinates (free and torsion) in degree d.
    pub fn size(&self, d: u32) -> usize {
        self.coordinates(d).len()
    }

    /// Rank of the free part in degree d (the dimension over a field).
    pub fn rank(&self, d: u32) -> usize {
        self.coordinates(d).iter().filter(|c| c.modulus.is_none()).count()
    }

    pub fn torsion(&self, d: u32) -> Vec<C> {
        self.coordinates(d).iter().filter_map(|c| c.modulus.clone()).collect()
    }

    /// Number of columns the degree-d step had to handle.
    pub fn columns(&self, d: u32) -> usize {
        self.pieces[d as usize].cokernel.as_ref().map_or(1, Cokernel::ncols)
    }

    pub fn extend_to(&mut self, max_degree: u32) -> Result<()> {
        while self.max_degree() < max_degree {
            let d = self.max_degree() + 1;
            let piece = self.build(d)?;
            self.pieces.push(piece);
        }
        Ok(())
    }

    fn build(&self, d: u32) -> Result<Piece<C>> {
        let mut offsets = Vec::with_capacity(self.degrees.len());
        let mut ncols = 0usize;
        for &gd in &self.degrees {
            if gd <= d {
                offsets.push(Some(ncols));
                ncols += self.size(d - gd);
            } else {
                offsets.push(None);
            }
        }
        if ncols > self.budget {
            return Err(Error::BudgetExceeded { degree: d, words: ncols, budget: self.budget });
        }
        let mut elim = Eliminator::new(ncols);
        for (g, &gd) in self.degrees.iter().enumerate() {
            let Some(off) = offsets[g] else { continue };
            for (j, c) in self.coordinates(d - gd).iter().enumerate() {
                if let Some(m) = &c.modulus {
                    elim.insert(&[(off + j, m.clone())]);
                }
            }
        }
        let mut by_degree: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, &rd) in self.relation_degrees.iter().enumerate() {
            if rd >= 1 && rd <= d && !self.presentation.relations()[i].is_zero() {
                by_degree.entry(rd).or_default().push(i);
            }
        }
        for (rd, rels) in by_degree {
            let src = d - rd;
            let rows: Vec<Vec<SparseRow<C>>> = (0..self.size(src))
                .into_par_iter()
                .map(|e| self.relation_rows(src, e, &rels, &offsets))
                .collect();
            for row in rows.iter().flatten() {
                elim.insert(row);
            }
        }
        Ok(Piece { offsets, cokernel: Some(elim.finish()) })
    }

    fn relation_rows(&self, src: u32, e: usize, rels: &[usize], offsets: &[Option<usize>]) -> Vec<SparseRow<C>> {
        let mut memo: HashMap<Vec<usize>, (u32, SparseRow<C>)> = HashMap::new();
        memo.insert(Vec::new(), (src, vec![(e, C::one())]));
        let mut rows = Vec::with_capacity(rels.len());
        for &ri in rels {
            let mut acc: BTreeMap<usize, C> = BTreeMap::new();
            for (w, c) in self.presentation.relations()[ri].terms() {
                let (&last, prefix) = w.letters().split_last().expect("relations have positive degree");
                let (_, v) = self.prefix_product(&mut memo, prefix);
                let off = offsets[last].expect("letter fits in degree");
                for (j, x) in v {
                    let entry = acc.entry(off + j).or_insert_with(C::zero);
                    *entry = entry.clone() + c.clone() * x;
                }
            }
            let row: SparseRow<C> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            if !row.is_empty() {
                rows.push(row);
            }
        }
        rows
    }

    fn prefix_product(
        &self,
        memo: &mut HashMap<Vec<usize>, (u32, SparseRow<C>)>,
        prefix: &[usize],
    ) -> (u32, SparseRow<C>) {
        if let Some(v) = memo.get(prefix) {
            return v.clone();
        }
        let (&last, head) = prefix.split_last().expect("empty prefix is memoized");
        let (deg, v) = self.prefix_product(memo, head);
        let out = (deg + self.degrees[last], self.right_multiply(&v, deg, last));
        memo.insert(prefix.to_vec(), out.clone());
        out
    }

    /// `x · g` for `x` in degree `d` given by coordinates.
    pub fn right_multiply(&self, x: &[(usize, C)], d: u32, g: usize) -> SparseRow<C> {
        let target = d + self.degrees[g];
        let piece = &self.pieces[target as usize];
        let off = piece.offsets[g].expect("generator fits");
        let row: SparseRow<C> = x.iter().map(|(j, v)| (off + j, v.clone())).collect();
        piece.cokernel.as_ref().expect("positive degree").normal_form(&row)
    }

    /// Coordinates of a word.
    pub fn word_normal_form(&self, w: &NcWord) -> Result<(u32, SparseRow<C>)> {
        let degree = w.degree(self.presentation.generators());
        if degree > self.max_degree() {
            return Err(Error::InsufficientTruncation { available: self.max_degree(), requested: degree });
        }
        let mut v: SparseRow<C> = vec![(0, C::one())];
        let mut d = 0;
        for &g in w.letters() {
            v = self.right_multiply(&v, d, g);
            d += self.degrees[g];
        }
        Ok((degree, v))
    }

    /// Coordinates of a homogeneous element; zero exactly when the element
    /// lies in the ideal.
    pub fn normal_form(&self, p: &NcPolynomial<C>) -> Result<SparseRow<C>> {
        let Some(degree) = p.degree() else {
            return if p.is_zero() { Ok(Vec::new()) } else { Err(Error::Inhomogeneous) };
        };
        let mut acc: BTreeMap<usize, C> = BTreeMap::new();
        for (w, c) in p.terms() {
            let (_, v) = self.word_normal_form(w)?;
            for (j, x) in v {
                let entry = acc.entry(j).or_insert_with(C::zero);
                *entry = entry.clone() + c.clone() * x;
            }
        }
        let coords = self.coordinates(degree);
        Ok(acc
            .into_iter()
            .map(|(j, v)| match &coords[j].modulus {
                Some(m) => (j, v.rem_euclid(m)),
                None => (j, v),
            })
            .filter(|(_, v)| !v.is_zero())
            .collect())
    }

    pub fn is_zero(&self, p: &NcPolynomial<C>) -> Result<bool> {
        Ok(self.normal_form(p)?.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Integer, Rational};
    use crate::gca::GradedGenerator;
    use crate::nc::PresentationBuilder;

    fn su2_integral() -> RingPresentation<Integer> {
        let mut b = PresentationBuilder::new(vec![GradedGenerator::new("x1", 1), GradedGenerator::new("y1", 2)]).unwrap();
        let (x, y) = (b.g("x1"), b.g("y1"));
        b.equate(&x * &x, y.scale(&Integer::from(2)));
        b.commute("x1", "y1", 1);
        b.build().unwrap()
    }

    #[test]
    fn free_algebra_on_one_generator() {
        let b = PresentationBuilder::<Rational>::new(vec![GradedGenerator::new("a1", 1)]).unwrap();
        let q = QuotientAlgebra::compute(b.build().unwrap(), 8, DEFAULT_BUDGET).unwrap();
        assert!((0..=8).all(|d| q.rank(d) == 1));
    }

    #[test]
    fn su2_integral_is_free_of_rank_one() {
        let q = QuotientAlgebra::compute(su2_integral(), 8, DEFAULT_BUDGET).unwrap();
        for d in 0..=8 {
            assert_eq!(q.rank(d), 1, "degree {d}");
            assert!(q.torsion(d).is_empty());
        }
    }

    #[test]
    fn fabricated_two_torsion() {
        let mut b = PresentationBuilder::<Integer>::new(vec![GradedGenerator::new("w", 2)]).unwrap();
        let w = b.g("w");
        b.relation(w.scale(&Integer::from(2)));
        let q = QuotientAlgebra::compute(b.build().unwrap(), 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(q.rank(2), 0);
        assert_eq!(q.torsion(2), vec![Integer::from(2)]);
        assert_eq!(q.torsion(4), vec![Integer::from(2)]);
        assert!(q.is_zero(&w.scale(&Integer::from(4))).unwrap());
        assert!(!q.is_zero(&w).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let b = PresentationBuilder::<Rational>::new(vec![
            GradedGenerator::new("a", 1),
            GradedGenerator::new("b", 1),
        ])
        .unwrap();
        let err = QuotientAlgebra::compute(b.build().unwrap(), 6, 20).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { degree: 5, words: 32, budget: 20 });
    }

    #[test]
    fn normal_forms_detect_ideal_membership() {
        let mut b = PresentationBuilder::<Rational>::new(vec![
            GradedGenerator::new("a", 1),
            GradedGenerator::new("b", 1),
        ])
        .unwrap();
        b.commute("a", "b", 1);
        let p = b.build().unwrap();
        let q = QuotientAlgebra::compute(p, 4, DEFAULT_BUDGET).unwrap();
        let (a, bb) = (b.g("a"), b.g("b"));
        assert!(q.is_zero(&(&(&a * &(&bb * &a)) - &(&a * &(&a * &bb)))).unwrap());
        assert!(!q.is_zero(&(&a * &bb)).unwrap());
        assert_eq!((0..=4).map(|d| q.rank(d)).collect::<Vec<_>>(), vec![1, 2, 3, 4, 5]);
    }
}
