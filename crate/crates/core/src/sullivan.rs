//! Minimal models of spaces with good cohomology.
//!
//! If H*(X;Q) = Q[u_1..u_n]/(P_1..P_m) with the P_j a regular sequence, the
//! minimal model is ΛV with V spanned by the u_i and odd generators v_j of
//! degree |P_j| − 1, and differential d(u_i) = 0, d(v_j) = P_j.

use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::coeff::{clear_denominators, Integer, Rational};
use crate::error::{Error, Result};
use crate::gca::{Derivation, GcaElement, GeneratorSet, GradedGenerator, Monomial};
use crate::linalg::{bareiss_rank, Eliminator};
use crate::nc::{NcPolynomial, NcWord, PresentationBuilder};
use crate::quotient::QuotientAlgebra;
use crate::series::PoincareSeries;

/// A polynomial ring on even generators modulo homogeneous relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyPresentation {
    pub even_generators: GeneratorSet,
    pub relations: Vec<GcaElement<Rational>>,
    /// Names of the odd model generators, one per relation.
    pub odd_names: Vec<String>,
    /// Names of the dual Lie basis, even generators first.
    pub dual_names: Vec<String>,
}

impl CohomologyPresentation {
    /// Relations are named `v1, v2, …`; duals are `a…` for `u…` and
    /// `b1, b2, …` for the odd generators.
    pub fn new(even_generators: GeneratorSet, relations: Vec<GcaElement<Rational>>) -> Result<Self> {
        let odd_names = (1..=relations.len()).map(|j| format!("v{j}")).collect();
        let mut dual_names: Vec<String> = even_generators
            .iter()
            .map(|g| match g.name.strip_prefix('u') {
                Some(rest) => format!("a{rest}"),
                None => format!("s{}", g.name),
            })
            .collect();
        dual_names.extend((1..=relations.len()).map(|j| format!("b{j}")));
        Self::with_names(even_generators, relations, odd_names, dual_names)
    }

    pub fn with_names(
        even_generators: GeneratorSet,
        relations: Vec<GcaElement<Rational>>,
        odd_names: Vec<String>,
        dual_names: Vec<String>,
    ) -> Result<Self> {
        for g in even_generators.iter() {
            if g.is_odd() {
                return Err(Error::BadImageDegree { generator: g.name.clone(), expected: g.degree + 1 });
            }
        }
        for (index, r) in relations.iter().enumerate() {
            if r.generators() != &even_generators {
                return Err(Error::MismatchedGenerators);
            }
            match r.degree() {
                Some(d) if d >= 4 && d % 2 == 0 => {}
                Some(d) => return Err(Error::RelationDegree { index, degree: d }),
                None => return Err(Error::InhomogeneousRelation { index }),
            }
        }
        if odd_names.len() != relations.len() {
            return Err(Error::LengthMismatch { expected: relations.len(), found: odd_names.len() });
        }
        let total = even_generators.len() + relations.len();
        if dual_names.len() != total {
            return Err(Error::LengthMismatch { expected: total, found: dual_names.len() });
        }
        Ok(Self { even_generators, relations, odd_names, dual_names })
    }

    pub fn relation_degrees(&self) -> Vec<u32> {
        self.relations.iter().map(|r| r.degree().expect("validated")).collect()
    }

    /// Σ|P_j| − Σ|u_i|, the top degree of a complete intersection.
    pub fn socle_degree(&self) -> Option<u32> {
        let top: u32 = self.relation_degrees().iter().sum();
        let bottom: u32 = self.even_generators.iter().map(|g| g.degree).sum();
        top.checked_sub(bottom)
    }
}

/// (ΛV, d) with V = even generators followed by odd ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalModel {
    generators: GeneratorSet,
    even_count: usize,
    differential: Derivation<Rational>,
    dual_names: Vec<String>,
}

impl MinimalModel {
    pub fn new(differential: Derivation<Rational>, even_count: usize, dual_names: Vec<String>) -> Result<Self> {
        let generators = differential.generators().clone();
        if dual_names.len() != generators.len() {
            return Err(Error::LengthMismatch { expected: generators.len(), found: dual_names.len() });
        }
        Ok(Self { generators, even_count, differential, dual_names })
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn differential(&self) -> &Derivation<Rational> {
        &self.differential
    }

    pub fn even_count(&self) -> usize {
        self.even_count
    }

    pub fn dual_names(&self) -> &[String] {
        &self.dual_names
    }

    /// The same model with d replaced; used to perturb higher-order parts.
    pub fn with_differential(&self, differential: Derivation<Rational>) -> Result<Self> {
        Self::new(differential, self.even_count, self.dual_names.clone())
    }
}

pub fn build_minimal_model(c: &CohomologyPresentation) -> Result<MinimalModel> {
    let mut gens: Vec<GradedGenerator> = c.even_generators.as_slice().to_vec();
    for (name, d) in c.odd_names.iter().zip(c.relation_degrees()) {
        gens.push(GradedGenerator::new(name.clone(), d - 1));
    }
    let all = GeneratorSet::new(gens)?;
    let n = c.even_generators.len();
    let embed: Vec<GcaElement<Rational>> = (0..n).map(|i| GcaElement::generator(&all, i)).collect();
    let mut images = vec![GcaElement::zero(&all); n];
    for r in &c.relations {
        images.push(r.substitute(&embed)?);
    }
    let d = Derivation::new(&all, images)?;
    MinimalModel::new(d, n, c.dual_names.clone())
}

pub fn derivation_square_check(m: &MinimalModel) -> bool {
    m.differential.squares_to_zero()
}

/// d₁: the word-length-2 component of every generator image.
pub fn quadratic_part(m: &MinimalModel) -> Derivation<Rational> {
    let images = m.differential.images().iter().map(|img| img.word_length_component(2)).collect();
    Derivation::new(&m.generators, images).expect("components keep degrees")
}

fn monomials_of_degree(degrees: &[u32], d: u32) -> Vec<Vec<u32>> {
    fn rec(degrees: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut e = 0;
        while e * degrees[i] <= left {
            cur.push(e);
            rec(degrees, i + 1, left - e * degrees[i], cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(degrees, 0, d, &mut Vec::new(), &mut out);
    out
}

fn relation_terms(c: &CohomologyPresentation) -> Vec<(u32, Vec<(Vec<u32>, Integer)>)> {
    c.relations
        .iter()
        .map(|r| {
            let terms: Vec<(&Monomial, &Rational)> = r.terms().collect();
            let ints = clear_denominators(terms.iter().map(|(_, q)| *q));
            let row = terms.iter().map(|(m, _)| m.exponents().to_vec()).zip(ints).collect();
            (r.degree().expect("validated"), row)
        })
        .collect()
}

/// Rows `m·P_j` of degree `d`, expanded in the degree-d monomial basis.
fn degree_rows(c: &CohomologyPresentation, terms: &[(u32, Vec<(Vec<u32>, Integer)>)], d: u32) -> (usize, Vec<Vec<(usize, Integer)>>) {
    let degrees: Vec<u32> = c.even_generators.iter().map(|g| g.degree).collect();
    let basis = monomials_of_degree(&degrees, d);
    let index: HashMap<&Vec<u32>, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for (pd, p) in terms {
        if *pd > d {
            continue;
        }
        for m in monomials_of_degree(&degrees, d - pd) {
            let mut row: Vec<(usize, Integer)> = p
                .iter()
                .map(|(e, coef)| {
                    let prod: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                    (index[&prod], coef.clone())
                })
                .collect();
            row.sort_by_key(|(i, _)| *i);
            rows.push(row);
        }
    }
    (basis.len(), rows)
}

/// Degreewise dimensions of the quotient ring through `max_degree`: the
/// number of monomials minus the rank of the `m·P_j` rows, the rank taken
/// by exact integer elimination.
pub fn quotient_dimensions(c: &CohomologyPresentation, max_degree: u32) -> PoincareSeries {
    let terms = relation_terms(c);
    let dims: Vec<u64> = (0..=max_degree)
        .into_par_iter()
        .map(|d| {
            let (ncols, rows) = degree_rows(c, &terms, d);
            let mut elim: Eliminator<Integer> = Eliminator::new(ncols);
            for row in &rows {
                elim.insert(row);
            }
            elim.finish().rank() as u64
        })
        .collect();
    PoincareSeries::new(dims)
}

/// The same dimensions by dense Bareiss elimination; intended for small
/// degrees where a dense matrix is cheap.
pub fn quotient_dimensions_dense(c: &CohomologyPresentation, max_degree: u32) -> PoincareSeries {
    let terms = relation_terms(c);
    let dims = (0..=max_degree)
        .map(|d| {
            let (ncols, rows) = degree_rows(c, &terms, d);
            let dense: Vec<Vec<Integer>> = rows
                .iter()
                .map(|row| {
                    let mut v = vec![Integer::zero(); ncols];
                    for (i, x) in row {
                        v[*i] = x.clone();
                    }
                    v
                })
                .collect();
            (ncols - bareiss_rank(&dense)) as u64
        })
        .collect();
    PoincareSeries::new(dims)
}

/// The same dimensions computed as a noncommutative quotient: the ring is
/// presented by the generators, their commutators and the relations, and
/// handed to the degreewise engine. Much cheaper for many variables and
/// high degrees, since each degree is built from the previous quotient.
pub fn quotient_dimensions_via_commutators(
    c: &CohomologyPresentation,
    max_degree: u32,
    budget: usize,
) -> Result<PoincareSeries> {
    let mut b = PresentationBuilder::<Rational>::new(c.even_generators.as_slice().to_vec())?;
    let names: Vec<String> = c.even_generators.iter().map(|g| g.name.clone()).collect();
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            b.commute(&names[i], &names[j], 1);
        }
    }
    let gens = b.generators().clone();
    for r in &c.relations {
        let p = NcPolynomial::from_terms(&gens, r.terms().map(|(m, q)| (NcWord(m.factors()), q.clone())));
        b.relation(p);
    }
    let q = QuotientAlgebra::compute(b.build()?, max_degree, budget)?;
    Ok(PoincareSeries::new((0..=max_degree).map(|d| q.rank(d) as u64).collect()))
}

/// Which computation backs a dimension count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientRoute {
    Direct,
    Commutators { budget: usize },
}

pub fn quotient_dimensions_with(c: &CohomologyPresentation, max_degree: u32, route: QuotientRoute) -> Result<PoincareSeries> {
    match route {
        QuotientRoute::Direct => Ok(quotient_dimensions(c, max_degree)),
        QuotientRoute::Commutators { budget } => quotient_dimensions_via_commutators(c, max_degree, budget),
    }
}

/// Whether n relations in n variables cut out a finite-dimensional
/// quotient: dimensions vanish on the two degrees past the socle.
pub fn regular_sequence_check(c: &CohomologyPresentation) -> Result<bool> {
    regular_sequence_check_with(c, QuotientRoute::Direct)
}

pub fn regular_sequence_check_with(c: &CohomologyPresentation, route: QuotientRoute) -> Result<bool> {
    let n = c.even_generators.len();
    if c.relations.len() != n {
        return Err(Error::NotSquare { relations: c.relations.len(), variables: n });
    }
    let Some(socle) = c.socle_degree() else { return Ok(false) };
    let dims = quotient_dimensions_with(c, socle + 2, route)?;
    Ok(dims.get(socle + 1) == Some(0) && dims.get(socle + 2) == Some(0))
}
