//! Noncommutative polynomials and finitely presented graded algebras.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::{clear_denominators, Coefficient, Integer, Rational};
use crate::error::{Error, Result};
use crate::gca::{GeneratorSet, GradedGenerator};

/// A word in the generators, stored as generator indices. The empty word is
/// the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NcWord(pub Vec<usize>);

impl NcWord {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn letter(index: usize) -> Self {
        Self(vec![index])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self, gens: &GeneratorSet) -> u32 {
        self.0.iter().map(|&i| gens.get(i).degree).sum()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    pub fn render(&self, gens: &GeneratorSet) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0.iter().map(|&i| gens.get(i).name.as_str()).collect::<Vec<_>>().join(".")
    }
}

/// A linear combination of words over a fixed generator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcPolynomial<C: Coefficient> {
    gens: GeneratorSet,
    terms: BTreeMap<NcWord, C>,
}

impl<C: Coefficient> NcPolynomial<C> {
    pub fn zero(gens: &GeneratorSet) -> Self {
        Self { gens: gens.clone(), terms: BTreeMap::new() }
    }

    pub fn one(gens: &GeneratorSet) -> Self {
        Self::word(gens, NcWord::unit(), C::one())
    }

    pub fn word(gens: &GeneratorSet, word: NcWord, c: C) -> Self {
        let mut p = Self::zero(gens);
        p.add_term(word, c);
        p
    }

    pub fn generator(gens: &GeneratorSet, index: usize) -> Self {
        Self::word(gens, NcWord::letter(index), C::one())
    }

    pub fn named(gens: &GeneratorSet, name: &str) -> Result<Self> {
        Ok(Self::generator(gens, gens.index_of(name)?))
    }

    pub fn from_terms(gens: &GeneratorSet, terms: impl IntoIterator<Item = (NcWord, C)>) -> Self {
        let mut p = Self::zero(gens);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NcWord, &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &NcWord) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, w: NcWord, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Degree of a non-zero homogeneous polynomial.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|w| w.degree(&self.gens));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn uses_generator(&self, index: usize) -> bool {
        self.terms.keys().any(|w| w.0.contains(&index))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(&self.gens, self.terms.iter().map(|(w, x)| (w.clone(), x.clone() * c.clone())))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !self.gens.same_as(&other.gens) {
            return Err(Error::MismatchedGenerators);
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-C::one()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !self.gens.same_as(&other.gens) {
            return Err(Error::MismatchedGenerators);
        }
        let mut out = Self::zero(&self.gens);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(&self.gens), |acc, _| &acc * self)
    }

    /// Replaces every occurrence of generator `index` by `image`.
    pub fn substitute(&self, index: usize, image: &Self) -> Result<Self> {
        let mut out = Self::zero(&self.gens);
        for (w, c) in &self.terms {
            let mut prod = Self::word(&self.gens, NcWord::unit(), c.clone());
            for &g in &w.0 {
                let factor = if g == index { image.clone() } else { Self::generator(&self.gens, g) };
                prod = prod.try_mul(&factor)?;
            }
            out = out.try_add(&prod)?;
        }
        Ok(out)
    }

    /// The same polynomial over another generator set, generator `i` sent
    /// to generator `map[i]`.
    pub fn reindex(&self, target: &GeneratorSet, map: &[usize]) -> Self {
        Self::from_terms(
            target,
            self.terms.iter().map(|(w, c)| (NcWord(w.0.iter().map(|&g| map[g]).collect()), c.clone())),
        )
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> NcPolynomial<D> {
        NcPolynomial::from_terms(&self.gens, self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Terms sorted by degree, then by the word's generator names.
    fn sorted_terms(&self) -> Vec<(&NcWord, &C)> {
        let mut v: Vec<(&NcWord, &C)> = self.terms.iter().collect();
        v.sort_by_cached_key(|(w, _)| {
            (w.degree(&self.gens), w.0.iter().map(|&g| self.gens.get(g).name.clone()).collect::<Vec<_>>())
        });
        v
    }

    /// Serialized form `c*g1.g2 ± c*g3` with integer coefficients. Integer
    /// polynomials print verbatim; rational ones are scaled to the primitive
    /// integer multiple first.
    pub fn to_relation_string(&self) -> String {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return "0".into();
        }
        let coeffs: Vec<Integer> = if C::DOMAIN == "integer" {
            terms.iter().map(|(_, c)| c.to_integer().expect("integer domain")).collect()
        } else {
            let rats: Vec<Rational> = terms.iter().map(|(_, c)| c.as_rational()).collect();
            clear_denominators(rats.iter())
        };
        let mut out = String::new();
        for (i, ((w, _), c)) in terms.iter().zip(coeffs).enumerate() {
            let negative = c < BigInt::zero();
            let magnitude = if negative { -c } else { c };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if w.is_empty() {
                out.push_str(&magnitude.to_string());
            } else {
                out.push_str(&format!("{magnitude}*{}", w.render(&self.gens)));
            }
        }
        out
    }

    /// Parses the format produced by [`NcPolynomial::to_relation_string`];
    /// the `c*` prefix is optional and coefficients may be fractions.
    pub fn parse(gens: &GeneratorSet, text: &str) -> Result<Self> {
        let bad = || Error::Parse(text.to_string());
        let mut out = Self::zero(gens);
        let mut sign = 1i64;
        let mut expect_term = true;
        for raw in text.split_whitespace() {
            if raw == "+" || raw == "-" {
                if expect_term && raw == "+" {
                    return Err(bad());
                }
                sign = if raw == "-" { -sign } else { sign };
                expect_term = true;
                continue;
            }
            if !expect_term {
                return Err(bad());
            }
            let (neg, body) = match raw.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, raw),
            };
            if neg {
                sign = -sign;
            }
            let (coef_text, word_text) = match body.split_once('*') {
                Some((c, w)) => (Some(c), Some(w)),
                None if body.chars().next().is_some_and(|ch| ch.is_ascii_digit()) => (Some(body), None),
                None => (None, Some(body)),
            };
            let mut c = match coef_text {
                Some(t) => parse_coefficient::<C>(t).ok_or_else(bad)?,
                None => C::one(),
            };
            if sign < 0 {
                c = -c;
            }
            let word = match word_text {
                Some(w) if w != "1" => {
                    NcWord(w.split('.').map(|name| gens.index_of(name)).collect::<Result<Vec<_>>>()?)
                }
                _ => NcWord::unit(),
            };
            out.add_term(word, c);
            sign = 1;
            expect_term = false;
        }
        if expect_term && !text.trim().is_empty() {
            return Err(bad());
        }
        if text.trim() == "0" {
            return Ok(Self::zero(gens));
        }
        Ok(out)
    }
}

fn parse_coefficient<C: Coefficient>(text: &str) -> Option<C> {
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    let num = C::from_integer(n);
    if d.is_one() {
        return Some(num);
    }
    let inv = C::from_integer(d).unit_inverse()?;
    Some(num * inv)
}

impl<C: Coefficient> fmt::Display for NcPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_relation_string())
    }
}

impl<C: Coefficient> std::ops::Add for &NcPolynomial<C> {
    type Output = NcPolynomial<C>;
    fn add(self, rhs: Self) -> NcPolynomial<C> {
        self.try_add(rhs).expect("generator sets differ")
    }
}

impl<C: Coefficient> std::ops::Sub for &NcPolynomial<C> {
    type Output = NcPolynomial<C>;
    fn sub(self, rhs: Self) -> NcPolynomial<C> {
        self.try_sub(rhs).expect("generator sets differ")
    }
}

impl<C: Coefficient> std::ops::Mul for &NcPolynomial<C> {
    type Output = NcPolynomial<C>;
    fn mul(self, rhs: Self) -> NcPolynomial<C> {
        self.try_mul(rhs).expect("generator sets differ")
    }
}

impl<C: Coefficient> std::ops::Neg for &NcPolynomial<C> {
    type Output = NcPolynomial<C>;
    fn neg(self) -> NcPolynomial<C> {
        self.scale(&-C::one())
    }
}

/// A graded algebra `T(generators) / (relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation<C: Coefficient> {
    generators: GeneratorSet,
    relations: Vec<NcPolynomial<C>>,
}

impl<C: Coefficient> RingPresentation<C> {
    pub fn new(generators: GeneratorSet, relations: Vec<NcPolynomial<C>>) -> Result<Self> {
        for (index, r) in relations.iter().enumerate() {
            if !r.gens.same_as(&generators) {
                return Err(Error::MismatchedGenerators);
            }
            match r.degree() {
                None if r.is_zero() => {}
                None => return Err(Error::InhomogeneousRelation { index }),
                Some(0) => return Err(Error::RelationDegree { index, degree: 0 }),
                Some(_) => {}
            }
        }
        Ok(Self { generators, relations })
    }

    pub fn free(generators: GeneratorSet) -> Self {
        Self { generators, relations: Vec::new() }
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn relations(&self) -> &[NcPolynomial<C>] {
        &self.relations
    }

    pub fn relation_strings(&self) -> Vec<String> {
        self.relations.iter().filter(|r| !r.is_zero()).map(|r| r.to_relation_string()).collect()
    }

    pub fn generator(&self, name: &str) -> Result<NcPolynomial<C>> {
        NcPolynomial::named(&self.generators, name)
    }

    /// The same algebra with generators declared in a different order:
    /// position `i` of the result holds old generator `order[i]`.
    pub fn relabel(&self, order: &[usize]) -> Result<Self> {
        let n = self.generators.len();
        if order.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: order.len() });
        }
        let mut map = vec![usize::MAX; n];
        for (new, &old) in order.iter().enumerate() {
            if old >= n || map[old] != usize::MAX {
                return Err(Error::NotAPermutation(n));
            }
            map[old] = new;
        }
        let gens = GeneratorSet::new(order.iter().map(|&i| self.generators.get(i).clone()).collect())?;
        let relations = self.relations.iter().map(|r| r.reindex(&gens, &map)).collect();
        Ok(Self { generators: gens, relations })
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D + Copy) -> RingPresentation<D> {
        RingPresentation {
            generators: self.generators.clone(),
            relations: self.relations.iter().map(|r| r.map_coefficients(f)).collect(),
        }
    }
}

impl RingPresentation<Rational> {
    /// Integer presentation obtained by clearing denominators relationwise.
    pub fn clear_denominators(&self) -> RingPresentation<Integer> {
        let relations = self
            .relations
            .iter()
            .map(|r| {
                let words: Vec<(&NcWord, &Rational)> = r.terms().collect();
                let ints = clear_denominators(words.iter().map(|(_, c)| *c));
                NcPolynomial::from_terms(&self.generators, words.iter().map(|(w, _)| (*w).clone()).zip(ints))
            })
            .collect();
        RingPresentation { generators: self.generators.clone(), relations }
    }
}

impl RingPresentation<Integer> {
    pub fn to_rational(&self) -> RingPresentation<Rational> {
        self.map_coefficients(|c| c.as_rational())
    }
}

/// Builder for presentations given by generator names and relation helpers.
#[derive(Clone, Debug)]
pub struct PresentationBuilder<C: Coefficient> {
    gens: GeneratorSet,
    relations: Vec<NcPolynomial<C>>,
}

impl<C: Coefficient> PresentationBuilder<C> {
    pub fn new(generators: Vec<GradedGenerator>) -> Result<Self> {
        Ok(Self { gens: GeneratorSet::new(generators)?, relations: Vec::new() })
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn g(&self, name: &str) -> NcPolynomial<C> {
        NcPolynomial::named(&self.gens, name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn c(&self, value: i64) -> NcPolynomial<C> {
        NcPolynomial::word(&self.gens, NcWord::unit(), C::from_i64(value))
    }

    pub fn relation(&mut self, r: NcPolynomial<C>) -> &mut Self {
        self.relations.push(r);
        self
    }

    /// Relation `a − b`.
    pub fn equate(&mut self, a: NcPolynomial<C>, b: NcPolynomial<C>) -> &mut Self {
        self.relation(&a - &b)
    }

    /// Relation `xy − ε·yx`, ε = +1 for commuting, −1 for anticommuting.
    pub fn commute(&mut self, x: &str, y: &str, sign: i64) -> &mut Self {
        let (a, b) = (self.g(x), self.g(y));
        let r = &(&a * &b) - &(&b * &a).scale(&C::from_i64(sign));
        self.relation(r)
    }

    /// Makes every generator in `central` commute with every generator.
    pub fn central(&mut self, central: &[String]) -> &mut Self {
        let names: Vec<String> = self.gens.iter().map(|g| g.name.clone()).collect();
        for (i, x) in names.iter().enumerate() {
            for y in names.iter().skip(i + 1) {
                if central.contains(x) || central.contains(y) {
                    self.commute(x, y, 1);
                }
            }
        }
        self
    }

    pub fn build(&self) -> Result<RingPresentation<C>> {
        RingPresentation::new(self.gens.clone(), self.relations.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rational;

    fn gens() -> GeneratorSet {
        GeneratorSet::new(vec![GradedGenerator::new("a1", 1), GradedGenerator::new("b1", 2)]).unwrap()
    }

    #[test]
    fn serialization_grammar() {
        let s = gens();
        let a: NcPolynomial<Rational> = NcPolynomial::named(&s, "a1").unwrap();
        let b = NcPolynomial::named(&s, "b1").unwrap();
        let r = &(&a * &a).scale(&rational(2, 1)) - &b.scale(&rational(4, 1));
        assert_eq!(r.to_relation_string(), "1*a1.a1 - 2*b1");
        let zi: NcPolynomial<Integer> = NcPolynomial::parse(&s, "2*a1.a1 - 4*b1").unwrap();
        assert_eq!(zi.to_relation_string(), "2*a1.a1 - 4*b1");
        let back: NcPolynomial<Rational> = NcPolynomial::parse(&s, "1/2*a1.a1 - b1").unwrap();
        assert_eq!(back.to_relation_string(), "1*a1.a1 - 2*b1");
        assert!(NcPolynomial::<Integer>::parse(&s, "1/2*a1.a1").is_err());
        assert!(NcPolynomial::<Integer>::parse(&s, "2*c.a1").is_err());
    }

    #[test]
    fn terms_sorted_by_degree_then_names() {
        let s = gens();
        let p: NcPolynomial<Integer> = NcPolynomial::parse(&s, "b1 + a1.a1 - 3*a1").unwrap();
        assert_eq!(p.to_relation_string(), "-3*a1 + 1*a1.a1 + 1*b1");
        assert!(!p.is_homogeneous());
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let s = gens();
        let p: NcPolynomial<Integer> = NcPolynomial::parse(&s, "b1 - a1").unwrap();
        assert_eq!(
            RingPresentation::new(s.clone(), vec![p]),
            Err(Error::InhomogeneousRelation { index: 0 })
        );
        let c: NcPolynomial<Integer> = NcPolynomial::parse(&s, "2").unwrap();
        assert_eq!(RingPresentation::new(s, vec![c]), Err(Error::RelationDegree { index: 0, degree: 0 }));
    }

    #[test]
    fn relabel_maps_relations() {
        let s = gens();
        let p: NcPolynomial<Integer> = NcPolynomial::parse(&s, "2*a1.a1 - b1").unwrap();
        let pres = RingPresentation::new(s, vec![p]).unwrap();
        let swapped = pres.relabel(&[1, 0]).unwrap();
        assert_eq!(swapped.generators().get(0).name, "b1");
        assert_eq!(swapped.relation_strings(), vec!["2*a1.a1 - 1*b1"]);
        assert!(pres.relabel(&[0, 0]).is_err());
    }

    #[test]
    fn substitution() {
        let s = gens();
        let p: NcPolynomial<Integer> = NcPolynomial::parse(&s, "a1.b1 - b1.a1").unwrap();
        let img: NcPolynomial<Integer> = NcPolynomial::parse(&s, "a1.a1").unwrap();
        assert!(p.substitute(1, &img).unwrap().is_zero());
    }
}
