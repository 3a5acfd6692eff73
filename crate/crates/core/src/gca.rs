//! Free graded-commutative algebras ΛV over exact coefficients.
//!
//! A [`GcaElement`] is a finite sum of monomials in a fixed, ordered set of
//! generators. Even generators commute and may carry any exponent; odd
//! generators anticommute with each other and square to zero, so they appear
//! with exponent at most one. Monomials are stored in the canonical
//! generator order (declaration order) and every product is brought back to
//! that order with its Koszul sign.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coeff::{Coefficient, Integer};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GradedGenerator {
    pub name: String,
    pub degree: u32,
}

impl GradedGenerator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Self { name: name.into(), degree }
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// An ordered list of generators with unique names and positive degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: Arc<[GradedGenerator]>,
}

impl GeneratorSet {
    pub fn new(gens: Vec<GradedGenerator>) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if g.degree == 0 {
                return Err(Error::ZeroDegree(g.name.clone()));
            }
            if gens[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Self { gens: gens.into() })
    }

    pub fn empty() -> Self {
        Self { gens: Vec::new().into() }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, index: usize) -> &GradedGenerator {
        &self.gens[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = &GradedGenerator> {
        self.gens.iter()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn as_slice(&self) -> &[GradedGenerator] {
        &self.gens
    }

    pub(crate) fn same_as(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.gens, &other.gens) || self.gens == other.gens
    }
}

/// Exponent vector over a generator set, together with its total degree.
///
/// Ordered by degree first; within a degree, larger exponents on earlier
/// generators come first (so `u1^2 < u1 u2 < u2^2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exponents: Vec<u32>,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn unit(len: usize) -> Self {
        Self { degree: 0, exponents: vec![0; len] }
    }

    pub fn from_exponents(gens: &GeneratorSet, exponents: Vec<u32>) -> Result<Self> {
        if exponents.len() != gens.len() {
            return Err(Error::LengthMismatch { expected: gens.len(), found: exponents.len() });
        }
        let degree = exponents
            .iter()
            .zip(gens.iter())
            .map(|(e, g)| e * g.degree)
            .sum();
        Ok(Self { degree, exponents })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of generator factors counted with multiplicity.
    pub fn word_length(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// The factors in canonical order, each generator repeated by its exponent.
    pub fn factors(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    /// Product in canonical order: `None` if an odd generator would be
    /// squared, otherwise the monomial and the Koszul sign of the reordering.
    fn multiply(&self, other: &Self, gens: &GeneratorSet) -> Option<(Self, bool)> {
        let mut negative = false;
        // odd factors of `self` sitting after position j
        let mut odd_after = 0u32;
        let n = gens.len();
        let mut exponents = vec![0; n];
        for j in (0..n).rev() {
            let odd = gens.get(j).is_odd();
            if odd && self.exponents[j] + other.exponents[j] > 1 {
                return None;
            }
            if odd && other.exponents[j] == 1 && odd_after % 2 == 1 {
                negative = !negative;
            }
            if odd && self.exponents[j] == 1 {
                odd_after += 1;
            }
            exponents[j] = self.exponents[j] + other.exponents[j];
        }
        Some((Self { degree: self.degree + other.degree, exponents }, negative))
    }
}

/// Sign ±1 of the permutation `permutation` applied to elements of the
/// given degrees: −1 for every transposition of two odd-degree elements.
///
/// `permutation[i]` is the original index of the element placed at slot `i`.
pub fn koszul_sign(permutation: &[usize], degrees: &[u32]) -> Result<i32> {
    if permutation.len() != degrees.len() {
        return Err(Error::LengthMismatch { expected: degrees.len(), found: permutation.len() });
    }
    let k = permutation.len();
    let mut seen = vec![false; k];
    for &p in permutation {
        if p >= k || seen[p] {
            return Err(Error::NotAPermutation(k));
        }
        seen[p] = true;
    }
    let mut sign = 1;
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (permutation[i], permutation[j]);
            if a > b && degrees[a] % 2 == 1 && degrees[b] % 2 == 1 {
                sign = -sign;
            }
        }
    }
    Ok(sign)
}

/// An element of ΛV: a map from monomials to non-zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcaElement<C: Coefficient> {
    gens: GeneratorSet,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> GcaElement<C> {
    pub fn zero(gens: &GeneratorSet) -> Self {
        Self { gens: gens.clone(), terms: BTreeMap::new() }
    }

    pub fn one(gens: &GeneratorSet) -> Self {
        Self::constant(gens, C::one())
    }

    pub fn constant(gens: &GeneratorSet, c: C) -> Self {
        let mut e = Self::zero(gens);
        e.add_term(Monomial::unit(gens.len()), c);
        e
    }

    pub fn generator(gens: &GeneratorSet, index: usize) -> Self {
        let mut exps = vec![0; gens.len()];
        exps[index] = 1;
        let m = Monomial { degree: gens.get(index).degree, exponents: exps };
        let mut e = Self::zero(gens);
        e.add_term(m, C::one());
        e
    }

    pub fn named(gens: &GeneratorSet, name: &str) -> Result<Self> {
        Ok(Self::generator(gens, gens.index_of(name)?))
    }

    /// Builds `c · m` for an exponent vector; zero if an odd exponent exceeds one.
    pub fn monomial(gens: &GeneratorSet, exponents: Vec<u32>, c: C) -> Result<Self> {
        let m = Monomial::from_exponents(gens, exponents)?;
        let mut e = Self::zero(gens);
        let valid = m
            .exponents
            .iter()
            .zip(gens.iter())
            .all(|(&x, g)| !g.is_odd() || x <= 1);
        if valid {
            e.add_term(m, c);
        }
        Ok(e)
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
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

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Degree of a homogeneous non-zero element.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let first = it.next()?.degree;
        it.all(|m| m.degree == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// The part spanned by monomials with exactly `k` factors.
    pub fn word_length_component(&self, k: u32) -> Self {
        Self {
            gens: self.gens.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.word_length() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.gens);
        }
        Self {
            gens: self.gens.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !self.gens.same_as(&other.gens) {
            return Err(Error::MismatchedGenerators);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Graded-commutative product with Koszul signs.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !self.gens.same_as(&other.gens) {
            return Err(Error::MismatchedGenerators);
        }
        let mut out = Self::zero(&self.gens);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, negative)) = m1.multiply(m2, &self.gens) {
                    let c = c1.clone() * c2.clone();
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        if let Some(p) = self.linear_even_pow(exp) {
            return p;
        }
        let mut acc = Self::one(&self.gens);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multinomial expansion of (Σ c_i x_i)^k for even generators x_i.
    fn linear_even_pow(&self, exp: u32) -> Option<Self> {
        let mut linear: Vec<(usize, C)> = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut factors = m.factors();
            if factors.len() != 1 || self.gens.get(factors[0]).is_odd() {
                return None;
            }
            linear.push((factors.pop()?, c.clone()));
        }
        if linear.is_empty() || exp == 0 {
            return None;
        }
        let mut factorial = vec![Integer::from(1)];
        for i in 1..=exp {
            let next = &factorial[i as usize - 1] * i;
            factorial.push(next);
        }
        let powers: Vec<Vec<C>> = linear
            .iter()
            .map(|(_, c)| {
                let mut pw = vec![C::one()];
                for i in 0..exp as usize {
                    let next = pw[i].clone() * c.clone();
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut out = Self::zero(&self.gens);
        let mut parts = vec![0u32; linear.len()];
        loop {
            // parts: exponents of all but the last linear factor
            let used: u32 = parts[..linear.len() - 1].iter().sum();
            if used <= exp {
                *parts.last_mut()? = exp - used;
                let mut exps = vec![0u32; self.gens.len()];
                let mut coeff = C::one();
                let mut denom = Integer::from(1);
                for (((g, _), &e), pw) in linear.iter().zip(&parts).zip(&powers) {
                    exps[*g] = e;
                    if e > 0 {
                        coeff = coeff * pw[e as usize].clone();
                    }
                    denom *= &factorial[e as usize];
                }
                let degree = exps.iter().zip(self.gens.iter()).map(|(e, g)| e * g.degree).sum();
                out.add_term(Monomial { degree, exponents: exps }, C::from_integer(&factorial[exp as usize] / denom) * coeff);
            }
            let mut i = 0;
            loop {
                if i + 1 >= linear.len() {
                    return Some(out);
                }
                parts[i] += 1;
                if parts[..linear.len() - 1].iter().sum::<u32>() <= exp {
                    break;
                }
                parts[i] = 0;
                i += 1;
            }
        }
    }

    /// Algebra map sending generator `i` to `images[i]` (in a common target).
    pub fn substitute(&self, images: &[GcaElement<C>]) -> Result<GcaElement<C>> {
        if images.len() != self.gens.len() {
            return Err(Error::LengthMismatch { expected: self.gens.len(), found: images.len() });
        }
        let target = match images.first() {
            Some(e) => e.gens.clone(),
            None => return Ok(self.clone()),
        };
        let mut out = GcaElement::zero(&target);
        for (m, c) in &self.terms {
            let mut prod = GcaElement::constant(&target, c.clone());
            for i in m.factors() {
                prod = prod.try_mul(&images[i])?;
            }
            if !prod.gens.same_as(&target) {
                return Err(Error::MismatchedGenerators);
            }
            for (m, c) in prod.terms {
                out.add_term(m, c);
            }
        }
        Ok(out)
    }
}

impl<C: Coefficient> std::ops::Neg for &GcaElement<C> {
    type Output = GcaElement<C>;
    fn neg(self) -> GcaElement<C> {
        GcaElement {
            gens: self.gens.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

/// Operator forms panic on mismatched generator sets; use the `try_*`
/// methods where the inputs are not known to agree.
impl<C: Coefficient> std::ops::Add for &GcaElement<C> {
    type Output = GcaElement<C>;
    fn add(self, rhs: Self) -> GcaElement<C> {
        self.try_add(rhs).expect("generator sets differ")
    }
}

impl<C: Coefficient> std::ops::Sub for &GcaElement<C> {
    type Output = GcaElement<C>;
    fn sub(self, rhs: Self) -> GcaElement<C> {
        self.try_sub(rhs).expect("generator sets differ")
    }
}

impl<C: Coefficient> std::ops::Mul for &GcaElement<C> {
    type Output = GcaElement<C>;
    fn mul(self, rhs: Self) -> GcaElement<C> {
        self.try_mul(rhs).expect("generator sets differ")
    }
}

impl<C: Coefficient> fmt::Display for GcaElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = m
                .exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| {
                    let name = &self.gens.get(j).name;
                    if e == 1 { name.clone() } else { format!("{name}^{e}") }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A degree +1 derivation, given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation<C: Coefficient> {
    gens: GeneratorSet,
    images: Vec<GcaElement<C>>,
}

impl<C: Coefficient> Derivation<C> {
    pub fn new(gens: &GeneratorSet, images: Vec<GcaElement<C>>) -> Result<Self> {
        if images.len() != gens.len() {
            return Err(Error::LengthMismatch { expected: gens.len(), found: images.len() });
        }
        for (g, img) in gens.iter().zip(&images) {
            if !img.gens.same_as(gens) {
                return Err(Error::MismatchedGenerators);
            }
            if !img.is_zero() && img.degree() != Some(g.degree + 1) {
                return Err(Error::BadImageDegree { generator: g.name.clone(), expected: g.degree + 1 });
            }
        }
        Ok(Self { gens: gens.clone(), images })
    }

    pub fn zero(gens: &GeneratorSet) -> Self {
        Self { gens: gens.clone(), images: vec![GcaElement::zero(gens); gens.len()] }
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn image(&self, index: usize) -> &GcaElement<C> {
        &self.images[index]
    }

    pub fn images(&self) -> &[GcaElement<C>] {
        &self.images
    }

    /// Extends the generator images by the graded Leibniz rule
    /// d(xy) = d(x)y + (−1)^{|x|} x d(y).
    pub fn apply(&self, e: &GcaElement<C>) -> Result<GcaElement<C>> {
        if !e.gens.same_as(&self.gens) {
            return Err(Error::MismatchedGenerators);
        }
        let mut out = GcaElement::zero(&self.gens);
        for (m, c) in &e.terms {
            let factors = m.factors();
            let mut prefix_degree = 0u32;
            for (pos, &g) in factors.iter().enumerate() {
                let image = &self.images[g];
                if !image.is_zero() {
                    let mut term = GcaElement::constant(&self.gens, c.clone());
                    for &h in &factors[..pos] {
                        term = &term * &GcaElement::generator(&self.gens, h);
                    }
                    term = &term * image;
                    for &h in &factors[pos + 1..] {
                        term = &term * &GcaElement::generator(&self.gens, h);
                    }
                    if prefix_degree % 2 == 1 {
                        term = -&term;
                    }
                    out = &out + &term;
                }
                prefix_degree += self.gens.get(g).degree;
            }
        }
        Ok(out)
    }

    /// Whether d(d(g)) = 0 for every generator.
    pub fn squares_to_zero(&self) -> bool {
        self.images
            .iter()
            .all(|img| self.apply(img).map(|x| x.is_zero()).unwrap_or(false))
    }
}
