//! The homotopy Lie algebra of a minimal model.
//!
//! The basis of L is dual to V with degrees lowered by one. The bracket is
//! read off from the quadratic part of the differential through
//! ⟨v; s[x,y]⟩ = (−1)^{|y|+1} ⟨d₁v; sx, sy⟩, with the dual basis normalized
//! by ⟨g; s g*⟩ = +1.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::{Coefficient, Rational};
use crate::error::{Error, Result};
use crate::gca::{koszul_sign, GcaElement};
use crate::sullivan::{quadratic_part, MinimalModel};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LieBasisElement {
    pub name: String,
    pub degree: u32,
}

/// Sparse linear combination of basis indices.
pub type LieCombination = Vec<(usize, Rational)>;

/// Nonzero brackets keyed by basis names, values in names.
pub type BracketTable = BTreeMap<(String, String), Vec<(String, Rational)>>;

/// A graded Lie algebra on a finite basis with sparse structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyLieAlgebra {
    basis: Vec<LieBasisElement>,
    brackets: BTreeMap<(usize, usize), LieCombination>,
}

impl HomotopyLieAlgebra {
    /// Entries with zero combinations are dropped; absent pairs bracket to 0.
    pub fn new(basis: Vec<LieBasisElement>, brackets: BTreeMap<(usize, usize), LieCombination>) -> Result<Self> {
        let n = basis.len();
        let mut clean = BTreeMap::new();
        for ((i, j), comb) in brackets {
            for &k in [i, j].iter().chain(comb.iter().map(|(k, _)| k)) {
                if k >= n {
                    return Err(Error::IndexOutOfRange { index: k as i64, min: 0, max: n as i64 - 1 });
                }
            }
            let comb = normalize(comb);
            if !comb.is_empty() {
                clean.insert((i, j), comb);
            }
        }
        Ok(Self { basis, brackets: clean })
    }

    pub fn basis(&self) -> &[LieBasisElement] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.basis.iter().position(|b| b.name == name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// [x, y] for basis indices.
    pub fn bracket(&self, x: usize, y: usize) -> LieCombination {
        self.brackets.get(&(x, y)).cloned().unwrap_or_default()
    }

    pub fn bracket_named(&self, x: &str, y: &str) -> Result<LieCombination> {
        Ok(self.bracket(self.index_of(x)?, self.index_of(y)?))
    }

    /// Bilinear extension of the bracket to combinations.
    pub fn bracket_combinations(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> LieCombination {
        let mut acc: Vec<(usize, Rational)> = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                for (k, c) in self.bracket(*i, *j) {
                    acc.push((k, a.clone() * b.clone() * c));
                }
            }
        }
        normalize(acc)
    }

    /// Non-zero brackets in index order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (&(usize, usize), &LieCombination)> {
        self.brackets.iter()
    }

    /// Non-zero [x, y] with x ≤ y in basis order, keyed by names.
    pub fn bracket_table(&self) -> BracketTable {
        self.brackets
            .iter()
            .filter(|((i, j), _)| i <= j)
            .map(|((i, j), comb)| {
                let named = comb.iter().map(|(k, c)| (self.basis[*k].name.clone(), c.clone())).collect();
                ((self.basis[*i].name.clone(), self.basis[*j].name.clone()), named)
            })
            .collect()
    }

    /// `[x,y] = c·z + …` rendered with basis names.
    pub fn render(&self, comb: &[(usize, Rational)]) -> String {
        if comb.is_empty() {
            return "0".into();
        }
        comb.iter()
            .map(|(k, c)| format!("{c}*{}", self.basis[*k].name))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn normalize(comb: Vec<(usize, Rational)>) -> LieCombination {
    let mut m: BTreeMap<usize, Rational> = BTreeMap::new();
    for (k, c) in comb {
        let e = m.entry(k).or_insert_with(Rational::zero);
        *e += c;
    }
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// One basis element per model generator, named by the model's dual names,
/// of degree |g| − 1.
pub fn dual_basis(m: &MinimalModel) -> Result<Vec<LieBasisElement>> {
    m.generators()
        .iter()
        .zip(m.dual_names())
        .map(|(g, name)| {
            if g.degree < 2 {
                return Err(Error::ZeroDegree(name.clone()));
            }
            Ok(LieBasisElement { name: name.clone(), degree: g.degree - 1 })
        })
        .collect()
}

/// ⟨w; sx_k, …, sx_1⟩ for `w` of word length k, `args[0] = sx_k`, …,
/// `args[k−1] = sx_1`, each argument the index of a model generator whose
/// dual is taken. For a monomial v_1⋯v_k this is
/// Σ_σ ε_σ ∏_i ⟨v_σ(i); sx_i⟩ with ⟨g; s h*⟩ = δ_{gh}.
pub fn pairing(w: &GcaElement<Rational>, args: &[usize]) -> Result<Rational> {
    let k = args.len();
    let degrees: Vec<u32> = w.generators().iter().map(|g| g.degree).collect();
    let mut total = Rational::zero();
    for (mono, coef) in w.terms() {
        if mono.word_length() as usize != k {
            return Err(Error::LengthMismatch { expected: k, found: mono.word_length() as usize });
        }
        let factors = mono.factors();
        let factor_degrees: Vec<u32> = factors.iter().map(|&g| degrees[g]).collect();
        let mut sum = Rational::zero();
        for perm in permutations(k) {
            // slot i holds v_{σ(i+1)} and pairs with sx_{i+1} = args[k − 1 − i]
            let matches = (0..k).all(|i| factors[perm[i]] == args[k - 1 - i]);
            if matches {
                sum += Rational::from_i64(koszul_sign(&perm, &factor_degrees)? as i64);
            }
        }
        total += coef.clone() * sum;
    }
    Ok(total)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Structure constants from d₁: the coefficient of v* in [x, y] is
/// (−1)^{|y|+1} ⟨d₁v; sx, sy⟩.
pub fn brackets_from_d1(m: &MinimalModel) -> Result<HomotopyLieAlgebra> {
    let basis = dual_basis(m)?;
    let d1 = quadratic_part(m);
    let n = basis.len();
    let mut brackets = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            let mut comb = Vec::new();
            for (v, image) in d1.images().iter().enumerate() {
                if image.is_zero() {
                    continue;
                }
                let mut c = pairing(image, &[x, y])?;
                if basis[y].degree % 2 == 0 {
                    c = -c;
                }
                if !c.is_zero() {
                    comb.push((v, c));
                }
            }
            if !comb.is_empty() {
                brackets.insert((x, y), comb);
            }
        }
    }
    HomotopyLieAlgebra::new(basis, brackets)
}

fn sign(e: u32) -> Rational {
    if e % 2 == 0 { Rational::one() } else { -Rational::one() }
}

/// Degree additivity, graded antisymmetry and graded Jacobi on all basis
/// pairs and triples; the first violation is described in the error.
pub fn graded_lie_axioms_report(l: &HomotopyLieAlgebra) -> Result<()> {
    let n = l.basis.len();
    let deg = |i: usize| l.basis[i].degree;
    for ((x, y), comb) in &l.brackets {
        for (z, _) in comb {
            if deg(*z) != deg(*x) + deg(*y) {
                return Err(Error::LieAxioms(format!(
                    "[{}, {}] has a component in degree {}",
                    l.basis[*x].name,
                    l.basis[*y].name,
                    deg(*z)
                )));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let lhs = l.bracket(x, y);
            let s = -sign(deg(x) * deg(y));
            let rhs = normalize(l.bracket(y, x).into_iter().map(|(k, c)| (k, c * s.clone())).collect());
            if lhs != rhs {
                return Err(Error::LieAxioms(format!(
                    "antisymmetry fails for ({}, {})",
                    l.basis[x].name, l.basis[y].name
                )));
            }
        }
    }
    let unit = |i: usize| vec![(i, Rational::one())];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let t1 = l.bracket_combinations(&unit(x), &l.bracket(y, z));
                let t2 = l.bracket_combinations(&unit(y), &l.bracket(z, x));
                let t3 = l.bracket_combinations(&unit(z), &l.bracket(x, y));
                let mut acc = Vec::new();
                for (t, e) in [(t1, deg(x) * deg(z)), (t2, deg(y) * deg(x)), (t3, deg(z) * deg(y))] {
                    let s = sign(e);
                    acc.extend(t.into_iter().map(|(k, c)| (k, c * s.clone())));
                }
                if !normalize(acc).is_empty() {
                    return Err(Error::LieAxioms(format!(
                        "Jacobi fails for ({}, {}, {})",
                        l.basis[x].name, l.basis[y].name, l.basis[z].name
                    )));
                }
            }
        }
    }
    Ok(())
}

pub fn graded_lie_axioms_check(l: &HomotopyLieAlgebra) -> bool {
    graded_lie_axioms_report(l).is_ok()
}
