//! Per-family data: exponents, Borel presentations of H*(G/T;Q), and the
//! rational and integral Pontrjagin presentations transcribed as stated.
//!
//! Tensor factors are encoded by centrality relations. Integral relations
//! keep redundant generators (such as y1 = x1²) exactly as written.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coeff::{rational, Coefficient, Integer, Rational};
use crate::error::Result;
use crate::family::LieFamily;
use crate::gca::{GeneratorSet, GradedGenerator};
use crate::lie::BracketTable;
use crate::nc::{NcPolynomial, PresentationBuilder, RingPresentation};
use crate::series::PoincareSeries;
use crate::sullivan::CohomologyPresentation;
use crate::symmetric::{invariant_indices, invariant_polynomials, reduced_variables};

/// Sign in the F4 integral relation between distinct x's.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum F4Variant {
    /// x_i x_j = x_j x_i, as in the integral statement.
    #[default]
    Commuting,
    /// x_i x_j = −x_j x_i, as in the rational statement.
    Anticommuting,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub family: LieFamily,
    pub rank: u32,
    pub exponents: Vec<u32>,
    pub cohomology: CohomologyPresentation,
    pub expected_rational: RingPresentation<Rational>,
    pub expected_integral: RingPresentation<Integer>,
    /// Relations of H_*(Ω₀G;Z) in the y generators of `expected_integral`.
    pub loop_group_relations: Vec<NcPolynomial<Integer>>,
    pub weyl_order: u64,
    /// Display names for generators that stand for doubled classes.
    pub display_names: BTreeMap<String, String>,
    pub commentary: String,
}

impl CatalogEntry {
    /// Degrees 2k_i − 2 of the loop group generators.
    pub fn loop_degrees(&self) -> Vec<u32> {
        loop_degrees(&self.exponents)
    }

    /// H_*(Ω₀G;Z) as a commutative ring on the y generators.
    pub fn loop_group_presentation(&self) -> Result<RingPresentation<Integer>> {
        let gens = self.expected_integral.generators();
        let keep: Vec<usize> = (0..gens.len()).filter(|&i| !gens.get(i).name.starts_with('x')).collect();
        let target = GeneratorSet::new(keep.iter().map(|&i| gens.get(i).clone()).collect())?;
        let mut map = vec![usize::MAX; gens.len()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let mut b = PresentationBuilder::<Integer>::new(target.as_slice().to_vec())?;
        for r in &self.loop_group_relations {
            b.relation(r.reindex(&target, &map));
        }
        b.central(&names(&target));
        b.build()
    }
}

pub fn exponents(family: LieFamily, rank: u32) -> Result<Vec<u32>> {
    family.validate_rank(rank)?;
    Ok(match family {
        LieFamily::Su => (2..=rank + 1).collect(),
        LieFamily::Sp | LieFamily::SoOdd => (1..=rank).map(|k| 2 * k).collect(),
        LieFamily::SoEven => {
            let mut e: Vec<u32> = (1..rank).map(|k| 2 * k).collect();
            e.push(rank);
            e
        }
        LieFamily::G2 => vec![2, 6],
        LieFamily::F4 => vec![2, 6, 8, 12],
        LieFamily::E6 => vec![2, 5, 6, 8, 9, 12],
    })
}

fn loop_degrees(exponents: &[u32]) -> Vec<u32> {
    exponents.iter().map(|k| 2 * k - 2).collect()
}

/// Order of the Weyl group from the standard formulas.
pub fn weyl_order(family: LieFamily, rank: u32) -> Result<u64> {
    family.validate_rank(rank)?;
    let factorial = |n: u32| (1..=n as u64).product::<u64>();
    Ok(match family {
        LieFamily::Su => factorial(rank + 1),
        LieFamily::Sp | LieFamily::SoOdd => (1u64 << rank) * factorial(rank),
        LieFamily::SoEven => (1u64 << (rank - 1)) * factorial(rank),
        LieFamily::G2 => 12,
        LieFamily::F4 => 1152,
        LieFamily::E6 => 51840,
    })
}

/// Default truncation: every generator must appear below it.
pub fn default_max_degree(family: LieFamily) -> u32 {
    if family == LieFamily::G2 {
        12
    } else {
        10
    }
}

/// Ranks exercised by the verification suite.
pub fn checked_ranks(family: LieFamily) -> Vec<u32> {
    match family {
        LieFamily::Su => (1..=4).collect(),
        LieFamily::Sp => (1..=3).collect(),
        LieFamily::SoOdd => (2..=3).collect(),
        LieFamily::SoEven => (3..=4).collect(),
        other => vec![other.fixed_rank().expect("fixed rank")],
    }
}

/// (1+t)^rank · ∏(1 − t^{2k_i−2})^{-1} through degree `n`.
pub fn splitting_series(family: LieFamily, rank: u32, n: u32) -> Result<PoincareSeries> {
    let odd = vec![1; rank as usize];
    Ok(PoincareSeries::from_product(&odd, &loop_degrees(&exponents(family, rank)?), &[], n))
}

pub fn catalog_entry(family: LieFamily, rank: u32) -> Result<CatalogEntry> {
    catalog_entry_with(family, rank, F4Variant::default())
}

pub fn catalog_entry_with(family: LieFamily, rank: u32, variant: F4Variant) -> Result<CatalogEntry> {
    let exponents = exponents(family, rank)?;
    let expected_integral = expected_integral_presentation_with(family, rank, variant)?;
    let gens = expected_integral.generators().clone();
    let loop_group_relations = loop_relation_texts(family, rank)
        .iter()
        .map(|t| NcPolynomial::parse(&gens, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(CatalogEntry {
        family,
        rank,
        exponents,
        cohomology: cohomology_presentation(family, rank)?,
        expected_rational: expected_rational_presentation(family, rank)?,
        expected_integral,
        loop_group_relations,
        weyl_order: weyl_order(family, rank)?,
        display_names: display_names(family, rank),
        commentary: commentary(family, rank),
    })
}

/// Borel presentation Q[u]/(P_k) with model and dual names for the family.
pub fn cohomology_presentation(family: LieFamily, rank: u32) -> Result<CohomologyPresentation> {
    let gens = reduced_variables(family, rank)?;
    let indices = invariant_indices(family, rank);
    let relations = indices
        .iter()
        .map(|&k| invariant_polynomials(family, rank, k))
        .collect::<Result<Vec<_>>>()?;
    let (odd_names, b_names): (Vec<String>, Vec<String>) = match family {
        LieFamily::Su | LieFamily::Sp | LieFamily::SoOdd | LieFamily::SoEven => {
            indices.iter().map(|k| (format!("v{k}"), format!("b{k}"))).unzip()
        }
        LieFamily::G2 => indices.iter().map(|k| (format!("v{}", k - 1), format!("b{}", k - 1))).unzip(),
        LieFamily::F4 | LieFamily::E6 => indices.iter().map(|k| (format!("v{k}"), format!("b{}", k - 1))).unzip(),
    };
    let mut dual_names: Vec<String> = gens.iter().map(|g| format!("a{}", &g.name[1..])).collect();
    dual_names.extend(b_names);
    CohomologyPresentation::with_names(gens, relations, odd_names, dual_names)
}

fn names(gens: &GeneratorSet) -> Vec<String> {
    gens.iter().map(|g| g.name.clone()).collect()
}

fn build<C: Coefficient>(
    torus: Vec<GradedGenerator>,
    central: Vec<GradedGenerator>,
    relations: &[String],
) -> Result<RingPresentation<C>> {
    let central_names: Vec<String> = central.iter().map(|g| g.name.clone()).collect();
    let mut all = torus;
    all.extend(central);
    let mut b = PresentationBuilder::<C>::new(all)?;
    for r in relations {
        let p = NcPolynomial::parse(b.generators(), r)?;
        b.relation(p);
    }
    b.central(&central_names);
    b.build()
}

fn degree_one(prefix: &str, names: impl IntoIterator<Item = String>) -> Vec<GradedGenerator> {
    names.into_iter().map(|n| GradedGenerator::new(format!("{prefix}{n}"), 1)).collect()
}

fn numbered(prefix: &str, n: u32) -> Vec<GradedGenerator> {
    degree_one(prefix, (1..=n).map(|i| i.to_string()))
}

fn graded(items: &[(String, u32)]) -> Vec<GradedGenerator> {
    items.iter().map(|(n, d)| GradedGenerator::new(n.clone(), *d)).collect()
}

/// x_k² = x_{k+1}², x_k x_l = −x_l x_k.
fn clifford_relations(names: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    for w in names.windows(2) {
        out.push(format!("{0}.{0} - {1}.{1}", w[0], w[1]));
    }
    for (i, p) in names.iter().enumerate() {
        for q in &names[i + 1..] {
            out.push(format!("{p}.{q} + {q}.{p}"));
        }
    }
    out
}

/// x_k² = x_p x_q + x_q x_p = c·target for all k and p ≠ q. With no target
/// the squares are equated with the anticommutators instead.
fn equal_square_relations(names: &[String], target: Option<&str>) -> Vec<String> {
    let mut out = Vec::new();
    match target {
        Some(t) => {
            for k in names {
                out.push(format!("{k}.{k} - {t}"));
            }
            for (i, p) in names.iter().enumerate() {
                for q in &names[i + 1..] {
                    out.push(format!("{p}.{q} + {q}.{p} - {t}"));
                }
            }
        }
        None => {
            for k in names {
                for (i, p) in names.iter().enumerate() {
                    for q in &names[i + 1..] {
                        out.push(format!("{k}.{k} - {p}.{q} - {q}.{p}"));
                    }
                }
            }
        }
    }
    out
}

/// The stated rational presentation for the family.
pub fn expected_rational_presentation(family: LieFamily, rank: u32) -> Result<RingPresentation<Rational>> {
    family.validate_rank(rank)?;
    let n = rank;
    let a = numbered("a", n);
    let a_names = names_of(&a);
    let b = |k: u32, d: u32| (format!("b{k}"), d);
    match family {
        LieFamily::Su => {
            let central: Vec<_> = (2..=n).map(|k| b(k, 2 * k)).collect();
            build(a, graded(&central), &equal_square_relations(&a_names, None))
        }
        LieFamily::Sp | LieFamily::SoOdd => {
            let central: Vec<_> = (2..=n).map(|k| b(k, 4 * k - 2)).collect();
            build(a, graded(&central), &clifford_relations(&a_names))
        }
        LieFamily::SoEven => {
            let mut central: Vec<_> = (2..n).map(|k| b(k, 4 * k - 2)).collect();
            central.push(b(n, 2 * n - 2));
            build(a, graded(&central), &clifford_relations(&a_names))
        }
        LieFamily::G2 => {
            let relations = vec!["a1.a2 + a2.a1 - a1.a1".to_string(), "a1.a1 - a2.a2".to_string()];
            build(a, graded(&[b(5, 10)]), &relations)
        }
        LieFamily::F4 => {
            let central = [b(5, 10), b(7, 14), b(11, 22)];
            build(a, graded(&central), &clifford_relations(&a_names))
        }
        LieFamily::E6 => {
            let a = degree_one("a", (1..=5).map(|i| i.to_string()).chain(["".to_string()]));
            let small: Vec<String> = (1..=5).map(|i| format!("a{i}")).collect();
            let mut relations = Vec::new();
            for k in &small {
                relations.push(format!("a.a - {k}.{k}"));
            }
            for (i, p) in small.iter().enumerate() {
                for q in &small[i + 1..] {
                    relations.push(format!("a.a - {p}.{q} - {q}.{p}"));
                }
            }
            for k in &small {
                relations.push(format!("a.{k} + {k}.a"));
            }
            let central = [b(4, 8), b(5, 10), b(7, 14), b(8, 16), b(11, 22)];
            build(a, graded(&central), &relations)
        }
    }
}

fn names_of(gens: &[GradedGenerator]) -> Vec<String> {
    gens.iter().map(|g| g.name.clone()).collect()
}

pub fn expected_integral_presentation(family: LieFamily, rank: u32) -> Result<RingPresentation<Integer>> {
    expected_integral_presentation_with(family, rank, F4Variant::default())
}

/// The stated integral presentation for the family. Types B and D
/// use generators y_j (j ≥ n) for the doubled classes 2y_j; type D writes
/// `wp`, `wm` for y_{n−1} + z and y_{n−1} − z.
pub fn expected_integral_presentation_with(
    family: LieFamily,
    rank: u32,
    variant: F4Variant,
) -> Result<RingPresentation<Integer>> {
    integral(family, rank, variant, false)
}

/// The x relations of the integral presentation with the y relations replaced by
/// those of H_*(Ω₀G;Z). Differs from the stated presentation only for G2,
/// F4 and E6.
pub fn split_extension_presentation(
    family: LieFamily,
    rank: u32,
    variant: F4Variant,
) -> Result<RingPresentation<Integer>> {
    integral(family, rank, variant, true)
}

fn integral(family: LieFamily, rank: u32, variant: F4Variant, split: bool) -> Result<RingPresentation<Integer>> {
    family.validate_rank(rank)?;
    let n = rank;
    let x = numbered("x", n);
    let x_names = names_of(&x);
    let y = |k: u32, d: u32| (format!("y{k}"), d);
    let loop_relations = loop_relation_texts(family, rank);
    match family {
        LieFamily::Su => {
            let central: Vec<_> = (1..=n).map(|k| y(k, 2 * k)).collect();
            build(x, graded(&central), &equal_square_relations(&x_names, Some("2*y1")))
        }
        LieFamily::Sp => {
            let central: Vec<_> = (2..=n).map(|k| y(k, 4 * k - 2)).collect();
            build(x, graded(&central), &clifford_relations(&x_names))
        }
        LieFamily::SoOdd => {
            let central: Vec<_> = (1..2 * n).map(|k| y(k, 2 * k)).collect();
            let mut relations = vec!["x1.x1 - y1".to_string()];
            relations.extend(clifford_relations(&x_names));
            relations.extend(loop_relations);
            build(x, graded(&central), &relations)
        }
        LieFamily::SoEven => {
            let mut central: Vec<_> = (1..n - 1).map(|k| y(k, 2 * k)).collect();
            central.push(("wp".into(), 2 * (n - 1)));
            central.push(("wm".into(), 2 * (n - 1)));
            central.extend((n..=2 * n - 2).map(|k| y(k, 2 * k)));
            let mut relations = vec!["x1.x1 - y1".to_string()];
            relations.extend(clifford_relations(&x_names));
            relations.extend(loop_relations);
            build(x, graded(&central), &relations)
        }
        LieFamily::G2 => {
            let mut relations = equal_square_relations(&x_names, Some("2*y1"));
            if split {
                relations.extend(loop_relations);
            } else {
                relations.push("2*y2 - x1.x1.x1.x1".into());
            }
            build(x, graded(&[y(1, 2), y(2, 4), y(5, 10)]), &relations)
        }
        LieFamily::F4 => {
            let mut relations: Vec<String> = x_names.iter().map(|k| format!("{k}.{k} - 3*y1")).collect();
            let sign = match variant {
                F4Variant::Commuting => "-",
                F4Variant::Anticommuting => "+",
            };
            for (i, p) in x_names.iter().enumerate() {
                for q in &x_names[i + 1..] {
                    relations.push(format!("{p}.{q} {sign} {q}.{p}"));
                }
            }
            relations.extend(exceptional_tail(split, loop_relations));
            let central = [y(1, 2), y(2, 4), y(3, 6), y(5, 10), y(7, 14), y(11, 22)];
            build(x, graded(&central), &relations)
        }
        LieFamily::E6 => {
            let mut relations = equal_square_relations(&x_names, Some("12*y1"));
            relations.extend(exceptional_tail(split, loop_relations));
            let central = [y(1, 2), y(2, 4), y(3, 6), y(4, 8), y(5, 10), y(7, 14), y(8, 16), y(11, 22)];
            build(x, graded(&central), &relations)
        }
    }
}

fn exceptional_tail(split: bool, loop_relations: Vec<String>) -> Vec<String> {
    if split {
        loop_relations
    } else {
        vec!["2*y2 - x1.x1.x1.x1".into(), "3*y3 - x1.x1.y2".into()]
    }
}

/// Relations of H_*(Ω₀G;Z) in the generator names of the integral
/// presentation.
fn loop_relation_texts(family: LieFamily, rank: u32) -> Vec<String> {
    let n = rank as i64;
    let y = |j: i64| if j == 0 { None } else { Some(format!("y{j}")) };
    let product = |c: i64, a: Option<String>, b: Option<String>| -> String {
        let word: Vec<String> = [a, b].into_iter().flatten().collect();
        let word = if word.is_empty() { "1".to_string() } else { word.join(".") };
        if c < 0 {
            format!("- {}*{word}", -c)
        } else {
            format!("+ {c}*{word}")
        }
    };
    match family {
        LieFamily::Su | LieFamily::Sp => Vec::new(),
        LieFamily::SoOdd => (1..n)
            .map(|i| {
                // y_i² + 2Σ_{k ≤ min(i, n−1−i)} (−1)^k y_{i−k}y_{i+k} + Σ_{k=n−i}^{i} (−1)^k y_{i−k}y_{i+k}
                let mut s = format!("y{i}.y{i}");
                for k in 1..=i {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let c = if k <= (n - 1 - i) { 2 * sign } else { sign };
                    s.push(' ');
                    s.push_str(&product(c, y(i - k), y(i + k)));
                }
                s
            })
            .collect(),
        LieFamily::SoEven => {
            // 2y_{n−1} = wp + wm; 2y_j = y_j for j ≥ n
            let term = |c: i64, lo: i64, hi: i64| -> Vec<String> {
                if hi == n - 1 {
                    vec![product(c, y(lo), Some("wp".into())), product(c, y(lo), Some("wm".into()))]
                } else if hi >= n {
                    vec![product(c, y(lo), y(hi))]
                } else {
                    vec![product(2 * c, y(lo), y(hi))]
                }
            };
            let mut out = Vec::new();
            for i in 1..n - 1 {
                let mut parts = vec![format!("y{i}.y{i}")];
                for k in 1..=i {
                    parts.extend(term(if k % 2 == 0 { 1 } else { -1 }, i - k, i + k));
                }
                out.push(parts.join(" "));
            }
            let mut parts = vec!["wp.wm".to_string()];
            for k in 1..n {
                parts.extend(term(if k % 2 == 0 { 1 } else { -1 }, n - 1 - k, n - 1 + k));
            }
            out.push(parts.join(" "));
            out
        }
        LieFamily::G2 => vec!["2*y2 - y1.y1".into()],
        LieFamily::F4 | LieFamily::E6 => vec!["y1.y1 - 2*y2".into(), "y1.y2 - 3*y3".into()],
    }
}

fn display_names(family: LieFamily, rank: u32) -> BTreeMap<String, String> {
    let n = rank;
    let mut out = BTreeMap::new();
    match family {
        LieFamily::SoOdd => {
            for j in n..2 * n {
                out.insert(format!("y{j}"), format!("2y{j}"));
            }
        }
        LieFamily::SoEven => {
            out.insert("wp".into(), format!("y{}+z", n - 1));
            out.insert("wm".into(), format!("y{}-z", n - 1));
            for j in n..=2 * n - 2 {
                out.insert(format!("y{j}"), format!("2y{j}"));
            }
        }
        _ => {}
    }
    out
}

fn commentary(family: LieFamily, rank: u32) -> String {
    match family {
        LieFamily::Su => format!(
            "y1..y{rank} dual to the transgressions of c2..c{}; primitives σ_k by the Newton formula",
            rank + 1
        ),
        LieFamily::Sp => format!("y_k dual to the transgressions of c_k = σ_k(x²), k ≤ {rank}; primitives by the Newton formula"),
        LieFamily::SoOdd => "primitives p1, p3, …, 2p_{2n−1} from the recursion with p0 = 1; σ̄_i map to σ_i(x²)".into(),
        LieFamily::SoEven => "primitives p_odd, 2z, 2p_j; σ̄_1..σ̄_{n−1} and λ̄ map to σ_i(x²) and x1⋯xn".into(),
        LieFamily::G2 => "H_*(ΩG2;Z) = Z[y1,y2,y5]/(2y2 − y1²)".into(),
        LieFamily::F4 => "H_*(ΩF4;Z) = Z[y1,y2,y3,y5,y7,y11]/(y1² − 2y2, y1y2 − 3y3)".into(),
        LieFamily::E6 => "H_*(ΩE6;Z) = Z[y1,y2,y3,y4,y5,y7,y8,y11]/(y1² − 2y2, y1y2 − 3y3)".into(),
    }
}

/// Nonzero brackets [x, y] (x before y in basis order) as stated for the
/// family, in the dual names of [`cohomology_presentation`].
pub fn expected_brackets(family: LieFamily, rank: u32) -> Result<BracketTable> {
    family.validate_rank(rank)?;
    let b1 = |c: i64| vec![("b1".to_string(), rational(c, 1))];
    let a: Vec<String> = match family {
        LieFamily::E6 => (1..=5).map(|i| format!("a{i}")).chain(["a".to_string()]).collect(),
        _ => (1..=rank).map(|i| format!("a{i}")).collect(),
    };
    let (diagonal, off) = match family {
        LieFamily::Su | LieFamily::G2 => (4, 2),
        LieFamily::Sp | LieFamily::SoOdd | LieFamily::SoEven => (2, 0),
        LieFamily::F4 => (6, 0),
        LieFamily::E6 => (24, 12),
    };
    let mut out = BTreeMap::new();
    for (i, p) in a.iter().enumerate() {
        out.insert((p.clone(), p.clone()), b1(diagonal));
        for q in &a[i + 1..] {
            // a commutes with every a_i for E6
            if off != 0 && q != "a" {
                out.insert((p.clone(), q.clone()), b1(off));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelop::{graded_dimensions, graded_smith_report};
    use crate::quotient::DEFAULT_BUDGET;

    #[test]
    fn exponents_and_loop_degrees() {
        assert_eq!(catalog_entry(LieFamily::Su, 2).unwrap().loop_degrees(), vec![2, 4]);
        assert_eq!(catalog_entry(LieFamily::Sp, 3).unwrap().loop_degrees(), vec![2, 6, 10]);
        assert_eq!(catalog_entry(LieFamily::SoEven, 3).unwrap().loop_degrees(), vec![2, 6, 4]);
        assert!(catalog_entry(LieFamily::SoEven, 2).is_err());
    }

    #[test]
    fn splitting_series_values() {
        assert_eq!(splitting_series(LieFamily::Su, 2, 5).unwrap().coefficients(), &[1, 2, 2, 2, 3, 4]);
        assert_eq!(splitting_series(LieFamily::G2, 2, 4).unwrap().coefficients(), &[1, 2, 2, 2, 2]);
        assert_eq!(splitting_series(LieFamily::F4, 4, 0).unwrap().coefficients(), &[1]);
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(weyl_order(LieFamily::Su, 3).unwrap(), 24);
        assert_eq!(weyl_order(LieFamily::SoEven, 3).unwrap(), 24);
        assert_eq!(weyl_order(LieFamily::Sp, 2).unwrap(), 8);
    }

    #[test]
    fn type_b_loop_relations() {
        assert_eq!(loop_relation_texts(LieFamily::SoOdd, 2), vec!["y1.y1 - 1*y2"]);
        assert_eq!(loop_relation_texts(LieFamily::SoOdd, 3), vec!["y1.y1 - 2*y2", "y2.y2 - 1*y1.y3 + 1*y4"]);
    }

    #[test]
    fn type_d_relations() {
        assert_eq!(loop_relation_texts(LieFamily::SoEven, 3), vec!["y1.y1 - 1*wp - 1*wm", "wp.wm - 1*y1.y3 + 1*y4"]);
        let e = catalog_entry(LieFamily::SoEven, 4).unwrap();
        let strings: Vec<String> = e.loop_group_relations.iter().map(|r| r.to_relation_string()).collect();
        assert_eq!(strings, vec!["1*y1.y1 - 2*y2", "-1*y1.wm - 1*y1.wp + 1*y2.y2 + 1*y4", "1*wp.wm + 1*y1.y5 - 1*y2.y4 - 1*y6"]);
    }

    #[test]
    fn rational_presentations_match_splitting_series() {
        for (family, rank) in [(LieFamily::Su, 2), (LieFamily::Sp, 2), (LieFamily::SoEven, 3), (LieFamily::G2, 2)] {
            let p = expected_rational_presentation(family, rank).unwrap();
            let dims = graded_dimensions(&p, 8, DEFAULT_BUDGET).unwrap();
            assert_eq!(dims, splitting_series(family, rank, 8).unwrap(), "{family} {rank}");
        }
    }

    #[test]
    fn integral_su_is_free() {
        let p = expected_integral_presentation(LieFamily::Su, 2).unwrap();
        let report = graded_smith_report(&p, 6, DEFAULT_BUDGET).unwrap();
        assert!(report.torsion_free());
        assert_eq!(report.ranks(), splitting_series(LieFamily::Su, 2, 6).unwrap());
    }

    #[test]
    fn loop_group_rings() {
        for (family, rank) in [(LieFamily::SoOdd, 3), (LieFamily::SoEven, 4), (LieFamily::G2, 2)] {
            let e = catalog_entry(family, rank).unwrap();
            let p = e.loop_group_presentation().unwrap();
            let report = graded_smith_report(&p, 12, DEFAULT_BUDGET).unwrap();
            let even = PoincareSeries::from_product(&[], &e.loop_degrees(), &[], 12);
            assert!(report.torsion_free(), "{family}");
            assert_eq!(report.ranks(), even, "{family}");
        }
    }
}
