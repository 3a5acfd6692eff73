//! Exact linear algebra: fraction-free rank, Smith normal form with a column
//! transform, and a sparse eliminator computing cokernels of row sets.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::coeff::{Coefficient, Integer};

/// Sparse row: `(column, value)` pairs with strictly increasing columns and
/// non-zero values.
pub type SparseRow<C> = Vec<(usize, C)>;

/// Rank of a dense integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(rows: &[Vec<Integer>]) -> usize {
    let mut m: Vec<Vec<Integer>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = Integer::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for c in col + 1..ncols {
                let v = &pivot_row[col] * &row[c] - &factor * &pivot_row[c];
                row[c] = v / &prev;
            }
            row[col] = Integer::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Smith normal form `U·A·Q = D` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Non-zero invariant factors d_1 | d_2 | … (positive); their count is the rank.
    pub diagonal: Vec<Integer>,
    /// Unimodular Q, `ncols × ncols`, when requested.
    pub column_transform: Option<Vec<Vec<Integer>>>,
    pub ncols: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<Integer> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(rows: &[Vec<Integer>], ncols: usize, track_columns: bool) -> SmithForm {
    let mut a: Vec<Vec<Integer>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let nrows = a.len();
    let mut q: Option<Vec<Vec<Integer>>> = track_columns.then(|| {
        (0..ncols)
            .map(|i| (0..ncols).map(|j| if i == j { Integer::one() } else { Integer::zero() }).collect())
            .collect()
    });
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest non-zero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        swap_columns(&mut a, &mut q, t, bj);
        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let f = a[i][t].div_floor(&a[t][t]);
                let (top, rest) = a.split_at_mut(i);
                for (x, y) in rest[0].iter_mut().zip(&top[t]).skip(t) {
                    *x -= &f * y;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let f = a[t][j].div_floor(&a[t][t]);
                add_column_multiple(&mut a, &mut q, j, t, &-f);
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                move_min_to_pivot(&mut a, &mut q, t);
                continue;
            }
            // divisibility of the trailing block by the pivot
            let offender = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match offender {
                Some(i) => {
                    let (top, rest) = a.split_at_mut(i);
                    for (x, y) in top[t].iter_mut().zip(&rest[0]).skip(t) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs());
        t += 1;
    }
    SmithForm { diagonal, column_transform: q, ncols }
}

fn swap_columns(a: &mut [Vec<Integer>], q: &mut Option<Vec<Vec<Integer>>>, i: usize, j: usize) {
    if i == j {
        return;
    }
    for row in a.iter_mut() {
        row.swap(i, j);
    }
    if let Some(q) = q {
        for row in q.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// column `target` += f · column `source`
fn add_column_multiple(
    a: &mut [Vec<Integer>],
    q: &mut Option<Vec<Vec<Integer>>>,
    target: usize,
    source: usize,
    f: &Integer,
) {
    if f.is_zero() {
        return;
    }
    for row in a.iter_mut() {
        let s = &row[source] * f;
        row[target] += s;
    }
    if let Some(q) = q {
        for row in q.iter_mut() {
            let s = &row[source] * f;
            row[target] += s;
        }
    }
}

fn move_min_to_pivot(a: &mut [Vec<Integer>], q: &mut Option<Vec<Vec<Integer>>>, t: usize) {
    let mut best = (t, t);
    for i in t..a.len() {
        if !a[i][t].is_zero() && (a[best.0][best.1].is_zero() || a[i][t].abs() < a[best.0][best.1].abs()) {
            best = (i, t);
        }
    }
    for j in t..a[t].len() {
        if !a[t][j].is_zero() && (a[best.0][best.1].is_zero() || a[t][j].abs() < a[best.0][best.1].abs()) {
            best = (t, j);
        }
    }
    a.swap(t, best.0);
    swap_columns(a, q, t, best.1);
}

/// One coordinate of a cokernel: free, or cyclic of the given order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinate<C> {
    pub modulus: Option<C>,
}

#[derive(Clone, Debug)]
enum Slot {
    Pivot,
    Free(usize),
    Mixed(usize),
}

/// Incremental sparse elimination over `ncols` columns.
///
/// Rows whose reduced form has a unit entry become rules eliminating that
/// column. Rule `i` never contains the pivot of a rule `j < i`, so a vector
/// is reduced by applying rules in increasing index order. Rows without a
/// unit entry are kept aside and handled by [`Eliminator::finish`].
#[derive(Clone, Debug)]
pub struct Eliminator<C: Coefficient> {
    ncols: usize,
    rules: Vec<SparseRow<C>>,
    pivots: Vec<usize>,
    rule_of: Vec<Option<usize>>,
    leftover: Vec<SparseRow<C>>,
}

impl<C: Coefficient> Eliminator<C> {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rules: Vec::new(), pivots: Vec::new(), rule_of: vec![None; ncols], leftover: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    pub fn reduce(&self, row: &[(usize, C)]) -> SparseRow<C> {
        let mut acc: BTreeMap<usize, C> = BTreeMap::new();
        let mut heap = BinaryHeap::new();
        for (c, v) in row {
            if v.is_zero() {
                continue;
            }
            accumulate(&mut acc, *c, v.clone());
            if let Some(r) = self.rule_of[*c] {
                heap.push(Reverse(r));
            }
        }
        while let Some(Reverse(r)) = heap.pop() {
            let p = self.pivots[r];
            let Some(coef) = acc.remove(&p) else { continue };
            for (c, v) in &self.rules[r] {
                if *c == p {
                    continue;
                }
                accumulate(&mut acc, *c, -(coef.clone() * v.clone()));
                if let Some(next) = self.rule_of[*c] {
                    heap.push(Reverse(next));
                }
            }
        }
        acc.into_iter().collect()
    }

    fn try_add_rule(&mut self, row: SparseRow<C>) -> Option<SparseRow<C>> {
        let Some(&(p, ref u)) = row.iter().rev().find(|(_, v)| v.is_unit()) else {
            return Some(row);
        };
        let inv = u.unit_inverse().expect("unit");
        let rule: SparseRow<C> = row.into_iter().map(|(c, v)| (c, v * inv.clone())).collect();
        self.rule_of[p] = Some(self.rules.len());
        self.pivots.push(p);
        self.rules.push(rule);
        None
    }

    pub fn insert(&mut self, row: &[(usize, C)]) {
        let reduced = self.reduce(row);
        if reduced.is_empty() {
            return;
        }
        if let Some(rest) = self.try_add_rule(reduced) {
            self.leftover.push(rest);
        }
    }

    /// Settles the rows kept aside and returns the cokernel.
    pub fn finish(mut self) -> Cokernel<C> {
        loop {
            let pending = std::mem::take(&mut self.leftover);
            let before = self.rules.len();
            for row in pending {
                let reduced = self.reduce(&row);
                if reduced.is_empty() {
                    continue;
                }
                if let Some(rest) = self.try_add_rule(reduced) {
                    self.leftover.push(rest);
                }
            }
            if self.rules.len() == before {
                break;
            }
        }
        Cokernel::build(self)
    }
}

fn accumulate<C: Coefficient>(acc: &mut BTreeMap<usize, C>, c: usize, v: C) {
    use std::collections::btree_map::Entry;
    match acc.entry(c) {
        Entry::Vacant(e) => {
            if !v.is_zero() {
                e.insert(v);
            }
        }
        Entry::Occupied(mut e) => {
            let s = e.get().clone() + v;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Quotient of the free module on `ncols` columns by the rows of an
/// [`Eliminator`], with explicit coordinates and a normal-form map.
#[derive(Clone, Debug)]
pub struct Cokernel<C: Coefficient> {
    elim: Eliminator<C>,
    slots: Vec<Slot>,
    mixed_columns: Vec<usize>,
    /// Q restricted to the kept output coordinates: `(column of Q, coordinate)`.
    mixed_outputs: Vec<(usize, usize)>,
    transform: Vec<Vec<Integer>>,
    coordinates: Vec<Coordinate<C>>,
}

impl<C: Coefficient> Cokernel<C> {
    fn build(elim: Eliminator<C>) -> Self {
        let mut slots: Vec<Slot> = (0..elim.ncols)
            .map(|c| if elim.rule_of[c].is_some() { Slot::Pivot } else { Slot::Free(0) })
            .collect();
        let mut support: Vec<usize> = elim.leftover.iter().flat_map(|r| r.iter().map(|(c, _)| *c)).collect();
        support.sort_unstable();
        support.dedup();
        for (k, &c) in support.iter().enumerate() {
            slots[c] = Slot::Mixed(k);
        }
        let mut coordinates = Vec::new();
        for slot in slots.iter_mut() {
            if let Slot::Free(_) = slot {
                *slot = Slot::Free(coordinates.len());
                coordinates.push(Coordinate { modulus: None });
            }
        }
        let mut mixed_outputs = Vec::new();
        let mut transform = Vec::new();
        if !support.is_empty() {
            let dense: Vec<Vec<Integer>> = elim
                .leftover
                .iter()
                .map(|row| {
                    let mut d = vec![Integer::zero(); support.len()];
                    for (c, v) in row {
                        let Slot::Mixed(k) = slots[*c] else { unreachable!() };
                        d[k] = v.to_integer().expect("non-unit rows only arise over the integers");
                    }
                    d
                })
                .collect();
            let snf = smith_normal_form(&dense, support.len(), true);
            transform = snf.column_transform.clone().expect("tracked");
            for i in 0..support.len() {
                let modulus = snf.diagonal.get(i);
                if modulus.is_some_and(|d| d.is_one()) {
                    continue;
                }
                mixed_outputs.push((i, coordinates.len()));
                coordinates.push(Coordinate { modulus: modulus.map(|d| C::from_integer(d.clone())) });
            }
        }
        Self { elim, slots, mixed_columns: support, mixed_outputs, transform, coordinates }
    }

    pub fn ncols(&self) -> usize {
        self.elim.ncols
    }

    pub fn coordinates(&self) -> &[Coordinate<C>] {
        &self.coordinates
    }

    pub fn rank(&self) -> usize {
        self.coordinates.iter().filter(|c| c.modulus.is_none()).count()
    }

    pub fn torsion(&self) -> Vec<C> {
        self.coordinates.iter().filter_map(|c| c.modulus.clone()).collect()
    }

    /// Image of a column vector in cokernel coordinates, torsion entries
    /// reduced to their canonical residues.
    pub fn normal_form(&self, row: &[(usize, C)]) -> SparseRow<C> {
        let reduced = self.elim.reduce(row);
        let mut out: BTreeMap<usize, C> = BTreeMap::new();
        let mut mixed: Vec<(usize, C)> = Vec::new();
        for (c, v) in reduced {
            match self.slots[c] {
                Slot::Free(k) => {
                    out.insert(k, v);
                }
                Slot::Mixed(k) => mixed.push((k, v)),
                Slot::Pivot => unreachable!("pivot columns are eliminated"),
            }
        }
        if !mixed.is_empty() {
            for &(i, coord) in &self.mixed_outputs {
                let mut y = C::zero();
                for (k, v) in &mixed {
                    let q = &self.transform[*k][i];
                    if !q.is_zero() {
                        y = y + v.clone() * C::from_integer(q.clone());
                    }
                }
                if let Some(m) = &self.coordinates[coord].modulus {
                    y = y.rem_euclid(m);
                }
                if !y.is_zero() {
                    out.insert(coord, y);
                }
            }
        }
        out.into_iter().collect()
    }

    /// Columns that survive as SNF inputs (for diagnostics).
    pub fn mixed_columns(&self) -> &[usize] {
        &self.mixed_columns
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rational, Rational};

    fn z(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn bareiss_ranks() {
        assert_eq!(bareiss_rank(&[z(&[1, 2]), z(&[2, 4])]), 1);
        assert_eq!(bareiss_rank(&[z(&[0, 2, 1]), z(&[3, 0, 0]), z(&[3, 2, 1])]), 2);
        assert_eq!(bareiss_rank(&[z(&[2, 3, 5]), z(&[7, 11, 13]), z(&[17, 19, 23])]), 3);
        assert_eq!(bareiss_rank(&[]), 0);
    }

    #[test]
    fn smith_of_small_matrices() {
        let s = smith_normal_form(&[z(&[2, 4, 4]), z(&[-6, 6, 12]), z(&[10, -4, -16])], 3, false);
        assert_eq!(s.diagonal, z(&[2, 6, 12]));
        let s = smith_normal_form(&[z(&[2])], 1, false);
        assert_eq!(s.torsion(), z(&[2]));
        let s = smith_normal_form(&[z(&[1, -2])], 2, true);
        assert_eq!(s.diagonal, z(&[1]));
    }

    #[test]
    fn smith_transform_is_consistent() {
        let a = [z(&[4, 6, 0]), z(&[0, 2, 8])];
        let s = smith_normal_form(&a, 3, true);
        let q = s.column_transform.unwrap();
        // A·Q has the invariant factors as the gcds of its leading columns
        let aq: Vec<Vec<Integer>> = a
            .iter()
            .map(|row| (0..3).map(|j| (0..3).map(|k| &row[k] * &q[k][j]).sum()).collect())
            .collect();
        assert!(aq.iter().all(|r| r[2].is_zero()));
        assert_eq!(s.diagonal, z(&[2, 4]));
    }

    #[test]
    fn cokernel_with_torsion() {
        // Z^3 / <(2,0,0), (0,1,1)>  ≅  Z/2 ⊕ Z
        let mut e: Eliminator<Integer> = Eliminator::new(3);
        e.insert(&[(0, Integer::from(2))]);
        e.insert(&[(1, Integer::from(1)), (2, Integer::from(1))]);
        let k = e.finish();
        assert_eq!(k.rank(), 1);
        assert_eq!(k.torsion(), z(&[2]));
        let x0 = k.normal_form(&[(0, Integer::from(3))]);
        let x0_once = k.normal_form(&[(0, Integer::from(1))]);
        assert_eq!(x0, x0_once);
        assert!(k.normal_form(&[(0, Integer::from(4))]).is_empty());
        let a = k.normal_form(&[(1, Integer::from(1))]);
        let b = k.normal_form(&[(2, Integer::from(-1))]);
        assert_eq!(a, b);
    }

    #[test]
    fn rational_cokernel_has_no_leftover() {
        let mut e: Eliminator<Rational> = Eliminator::new(3);
        e.insert(&[(0, rational(2, 1)), (1, rational(3, 1))]);
        e.insert(&[(1, rational(1, 2)), (2, rational(1, 1))]);
        let k = e.finish();
        assert_eq!(k.rank(), 1);
        assert!(k.mixed_columns().is_empty());
        let v = k.normal_form(&[(0, rational(1, 1)), (1, rational(1, 1)), (2, rational(1, 1))]);
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn torsion_resolved_by_later_unit_row() {
        let mut e: Eliminator<Integer> = Eliminator::new(2);
        e.insert(&[(0, Integer::from(2)), (1, Integer::from(2))]);
        e.insert(&[(0, Integer::from(3)), (1, Integer::from(1))]);
        let k = e.finish();
        // det = 2·1 − 2·3 = −4
        assert_eq!(k.rank(), 0);
        assert_eq!(k.torsion(), z(&[4]));
    }
}
