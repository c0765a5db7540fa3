//! Exact sparse linear algebra over the rationals.
//!
//! Rank, nullspace and span-membership for sparse matrices whose columns
//! are indexed by an arbitrary totally ordered key set. The nullspace
//! basis is read off the reduced row echelon form, which is unique for a
//! given column order, so results are reproducible regardless of the
//! pivot order used internally.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::Rational;

/// Sparse vector over a totally ordered key set. Never stores zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec<K: Ord> {
    entries: BTreeMap<K, Rational>,
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn new() -> Self {
        SparseVec {
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(pairs: impl IntoIterator<Item = (K, Rational)>) -> Self {
        let mut v = Self::new();
        for (k, c) in pairs {
            v.add(k, c);
        }
        v
    }

    /// Adds `c` at key `k`, dropping the entry if it cancels to zero.
    pub fn add(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&k) {
            Some(cur) => {
                *cur += c;
                if cur.is_zero() {
                    self.entries.remove(&k);
                }
            }
            None => {
                self.entries.insert(k, c);
            }
        }
    }

    pub fn get(&self, k: &K) -> Option<&Rational> {
        self.entries.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.entries.iter()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add(k.clone(), v * c);
        }
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.entries.keys()
    }
}

/// Sparse matrix: rows over a shared, declared column-key universe.
#[derive(Clone, Debug, Default)]
pub struct SparseMat<K: Ord> {
    rows: Vec<SparseVec<K>>,
}

impl<K: Ord + Clone> SparseMat<K> {
    pub fn new() -> Self {
        SparseMat { rows: Vec::new() }
    }

    pub fn push_row(&mut self, row: SparseVec<K>) {
        self.rows.push(row);
    }

    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    /// Matrix-vector product, exact.
    pub fn apply(&self, v: &SparseVec<K>) -> Vec<Rational> {
        self.rows
            .iter()
            .map(|row| {
                let mut acc = Rational::zero();
                for (k, c) in row.iter() {
                    if let Some(x) = v.get(k) {
                        acc += c * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn rank(&self, universe: &[K]) -> usize {
        self.eliminator(universe).rank()
    }

    /// Nullspace basis in reduced echelon form with respect to the column
    /// order given by `universe`; deterministic for a fixed universe.
    pub fn nullspace(&self, universe: &[K]) -> Vec<SparseVec<K>> {
        let elim = self.eliminator(universe);
        elim.nullspace()
            .into_iter()
            .map(|row| {
                SparseVec::from_entries(
                    row.into_iter()
                        .map(|(col, c)| (universe[col as usize].clone(), c)),
                )
            })
            .collect()
    }

    fn eliminator(&self, universe: &[K]) -> Eliminator {
        let mut elim = Eliminator::new(universe.len());
        for row in &self.rows {
            elim.offer(index_row(row, universe));
        }
        elim
    }
}

fn index_row<K: Ord + Clone>(row: &SparseVec<K>, universe: &[K]) -> Vec<(u32, Rational)> {
    let mut out: Vec<(u32, Rational)> = row
        .iter()
        .map(|(k, c)| {
            let idx = universe
                .binary_search(k)
                .expect("row key outside declared column universe");
            (idx as u32, c.clone())
        })
        .collect();
    out.sort_by_key(|(i, _)| *i);
    out
}

/// Expresses `v` in the given basis if possible, returning exact
/// coordinates; `None` when `v` is not in the span.
pub fn in_span<K: Ord + Clone>(
    v: &SparseVec<K>,
    basis: &[SparseVec<K>],
) -> Option<Vec<Rational>> {
    // One equation per key: sum_i c_i basis_i[k] = v[k]. Unknown columns
    // 0..n are the coordinates, column n is the augmented target.
    let n = basis.len();
    let mut keys: Vec<K> = v.keys().cloned().collect();
    for b in basis {
        keys.extend(b.keys().cloned());
    }
    keys.sort();
    keys.dedup();

    let mut elim = Eliminator::new(n + 1);
    for k in &keys {
        let mut row: Vec<(u32, Rational)> = Vec::new();
        for (i, b) in basis.iter().enumerate() {
            if let Some(c) = b.get(k) {
                row.push((i as u32, c.clone()));
            }
        }
        if let Some(c) = v.get(k) {
            row.push((n as u32, c.clone()));
        }
        elim.offer(row);
    }
    elim.solve_augmented()
}

/// Incremental exact row reduction. Rows are offered one at a time and
/// reduced against the pivots seen so far; the rank is available at any
/// point, which lets large scheduled systems stop early once the rank
/// stabilizes.
pub struct Eliminator {
    ncols: usize,
    pivot_of_col: Vec<Option<usize>>,
    rows: Vec<Vec<(u32, Rational)>>,
}

impl Eliminator {
    pub fn new(ncols: usize) -> Self {
        Eliminator {
            ncols,
            pivot_of_col: vec![None; ncols],
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current pivots; returns the reduced row.
    pub fn reduce(&self, mut row: Vec<(u32, Rational)>) -> Vec<(u32, Rational)> {
        loop {
            let Some(&(lead, _)) = row.first() else {
                return row;
            };
            match self.pivot_of_col[lead as usize] {
                Some(r) => {
                    let coef = row[0].1.clone();
                    row = row_sub_scaled(&row, &self.rows[r], &coef);
                }
                None => return row,
            }
        }
    }

    /// Offers a row to the elimination; returns true when it increased
    /// the rank.
    pub fn offer(&mut self, row: Vec<(u32, Rational)>) -> bool {
        let row = self.reduce(normalize_for_offer(row));
        let Some(&(lead, _)) = row.first() else {
            return false;
        };
        // Scale to a leading 1.
        let inv = row[0].1.clone();
        let row: Vec<(u32, Rational)> = row.into_iter().map(|(i, c)| (i, c / &inv)).collect();
        self.pivot_of_col[lead as usize] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    /// Back-substitutes to reduced row echelon form.
    fn to_rref(&mut self) {
        // Process pivots from rightmost to leftmost so each pass fully
        // clears the column above and below.
        let mut pivot_cols: Vec<u32> = self
            .pivot_of_col
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.map(|_| c as u32))
            .collect();
        pivot_cols.sort_unstable();
        for &col in pivot_cols.iter().rev() {
            let src = self.pivot_of_col[col as usize].unwrap();
            let src_row = self.rows[src].clone();
            for r in 0..self.rows.len() {
                if r == src {
                    continue;
                }
                if let Some(pos) = self.rows[r].iter().position(|(c, _)| *c == col) {
                    let coef = self.rows[r][pos].1.clone();
                    self.rows[r] = row_sub_scaled(&self.rows[r], &src_row, &coef);
                }
            }
        }
    }

    /// Unique RREF nullspace basis: one vector per free column, in column
    /// order, each with a 1 in its free column.
    pub fn nullspace(mut self) -> Vec<Vec<(u32, Rational)>> {
        self.to_rref();
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if self.pivot_of_col[free].is_some() {
                continue;
            }
            let mut v: Vec<(u32, Rational)> = Vec::new();
            for (pcol, prow) in self.pivot_of_col.iter().enumerate() {
                if let Some(r) = prow {
                    if let Some((_, c)) = self.rows[*r].iter().find(|(c, _)| *c == free as u32) {
                        v.push((pcol as u32, -c.clone()));
                    }
                }
            }
            v.push((free as u32, Rational::from_integer(1.into())));
            v.sort_by_key(|(i, _)| *i);
            basis.push(v);
        }
        basis
    }

    /// For a system whose last column is an augmented target: returns the
    /// particular solution with all free variables zero, or `None` when
    /// the system is inconsistent.
    pub fn solve_augmented(mut self) -> Option<Vec<Rational>> {
        let aug = (self.ncols - 1) as u32;
        if self.pivot_of_col[aug as usize].is_some() {
            return None;
        }
        self.to_rref();
        let mut sol = vec![Rational::zero(); self.ncols - 1];
        for (pcol, prow) in self.pivot_of_col.iter().enumerate() {
            if let Some(r) = prow {
                if let Some((_, c)) = self.rows[*r].iter().find(|(c, _)| *c == aug) {
                    sol[pcol] = c.clone();
                }
            }
        }
        Some(sol)
    }

    /// Reduced rows, for callers that inspect the echelon structure.
    pub fn rows(&self) -> &[Vec<(u32, Rational)>] {
        &self.rows
    }
}

fn normalize_for_offer(mut row: Vec<(u32, Rational)>) -> Vec<(u32, Rational)> {
    row.retain(|(_, c)| !c.is_zero());
    row.sort_by_key(|(i, _)| *i);
    // Merge duplicate columns.
    let mut out: Vec<(u32, Rational)> = Vec::with_capacity(row.len());
    for (i, c) in row {
        match out.last_mut() {
            Some((j, acc)) if *j == i => {
                *acc += c;
                if acc.is_zero() {
                    out.pop();
                }
            }
            _ => out.push((i, c)),
        }
    }
    out
}

/// `a - coef * b` where `b` has leading coefficient 1 at `b[0]`.
fn row_sub_scaled(
    a: &[(u32, Rational)],
    b: &[(u32, Rational)],
    coef: &Rational,
) -> Vec<(u32, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, va.clone()));
                    i += 1;
                } else if cb < ca {
                    out.push((*cb, -(vb * coef)));
                    j += 1;
                } else {
                    let v = va - vb * coef;
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                i += 1;
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, -(vb * coef)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn mat(rows: &[&[i64]]) -> (SparseMat<usize>, Vec<usize>) {
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut m = SparseMat::new();
        for r in rows {
            m.push_row(SparseVec::from_entries(
                r.iter().enumerate().map(|(i, &x)| (i, rat(x))),
            ));
        }
        (m, (0..ncols).collect())
    }

    fn vec_of(xs: &[i64]) -> SparseVec<usize> {
        SparseVec::from_entries(xs.iter().enumerate().map(|(i, &x)| (i, rat(x))))
    }

    #[test]
    fn nullspace_rank_one() {
        let (m, u) = mat(&[&[1, 2], &[2, 4]]);
        let ns = m.nullspace(&u);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec_of(&[-2, 1]));
        assert_eq!(m.rank(&u), 1);
    }

    #[test]
    fn nullspace_identity_empty() {
        let (m, u) = mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(m.nullspace(&u).is_empty());
        assert_eq!(m.rank(&u), 3);
    }

    #[test]
    fn nullspace_zero_matrix_full() {
        let (m, u) = mat(&[&[0, 0], &[0, 0]]);
        let ns = m.nullspace(&u);
        assert_eq!(ns.len(), 2);
        assert_eq!(ns[0], vec_of(&[1, 0]));
        assert_eq!(ns[1], vec_of(&[0, 1]));
        assert_eq!(m.rank(&u), 0);
    }

    #[test]
    fn in_span_examples() {
        let coords = in_span(&vec_of(&[2, 4]), &[vec_of(&[1, 2])]).unwrap();
        assert_eq!(coords, vec![rat(2)]);

        assert!(in_span(&vec_of(&[1, 0]), &[vec_of(&[0, 1])]).is_none());

        let coords = in_span(&SparseVec::new(), &[vec_of(&[0, 1])]).unwrap();
        assert_eq!(coords, vec![rat(0)]);
    }

    #[test]
    fn empty_matrix_full_space() {
        let m: SparseMat<usize> = SparseMat::new();
        let u: Vec<usize> = (0..3).collect();
        assert_eq!(m.nullspace(&u).len(), 3);
    }
}
