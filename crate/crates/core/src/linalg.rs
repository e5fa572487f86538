//! Exact linear algebra over `Q`.
//!
//! Two representations are used throughout:
//!
//! * [`SparseMatrix`], column-major with `BTreeMap` columns. Chain maps are built one
//!   basis vector at a time, so columns are the natural unit.
//! * [`DenseMatrix`], used for eliminations on the (small) weight blocks of those maps.
//!
//! Kernels and ranks go through a fraction-free elimination: rows are scaled to
//! primitive integer vectors and combined by cross multiplication, so no rational
//! normalisation happens inside the inner loop.
//!
//! [`Echelon`] maintains a spanning set in echelon form and answers membership and
//! equality questions for subspaces of a large ambient space.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::Q;

/// A sparse vector: index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Q>;

/// `target += a * x`, dropping entries that cancel.
pub fn axpy(target: &mut SparseVec, a: &Q, x: &SparseVec) {
    if a.is_zero() {
        return;
    }
    for (&i, v) in x {
        add_entry(target, i, &(a * v));
    }
}

/// `target[i] += v`, dropping the entry if it cancels.
pub fn add_entry(target: &mut SparseVec, i: usize, v: &Q) {
    if v.is_zero() {
        return;
    }
    match target.get_mut(&i) {
        Some(cur) => {
            *cur += v;
            if cur.is_zero() {
                target.remove(&i);
            }
        }
        None => {
            target.insert(i, v.clone());
        }
    }
}

pub fn scale(x: &SparseVec, a: &Q) -> SparseVec {
    if a.is_zero() {
        return SparseVec::new();
    }
    x.iter().map(|(&i, v)| (i, v * a)).collect()
}

pub fn sub(x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut out = x.clone();
    axpy(&mut out, &-Q::one(), y);
    out
}

pub fn dense_to_sparse(v: &[Q]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    for (&i, x) in v {
        out[i] = x.clone();
    }
    out
}

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            cols: vec![SparseVec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.cols[i].insert(i, Q::one());
        }
        m
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.keys().all(|&r| r < nrows)));
        SparseMatrix { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.cols[j].get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Q) {
        add_entry(&mut self.cols[j], i, v);
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// `self * x`.
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&j, a) in x {
            axpy(&mut out, a, &self.cols[j]);
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), other.nrows, "shape mismatch in product");
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        SparseMatrix {
            nrows: self.nrows,
            cols,
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.nrows, other.nrows);
        assert_eq!(self.ncols(), other.ncols());
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut c = a.clone();
                axpy(&mut c, &Q::one(), b);
                c
            })
            .collect();
        SparseMatrix {
            nrows: self.nrows,
            cols,
        }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add(&other.scaled(&-Q::one()))
    }

    pub fn scaled(&self, a: &Q) -> SparseMatrix {
        SparseMatrix {
            nrows: self.nrows,
            cols: self.cols.iter().map(|c| scale(c, a)).collect(),
        }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.ncols(), self.nrows);
        for (j, c) in self.cols.iter().enumerate() {
            for (&i, v) in c {
                out.cols[i].insert(j, v.clone());
            }
        }
        out
    }

    /// Dense copy of the submatrix on the given row and column index lists.
    pub fn block(&self, rows: &[usize], cols: &[usize]) -> DenseMatrix {
        let row_pos: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(p, &r)| (r, p)).collect();
        let mut d = DenseMatrix::zeros(rows.len(), cols.len());
        for (cj, &j) in cols.iter().enumerate() {
            for (i, v) in &self.cols[j] {
                if let Some(&ri) = row_pos.get(i) {
                    d.set(ri, cj, v.clone());
                }
            }
        }
        d
    }

    /// True if every nonzero entry of column `j` lies in a row of `rows`.
    pub fn column_supported_in(&self, j: usize, rows: &BTreeMap<usize, usize>) -> bool {
        self.cols[j].keys().all(|r| rows.contains_key(r))
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let rows: Vec<usize> = (0..self.nrows).collect();
        let cols: Vec<usize> = (0..self.ncols()).collect();
        self.block(&rows, &cols)
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<Q>,
}

impl DenseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        DenseMatrix {
            nrows,
            ncols,
            data: vec![Q::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        DenseMatrix {
            nrows,
            ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(nrows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), nrows);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.nrows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = DenseMatrix::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.ncols, other.nrows, "shape mismatch in product");
        let mut out = DenseMatrix::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.ncols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.ncols, v.len());
        (0..self.nrows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Reduced row echelon form via fraction-free elimination.
    pub fn rref(&self) -> Rref {
        Rref::compute(self)
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        self.rref().nullspace()
    }

    /// Determinant by fraction-free elimination (square matrices only).
    pub fn determinant(&self) -> Q {
        assert_eq!(self.nrows, self.ncols, "determinant of a non-square matrix");
        let n = self.nrows;
        let mut m: Vec<Vec<Q>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                return Q::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            let piv = m[c][c].clone();
            det *= &piv;
            for r in c + 1..n {
                if m[r][c].is_zero() {
                    continue;
                }
                let f = &m[r][c] / &piv;
                for k in c..n {
                    let t = &f * &m[c][k];
                    m[r][k] -= t;
                }
            }
        }
        det
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<DenseMatrix> {
        assert_eq!(self.nrows, self.ncols, "inverse of a non-square matrix");
        let n = self.nrows;
        let rows = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
                r
            })
            .collect();
        let r = DenseMatrix::from_rows(rows).rref();
        if r.pivots != (0..n).collect::<Vec<_>>() {
            return None;
        }
        Some(DenseMatrix::from_rows(
            r.rows.iter().map(|row| row[n..].to_vec()).collect(),
        ))
    }

    /// Leading principal minors, top-left 1x1 through n x n.
    pub fn leading_minors(&self) -> Vec<Q> {
        (1..=self.nrows.min(self.ncols))
            .map(|k| {
                let rows: Vec<Vec<Q>> = (0..k).map(|i| self.row(i)[..k].to_vec()).collect();
                DenseMatrix::from_rows(rows).determinant()
            })
            .collect()
    }
}

/// Result of a row reduction: reduced rows (one per pivot) and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    ncols: usize,
    /// Rows normalised so that the pivot entry is one.
    pub rows: Vec<Vec<Q>>,
    pub pivots: Vec<usize>,
}

fn primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

fn integer_row(row: &[Q]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in row {
        if !x.is_zero() {
            l = l.lcm(x.denom());
        }
    }
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|x| {
            if x.is_zero() {
                BigInt::zero()
            } else {
                x.numer() * (&l / x.denom())
            }
        })
        .collect();
    primitive(&mut out);
    out
}

fn primitive_small(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, x| g.gcd(x));
    if g > 1 {
        for x in row.iter_mut() {
            *x /= g;
        }
    }
}

/// Same elimination as the big-integer path in `i128`; `None` on overflow.
fn eliminate_small(mut rows: Vec<Vec<i128>>, ncols: usize) -> Option<(Vec<Vec<i128>>, Vec<usize>)> {
    let mut pivots = Vec::new();
    let mut prow = 0;
    for c in 0..ncols {
        if prow == rows.len() {
            break;
        }
        let Some(p) = (prow..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(prow, p);
        let (head, tail) = rows.split_at_mut(prow);
        let (pivot, tail) = tail.split_first_mut().expect("pivot row present");
        let a = pivot[c];
        for r in head.iter_mut().chain(tail.iter_mut()) {
            if r[c] == 0 {
                continue;
            }
            let b = r[c];
            let g = a.gcd(&b);
            let (sa, sb) = (a / g, b / g);
            for k in 0..ncols {
                r[k] = r[k].checked_mul(sa)?.checked_sub(sb.checked_mul(pivot[k])?)?;
            }
            primitive_small(r);
        }
        pivots.push(c);
        prow += 1;
    }
    rows.truncate(prow);
    Some((rows, pivots))
}

impl Rref {
    fn compute(m: &DenseMatrix) -> Rref {
        let ncols = m.ncols;
        let rows: Vec<Vec<BigInt>> = (0..m.nrows)
            .map(|i| integer_row(m.row(i)))
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        let small: Option<Vec<Vec<i128>>> = rows
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).ok().map(i128::from)).collect())
            .collect();
        if let Some((rows, pivots)) = small.and_then(|s| eliminate_small(s, ncols)) {
            let rows = rows
                .into_iter()
                .zip(&pivots)
                .map(|(r, &c)| {
                    let a = BigInt::from(r[c]);
                    r.into_iter().map(|x| Q::new(BigInt::from(x), a.clone())).collect()
                })
                .collect();
            return Rref { ncols, rows, pivots };
        }
        Self::compute_big(rows, ncols)
    }

    fn compute_big(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> Rref {
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..ncols {
            if prow == rows.len() {
                break;
            }
            let Some(p) = (prow..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
                continue;
            };
            rows.swap(prow, p);
            let (head, tail) = rows.split_at_mut(prow);
            let (pivot, tail) = tail.split_first_mut().expect("pivot row present");
            let pivot_row = &*pivot;
            let a = pivot_row[c].clone();
            for r in head.iter_mut().chain(tail.iter_mut()) {
                if r[c].is_zero() {
                    continue;
                }
                let b = r[c].clone();
                let g = a.gcd(&b);
                let (sa, sb) = (&a / &g, &b / &g);
                for k in 0..ncols {
                    if pivot_row[k].is_zero() {
                        if !r[k].is_zero() {
                            r[k] *= &sa;
                        }
                    } else {
                        r[k] = &r[k] * &sa - &sb * &pivot_row[k];
                    }
                }
                primitive(r);
            }
            pivots.push(c);
            prow += 1;
        }
        rows.truncate(prow);
        let rows = rows
            .into_iter()
            .zip(&pivots)
            .map(|(r, &c)| {
                let a = r[c].clone();
                r.into_iter().map(|x| Q::new(x, a.clone())).collect::<Vec<Q>>()
            })
            .collect();
        Rref { ncols, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Q::zero(); self.ncols];
                v[f] = Q::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect()
    }
}

/// A subspace of `Q^n` held as an echelon basis of sparse rows.
///
/// Each stored row has its leading index as pivot, with leading coefficient one.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a>(vs: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut e = Self::new();
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Removes the components of `v` along pivots of this basis.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .find(|(i, _)| self.pivot_row.contains_key(i))
                .map(|(&i, c)| (i, c.clone()));
            let Some((i, c)) = next else { break };
            let row = &self.rows[self.pivot_row[&i]];
            axpy(&mut v, &-c, row);
            cursor = i + 1;
        }
        v
    }

    /// Adds `v` to the span. Returns true if the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((&lead, c)) = r.iter().next() else {
            return false;
        };
        let inv = c.recip();
        let r = scale(&r, &inv);
        self.pivot_row.insert(lead, self.rows.len());
        self.rows.push(r);
        true
    }

    /// Fully reduced rows (zero above and below every pivot), sorted by pivot.
    pub fn reduced_rows(&self) -> Vec<SparseVec> {
        let mut order: Vec<(usize, usize)> = self.pivot_row.iter().map(|(&p, &r)| (p, r)).collect();
        order.reverse();
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (p, r) in order {
            let mut v = self.rows[r].clone();
            let pivots: Vec<usize> = v.keys().copied().filter(|i| *i != p && done.contains_key(i)).collect();
            for i in pivots {
                if let Some(c) = v.get(&i).cloned() {
                    axpy(&mut v, &-c, &done[&i]);
                }
            }
            done.insert(p, v);
        }
        done.into_values().collect()
    }

    /// Basis of the vectors supported on `columns` that are orthogonal to every row,
    /// i.e. the kernel of the matrix whose rows span this space.
    pub fn kernel(&self, columns: &[usize]) -> Vec<SparseVec> {
        let rows = self.reduced_rows();
        let mut out = Vec::new();
        for &f in columns.iter().filter(|c| !self.pivot_row.contains_key(c)) {
            let mut v = SparseVec::new();
            v.insert(f, Q::one());
            for r in &rows {
                if let Some(c) = r.get(&f) {
                    let (&p, _) = r.iter().next().expect("nonzero row");
                    v.insert(p, -c.clone());
                }
            }
            out.push(v);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains_all(&self, other: &Echelon) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn same_span(&self, other: &Echelon) -> bool {
        self.dim() == other.dim() && self.contains_all(other)
    }

    /// A vector of `other` lying outside this span, if any.
    pub fn witness_outside<'a>(&self, vs: impl IntoIterator<Item = &'a SparseVec>) -> Option<SparseVec> {
        vs.into_iter().find(|v| !self.contains(v)).cloned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, q};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> DenseMatrix {
        DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rank_and_nullspace_small() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn sparse_kernel_matches_dense() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let e = Echelon::from_vectors(&(0..3).map(|i| dense_to_sparse(a.row(i))).collect::<Vec<_>>());
        let k = e.kernel(&[0, 1, 2, 3]);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(&sparse_to_dense(v, 4)).iter().all(|x| x.is_zero()));
        }
        for r in e.reduced_rows() {
            let (&p, c) = r.iter().next().unwrap();
            assert!(c.is_one());
            assert!(e
                .reduced_rows()
                .iter()
                .filter(|s| *s != &r)
                .all(|s| !s.contains_key(&p)));
        }
    }

    #[test]
    fn big_entries_fall_back() {
        let big = q(1i64 << 62);
        let a = DenseMatrix::from_rows(vec![vec![big.clone(), q(3)], vec![q(5), big.clone()], vec![q(1), q(1)]]);
        assert_eq!(a.rank(), 2);
        let b = DenseMatrix::from_rows(vec![vec![big.clone(), big.clone() * q(2)], vec![q(1), q(2)]]);
        assert_eq!(b.rank(), 1);
    }

    proptest! {
        #[test]
        fn small_and_big_paths_agree(entries in proptest::collection::vec(-6i64..6, 12)) {
            let a = DenseMatrix::from_rows(entries.chunks(4).map(|r| r.iter().map(|&x| q(x)).collect()).collect());
            let ints: Vec<Vec<BigInt>> = (0..3).map(|i| integer_row(a.row(i))).filter(|r| r.iter().any(|x| !x.is_zero())).collect();
            let big = Rref::compute_big(ints, 4);
            let fast = a.rref();
            prop_assert_eq!(big.pivots, fast.pivots);
            prop_assert_eq!(big.rows, fast.rows);
        }
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.mul(&a.inverse().unwrap()), DenseMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn rref_is_reduced() {
        let a = m(&[&[0, 3, 6], &[2, 1, 1], &[4, 5, 8]]);
        let r = a.rref();
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rows[0], vec![q(1), q(0), frac(-1, 2)]);
        assert_eq!(r.rows[1], vec![q(0), q(1), q(2)]);
    }

    #[test]
    fn determinant_and_minors() {
        let a = m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(a.determinant(), q(4));
        assert_eq!(a.leading_minors(), vec![q(2), q(3), q(4)]);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), q(0));
    }

    #[test]
    fn echelon_membership() {
        let v1: SparseVec = [(0, q(1)), (2, q(1))].into_iter().collect();
        let v2: SparseVec = [(1, q(2)), (2, q(-1))].into_iter().collect();
        let e = Echelon::from_vectors([&v1, &v2]);
        assert_eq!(e.dim(), 2);
        let mut w = scale(&v1, &q(3));
        axpy(&mut w, &frac(1, 2), &v2);
        assert!(e.contains(&w));
        let u: SparseVec = [(2, q(1))].into_iter().collect();
        assert!(!e.contains(&u));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..4, c), r))
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in small_matrix()) {
            let a = DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect());
            let ns = a.nullspace();
            prop_assert_eq!(a.rank() + ns.len(), a.ncols());
            for v in &ns {
                prop_assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
            }
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }

        #[test]
        fn echelon_rank_matches_dense(rows in small_matrix()) {
            let a = DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect());
            let vs: Vec<SparseVec> = (0..a.nrows()).map(|i| dense_to_sparse(a.row(i))).collect();
            prop_assert_eq!(Echelon::from_vectors(&vs).dim(), a.rank());
        }
    }
}
