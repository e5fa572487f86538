//! Split semisimple Lie algebras in a Chevalley basis.
//!
//! Basis order: `f_beta` for the positive roots in reverse root order, then
//! `h_1 .. h_r`, then `e_beta` in root order. Weights therefore increase along the basis.
//!
//! Structure constants `[e_a, e_b] = N(a, b) e_{a+b}` are fixed by taking
//! `N = p + 1 > 0` on extraspecial pairs and propagating through the standard
//! identities between the `N`. The involution `e_a -> -f_a` is an automorphism with
//! this choice, and `[e_a, f_a] = h_a` is the coroot.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, SparseVec};
use crate::root_system::{RootSystem, Weight};
use crate::scalar::{q, Q};

/// Label of a Chevalley basis vector. Roots are positions in the positive root list,
/// Cartan elements are zero-based nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    F(usize),
    H(usize),
    E(usize),
}

/// A vector of `g` in the Chevalley basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub coords: Vec<Q>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element {
            coords: vec![Q::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coords[i] = q(1);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scaled(&self, a: &Q) -> Element {
        Element {
            coords: self.coords.iter().map(|c| c * a).collect(),
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        Element {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    fn to_sparse(&self) -> SparseVec {
        crate::linalg::dense_to_sparse(&self.coords)
    }
}

/// Bracket table entry: `[b_i, b_j] = sum coeff * b_k`.
pub type Bracket = Vec<(usize, i64)>;

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    rs: RootSystem,
    labels: Vec<BasisLabel>,
    index: HashMap<BasisLabel, usize>,
    /// Weight of each basis vector in simple-root coordinates.
    root_coords: Vec<Vec<i64>>,
    table: Vec<Vec<Bracket>>,
    killing: Vec<Vec<i64>>,
}

impl LieAlgebra {
    /// Builds the algebra and verifies antisymmetry, the Jacobi identity and the
    /// Chevalley integrality of the structure constants.
    pub fn new(rs: RootSystem) -> Result<Self> {
        let n = rs.rank();
        let np = rs.num_positive();
        let mut labels = Vec::with_capacity(n + 2 * np);
        labels.extend((0..np).rev().map(BasisLabel::F));
        labels.extend((0..n).map(BasisLabel::H));
        labels.extend((0..np).map(BasisLabel::E));
        let index: HashMap<BasisLabel, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let root_coords = labels
            .iter()
            .map(|l| match *l {
                BasisLabel::F(a) => rs.root(a).iter().map(|c| -c).collect(),
                BasisLabel::H(_) => vec![0; n],
                BasisLabel::E(a) => rs.root(a).to_vec(),
            })
            .collect();
        let constants = StructureConstants::compute(&rs)?;
        let mut alg = LieAlgebra {
            rs,
            labels,
            index,
            root_coords,
            table: Vec::new(),
            killing: Vec::new(),
        };
        alg.table = alg.build_table(&constants);
        alg.verify_antisymmetry()?;
        alg.verify_jacobi()?;
        alg.killing = alg.compute_killing();
        Ok(alg)
    }

    /// Type letter and rank shortcut.
    pub fn of_type(letter: char, rank: usize) -> Result<Self> {
        Self::new(RootSystem::of_type(letter, rank)?)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> BasisLabel {
        self.labels[i]
    }

    pub fn index_of(&self, l: BasisLabel) -> usize {
        self.index[&l]
    }

    pub fn e(&self, root: usize) -> usize {
        self.index[&BasisLabel::E(root)]
    }

    pub fn f(&self, root: usize) -> usize {
        self.index[&BasisLabel::F(root)]
    }

    pub fn h(&self, node: usize) -> usize {
        self.index[&BasisLabel::H(node)]
    }

    /// Weight of basis vector `i` in simple-root coordinates.
    pub fn root_coords(&self, i: usize) -> &[i64] {
        &self.root_coords[i]
    }

    /// Weight of basis vector `i` in Dynkin labels.
    pub fn weight(&self, i: usize) -> Weight {
        self.rs.root_to_weight(&self.root_coords[i])
    }

    /// `[b_i, b_j]` from the table.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Bracket {
        &self.table[i][j]
    }

    /// `B(b_i, b_j)`.
    pub fn killing_basis(&self, i: usize, j: usize) -> i64 {
        self.killing[i][j]
    }

    /// `B(e_a, f_a)` for a positive root `a`.
    pub fn pairing(&self, root: usize) -> i64 {
        self.killing[self.e(root)][self.f(root)]
    }

    /// Human-readable basis label such as `e[1,1,0]`, `f[0,1,0]` or `h2`.
    pub fn label_name(&self, i: usize) -> String {
        let coeffs = |a: usize| {
            let parts: Vec<String> = self.rs.root(a).iter().map(|c| c.to_string()).collect();
            parts.join(",")
        };
        match self.labels[i] {
            BasisLabel::E(a) => format!("e[{}]", coeffs(a)),
            BasisLabel::F(a) => format!("f[{}]", coeffs(a)),
            BasisLabel::H(k) => format!("h{}", k + 1),
        }
    }

    fn check_dim(&self, x: &Element) -> Result<()> {
        if x.coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.coords.len(),
            });
        }
        Ok(())
    }

    pub fn bracket_sparse(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, a) in x {
            for (&j, b) in y {
                let ab = a * b;
                for &(k, c) in &self.table[i][j] {
                    crate::linalg::add_entry(&mut out, k, &(&ab * q(c)));
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let s = self.bracket_sparse(&x.to_sparse(), &y.to_sparse());
        Ok(Element {
            coords: crate::linalg::sparse_to_dense(&s, self.dim()),
        })
    }

    pub fn killing_form(&self, x: &Element, y: &Element) -> Result<Q> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let mut s = Q::zero();
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords.iter().enumerate() {
                if !b.is_zero() && self.killing[i][j] != 0 {
                    s += a * b * q(self.killing[i][j]);
                }
            }
        }
        Ok(s)
    }

    /// Matrix of `y -> [x, y]` in the Chevalley basis.
    pub fn ad_matrix(&self, x: &Element) -> Result<DenseMatrix> {
        self.check_dim(x)?;
        let d = self.dim();
        let mut m = DenseMatrix::zeros(d, d);
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..d {
                for &(k, c) in &self.table[i][j] {
                    let v = m.get(k, j) + a * q(c);
                    m.set(k, j, v);
                }
            }
        }
        Ok(m)
    }

    /// Index and sign of `theta(b_i) = sign * b_{index}`.
    pub fn involution_basis(&self, i: usize) -> (usize, i64) {
        match self.labels[i] {
            BasisLabel::E(a) => (self.f(a), -1),
            BasisLabel::F(a) => (self.e(a), -1),
            BasisLabel::H(_) => (i, -1),
        }
    }

    /// Chevalley involution `e_a -> -f_a`, `f_a -> -e_a`, `h -> -h`.
    pub fn chevalley_involution(&self, x: &Element) -> Result<Element> {
        self.check_dim(x)?;
        let mut out = Element::zero(self.dim());
        for (i, a) in x.coords.iter().enumerate() {
            let (j, s) = self.involution_basis(i);
            out.coords[j] += a * q(s);
        }
        Ok(out)
    }

    /// Gram matrix of `B_theta(x, y) = -B(x, theta y)`.
    pub fn theta_form(&self) -> DenseMatrix {
        let d = self.dim();
        let mut m = DenseMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let (tj, s) = self.involution_basis(j);
                m.set(i, j, q(-s * self.killing[i][tj]));
            }
        }
        m
    }

    fn build_table(&self, n: &StructureConstants) -> Vec<Vec<Bracket>> {
        let d = self.dim();
        let rank = self.rank();
        let mut table = vec![vec![Bracket::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                table[i][j] = self.compute_bracket(n, rank, i, j);
            }
        }
        table
    }

    fn compute_bracket(&self, n: &StructureConstants, rank: usize, i: usize, j: usize) -> Bracket {
        use BasisLabel::*;
        let a = &self.rs;
        let pairing =
            |node: usize, root: usize| -> i64 { (0..rank).map(|k| a.cartan().entry(node, k) * a.root(root)[k]).sum() };
        match (self.labels[i], self.labels[j]) {
            (H(_), H(_)) => vec![],
            (H(k), E(r)) => nonzero(vec![(j, pairing(k, r))]),
            (H(k), F(r)) => nonzero(vec![(j, -pairing(k, r))]),
            (E(_) | F(_), H(_)) => negate(self.compute_bracket(n, rank, j, i)),
            (E(r), F(s)) if r == s => n
                .coroot(a, r)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(k, c)| (self.h(k), c))
                .collect(),
            (F(r), E(s)) if r == s => negate(self.compute_bracket(n, rank, j, i)),
            _ => {
                let x = &self.root_coords[i];
                let y = &self.root_coords[j];
                let sum: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
                if !a.is_root(&sum) {
                    return vec![];
                }
                let c = n.n(a, x, y);
                let target = match a.positive_index(&sum) {
                    Some(g) => self.e(g),
                    None => {
                        let neg: Vec<i64> = sum.iter().map(|v| -v).collect();
                        self.f(a.positive_index(&neg).expect("root"))
                    }
                };
                nonzero(vec![(target, c)])
            }
        }
    }

    fn verify_antisymmetry(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..=i {
                let mut s: SparseVec = self.table[i][j].iter().map(|&(k, c)| (k, q(c))).collect();
                for &(k, c) in &self.table[j][i] {
                    crate::linalg::add_entry(&mut s, k, &q(c));
                }
                if !s.is_empty() {
                    return Err(Error::Consistency(format!(
                        "bracket not antisymmetric on ({}, {})",
                        self.label_name(i),
                        self.label_name(j)
                    )));
                }
            }
        }
        Ok(())
    }

    fn bracket_vec(&self, i: usize, v: &[(usize, i64)]) -> HashMap<usize, i64> {
        let mut out = HashMap::new();
        for &(j, c) in v {
            for &(k, e) in &self.table[i][j] {
                *out.entry(k).or_insert(0) += c * e;
            }
        }
        out
    }

    /// Checks the Jacobi identity on all basis triples `i < j < k`.
    pub fn verify_jacobi(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let mut total: HashMap<usize, i64> = HashMap::new();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (idx, v) in self.bracket_vec(a, &self.table[b][c]) {
                            *total.entry(idx).or_insert(0) += v;
                        }
                    }
                    if total.values().any(|v| *v != 0) {
                        return Err(Error::Consistency(format!(
                            "Jacobi identity fails on ({}, {}, {})",
                            self.label_name(i),
                            self.label_name(j),
                            self.label_name(k)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_killing(&self) -> Vec<Vec<i64>> {
        let d = self.dim();
        let mut b = vec![vec![0i64; d]; d];
        for i in 0..d {
            for j in 0..d {
                // weights must cancel for a nonzero trace
                if self.root_coords[i]
                    .iter()
                    .zip(&self.root_coords[j])
                    .any(|(x, y)| x + y != 0)
                {
                    continue;
                }
                let mut tr = 0;
                for k in 0..d {
                    for &(l, c) in &self.table[j][k] {
                        for &(m, e) in &self.table[i][l] {
                            if m == k {
                                tr += c * e;
                            }
                        }
                    }
                }
                b[i][j] = tr;
            }
        }
        b
    }

    /// `B([x,y],z) + B(y,[x,z]) = 0` on all basis triples.
    pub fn verify_killing_invariance(&self) -> Result<()> {
        let d = self.dim();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let lhs: i64 = self.table[x][y]
                        .iter()
                        .map(|&(k, c)| c * self.killing[k][z])
                        .sum::<i64>()
                        + self.table[x][z]
                            .iter()
                            .map(|&(k, c)| c * self.killing[y][k])
                            .sum::<i64>();
                    if lhs != 0 {
                        return Err(Error::Consistency(format!(
                            "Killing form not invariant on ({}, {}, {})",
                            self.label_name(x),
                            self.label_name(y),
                            self.label_name(z)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `theta [x, y] = [theta x, theta y]` on all basis pairs, and `theta^2 = 1`.
    pub fn verify_involution(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            let (ti, si) = self.involution_basis(i);
            let (tti, sti) = self.involution_basis(ti);
            if tti != i || si * sti != 1 {
                return Err(Error::Consistency(format!("theta^2 != 1 on {}", self.label_name(i))));
            }
            for j in 0..d {
                let (tj, sj) = self.involution_basis(j);
                let mut lhs: HashMap<usize, i64> = HashMap::new();
                for &(k, c) in &self.table[i][j] {
                    let (tk, sk) = self.involution_basis(k);
                    *lhs.entry(tk).or_insert(0) += c * sk;
                }
                for &(k, c) in &self.table[ti][tj] {
                    *lhs.entry(k).or_insert(0) -= c * si * sj;
                }
                if lhs.values().any(|v| *v != 0) {
                    return Err(Error::Consistency(format!(
                        "theta is not an automorphism on ({}, {})",
                        self.label_name(i),
                        self.label_name(j)
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lie algebra of rank {} and dimension {}", self.rank(), self.dim())
    }
}

fn nonzero(v: Bracket) -> Bracket {
    v.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn negate(v: Bracket) -> Bracket {
    v.into_iter().map(|(k, c)| (k, -c)).collect()
}

/// `N(a, b)` on pairs of positive roots whose sum is a root, keyed by root positions.
struct StructureConstants {
    positive: HashMap<(usize, usize), i64>,
}

impl StructureConstants {
    fn compute(rs: &RootSystem) -> Result<Self> {
        let mut sc = StructureConstants {
            positive: HashMap::new(),
        };
        let np = rs.num_positive();
        for xi in 0..np {
            let target = rs.root(xi).to_vec();
            let mut pairs = Vec::new();
            for a in 0..np {
                let rest: Vec<i64> = target.iter().zip(rs.root(a)).map(|(t, x)| t - x).collect();
                if let Some(b) = rs.positive_index(&rest) {
                    if a < b {
                        pairs.push((a, b));
                    }
                }
            }
            let Some(&(a0, b0)) = pairs.first() else { continue };
            let n0 = string_length(rs, rs.root(a0), rs.root(b0)) + 1;
            sc.positive.insert((a0, b0), n0);
            let xi_norm = q(rs.inner_roots(&target, &target));
            for &(a, b) in &pairs[1..] {
                let (al, be) = (rs.root(a).to_vec(), rs.root(b).to_vec());
                let (al0, be0) = (rs.root(a0).to_vec(), rs.root(b0).to_vec());
                let neg = |v: &[i64]| -> Vec<i64> { v.iter().map(|x| -x).collect() };
                let diff = |x: &[i64], y: &[i64]| -> Vec<i64> { x.iter().zip(y).map(|(p, q)| p - q).collect() };
                let term = |x: &[i64], y: &[i64], u: &[i64], v: &[i64], s: &[i64]| -> Q {
                    let norm = rs.inner_roots(s, s);
                    if !rs.is_root(s) {
                        return Q::zero();
                    }
                    q(sc.n(rs, x, y) * sc.n(rs, u, v)) / q(norm)
                };
                let t1 = term(&be, &neg(&al0), &al, &neg(&be0), &diff(&be, &al0));
                let t2 = term(&neg(&al0), &al, &be, &neg(&be0), &diff(&al, &al0));
                let val = &xi_norm / q(n0) * (t1 + t2);
                if !val.is_integer() {
                    return Err(Error::Consistency(format!(
                        "non-integral structure constant for roots {al:?}, {be:?}"
                    )));
                }
                let v = i64::try_from(val.to_integer()).expect("small constant");
                let p = string_length(rs, &al, &be);
                if v.abs() != p + 1 {
                    return Err(Error::Consistency(format!(
                        "structure constant N({al:?}, {be:?}) = {v}, expected +-{}",
                        p + 1
                    )));
                }
                sc.positive.insert((a, b), v);
            }
        }
        Ok(sc)
    }

    /// `N(x, y)` for arbitrary roots given by coefficients; zero if `x + y` is not a root.
    fn n(&self, rs: &RootSystem, x: &[i64], y: &[i64]) -> i64 {
        let s: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        if !rs.is_root(&s) {
            return 0;
        }
        let pos = |v: &[i64]| v.iter().all(|c| *c >= 0);
        let neg = |v: &[i64]| -> Vec<i64> { v.iter().map(|c| -c).collect() };
        match (pos(x), pos(y)) {
            (true, true) => {
                let a = rs.positive_index(x).expect("root");
                let b = rs.positive_index(y).expect("root");
                if a < b {
                    self.positive[&(a, b)]
                } else {
                    -self.positive[&(b, a)]
                }
            }
            (false, false) => -self.n(rs, &neg(x), &neg(y)),
            (false, true) => -self.n(rs, y, x),
            (true, false) => {
                let g2 = q(rs.inner_roots(&s, &s));
                if pos(&s) {
                    // x + y + (-s) = 0 and N(y, -s) = -N(-y, s)
                    let r = -(g2 / q(rs.inner_roots(x, x))) * q(self.n(rs, &neg(y), &s));
                    to_int(r)
                } else {
                    let r = g2 / q(rs.inner_roots(y, y)) * q(self.n(rs, &neg(&s), x));
                    to_int(r)
                }
            }
        }
    }

    /// Coroot `h_a` in the basis `h_1 .. h_r`.
    fn coroot(&self, rs: &RootSystem, a: usize) -> Vec<i64> {
        let r = rs.root(a);
        let norm = rs.inner_roots(r, r);
        let d = rs.cartan().symmetrizer();
        r.iter()
            .zip(d)
            .map(|(c, di)| {
                let v = 2 * c * di;
                debug_assert_eq!(v % norm, 0);
                v / norm
            })
            .collect()
    }
}

fn to_int(x: Q) -> i64 {
    assert!(x.is_integer(), "non-integral structure constant");
    i64::try_from(x.to_integer()).expect("small constant")
}

/// Largest `p` with `y - p x` a root.
fn string_length(rs: &RootSystem, x: &[i64], y: &[i64]) -> i64 {
    let mut p = 0;
    let mut v = y.to_vec();
    loop {
        for (a, b) in v.iter_mut().zip(x) {
            *a -= b;
        }
        if rs.is_root(&v) {
            p += 1;
        } else {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_relations() {
        let g = LieAlgebra::of_type('A', 1).unwrap();
        assert_eq!(g.dim(), 3);
        let (e, f, h) = (g.e(0), g.f(0), g.h(0));
        assert_eq!(g.bracket_basis(e, f), &vec![(h, 1)]);
        assert_eq!(g.bracket_basis(h, e), &vec![(e, 2)]);
        assert_eq!(g.bracket_basis(h, f), &vec![(f, -2)]);
        assert_eq!(g.killing_basis(h, h), 8);
    }

    #[test]
    fn dimensions() {
        assert_eq!(LieAlgebra::of_type('A', 2).unwrap().dim(), 8);
        assert_eq!(LieAlgebra::of_type('A', 4).unwrap().dim(), 24);
        assert_eq!(LieAlgebra::of_type('B', 2).unwrap().dim(), 10);
        assert_eq!(LieAlgebra::of_type('G', 2).unwrap().dim(), 14);
    }

    #[test]
    fn jacobi_and_invariants_all_small_types() {
        for (l, r) in [('A', 3), ('B', 3), ('C', 3), ('D', 4), ('G', 2)] {
            let g = LieAlgebra::of_type(l, r).unwrap();
            g.verify_killing_invariance().unwrap();
            g.verify_involution().unwrap();
        }
    }

    #[test]
    fn f4_builds() {
        let g = LieAlgebra::of_type('F', 4).unwrap();
        assert_eq!(g.dim(), 52);
    }

    /// `sl(3)` matrix realisation: `e_{a1} = E12`, `e_{a2} = E23`, so
    /// `[E12, E23] = E13` and the bracket of the simple root vectors is `+e_{a1+a2}`.
    #[test]
    fn a2_bracket_matches_matrix_oracle() {
        let g = LieAlgebra::of_type('A', 2).unwrap();
        let e1 = g.e(0);
        let e2 = g.e(1);
        let e12 = g.e(2);
        assert_eq!(g.rs.root(2), &[1, 1]);
        assert_eq!(g.bracket_basis(e1, e2), &vec![(e12, 1)]);
        // the matrix realisation also gives [E21, E32] = -E31
        assert_eq!(g.bracket_basis(g.f(0), g.f(1)), &vec![(g.f(2), -1)]);
    }

    #[test]
    fn killing_form_properties() {
        let g = LieAlgebra::of_type('A', 2).unwrap();
        let d = g.dim();
        for i in 0..d {
            for j in 0..d {
                assert_eq!(g.killing_basis(i, j), g.killing_basis(j, i));
            }
        }
        // sl(n+1): B(x, y) = 2(n+1) tr(xy), tr(e_a f_a) = 1
        for a in 0..3 {
            assert_eq!(g.pairing(a), 6);
        }
        assert_eq!(g.killing_basis(g.e(0), g.e(1)), 0);
    }

    #[test]
    fn ad_matrix_properties() {
        let g = LieAlgebra::of_type('A', 2).unwrap();
        let d = g.dim();
        assert!(g.ad_matrix(&Element::zero(d)).unwrap().is_zero());
        let h1 = g.ad_matrix(&Element::basis(d, g.h(0))).unwrap();
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    assert!(h1.get(i, j).is_zero());
                }
            }
            let expected = g.weight(i).0[0];
            assert_eq!(h1.get(i, i), &q(expected));
        }
        for i in 0..d {
            let m = g.ad_matrix(&Element::basis(d, i)).unwrap();
            let tr: Q = (0..d).map(|k| m.get(k, k).clone()).sum();
            assert!(tr.is_zero());
        }
        // ad is a homomorphism
        for i in 0..d {
            for j in 0..d {
                let x = Element::basis(d, i);
                let y = Element::basis(d, j);
                let lhs = g.ad_matrix(&g.bracket(&x, &y).unwrap()).unwrap();
                let (ax, ay) = (g.ad_matrix(&x).unwrap(), g.ad_matrix(&y).unwrap());
                let rhs = ax.mul(&ay);
                let rhs2 = ay.mul(&ax);
                for r in 0..d {
                    for c in 0..d {
                        assert_eq!(lhs.get(r, c), &(rhs.get(r, c) - rhs2.get(r, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn theta_form_positive_definite() {
        for (l, r) in [('A', 2), ('A', 3), ('B', 2), ('G', 2)] {
            let g = LieAlgebra::of_type(l, r).unwrap();
            let m = g.theta_form();
            assert!(m.leading_minors().iter().all(|x| x > &Q::zero()), "{l}{r}");
        }
    }

    #[test]
    fn bracket_errors_and_alternation() {
        let g = LieAlgebra::of_type('A', 2).unwrap();
        let bad = Element::zero(3);
        assert!(matches!(g.bracket(&bad, &bad), Err(Error::DimensionMismatch { .. })));
        let x = Element {
            coords: (0..8).map(|i| q(i as i64 - 3)).collect(),
        };
        assert!(g.bracket(&x, &x).unwrap().is_zero());
    }
}
