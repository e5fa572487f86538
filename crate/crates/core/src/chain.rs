//! Chain spaces `Λ^k q_+ ⊗ g` and the maps between them.
//!
//! A basis vector is a pair `(S, b)`: `S` a `k`-subset of positions in the basis of
//! `q_+` and `b` a basis vector of `g`. Subsets are listed in colex order; the index of
//! `(S, b)` is `rank(S) * dim g + b`.
//!
//! Through the Killing form, `(S, b)` is also the map `Λ^k q_- -> g` sending
//! `(X_{s_1}, ..., X_{s_k})` to `b_b` and every other sorted tuple of dual basis vectors
//! to zero. Here `X_s = f_a / B(e_a, f_a)` when `Z_s = e_a`, so `B(Z_s, X_t) = δ_st`.
//! Homogeneity is the degree of the value minus the degrees of the entries, which is
//! the same as the degree of `(S, b)` as an element of `Λ^k q_+ ⊗ g`.
//!
//! Sign conventions (`i < j` positions in `S`, counted from one):
//!
//! * `∂*(Z_1∧…∧Z_k ⊗ v) = Σ (-1)^i (…Ẑ_i…) ⊗ [Z_i, v] + Σ (-1)^{i+j} [Z_i, Z_j] ∧ (…Ẑ_i…Ẑ_j…) ⊗ v`
//! * `∂φ(X_0, …, X_k) = Σ (-1)^i [X_i, φ(…X̂_i…)] + Σ (-1)^{i+j} φ([X_i, X_j], …X̂_i…X̂_j…)`,
//!   positions counted from zero.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grading::Parabolic;
use crate::lie_algebra::LieAlgebra;
use crate::linalg::{add_entry, SparseMatrix, SparseVec};
use crate::scalar::{frac, q, Q};

/// The chain space `Λ^k q_+ ⊗ g` with its basis bookkeeping.
#[derive(Clone, Debug)]
pub struct ChainSpace {
    k: usize,
    dim_g: usize,
    plus: Vec<usize>,
    subsets: Vec<Vec<usize>>,
    subset_index: HashMap<Vec<usize>, usize>,
    subset_weight: Vec<Vec<i64>>,
    g_weight: Vec<Vec<i64>>,
    crossed: Vec<bool>,
}

impl ChainSpace {
    pub fn new(pd: &Parabolic, k: usize) -> Result<Self> {
        let m = pd.dim_plus();
        if k > m {
            return Err(Error::DegreeOutOfRange { degree: k, max: m });
        }
        Ok(Self::with_degree(pd, k))
    }

    /// Like `new`, but a degree above `dim q_+` gives the zero space.
    pub(crate) fn with_degree(pd: &Parabolic, k: usize) -> Self {
        let alg = pd.algebra();
        let plus = pd.plus();
        let m = plus.len();
        let subsets = colex_subsets(m, k);
        let subset_index = subsets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let rank = alg.rank();
        let subset_weight = subsets
            .iter()
            .map(|s| {
                let mut w = vec![0i64; rank];
                for &p in s {
                    for (x, c) in w.iter_mut().zip(alg.root_coords(plus[p])) {
                        *x += c;
                    }
                }
                w
            })
            .collect();
        let g_weight = (0..alg.dim()).map(|b| alg.root_coords(b).to_vec()).collect();
        ChainSpace {
            k,
            dim_g: alg.dim(),
            plus,
            subsets,
            subset_index,
            subset_weight,
            g_weight,
            crossed: (0..rank).map(|i| pd.is_crossed(i)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.subsets.len() * self.dim_g
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    /// Basis of `q_+` as indices into the basis of `g`.
    pub fn plus(&self) -> &[usize] {
        &self.plus
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn subset(&self, s: usize) -> &[usize] {
        &self.subsets[s]
    }

    pub fn subset_position(&self, s: &[usize]) -> Option<usize> {
        self.subset_index.get(s).copied()
    }

    pub fn index(&self, subset: usize, b: usize) -> usize {
        subset * self.dim_g + b
    }

    /// Index of `(S, b)` for a sorted subset `S`.
    pub fn index_of(&self, s: &[usize], b: usize) -> Option<usize> {
        self.subset_position(s).map(|p| self.index(p, b))
    }

    /// `(subset position, g index)` of a basis vector.
    pub fn split(&self, i: usize) -> (usize, usize) {
        (i / self.dim_g, i % self.dim_g)
    }

    /// Weight of a basis vector in simple-root coordinates.
    pub fn weight(&self, i: usize) -> Vec<i64> {
        let (s, b) = self.split(i);
        self.subset_weight[s]
            .iter()
            .zip(&self.g_weight[b])
            .map(|(x, y)| x + y)
            .collect()
    }

    /// Grading-element eigenvalue of a basis vector.
    pub fn homogeneity(&self, i: usize) -> i64 {
        self.weight(i)
            .iter()
            .zip(&self.crossed)
            .filter(|(_, c)| **c)
            .map(|(x, _)| x)
            .sum()
    }

    /// Basis indices grouped by weight, in increasing weight order.
    pub fn weight_blocks(&self) -> BTreeMap<Vec<i64>, Vec<usize>> {
        let mut out: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for i in 0..self.dim() {
            out.entry(self.weight(i)).or_default().push(i);
        }
        out
    }

    /// Human-readable name of a basis vector, e.g. `e[1,0]∧e[1,1]⊗h1`.
    pub fn basis_name(&self, alg: &LieAlgebra, i: usize) -> String {
        let (s, b) = self.split(i);
        let parts: Vec<String> = self.subsets[s].iter().map(|&p| alg.label_name(self.plus[p])).collect();
        if parts.is_empty() {
            alg.label_name(b)
        } else {
            format!("{}⊗{}", parts.join("∧"), alg.label_name(b))
        }
    }
}

/// `k`-subsets of `0..m`, each sorted, listed in colex order.
pub fn colex_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..m {
            cur.push(x);
            rec(x + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// Sorts a sequence of distinct positions, returning the sign of the permutation.
/// `None` if an entry repeats.
pub fn sort_with_sign(seq: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = seq.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some((v, sign))
}

/// A matrix between two chain spaces.
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub domain: Arc<ChainSpace>,
    pub codomain: Arc<ChainSpace>,
    pub matrix: SparseMatrix,
}

impl LinearMap {
    pub fn new(domain: Arc<ChainSpace>, codomain: Arc<ChainSpace>, matrix: SparseMatrix) -> Result<Self> {
        if matrix.ncols() != domain.dim() {
            return Err(Error::DimensionMismatch {
                expected: domain.dim(),
                got: matrix.ncols(),
            });
        }
        if matrix.nrows() != codomain.dim() {
            return Err(Error::DimensionMismatch {
                expected: codomain.dim(),
                got: matrix.nrows(),
            });
        }
        Ok(LinearMap {
            domain,
            codomain,
            matrix,
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.matrix.apply(v)
    }
}

fn build_columns(dim: usize, f: impl Fn(usize) -> SparseVec + Sync + Send) -> Vec<SparseVec> {
    (0..dim).into_par_iter().map(f).collect()
}

/// `∂*: C^k -> C^{k-1}`.
pub fn codifferential(pd: &Parabolic, k: usize) -> Result<LinearMap> {
    if k == 0 {
        return Err(Error::DegreeOutOfRange {
            degree: 0,
            max: pd.dim_plus(),
        });
    }
    let dom = Arc::new(ChainSpace::new(pd, k)?);
    let cod = Arc::new(ChainSpace::new(pd, k - 1)?);
    codifferential_between(pd, dom, cod)
}

pub(crate) fn codifferential_between(pd: &Parabolic, dom: Arc<ChainSpace>, cod: Arc<ChainSpace>) -> Result<LinearMap> {
    let alg = pd.algebra();
    let plus = dom.plus().to_vec();
    let cols = build_columns(dom.dim(), |idx| {
        let (sp, b) = dom.split(idx);
        let s = dom.subset(sp);
        let mut col = SparseVec::new();
        for (i0, &si) in s.iter().enumerate() {
            let sign = if i0 % 2 == 0 { -1 } else { 1 };
            let rest: Vec<usize> = s.iter().copied().filter(|&x| x != si).collect();
            let r = cod.subset_position(&rest).expect("subset");
            for &(c, v) in alg.bracket_basis(plus[si], b) {
                add_entry(&mut col, cod.index(r, c), &q(sign * v));
            }
        }
        for i0 in 0..s.len() {
            for j0 in i0 + 1..s.len() {
                let sign = if (i0 + j0) % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i0 && t != j0)
                    .map(|(_, &x)| x)
                    .collect();
                for &(c, v) in alg.bracket_basis(plus[s[i0]], plus[s[j0]]) {
                    let p = pd.plus_position(c).expect("q_+ is a subalgebra");
                    let mut seq = vec![p];
                    seq.extend(&rest);
                    if let Some((sorted, sg)) = sort_with_sign(&seq) {
                        let r = cod.subset_position(&sorted).expect("subset");
                        add_entry(&mut col, cod.index(r, b), &q(sign * sg * v));
                    }
                }
            }
        }
        col
    });
    LinearMap::new(dom.clone(), cod.clone(), SparseMatrix::from_columns(cod.dim(), cols))
}

/// For each position `u` of `q_+`: pairs `t < t'` with `[f_t, f_t'] = c f_u`.
fn lowering_decompositions(pd: &Parabolic) -> Vec<Vec<(usize, usize, i64)>> {
    let alg = pd.algebra();
    let plus = pd.plus();
    let m = plus.len();
    let mut out = vec![Vec::new(); m];
    let pos_of_f: HashMap<usize, usize> = plus.iter().enumerate().map(|(p, &b)| (dual_index(alg, b), p)).collect();
    for t in 0..m {
        for t2 in t + 1..m {
            for &(c, v) in alg.bracket_basis(dual_index(alg, plus[t]), dual_index(alg, plus[t2])) {
                let u = pos_of_f[&c];
                out[u].push((t, t2, v));
            }
        }
    }
    out
}

/// Index of `f_a` for the basis vector `e_a`.
pub(crate) fn dual_index(alg: &LieAlgebra, e: usize) -> usize {
    match alg.label(e) {
        crate::lie_algebra::BasisLabel::E(a) => alg.f(a),
        _ => panic!("not a positive root vector"),
    }
}

/// `B(e_a, f_a)` for every position of `q_+`.
pub(crate) fn plus_pairings(pd: &Parabolic) -> Vec<i64> {
    let alg = pd.algebra();
    pd.plus()
        .iter()
        .map(|&b| alg.killing_basis(b, dual_index(alg, b)))
        .collect()
}

/// `∂: C^k -> C^{k+1}`.
pub fn differential(pd: &Parabolic, k: usize) -> Result<LinearMap> {
    let dom = Arc::new(ChainSpace::new(pd, k)?);
    let cod = Arc::new(ChainSpace::new(pd, k + 1)?);
    differential_between(pd, dom, cod)
}

pub(crate) fn differential_between(pd: &Parabolic, dom: Arc<ChainSpace>, cod: Arc<ChainSpace>) -> Result<LinearMap> {
    let alg = pd.algebra();
    let plus = dom.plus().to_vec();
    let m = plus.len();
    let pair = plus_pairings(pd);
    let decomp = lowering_decompositions(pd);
    let cols = build_columns(dom.dim(), |idx| {
        let (sp, b) = dom.split(idx);
        let s = dom.subset(sp);
        let mut col = SparseVec::new();
        // [X_t, φ(...)]
        for t in (0..m).filter(|t| !s.contains(t)) {
            let mut tset = s.to_vec();
            tset.push(t);
            tset.sort_unstable();
            let i0 = tset.iter().position(|&x| x == t).expect("inserted");
            let sign = if i0 % 2 == 0 { 1 } else { -1 };
            let r = cod.subset_position(&tset).expect("subset");
            for &(c, v) in alg.bracket_basis(dual_index(alg, plus[t]), b) {
                add_entry(&mut col, cod.index(r, c), &frac(sign * v, pair[t]));
            }
        }
        // φ([X_t, X_t'], ...)
        for (pu, &u) in s.iter().enumerate() {
            let rest: Vec<usize> = s.iter().copied().filter(|&x| x != u).collect();
            let su = if pu % 2 == 0 { 1 } else { -1 };
            for &(t, t2, c) in &decomp[u] {
                if rest.contains(&t) || rest.contains(&t2) {
                    continue;
                }
                let mut tset = rest.clone();
                tset.push(t);
                tset.push(t2);
                tset.sort_unstable();
                let i0 = tset.iter().position(|&x| x == t).expect("t");
                let j0 = tset.iter().position(|&x| x == t2).expect("t2");
                let sign = if (i0 + j0) % 2 == 0 { 1 } else { -1 };
                let r = cod.subset_position(&tset).expect("subset");
                let coeff = frac(sign * su * c * pair[u], pair[t] * pair[t2]);
                add_entry(&mut col, cod.index(r, b), &coeff);
            }
        }
        col
    });
    LinearMap::new(dom.clone(), cod.clone(), SparseMatrix::from_columns(cod.dim(), cols))
}

/// Evaluates `phi` in the map picture on basis vectors `entries` of `q_-`.
///
/// Each entry must be some `f_a` with `e_a` in `q_+`. The result is a vector of `g`.
pub fn evaluate(pd: &Parabolic, space: &ChainSpace, phi: &SparseVec, entries: &[usize]) -> Result<SparseVec> {
    let alg = pd.algebra();
    if entries.len() != space.degree() {
        return Err(Error::Precondition(format!(
            "{} entries for a map of degree {}",
            entries.len(),
            space.degree()
        )));
    }
    let pairings = plus_pairings(pd);
    let mut positions = Vec::with_capacity(entries.len());
    let mut scale = 1i64;
    for &x in entries {
        let p = match alg.label(x) {
            crate::lie_algebra::BasisLabel::F(a) => pd.plus_position(alg.e(a)),
            _ => None,
        };
        let p = p.ok_or_else(|| Error::Precondition(format!("{} is not in q_-", alg.label_name(x))))?;
        // f_a = B(e_a, f_a) X_a
        scale *= pairings[p];
        positions.push(p);
    }
    let mut out = SparseVec::new();
    let Some((sorted, sign)) = sort_with_sign(&positions) else {
        return Ok(out);
    };
    let r = space.subset_position(&sorted).expect("subset");
    let c = q(sign * scale);
    for b in 0..space.dim_g() {
        if let Some(v) = phi.get(&space.index(r, b)) {
            add_entry(&mut out, b, &(v * &c));
        }
    }
    Ok(out)
}

/// The natural action of a vector of `q = q_0 + q_+` on `C^k`.
pub fn chain_action(pd: &Parabolic, space: &Arc<ChainSpace>, x: usize) -> Result<SparseMatrix> {
    if pd.degree(x) < 0 {
        return Err(Error::Precondition(format!(
            "{} does not preserve the chain space",
            pd.algebra().label_name(x)
        )));
    }
    let alg = pd.algebra();
    let plus = space.plus().to_vec();
    let cols = build_columns(space.dim(), |idx| {
        let (sp, b) = space.split(idx);
        let s = space.subset(sp);
        let mut col = SparseVec::new();
        for (i0, &si) in s.iter().enumerate() {
            for &(c, v) in alg.bracket_basis(x, plus[si]) {
                let p = pd.plus_position(c).expect("q preserves q_+");
                let mut seq = s.to_vec();
                seq[i0] = p;
                if let Some((sorted, sg)) = sort_with_sign(&seq) {
                    let r = space.subset_position(&sorted).expect("subset");
                    add_entry(&mut col, space.index(r, b), &q(sg * v));
                }
            }
        }
        for &(c, v) in alg.bracket_basis(x, b) {
            add_entry(&mut col, space.index(sp, c), &q(v));
        }
        col
    });
    Ok(SparseMatrix::from_columns(space.dim(), cols))
}

/// The complex around one degree: `∂*_k`, `∂*_{k+1}`, `∂_{k-1}`, `∂_k` where defined.
#[derive(Clone, Debug)]
pub struct LocalComplex {
    pub k: usize,
    pub space: Arc<ChainSpace>,
    pub below: Option<Arc<ChainSpace>>,
    pub above: Option<Arc<ChainSpace>>,
    /// `∂*: C^k -> C^{k-1}`
    pub dstar_k: Option<LinearMap>,
    /// `∂*: C^{k+1} -> C^k`
    pub dstar_above: Option<LinearMap>,
    /// `∂: C^{k-1} -> C^k`
    pub d_below: Option<LinearMap>,
    /// `∂: C^k -> C^{k+1}`
    pub d_k: Option<LinearMap>,
}

impl LocalComplex {
    pub fn new(pd: &Parabolic, k: usize) -> Result<Self> {
        let m = pd.dim_plus();
        let space = Arc::new(ChainSpace::new(pd, k)?);
        let below = if k > 0 {
            Some(Arc::new(ChainSpace::new(pd, k - 1)?))
        } else {
            None
        };
        let above = if k < m {
            Some(Arc::new(ChainSpace::new(pd, k + 1)?))
        } else {
            None
        };
        let dstar_k = match &below {
            Some(b) => Some(codifferential_between(pd, space.clone(), b.clone())?),
            None => None,
        };
        let dstar_above = match &above {
            Some(a) => Some(codifferential_between(pd, a.clone(), space.clone())?),
            None => None,
        };
        let d_below = match &below {
            Some(b) => Some(differential_between(pd, b.clone(), space.clone())?),
            None => None,
        };
        let d_k = match &above {
            Some(a) => Some(differential_between(pd, space.clone(), a.clone())?),
            None => None,
        };
        Ok(LocalComplex {
            k,
            space,
            below,
            above,
            dstar_k,
            dstar_above,
            d_below,
            d_k,
        })
    }

    /// `□ = ∂∂* + ∂*∂` on `C^k`.
    pub fn laplacian(&self) -> LinearMap {
        let n = self.space.dim();
        let mut m = SparseMatrix::zeros(n, n);
        if let (Some(d), Some(ds)) = (&self.d_below, &self.dstar_k) {
            m = m.add(&d.matrix.mul(&ds.matrix));
        }
        if let (Some(ds), Some(d)) = (&self.dstar_above, &self.d_k) {
            m = m.add(&ds.matrix.mul(&d.matrix));
        }
        LinearMap {
            domain: self.space.clone(),
            codomain: self.space.clone(),
            matrix: m,
        }
    }

    /// `∂*∂* = 0` and `∂∂ = 0` through degree `k`.
    pub fn verify_squares(&self) -> Result<()> {
        if let (Some(a), Some(b)) = (&self.dstar_k, &self.dstar_above) {
            if !a.matrix.mul(&b.matrix).is_zero() {
                return Err(Error::Consistency(format!("∂*∂* != 0 at degree {}", self.k + 1)));
            }
        }
        if let (Some(a), Some(b)) = (&self.d_k, &self.d_below) {
            if !a.matrix.mul(&b.matrix).is_zero() {
                return Err(Error::Consistency(format!("∂∂ != 0 at degree {}", self.k - 1)));
            }
        }
        Ok(())
    }
}

/// `□` on `C^k`.
pub fn laplacian(pd: &Parabolic, k: usize) -> Result<LinearMap> {
    Ok(LocalComplex::new(pd, k)?.laplacian())
}

/// True if a square map on `C^k` has no entries between different homogeneities.
pub fn preserves_homogeneity(map: &LinearMap) -> bool {
    let dom = &map.domain;
    let cod = &map.codomain;
    map.matrix
        .columns()
        .iter()
        .enumerate()
        .all(|(j, col)| col.keys().all(|&i| cod.homogeneity(i) == dom.homogeneity(j)))
}

/// True if every entry of the map joins basis vectors of equal weight.
pub fn preserves_weight(map: &LinearMap) -> bool {
    let dom = &map.domain;
    let cod = &map.codomain;
    map.matrix
        .columns()
        .iter()
        .enumerate()
        .all(|(j, col)| col.keys().all(|&i| cod.weight(i) == dom.weight(j)))
}

/// Sum of a sparse vector's entries, used in tests as a cheap fingerprint.
pub fn entry_sum(v: &SparseVec) -> Q {
    v.values().fold(Q::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_algebra::LieAlgebra;

    fn pd(n: usize, nodes: &[usize]) -> Parabolic {
        Parabolic::new(Arc::new(LieAlgebra::of_type('A', n).unwrap()), nodes).unwrap()
    }

    #[test]
    fn chain_dimensions() {
        let p = pd(2, &[1, 2]);
        assert_eq!(ChainSpace::new(&p, 0).unwrap().dim(), 8);
        assert_eq!(ChainSpace::new(&p, 2).unwrap().dim(), 24);
        assert!(matches!(ChainSpace::new(&p, 4), Err(Error::DegreeOutOfRange { .. })));
        let p = pd(4, &[1, 4]);
        assert_eq!(p.dim_plus(), 7);
        assert_eq!(ChainSpace::new(&p, 2).unwrap().dim(), 504);
    }

    #[test]
    fn colex_order() {
        let s = colex_subsets(4, 2);
        assert_eq!(
            s,
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(colex_subsets(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn sort_sign() {
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], -1)));
        assert_eq!(sort_with_sign(&[1, 1]), None);
    }

    #[test]
    fn squares_vanish() {
        for (n, nodes) in [
            (2, vec![1]),
            (2, vec![1, 2]),
            (3, vec![1, 3]),
            (3, vec![1, 2, 3]),
            (4, vec![1, 2]),
        ] {
            let p = pd(n, &nodes);
            for k in 0..=p.dim_plus() {
                LocalComplex::new(&p, k).unwrap().verify_squares().unwrap();
            }
        }
    }

    #[test]
    fn laplacian_preserves_homogeneity_and_weight() {
        let p = pd(3, &[1, 3]);
        for k in 0..=3 {
            let l = laplacian(&p, k).unwrap();
            assert!(preserves_homogeneity(&l));
            assert!(preserves_weight(&l));
        }
    }

    #[test]
    fn codifferential_degree_zero_rejected() {
        let p = pd(2, &[1]);
        assert!(codifferential(&p, 0).is_err());
    }

    #[test]
    fn codifferential_on_centralizing_pair() {
        // Z = e_θ commutes with itself, so ∂*(Z ⊗ Z) = 0
        let p = pd(2, &[1, 2]);
        let ds = codifferential(&p, 1).unwrap();
        let alg = p.algebra();
        let theta = alg.e(2);
        let z = p.plus_position(theta).unwrap();
        let idx = ds.domain.index_of(&[z], theta).unwrap();
        assert!(ds.matrix.column(idx).is_empty());
    }

    #[test]
    fn differential_degree_zero_kills_centralizer() {
        // ∂v = (X -> [X, v]); its kernel is the centralizer of q_- in g
        let p = pd(3, &[1]);
        let d = differential(&p, 0).unwrap();
        let alg = p.algebra();
        let minus = p.minus();
        for b in 0..alg.dim() {
            let centralizes = minus.iter().all(|&x| alg.bracket_basis(x, b).is_empty());
            assert_eq!(d.matrix.column(b).is_empty(), centralizes, "{}", alg.label_name(b));
        }
    }

    #[test]
    fn codifferential_is_q_equivariant() {
        let p = pd(3, &[1, 3]);
        let alg = p.algebra().clone();
        for k in 1..=3 {
            let ds = codifferential(&p, k).unwrap();
            for x in (0..alg.dim()).filter(|&x| p.degree(x) >= 0) {
                let top = chain_action(&p, &ds.domain, x).unwrap();
                let bottom = chain_action(&p, &ds.codomain, x).unwrap();
                assert_eq!(
                    bottom.mul(&ds.matrix),
                    ds.matrix.mul(&top),
                    "k={k} x={}",
                    alg.label_name(x)
                );
            }
        }
    }

    #[test]
    fn differential_equivariance_only_under_q0() {
        let p = pd(3, &[1, 3]);
        let alg = p.algebra().clone();
        let d = differential(&p, 1).unwrap();
        let commutes = |x: usize| {
            let top = chain_action(&p, &d.codomain, x).unwrap();
            let bottom = chain_action(&p, &d.domain, x).unwrap();
            top.mul(&d.matrix) == d.matrix.mul(&bottom)
        };
        for x in p.zero_part() {
            assert!(commutes(x), "{}", alg.label_name(x));
        }
        assert!(p.plus().into_iter().any(|x| !commutes(x)));
    }
}
