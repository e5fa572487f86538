//! Parabolic subalgebras from crossed Dynkin nodes and their gradings.
//!
//! Node sets are one-based, matching the usual left-to-right numbering of a Dynkin
//! diagram. The degree of a root space is its height over the crossed nodes.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie_algebra::{BasisLabel, Element, LieAlgebra};
use crate::linalg::{DenseMatrix, Echelon, SparseVec};
use crate::scalar::{q, Q};

/// A standard parabolic subalgebra and the grading it induces.
#[derive(Clone, Debug)]
pub struct Parabolic {
    alg: Arc<LieAlgebra>,
    nodes: Vec<usize>,
    crossed: Vec<bool>,
    depth: i64,
    degree: Vec<i64>,
    graded: BTreeMap<i64, Vec<usize>>,
    grading_element: Element,
    plus_pos: Vec<Option<usize>>,
}

impl Parabolic {
    /// Builds the grading for the crossed node set `nodes` (one-based) and checks it.
    pub fn new(alg: Arc<LieAlgebra>, nodes: &[usize]) -> Result<Self> {
        let rank = alg.rank();
        let mut sorted = nodes.to_vec();
        sorted.sort_unstable();
        if sorted.is_empty() {
            return Err(Error::InvalidNodes {
                nodes: sorted,
                reason: "no crossed nodes".into(),
            });
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidNodes {
                nodes: sorted,
                reason: "repeated node".into(),
            });
        }
        if let Some(&bad) = sorted.iter().find(|&&n| n == 0 || n > rank) {
            return Err(Error::InvalidNodes {
                nodes: sorted.clone(),
                reason: format!("node {bad} outside 1..={rank}"),
            });
        }
        let mut crossed = vec![false; rank];
        for &n in &sorted {
            crossed[n - 1] = true;
        }
        let d = alg.dim();
        let degree: Vec<i64> = (0..d).map(|i| height_over(&crossed, alg.root_coords(i))).collect();
        let depth = degree.iter().copied().max().unwrap_or(0);
        let mut graded: BTreeMap<i64, Vec<usize>> = (-depth..=depth).map(|k| (k, Vec::new())).collect();
        for (i, &k) in degree.iter().enumerate() {
            graded.get_mut(&k).expect("degree in range").push(i);
        }
        let mut plus_pos = vec![None; d];
        let mut pos = 0;
        for i in 0..d {
            if degree[i] > 0 {
                plus_pos[i] = Some(pos);
                pos += 1;
            }
        }
        let grading_element = solve_grading_element(&alg, &crossed)?;
        let p = Parabolic {
            alg,
            nodes: sorted,
            crossed,
            depth,
            degree,
            graded,
            grading_element,
            plus_pos,
        };
        p.verify()?;
        Ok(p)
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.alg
    }

    /// Crossed nodes, one-based and sorted.
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// True if the zero-based node `i` is crossed.
    pub fn is_crossed(&self, i: usize) -> bool {
        self.crossed[i]
    }

    /// Uncrossed nodes, zero-based.
    pub fn uncrossed(&self) -> Vec<usize> {
        (0..self.crossed.len()).filter(|&i| !self.crossed[i]).collect()
    }

    pub fn depth(&self) -> i64 {
        self.depth
    }

    /// Degree of basis vector `i`.
    pub fn degree(&self, i: usize) -> i64 {
        self.degree[i]
    }

    /// Degree of a weight given in simple-root coordinates.
    pub fn height(&self, root_coords: &[i64]) -> i64 {
        height_over(&self.crossed, root_coords)
    }

    /// Basis of `g_i` (empty outside `-k..=k`).
    pub fn graded(&self, i: i64) -> &[usize] {
        self.graded.get(&i).map_or(&[], |v| v.as_slice())
    }

    /// `dim g_i` for `i = -k ..= k`.
    pub fn graded_dims(&self) -> Vec<usize> {
        self.graded.values().map(|v| v.len()).collect()
    }

    /// Basis of the filtration component `g^i = g_i + ... + g_k`.
    pub fn filtration(&self, i: i64) -> Vec<usize> {
        (0..self.alg.dim()).filter(|&b| self.degree[b] >= i).collect()
    }

    /// Basis of the positive part, in basis order.
    pub fn plus(&self) -> Vec<usize> {
        (0..self.alg.dim()).filter(|&b| self.degree[b] > 0).collect()
    }

    pub fn minus(&self) -> Vec<usize> {
        (0..self.alg.dim()).filter(|&b| self.degree[b] < 0).collect()
    }

    pub fn zero_part(&self) -> Vec<usize> {
        self.graded(0).to_vec()
    }

    /// Basis of the parabolic itself (degrees `>= 0`).
    pub fn parabolic(&self) -> Vec<usize> {
        self.filtration(0)
    }

    pub fn in_parabolic(&self, b: usize) -> bool {
        self.degree[b] >= 0
    }

    pub fn dim_plus(&self) -> usize {
        self.plus_pos.iter().filter(|p| p.is_some()).count()
    }

    /// Position of basis vector `b` among the positive part, if it lies there.
    pub fn plus_position(&self, b: usize) -> Option<usize> {
        self.plus_pos[b]
    }

    pub fn grading_element(&self) -> &Element {
        &self.grading_element
    }

    /// Runs every structural check on the grading.
    pub fn verify(&self) -> Result<()> {
        self.verify_bracket_compatibility()?;
        self.verify_symmetric_dims()?;
        self.verify_grading_element()?;
        self.verify_generation()?;
        self.verify_filtration_invariance()
    }

    fn verify_bracket_compatibility(&self) -> Result<()> {
        let d = self.alg.dim();
        for i in 0..d {
            for j in 0..d {
                let target = self.degree[i] + self.degree[j];
                for &(k, _) in self.alg.bracket_basis(i, j) {
                    if self.degree[k] != target {
                        return Err(Error::Consistency(format!(
                            "[{}, {}] leaves degree {target}",
                            self.alg.label_name(i),
                            self.alg.label_name(j)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn verify_symmetric_dims(&self) -> Result<()> {
        for i in 1..=self.depth {
            if self.graded(i).len() != self.graded(-i).len() {
                return Err(Error::Consistency(format!("dim g_{i} != dim g_-{i}")));
            }
        }
        Ok(())
    }

    fn verify_grading_element(&self) -> Result<()> {
        let d = self.alg.dim();
        for (i, c) in self.grading_element.coords.iter().enumerate() {
            if !c.is_zero() && self.degree[i] != 0 {
                return Err(Error::Consistency("grading element outside g_0".into()));
            }
        }
        let ad = self.alg.ad_matrix(&self.grading_element)?;
        for j in 0..d {
            for i in 0..d {
                let expected = if i == j { q(self.degree[j]) } else { Q::zero() };
                if ad.get(i, j) != &expected {
                    return Err(Error::Consistency(format!(
                        "grading element does not act by {} on {}",
                        self.degree[j],
                        self.alg.label_name(j)
                    )));
                }
            }
        }
        Ok(())
    }

    fn verify_generation(&self) -> Result<()> {
        let g1: Vec<SparseVec> = self.graded(1).iter().map(|&b| unit(b)).collect();
        let mut current = g1.clone();
        for i in 2..=self.depth {
            let mut span = Echelon::new();
            for x in &g1 {
                for y in &current {
                    span.insert(&self.alg.bracket_sparse(x, y));
                }
            }
            if span.dim() != self.graded(i).len() {
                return Err(Error::Consistency(format!("g_1 does not generate g_{i}")));
            }
            current = span.basis().to_vec();
        }
        Ok(())
    }

    fn verify_filtration_invariance(&self) -> Result<()> {
        let d = self.alg.dim();
        for x in (0..d).filter(|&x| self.degree[x] >= 0) {
            for y in 0..d {
                for &(k, _) in self.alg.bracket_basis(x, y) {
                    if self.degree[k] < self.degree[y] {
                        return Err(Error::Consistency(format!(
                            "filtration not preserved by {}",
                            self.alg.label_name(x)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Splits the degree `-1` basis into the part with zero coefficient on every
    /// `inner` node (`left`) and the rest (`right`). `inner` is one-based and must be
    /// a proper subset of the crossed nodes.
    pub fn split_q1(&self, inner: &[usize]) -> Result<Q1Split> {
        self.split_degree(-1, inner)
    }

    /// The split used for reports: with exactly two crossed nodes, the larger one is inner.
    pub fn default_split(&self) -> Option<Q1Split> {
        match self.nodes.as_slice() {
            [_, b] => self.split_q1(&[*b]).ok(),
            _ => None,
        }
    }

    /// The same split applied to degree `i`.
    pub fn split_degree(&self, i: i64, inner: &[usize]) -> Result<Q1Split> {
        if inner.is_empty() || inner.iter().any(|n| !self.nodes.contains(n)) {
            return Err(Error::NotNested {
                inner: inner.to_vec(),
                outer: self.nodes.clone(),
            });
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for &b in self.graded(i) {
            let c = self.alg.root_coords(b);
            if inner.iter().all(|&n| c[n - 1] == 0) {
                left.push(b);
            } else {
                right.push(b);
            }
        }
        Ok(Q1Split {
            inner: inner.to_vec(),
            left,
            right,
        })
    }

    /// Degree `-1` basis grouped by the crossed node carrying the nonzero coefficient.
    pub fn multipartition(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = self.nodes.iter().map(|&n| (n, Vec::new())).collect();
        for &b in self.graded(-1) {
            let c = self.alg.root_coords(b);
            let n = self
                .nodes
                .iter()
                .copied()
                .find(|&n| c[n - 1] != 0)
                .expect("degree -1 root meets a crossed node");
            out.get_mut(&n).expect("crossed node").push(b);
        }
        out
    }

    /// Nondegeneracy of `g_-1 x g_-1 -> g_-2` for a contact grading, together with
    /// isotropy of the two halves of `split` when one is supplied.
    pub fn contact_check(&self, split: Option<&Q1Split>) -> Result<ContactCheck> {
        if self.depth != 2 {
            return Err(Error::Precondition(format!(
                "contact grading needs depth 2, got {}",
                self.depth
            )));
        }
        let top = self.graded(-2);
        if top.len() != 1 {
            return Err(Error::Precondition(format!(
                "contact grading needs dim g_-2 = 1, got {}",
                top.len()
            )));
        }
        let t = top[0];
        let g1 = self.graded(-1);
        let form = |x: usize, y: usize| -> Q {
            self.alg
                .bracket_basis(x, y)
                .iter()
                .find(|(k, _)| *k == t)
                .map_or(Q::zero(), |&(_, c)| q(c))
        };
        let m = DenseMatrix::from_rows(g1.iter().map(|&x| g1.iter().map(|&y| form(x, y)).collect()).collect());
        let nondegenerate = m.rank() == g1.len();
        let isotropic = |part: &[usize]| part.iter().all(|&x| part.iter().all(|&y| form(x, y).is_zero()));
        let (left_isotropic, right_isotropic) = match split {
            Some(s) => (Some(isotropic(&s.left)), Some(isotropic(&s.right))),
            None => (None, None),
        };
        Ok(ContactCheck {
            nondegenerate,
            left_isotropic,
            right_isotropic,
        })
    }
}

/// Outcome of [`Parabolic::contact_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContactCheck {
    pub nondegenerate: bool,
    pub left_isotropic: Option<bool>,
    pub right_isotropic: Option<bool>,
}

impl ContactCheck {
    /// True when the form is nondegenerate and each supplied half is isotropic.
    pub fn holds(&self) -> bool {
        self.nondegenerate && self.left_isotropic != Some(false) && self.right_isotropic != Some(false)
    }
}

/// The two halves of `g_-1` for a grading with two crossed nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q1Split {
    pub inner: Vec<usize>,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Q1Split {
    /// `"L"` or `"R"` for a degree `+-1` root, judged by its coefficients.
    pub fn tag(&self, root_coords: &[i64]) -> &'static str {
        if self.inner.iter().all(|&n| root_coords[n - 1] == 0) {
            "L"
        } else {
            "R"
        }
    }
}

/// Nested parabolics: `p` for the smaller node set, `q` for the larger, so `q` is the
/// smaller subalgebra.
#[derive(Clone, Debug)]
pub struct NestedPair {
    pub p: Parabolic,
    pub q: Parabolic,
    intersection: Vec<usize>,
}

impl NestedPair {
    pub fn new(alg: Arc<LieAlgebra>, sigma: &[usize], sigma_tilde: &[usize]) -> Result<Self> {
        if !sigma.iter().all(|n| sigma_tilde.contains(n)) {
            let mut inner = sigma.to_vec();
            inner.sort_unstable();
            let mut outer = sigma_tilde.to_vec();
            outer.sort_unstable();
            return Err(Error::NotNested { inner, outer });
        }
        let p = Parabolic::new(alg.clone(), sigma)?;
        let q = Parabolic::new(alg, sigma_tilde)?;
        let intersection = (0..p.alg.dim())
            .filter(|&b| q.degree(b) < 0 && p.degree(b) >= 0)
            .collect();
        let pair = NestedPair { p, q, intersection };
        pair.verify()?;
        Ok(pair)
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        self.p.algebra()
    }

    /// Basis of `p ∩ q_-`.
    pub fn intersection(&self) -> &[usize] {
        &self.intersection
    }

    /// Nodes crossed for `q` but not for `p`.
    pub fn extra_nodes(&self) -> Vec<usize> {
        self.q
            .nodes()
            .iter()
            .copied()
            .filter(|n| !self.p.nodes().contains(n))
            .collect()
    }

    fn verify(&self) -> Result<()> {
        let d = self.p.alg.dim();
        let fail = |m: &str| Err(Error::Consistency(m.to_string()));
        // p_+ in q_+ and q_0 in p_0
        for b in 0..d {
            if self.p.degree(b) > 0 && self.q.degree(b) <= 0 {
                return fail("p_+ is not contained in q_+");
            }
            if self.q.degree(b) == 0 && self.p.degree(b) != 0 {
                return fail("q_0 is not contained in p_0");
            }
        }
        // q_- = p_- + (p ∩ q_-), with p ∩ q_- = p_0 ∩ q_-
        let q_minus: Vec<usize> = self.q.minus();
        let mut span = Echelon::new();
        for b in self.p.minus().into_iter().chain(self.intersection.iter().copied()) {
            if !span.insert(&unit(b)) {
                return fail("p_- and p ∩ q_- overlap");
            }
        }
        if span.dim() != q_minus.len() || !q_minus.iter().all(|&b| span.contains(&unit(b))) {
            return fail("q_- is not p_- + (p ∩ q_-)");
        }
        if self.intersection.iter().any(|&b| self.p.degree(b) != 0) {
            return fail("p ∩ q_- is not inside p_0");
        }
        Ok(())
    }
}

fn unit(b: usize) -> SparseVec {
    [(b, q(1))].into_iter().collect()
}

fn height_over(crossed: &[bool], coords: &[i64]) -> i64 {
    coords.iter().zip(crossed).filter(|(_, c)| **c).map(|(x, _)| x).sum()
}

/// Cartan element with `alpha_j(E) = 1` on crossed nodes and `0` elsewhere.
fn solve_grading_element(alg: &LieAlgebra, crossed: &[bool]) -> Result<Element> {
    let n = alg.rank();
    let cartan = alg.root_system().cartan();
    // alpha_j(h_i) = cartan[i][j], so the system is A^T c = delta
    let mut aug = DenseMatrix::zeros(n, n + 1);
    for j in 0..n {
        for i in 0..n {
            aug.set(j, i, q(cartan.entry(i, j)));
        }
        aug.set(j, n, q(i64::from(crossed[j])));
    }
    let r = aug.rref();
    if r.pivots != (0..n).collect::<Vec<_>>() {
        return Err(Error::Consistency("grading element system is singular".into()));
    }
    let mut e = Element::zero(alg.dim());
    for i in 0..n {
        e.coords[alg.index_of(BasisLabel::H(i))] = r.rows[i][n].clone();
    }
    Ok(e)
}
