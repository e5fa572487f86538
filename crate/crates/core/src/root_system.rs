//! Finite root systems from Cartan matrices.
//!
//! Conventions:
//!
//! * `cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`.
//! * Roots are integer coefficient vectors over the simple roots.
//! * Weights are integer vectors of Dynkin labels (fundamental-weight coordinates).
//!   In these coordinates the simple root `alpha_j` is column `j` of the Cartan matrix.
//! * Simple nodes are indexed from zero in this module. User-facing node sets elsewhere
//!   are one-based.
//!
//! Positive roots are listed by height, ties broken by descending lexicographic order
//! of the coefficient vector, so the simple roots come first and in node order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::scalar::{frac, q, Q};

/// A square integer matrix satisfying the finite-type Cartan axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i) / 2`, scaled to coprime positive integers per component.
    symmetrizer: Vec<i64>,
}

impl CartanMatrix {
    /// Validates the Cartan axioms and positive definiteness of the symmetrisation.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry ({i},{i}) is not 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let a = entries[i][j];
                if !(-3..=0).contains(&a) {
                    return Err(Error::InvalidCartan(format!(
                        "entry ({i},{j}) = {a} not in {{0,-1,-2,-3}}"
                    )));
                }
                if (a == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({i},{j}) and ({j},{i}) disagree on vanishing"
                    )));
                }
            }
        }
        let symmetrizer = symmetrize(&entries)?;
        let sym = DenseMatrix::from_rows(
            (0..n)
                .map(|i| (0..n).map(|j| q(symmetrizer[i] * entries[i][j])).collect())
                .collect(),
        );
        if sym.transpose() != sym {
            return Err(Error::InvalidCartan("not symmetrizable".into()));
        }
        if sym.leading_minors().iter().any(|m| m <= &Q::zero()) {
            return Err(Error::InvalidCartan(
                "symmetrization is not positive definite (not of finite type)".into(),
            ));
        }
        Ok(CartanMatrix { entries, symmetrizer })
    }

    /// Standard Cartan matrix of a finite type, Bourbaki numbering.
    pub fn of_type(letter: char, rank: usize) -> Result<Self> {
        let bad = || Error::InvalidType { letter, rank };
        let valid = match letter {
            'A' => rank >= 1,
            'B' => rank >= 2,
            'C' => rank >= 3,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if !valid {
            return Err(bad());
        }
        let n = rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match letter {
            'A' | 'B' | 'C' => (0..n - 1).for_each(|i| link(i, i + 1)),
            'D' => {
                (0..n - 2).for_each(|i| link(i, i + 1));
                link(n - 3, n - 1);
            }
            'E' => {
                // 1-3-4-5-6-7-8 with 2 attached to 4
                link(0, 2);
                link(1, 3);
                (2..n - 1).for_each(|i| link(i, i + 1));
            }
            'F' | 'G' => (0..n - 1).for_each(|i| link(i, i + 1)),
            _ => unreachable!(),
        }
        match letter {
            // alpha_n short
            'B' => a[n - 1][n - 2] = -2,
            // alpha_n long
            'C' => a[n - 2][n - 1] = -2,
            // alpha_3, alpha_4 short
            'F' => a[2][1] = -2,
            // alpha_1 short
            'G' => a[0][1] = -3,
            _ => {}
        }
        CartanMatrix::new(a)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }
}

fn symmetrize(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = a.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Q::one());
        let mut stack = vec![start];
        let mut component = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_i a_ij = d_j a_ji
                let dj = d[i].clone().unwrap() * frac(a[i][j], a[j][i]);
                match &d[j] {
                    Some(x) if *x != dj => {
                        return Err(Error::InvalidCartan("not symmetrizable".into()));
                    }
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                        component.push(j);
                    }
                }
            }
        }
        // scale the component to coprime integers
        let lcm = component.iter().fold(num_bigint::BigInt::one(), |acc, &i| {
            num_integer::Integer::lcm(&acc, d[i].as_ref().unwrap().denom())
        });
        let ints: Vec<num_bigint::BigInt> = component
            .iter()
            .map(|&i| (d[i].clone().unwrap() * Q::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints
            .iter()
            .fold(num_bigint::BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
        for (&i, x) in component.iter().zip(&ints) {
            d[i] = Some(Q::from_integer(x / &g));
        }
    }
    Ok(d.into_iter()
        .map(|x| i64::try_from(x.unwrap().to_integer()).expect("symmetrizer overflow"))
        .collect())
}

/// A weight in fundamental-weight coordinates (Dynkin labels).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Labels on the given (zero-based) nodes only.
    pub fn restrict(&self, nodes: &[usize]) -> Vec<i64> {
        nodes.iter().map(|&i| self.0[i]).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// A Weyl group element as a word `s_{w[0]} s_{w[1]} ... s_{w[l-1]}` (acting right to left).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylWord {
    pub word: Vec<usize>,
}

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord { word: Vec::new() }
    }

    pub fn new(word: Vec<usize>) -> Self {
        WeylWord { word }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn inverse(&self) -> Self {
        WeylWord {
            word: self.word.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.word.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{}", parts.join(""))
    }
}

/// Positive roots, fundamental weights and pairings of a finite root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    /// Fundamental weights in simple-root coordinates.
    fundamental: Vec<Vec<Q>>,
    /// Weyl vector in simple-root coordinates.
    rho: Vec<Q>,
    /// Symmetric bilinear form on simple roots: `(alpha_i, alpha_j) = d_i a_ij`.
    gram: Vec<Vec<i64>>,
}

impl RootSystem {
    /// Root system of type `letter` and the given rank (`A`..`G`).
    pub fn of_type(letter: char, rank: usize) -> Result<Self> {
        Self::new(CartanMatrix::of_type(letter, rank)?)
    }

    pub fn new(cartan: CartanMatrix) -> Result<Self> {
        let n = cartan.rank();
        let positive = enumerate_by_strings(&cartan);
        let index = positive.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let d = cartan.symmetrizer();
        let gram: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| d[i] * cartan.entry(i, j)).collect())
            .collect();
        // omega_i = sum_j (A^{-1})_{ji} alpha_j, i.e. the columns of A^{-1} transposed
        let a = DenseMatrix::from_rows(
            (0..n)
                .map(|i| (0..n).map(|j| q(cartan.entry(i, j))).collect())
                .collect(),
        );
        let inv = invert(&a)?;
        // In fundamental coordinates alpha_j = sum_i a_ij omega_i, so omega = A^{-1} alpha
        // read column-wise: omega_k = sum_j (A^{-1})_{jk} alpha_j.
        let fundamental: Vec<Vec<Q>> = (0..n)
            .map(|k| (0..n).map(|j| inv.get(j, k).clone()).collect())
            .collect();
        let rho = (0..n).map(|j| fundamental.iter().map(|w| w[j].clone()).sum()).collect();
        let rs = RootSystem {
            cartan,
            positive,
            index,
            fundamental,
            rho,
            gram,
        };
        rs.check_invariants()?;
        Ok(rs)
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.rank();
        let half_sum: Vec<Q> = (0..n)
            .map(|j| {
                let s: i64 = self.positive.iter().map(|r| r[j]).sum();
                frac(s, 2)
            })
            .collect();
        if half_sum != self.rho {
            return Err(Error::Consistency(
                "half-sum of positive roots differs from the sum of fundamental weights".into(),
            ));
        }
        let by_reflection = positive_roots_by_reflection(&self.cartan);
        let by_strings: BTreeSet<Vec<i64>> = self.positive.iter().cloned().collect();
        if by_reflection != by_strings {
            return Err(Error::Consistency(
                "root-string and reflection-closure enumerations disagree".into(),
            ));
        }
        for r in &self.positive {
            for i in 0..n {
                let s = self.reflect_root(i, r);
                if !self.is_root(&s) {
                    return Err(Error::Consistency(format!(
                        "s_{} maps root {r:?} outside the root system",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.positive[i]
    }

    /// Index of a positive root given by coefficients.
    pub fn positive_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// True if `coeffs` is a root (positive or negative).
    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        if self.index.contains_key(coeffs) {
            return true;
        }
        let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    pub fn height(coeffs: &[i64]) -> i64 {
        coeffs.iter().sum()
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive.last().expect("root system has roots")
    }

    pub fn fundamental_weights(&self) -> &[Vec<Q>] {
        &self.fundamental
    }

    /// Weyl vector in simple-root coordinates.
    pub fn rho_root_coords(&self) -> &[Q] {
        &self.rho
    }

    /// Weyl vector in fundamental coordinates: all ones.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// `(alpha_i, alpha_j)` on simple roots.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// `(x, y)` for vectors in simple-root coordinates.
    pub fn inner_roots(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    /// Dynkin labels of a vector given in simple-root coordinates.
    pub fn root_to_weight(&self, coeffs: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan.entry(i, j) * coeffs[j]).sum())
                .collect(),
        )
    }

    /// `<lambda, beta^vee>` for a weight in Dynkin labels and a root in simple coordinates.
    pub fn coroot_pairing(&self, lambda: &Weight, beta: &[i64]) -> Q {
        // (omega_i, alpha_j) = d_j delta_ij
        let d = self.cartan.symmetrizer();
        let num: i64 = (0..self.rank()).map(|j| lambda.0[j] * d[j] * beta[j]).sum();
        let norm = self.inner_roots(beta, beta);
        frac(2 * num, norm)
    }

    /// `s_i(beta)` for a root in simple coordinates.
    pub fn reflect_root(&self, i: usize, beta: &[i64]) -> Vec<i64> {
        let pairing: i64 = (0..self.rank()).map(|j| self.cartan.entry(i, j) * beta[j]).sum();
        let mut out = beta.to_vec();
        out[i] -= pairing;
        out
    }

    /// `s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i`.
    pub fn apply_reflection(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        let n = self.rank();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        if lambda.0.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: lambda.0.len(),
            });
        }
        Ok(self.reflect(i, lambda))
    }

    pub(crate) fn reflect(&self, i: usize, lambda: &Weight) -> Weight {
        let c = lambda.0[i];
        Weight(
            (0..self.rank())
                .map(|j| lambda.0[j] - c * self.cartan.entry(j, i))
                .collect(),
        )
    }

    /// Linear action of a word on a weight.
    pub fn act(&self, w: &WeylWord, lambda: &Weight) -> Result<Weight> {
        let mut x = lambda.clone();
        for &i in w.word.iter().rev() {
            x = self.apply_reflection(i, &x)?;
        }
        Ok(x)
    }

    /// Affine (dot) action `w . lambda = w(lambda + rho) - rho`.
    pub fn affine_action(&self, w: &WeylWord, lambda: &Weight) -> Result<Weight> {
        let rho = self.rho();
        Ok(self.act(w, &lambda.add(&rho))?.sub(&rho))
    }

    /// Number of positive roots sent to negative roots by `w`.
    pub fn inversion_count(&self, w: &WeylWord) -> usize {
        self.positive
            .iter()
            .filter(|r| {
                let mut x = r.to_vec();
                for &i in w.word.iter().rev() {
                    x = self.reflect_root(i, &x);
                }
                x.iter().all(|&c| c <= 0)
            })
            .count()
    }

    pub fn is_reduced(&self, w: &WeylWord) -> bool {
        self.inversion_count(w) == w.len()
    }
}

fn invert(a: &DenseMatrix) -> Result<DenseMatrix> {
    let n = a.nrows();
    let mut aug = DenseMatrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n + i, Q::one());
    }
    let r = aug.rref();
    if r.pivots != (0..n).collect::<Vec<_>>() {
        return Err(Error::InvalidCartan("singular Cartan matrix".into()));
    }
    let mut inv = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, r.rows[i][n + j].clone());
        }
    }
    Ok(inv)
}

/// Positive roots by closing the simple roots under root strings.
fn enumerate_by_strings(cartan: &CartanMatrix) -> Vec<Vec<i64>> {
    let n = cartan.rank();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut ordered = Vec::new();
    while !level.is_empty() {
        level.sort_by(|a, b| b.cmp(a));
        level.dedup();
        for r in &level {
            all.insert(r.clone());
        }
        ordered.extend(level.iter().cloned());
        let mut next = BTreeSet::new();
        for beta in &level {
            for i in 0..n {
                // p = largest p with beta - p alpha_i a root
                let mut p = 0;
                let mut x = beta.clone();
                loop {
                    x[i] -= 1;
                    if all.contains(&x) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| cartan.entry(i, j) * beta[j]).sum();
                let qq = p - pairing;
                if qq > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        level = next.into_iter().collect();
    }
    ordered
}

/// Positive roots as the positive part of the closure of the simple roots under
/// simple reflections. Independent of the string algorithm above.
pub fn positive_roots_by_reflection(cartan: &CartanMatrix) -> BTreeSet<Vec<i64>> {
    let n = cartan.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    while let Some(r) = stack.pop() {
        if !seen.insert(r.clone()) {
            continue;
        }
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| cartan.entry(i, j) * r[j]).sum();
            let mut s = r.clone();
            s[i] -= pairing;
            if !seen.contains(&s) {
                stack.push(s);
            }
        }
    }
    seen.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn positive_root_counts() {
        assert_eq!(RootSystem::of_type('A', 2).unwrap().num_positive(), 3);
        assert_eq!(RootSystem::of_type('A', 4).unwrap().num_positive(), 10);
        assert_eq!(RootSystem::of_type('B', 2).unwrap().num_positive(), 4);
        for (l, r, np) in [
            ('B', 3, 9),
            ('C', 3, 9),
            ('D', 4, 12),
            ('G', 2, 6),
            ('F', 4, 24),
            ('E', 6, 36),
            ('E', 7, 63),
        ] {
            assert_eq!(RootSystem::of_type(l, r).unwrap().num_positive(), np, "{l}{r}");
        }
    }

    #[test]
    fn b2_roots_match_brute_force_closure() {
        // close {a1, a2} under addition of simple roots while the result is a root
        let rs = RootSystem::of_type('B', 2).unwrap();
        let expected: Vec<Vec<i64>> = vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]];
        assert_eq!(rs.positive_roots(), &expected[..]);
    }

    #[test]
    fn invalid_types_rejected() {
        assert_eq!(
            CartanMatrix::of_type('A', 0).unwrap_err(),
            Error::InvalidType { letter: 'A', rank: 0 }
        );
        assert!(CartanMatrix::of_type('E', 5).is_err());
        assert!(CartanMatrix::of_type('H', 3).is_err());
        assert!(CartanMatrix::of_type('G', 3).is_err());
    }

    #[test]
    fn affine_cartan_matrix_rejected() {
        // affine A_1: [[2,-2],[-2,2]] has zero determinant
        let err = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap_err();
        assert!(matches!(err, Error::InvalidCartan(_)));
        assert!(CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).is_err());
    }

    #[test]
    fn reflection_examples() {
        let rs = RootSystem::of_type('A', 2).unwrap();
        let a1 = rs.root_to_weight(&[1, 0]);
        let a2 = rs.root_to_weight(&[0, 1]);
        assert_eq!(rs.apply_reflection(0, &a1).unwrap(), a1.neg());
        let rho = rs.rho();
        assert_eq!(rs.apply_reflection(0, &rho).unwrap(), rho.sub(&a1));
        // <alpha_2, alpha_1^vee> = -1 so s_1(alpha_2) = alpha_2 + alpha_1
        assert_eq!(rs.apply_reflection(0, &a2).unwrap(), a1.add(&a2));
        assert!(matches!(
            rs.apply_reflection(5, &a1),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn affine_action_examples() {
        let rs = RootSystem::of_type('A', 2).unwrap();
        let theta = rs.root_to_weight(rs.highest_root());
        assert_eq!(theta, Weight(vec![1, 1]));
        assert_eq!(rs.affine_action(&WeylWord::identity(), &theta).unwrap(), theta);
        let w = WeylWord::new(vec![1, 0, 1]);
        let mrho = rs.rho().neg();
        assert_eq!(rs.affine_action(&w, &mrho).unwrap(), mrho);
        // s_1 . theta via the reflection matrix: s_1(2,2) = (-2,4), minus rho
        let s1 = WeylWord::new(vec![0]);
        assert_eq!(rs.affine_action(&s1, &theta).unwrap(), Weight(vec![-3, 3]));
        // independent matrix action in the basis of simple roots: theta + rho = 2a1 + 2a2
        let v = rs.reflect_root(0, &[2, 2]);
        let expected = rs.root_to_weight(&v).sub(&rs.rho());
        assert_eq!(rs.affine_action(&s1, &theta).unwrap(), expected);
    }

    #[test]
    fn rho_and_fundamental_weights() {
        let rs = RootSystem::of_type('B', 3).unwrap();
        // rho in root coordinates equals the sum of fundamental weights (checked at build)
        let sum: Vec<Q> = (0..3)
            .map(|j| rs.fundamental_weights().iter().map(|w| w[j].clone()).sum())
            .collect();
        assert_eq!(sum, rs.rho_root_coords());
        assert!(rs.is_reduced(&WeylWord::new(vec![0, 1, 0])));
        assert!(!rs.is_reduced(&WeylWord::new(vec![0, 0])));
    }

    fn word_strategy(rank: usize) -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(0..rank, 0..7)
    }

    proptest! {
        #[test]
        fn affine_action_inverts(word in word_strategy(3), l in prop::collection::vec(-4i64..5, 3)) {
            let rs = RootSystem::of_type('A', 3).unwrap();
            let w = WeylWord::new(word);
            let lambda = Weight(l);
            let back = rs.affine_action(&w, &rs.affine_action(&w.inverse(), &lambda).unwrap()).unwrap();
            prop_assert_eq!(back, lambda);
        }

        #[test]
        fn reflections_preserve_roots(word in word_strategy(4)) {
            for (letter, rank) in [('A', 4), ('B', 4), ('C', 4), ('D', 4), ('F', 4)] {
                let rs = RootSystem::of_type(letter, rank).unwrap();
                for r in rs.positive_roots() {
                    let mut x = r.clone();
                    for &i in &word {
                        x = rs.reflect_root(i, &x);
                    }
                    prop_assert!(rs.is_root(&x));
                }
            }
        }
    }
}
