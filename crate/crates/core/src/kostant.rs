//! Weyl group enumeration, the Hasse diagram `W^q` and the prediction of `H^k(q_-, g)`
//! through the affine action on the highest root.

use std::collections::{HashSet, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grading::Parabolic;
use crate::root_system::{RootSystem, Weight, WeylWord};
use crate::scalar::{to_i64, Q};

/// Elements of the subgroup generated by the given simple reflections (zero-based),
/// as reduced words in breadth-first order, deduplicated through their action on `ρ`.
pub fn weyl_subgroup(rs: &RootSystem, generators: &[usize]) -> Vec<WeylWord> {
    let rho = rs.rho();
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(rho.clone());
    queue.push_back((WeylWord::identity(), rho));
    while let Some((w, x)) = queue.pop_front() {
        for &i in generators {
            let y = rs.reflect(i, &x);
            if seen.insert(y.clone()) {
                let mut word = vec![i];
                word.extend(&w.word);
                queue.push_back((WeylWord::new(word), y));
            }
        }
        out.push(w);
    }
    out
}

/// The whole Weyl group.
pub fn weyl_group(rs: &RootSystem) -> Vec<WeylWord> {
    let all: Vec<usize> = (0..rs.rank()).collect();
    weyl_subgroup(rs, &all)
}

/// `wρ` has positive labels on the uncrossed nodes, equivalently `w^{-1}(α_i) > 0` for
/// every uncrossed simple root. These `w` make `w · λ` dominant for the Levi factor
/// whenever `λ` is dominant, and are the shortest elements of their cosets `W_L w`.
pub fn is_minimal_coset_rep(rs: &RootSystem, pd: &Parabolic, w: &WeylWord) -> bool {
    let x = rs.act(w, &rs.rho()).expect("word within rank");
    pd.uncrossed().into_iter().all(|i| x.0[i] > 0)
}

/// Shortest coset representatives of length `k`, sorted by word.
pub fn hasse_elements(rs: &RootSystem, pd: &Parabolic, k: usize) -> Vec<WeylWord> {
    let mut out: Vec<WeylWord> = weyl_group(rs)
        .into_iter()
        .filter(|w| w.len() == k && is_minimal_coset_rep(rs, pd, w))
        .collect();
    out.sort();
    out
}

/// Positive roots of the Levi factor: zero coefficient on every crossed node.
pub fn levi_positive_roots(rs: &RootSystem, pd: &Parabolic) -> Vec<Vec<i64>> {
    rs.positive_roots()
        .iter()
        .filter(|r| (0..rs.rank()).all(|i| !pd.is_crossed(i) || r[i] == 0))
        .cloned()
        .collect()
}

/// Weyl dimension formula for the semisimple part of `q_0`:
/// `Π <μ+ρ, α^∨> / <ρ, α^∨>` over positive Levi roots.
pub fn levi_dimension(rs: &RootSystem, pd: &Parabolic, mu: &Weight) -> Result<usize> {
    if pd.uncrossed().into_iter().any(|i| mu.0[i] < 0) {
        return Err(Error::Precondition(format!("{mu} is not dominant for the Levi factor")));
    }
    let shifted = mu.add(&rs.rho());
    let mut d = Q::from_integer(1.into());
    for a in levi_positive_roots(rs, pd) {
        d = d * rs.coroot_pairing(&shifted, &a) / rs.coroot_pairing(&rs.rho(), &a);
    }
    to_i64(&d)
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| Error::Consistency(format!("Weyl dimension of {mu} is not a positive integer")))
}

/// Applies uncrossed reflections until the weight is antidominant for the Levi factor;
/// the result is `w_0^L(μ)` for a Levi-dominant `μ`.
pub fn levi_longest(rs: &RootSystem, pd: &Parabolic, mu: &Weight) -> Weight {
    let unc = pd.uncrossed();
    let mut x = mu.clone();
    while let Some(&i) = unc.iter().find(|&&i| x.0[i] > 0) {
        x = rs.reflect(i, &x);
    }
    x
}

/// Highest weight of the dual `q_0`-module: `-w_0^L(μ)`.
pub fn levi_dual(rs: &RootSystem, pd: &Parabolic, mu: &Weight) -> Weight {
    levi_longest(rs, pd, mu).neg()
}

/// A weight in the root lattice, in simple-root coordinates.
pub fn weight_to_root_coords(rs: &RootSystem, mu: &Weight) -> Result<Vec<i64>> {
    let n = rs.rank();
    let fw = rs.fundamental_weights();
    (0..n)
        .map(|j| {
            let c: Q = (0..n).fold(Q::zero(), |a, i| a + &fw[i][j] * Q::from_integer(mu.0[i].into()));
            to_i64(&c).ok_or_else(|| Error::Precondition(format!("{mu} is not in the root lattice")))
        })
        .collect()
}

/// One predicted irreducible component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseEntry {
    pub word: WeylWord,
    /// `w · θ` with `θ` the highest root.
    pub predicted_highest_weight: Weight,
    /// `-w_0^L(w · θ)`, the highest weight of the component inside `Λ^k q_+ ⊗ g`.
    pub chain_highest_weight: Weight,
    pub predicted_dimension: usize,
    pub homogeneity: i64,
}

/// Prediction of `H^k(q_-, g)` from the Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HassePrediction {
    pub k: usize,
    pub entries: Vec<HasseEntry>,
}

pub fn predict_h(rs: &RootSystem, pd: &Parabolic, k: usize) -> Result<HassePrediction> {
    let theta = rs.root_to_weight(rs.highest_root());
    let entries = hasse_elements(rs, pd, k)
        .into_iter()
        .map(|w| {
            let nu = rs.affine_action(&w, &theta)?;
            let chain = levi_dual(rs, pd, &nu);
            let coords = weight_to_root_coords(rs, &chain)?;
            let homogeneity = (0..rs.rank()).filter(|&i| pd.is_crossed(i)).map(|i| coords[i]).sum();
            Ok(HasseEntry {
                predicted_dimension: levi_dimension(rs, pd, &chain)?,
                word: w,
                predicted_highest_weight: nu,
                chain_highest_weight: chain,
                homogeneity,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HassePrediction { k, entries })
}

/// `|W| / |W_L|` and the total size of the Hasse diagram.
pub fn coset_count_check(rs: &RootSystem, pd: &Parabolic) -> (usize, usize) {
    let w = weyl_group(rs).len();
    let wl = weyl_subgroup(rs, &pd.uncrossed()).len();
    let hasse = weyl_group(rs)
        .iter()
        .filter(|w| is_minimal_coset_rep(rs, pd, w))
        .count();
    (w / wl, hasse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_algebra::LieAlgebra;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn setup(letter: char, n: usize, nodes: &[usize]) -> (RootSystem, Parabolic) {
        let alg = Arc::new(LieAlgebra::of_type(letter, n).unwrap());
        let rs = alg.root_system().clone();
        (rs, Parabolic::new(alg, nodes).unwrap())
    }

    fn brute_force_a2(rs: &RootSystem, pd: &Parabolic, k: usize) -> usize {
        // every word over {0,1} of length <= 3, reduced, deduplicated by action on ρ,
        // filtered by w^{-1}(α) > 0 for uncrossed α
        let mut seen = HashSet::new();
        let mut count = 0;
        for len in 0..=3usize {
            for bits in 0..(1usize << len) {
                let w = WeylWord::new((0..len).map(|i| (bits >> i) & 1).collect());
                if !rs.is_reduced(&w) || !seen.insert(rs.act(&w, &rs.rho()).unwrap()) {
                    continue;
                }
                let ok = pd.uncrossed().into_iter().all(|i| {
                    let mut a = vec![0i64; 2];
                    a[i] = 1;
                    for &j in &w.word {
                        a = rs.reflect_root(j, &a);
                    }
                    a.iter().all(|&c| c >= 0)
                });
                if ok && len == k {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn group_orders() {
        for (l, n, order) in [
            ('A', 2, 6),
            ('A', 3, 24),
            ('B', 2, 8),
            ('G', 2, 12),
            ('D', 4, 192),
            ('F', 4, 1152),
        ] {
            let rs = RootSystem::of_type(l, n).unwrap();
            let w = weyl_group(&rs);
            assert_eq!(w.len(), order);
            assert!(w.iter().all(|x| rs.is_reduced(x)));
        }
    }

    #[test]
    fn hasse_small_cases() {
        let (rs, pd) = setup('A', 2, &[1]);
        assert_eq!(hasse_elements(&rs, &pd, 0), vec![WeylWord::identity()]);
        assert_eq!(hasse_elements(&rs, &pd, 1), vec![WeylWord::new(vec![0])]);
        assert_eq!(brute_force_a2(&rs, &pd, 1), 1);
        let (rs, pd) = setup('A', 2, &[1, 2]);
        assert_eq!(hasse_elements(&rs, &pd, 2).len(), 2);
        assert_eq!(brute_force_a2(&rs, &pd, 2), 2);
    }

    #[test]
    fn a3_projective_second_element() {
        let (rs, pd) = setup('A', 3, &[1]);
        let p = predict_h(&rs, &pd, 2).unwrap();
        assert_eq!(p.entries.len(), 1);
        assert_eq!(p.entries[0].word, WeylWord::new(vec![0, 1]));
        assert_eq!(p.entries[0].predicted_highest_weight, Weight(vec![-4, 1, 2]));
    }

    #[test]
    fn degree_zero_is_the_adjoint() {
        let (rs, pd) = setup('A', 4, &[1, 4]);
        let p = predict_h(&rs, &pd, 0).unwrap();
        assert_eq!(p.entries.len(), 1);
        assert_eq!(p.entries[0].predicted_highest_weight, Weight(vec![1, 0, 0, 1]));
    }

    #[test]
    fn component_counts() {
        for n in 3..=5 {
            let (rs, pd) = setup('A', n, &[1, n]);
            assert_eq!(predict_h(&rs, &pd, 2).unwrap().entries.len(), 3);
        }
        for n in 3..=4 {
            let (rs, pd) = setup('A', n + 1, &[1, 2]);
            assert_eq!(predict_h(&rs, &pd, 2).unwrap().entries.len(), 3);
        }
    }

    #[test]
    fn coset_counts() {
        for (l, n, nodes) in [
            ('A', 3, vec![2]),
            ('A', 4, vec![1, 3]),
            ('B', 3, vec![1]),
            ('G', 2, vec![2]),
        ] {
            let (rs, pd) = setup(l, n, &nodes);
            let (expected, got) = coset_count_check(&rs, &pd);
            assert_eq!(expected, got);
        }
    }

    #[test]
    fn levi_dimension_examples() {
        // A3 with node 1 crossed: Levi sl3, weight (x,1,0) is the standard rep
        let (rs, pd) = setup('A', 3, &[1]);
        assert_eq!(levi_dimension(&rs, &pd, &Weight(vec![-5, 1, 0])).unwrap(), 3);
        assert_eq!(levi_dimension(&rs, &pd, &Weight(vec![0, 1, 1])).unwrap(), 8);
        assert!(levi_dimension(&rs, &pd, &Weight(vec![0, -1, 0])).is_err());
        assert_eq!(levi_dual(&rs, &pd, &Weight(vec![2, 1, 0])), Weight(vec![-3, 0, 1]));
    }

    proptest! {
        #[test]
        fn minimal_reps_have_positive_inverse_images(n in 2usize..5, mask in 1u32..16) {
            let nodes: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            prop_assume!(!nodes.is_empty());
            let (rs, pd) = setup('A', n, &nodes);
            for w in weyl_group(&rs) {
                let minimal = is_minimal_coset_rep(&rs, &pd, &w);
                let images_positive = pd.uncrossed().into_iter().all(|i| {
                    let mut a = vec![0i64; n];
                    a[i] = 1;
                    for &j in &w.word {
                        a = rs.reflect_root(j, &a);
                    }
                    a.iter().all(|&c| c >= 0)
                });
                prop_assert_eq!(minimal, images_positive);
            }
        }
    }
}
