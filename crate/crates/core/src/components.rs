//! Splitting `ker □` into irreducible `q_0`-modules.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::chain::{chain_action, ChainSpace};
use crate::error::{Error, Result};
use crate::grading::{Parabolic, Q1Split};
use crate::hodge::{common_eigenvalue, HodgeDecomposition};
use crate::kostant::{levi_dimension, levi_dual};
use crate::linalg::{axpy, dense_to_sparse, DenseMatrix, Echelon, SparseMatrix, SparseVec};
use crate::root_system::Weight;
use crate::scalar::{q, Q};

/// A graded slot: an entry (a vector of `q_-`) or the value of a chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slot {
    pub degree: i64,
    pub tag: Option<&'static str>,
}

impl Slot {
    fn key(&self) -> (i64, Option<&'static str>, i64) {
        (self.degree.abs(), self.tag, self.degree)
    }
}

impl Ord for Slot {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Slot {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.tag, self.degree) {
            (Some(t), _) => write!(f, "{t}"),
            (None, 0) => write!(f, "𝔮₀"),
            (None, d) if d < 0 => write!(f, "(−{})", -d),
            (None, d) => write!(f, "(+{d})"),
        }
    }
}

/// Entry slots (sorted) and value slot of one chain basis vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignatureTerm {
    pub entries: Vec<Slot>,
    pub value: Slot,
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c as usize - '0' as usize])
        .collect()
}

impl fmt::Display for SignatureTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups: Vec<(Slot, usize)> = Vec::new();
        for s in &self.entries {
            match groups.last_mut() {
                Some((t, c)) if t == s => *c += 1,
                _ => groups.push((s.clone(), 1)),
            }
        }
        let parts: Vec<String> = groups
            .iter()
            .map(|(s, c)| {
                if *c == 1 {
                    s.to_string()
                } else {
                    format!("Λ{}{s}", superscript(*c))
                }
            })
            .collect();
        write!(f, "{}→{}", parts.join("×"), self.value)
    }
}

/// Slots of a chain basis vector, with entries in `q_-` and tags from `split` on degree
/// `±1` slots.
pub fn signature_of(pd: &Parabolic, space: &ChainSpace, i: usize, split: Option<&Q1Split>) -> SignatureTerm {
    let alg = pd.algebra();
    let (s, b) = space.split(i);
    let slot = |g: usize, degree: i64| Slot {
        degree,
        tag: match split {
            Some(sp) if degree.abs() == 1 => Some(sp.tag(alg.root_coords(g))),
            _ => None,
        },
    };
    let mut entries: Vec<Slot> = space
        .subset(s)
        .iter()
        .map(|&p| {
            let z = space.plus()[p];
            slot(z, -pd.degree(z))
        })
        .collect();
    entries.sort();
    SignatureTerm {
        entries,
        value: slot(b, pd.degree(b)),
    }
}

/// One irreducible `q_0`-submodule of `ker □`.
#[derive(Clone, Debug)]
pub struct HarmonicComponent {
    pub k: usize,
    /// Dynkin labels of the highest weight inside `Λ^k q_+ ⊗ g`.
    pub highest_weight: Weight,
    /// `-w_0^L` of the highest weight, the form produced by the Hasse diagram.
    pub dual_weight: Weight,
    pub root_coords: Vec<i64>,
    pub dimension: usize,
    pub weyl_dimension: usize,
    pub homogeneity: i64,
    pub signature: BTreeSet<SignatureTerm>,
    pub highest_weight_vector: SparseVec,
    pub basis: Vec<SparseVec>,
}

impl HarmonicComponent {
    /// Strictly positive homogeneity.
    pub fn is_regular(&self) -> bool {
        self.homogeneity >= 1
    }

    pub fn signature_strings(&self) -> Vec<String> {
        self.signature.iter().map(|s| s.to_string()).collect()
    }
}

fn action_sum(pd: &Parabolic, space: &Arc<ChainSpace>, x: &SparseVec) -> Result<SparseMatrix> {
    let mut m = SparseMatrix::zeros(space.dim(), space.dim());
    for (&b, c) in x {
        m = m.add(&chain_action(pd, space, b)?.scaled(c));
    }
    Ok(m)
}

/// Decomposes `ker □` of a Hodge decomposition into irreducible `q_0`-modules, one
/// component per highest-weight vector, ordered by homogeneity then highest weight.
pub fn harmonic_components(
    pd: &Parabolic,
    hodge: &HodgeDecomposition,
    split: Option<&Q1Split>,
) -> Result<Vec<HarmonicComponent>> {
    let alg = pd.algebra();
    let rs = alg.root_system();
    let space = &hodge.space;
    let simple = |i: usize| {
        let mut a = vec![0i64; rs.rank()];
        a[i] = 1;
        rs.positive_index(&a).expect("simple root")
    };
    let unc = pd.uncrossed();
    let raising: Vec<SparseMatrix> = unc
        .iter()
        .map(|&i| chain_action(pd, space, alg.e(simple(i))))
        .collect::<Result<_>>()?;
    let lowering: Vec<(usize, SparseMatrix)> = unc
        .iter()
        .map(|&i| Ok((i, chain_action(pd, space, alg.f(simple(i)))?)))
        .collect::<Result<_>>()?;
    let grading = action_sum(pd, space, &dense_to_sparse(&pd.grading_element().coords))?;

    let mut out = Vec::new();
    for block in hodge.blocks.iter().filter(|b| !b.ker_box.is_empty()) {
        // joint kernel of the raising operators inside ker □ restricted to this weight
        let images: Vec<Vec<SparseVec>> = block
            .ker_box
            .iter()
            .map(|v| raising.iter().map(|e| e.apply(v)).collect())
            .collect();
        let mut rows: BTreeMap<(usize, usize), Vec<Q>> = BTreeMap::new();
        for (j, imgs) in images.iter().enumerate() {
            for (r, img) in imgs.iter().enumerate() {
                for (&i, c) in img {
                    rows.entry((r, i))
                        .or_insert_with(|| vec![Q::zero(); block.ker_box.len()])[j] = c.clone();
                }
            }
        }
        let coeffs = if rows.is_empty() {
            DenseMatrix::identity(block.ker_box.len()).rref().rows
        } else {
            DenseMatrix::from_rows(rows.into_values().collect()).nullspace()
        };
        for c in coeffs {
            let mut hw = SparseVec::new();
            for (x, v) in c.iter().zip(&block.ker_box) {
                if !x.is_zero() {
                    axpy(&mut hw, x, v);
                }
            }
            out.push(generate(
                pd,
                space,
                hodge.k,
                &block.weight,
                hw,
                &lowering,
                &grading,
                split,
            )?);
        }
    }
    out.sort_by(|a, b| (a.homogeneity, &a.highest_weight).cmp(&(b.homogeneity, &b.highest_weight)));
    let total: usize = out.iter().map(|c| c.dimension).sum();
    if total != hodge.dim_ker_box() {
        return Err(Error::Consistency(format!(
            "components of ker □ in degree {} span {total} of {} dimensions",
            hodge.k,
            hodge.dim_ker_box()
        )));
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn generate(
    pd: &Parabolic,
    space: &Arc<ChainSpace>,
    k: usize,
    weight: &[i64],
    hw: SparseVec,
    lowering: &[(usize, SparseMatrix)],
    grading: &SparseMatrix,
    split: Option<&Q1Split>,
) -> Result<HarmonicComponent> {
    let rs = pd.algebra().root_system();
    let mut spaces: BTreeMap<Vec<i64>, Echelon> = BTreeMap::new();
    let mut basis = Vec::new();
    let mut queue = VecDeque::new();
    spaces.entry(weight.to_vec()).or_default().insert(&hw);
    queue.push_back((weight.to_vec(), hw.clone()));
    while let Some((w, v)) = queue.pop_front() {
        for (i, f) in lowering {
            let u = f.apply(&v);
            if u.is_empty() {
                continue;
            }
            let mut wu = w.clone();
            wu[*i] -= 1;
            if spaces.entry(wu.clone()).or_default().insert(&u) {
                queue.push_back((wu, u));
            }
        }
        basis.push(v);
    }
    let highest_weight = rs.root_to_weight(weight);
    let weyl_dimension = levi_dimension(rs, pd, &highest_weight)?;
    if weyl_dimension != basis.len() {
        return Err(Error::Consistency(format!(
            "component {highest_weight} has dimension {} but the Weyl formula gives {weyl_dimension}",
            basis.len()
        )));
    }
    let homogeneity = space.homogeneity(*hw.keys().next().expect("nonzero"));
    if common_eigenvalue(grading, &basis) != Some(q(homogeneity)) {
        return Err(Error::Consistency(format!(
            "component {highest_weight} is not homogeneous"
        )));
    }
    let signature = basis
        .iter()
        .flat_map(|v| v.keys().map(|&i| signature_of(pd, space, i, split)))
        .collect();
    Ok(HarmonicComponent {
        k,
        dual_weight: levi_dual(rs, pd, &highest_weight),
        highest_weight,
        root_coords: weight.to_vec(),
        dimension: basis.len(),
        weyl_dimension,
        homogeneity,
        signature,
        highest_weight_vector: hw,
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::hodge;
    use crate::kostant::predict_h;
    use crate::lie_algebra::LieAlgebra;

    fn pd(n: usize, nodes: &[usize]) -> Parabolic {
        Parabolic::new(Arc::new(LieAlgebra::of_type('A', n).unwrap()), nodes).unwrap()
    }

    fn sigs(c: &HarmonicComponent) -> Vec<String> {
        c.signature_strings()
    }

    #[test]
    fn slot_rendering() {
        let t = SignatureTerm {
            entries: vec![
                Slot {
                    degree: -1,
                    tag: Some("R"),
                },
                Slot {
                    degree: -1,
                    tag: Some("R"),
                },
            ],
            value: Slot {
                degree: -1,
                tag: Some("L"),
            },
        };
        assert_eq!(t.to_string(), "Λ²R→L");
        let mut e = vec![
            Slot { degree: -2, tag: None },
            Slot {
                degree: -1,
                tag: Some("L"),
            },
        ];
        e.sort();
        let t = SignatureTerm {
            entries: e,
            value: Slot { degree: 0, tag: None },
        };
        assert_eq!(t.to_string(), "L×(−2)→𝔮₀");
        assert_eq!(Slot { degree: 1, tag: None }.to_string(), "(+1)");
    }

    #[test]
    fn projective_plane() {
        let p = pd(2, &[1]);
        let c = harmonic_components(&p, &hodge(&p, 2).unwrap(), None).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(sigs(&c[0]), vec!["Λ²(−1)→(+1)"]);
        assert_eq!(c[0].homogeneity, 3);
    }

    #[test]
    fn projective_a3_is_curvature() {
        let p = pd(3, &[1]);
        let c = harmonic_components(&p, &hodge(&p, 2).unwrap(), None).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(sigs(&c[0]), vec!["Λ²(−1)→𝔮₀"]);
    }

    #[test]
    fn contact_a4() {
        let p = pd(4, &[1, 4]);
        let split = p.split_q1(&[4]).unwrap();
        let c = harmonic_components(&p, &hodge(&p, 2).unwrap(), Some(&split)).unwrap();
        let got: BTreeSet<(Vec<String>, i64)> = c.iter().map(|c| (sigs(c), c.homogeneity)).collect();
        let want: BTreeSet<(Vec<String>, i64)> = [
            (vec!["Λ²R→L".to_string()], 1),
            (vec!["Λ²L→R".to_string()], 1),
            (vec!["L×R→𝔮₀".to_string()], 2),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn agrees_with_hasse_prediction() {
        for (n, nodes) in [
            (2, vec![1]),
            (2, vec![1, 2]),
            (3, vec![1, 3]),
            (3, vec![2]),
            (3, vec![1, 2, 3]),
        ] {
            let p = pd(n, &nodes);
            let rs = p.algebra().root_system().clone();
            for k in 0..=3.min(p.dim_plus()) {
                let comps = harmonic_components(&p, &hodge(&p, k).unwrap(), None).unwrap();
                let mut got: Vec<_> = comps
                    .iter()
                    .map(|c| (c.dual_weight.clone(), c.dimension, c.homogeneity))
                    .collect();
                let mut want: Vec<_> = predict_h(&rs, &p, k)
                    .unwrap()
                    .entries
                    .into_iter()
                    .map(|e| (e.predicted_highest_weight, e.predicted_dimension, e.homogeneity))
                    .collect();
                got.sort();
                want.sort();
                assert_eq!(got, want, "A{n} {nodes:?} k={k}");
            }
        }
    }

    #[test]
    fn degree_zero_is_centralizer_of_abelian_minus() {
        // for A3 with node 2 crossed q_- is abelian, so ker ∂ on g is q_- itself
        let p = pd(3, &[2]);
        let c = harmonic_components(&p, &hodge(&p, 0).unwrap(), None).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].highest_weight, Weight(vec![1, -2, 1]));
        assert_eq!(c[0].dimension, 4);
        assert_eq!(c[0].homogeneity, -1);
    }
}
