//! Nested pairs `q ⊂ p`: the inclusion `j`, the submodule `𝔼` of `C^2` for `q`,
//! insertion operators, and the twistor verdicts for harmonic curvature components.
//!
//! Insertion uses the shuffle form of the alternation:
//! `i_ψφ(X_0, …, X_k) = Σ_{i<j} (-1)^{i+j+1} φ(ψ(X_i, X_j) + q, X_0, …X̂_i…X̂_j…, X_k)`.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::chain::{codifferential_between, evaluate, laplacian, plus_pairings, sort_with_sign, ChainSpace, LinearMap};
use crate::components::{harmonic_components, HarmonicComponent};
use crate::error::{Error, Result};
use crate::grading::{NestedPair, Parabolic, Q1Split};
use crate::hodge::HodgeDecomposition;
use crate::linalg::{add_entry, Echelon, SparseMatrix, SparseVec};
use crate::scalar::{q, Q};

/// `j: Λ^k p_+ ⊗ g -> Λ^k q_+ ⊗ g`. A degree above `dim p_+` gives the map from zero.
pub fn inclusion_j(pair: &NestedPair, k: usize) -> Result<LinearMap> {
    let dom = Arc::new(ChainSpace::with_degree(&pair.p, k));
    let cod = Arc::new(ChainSpace::new(&pair.q, k)?);
    inclusion_between(pair, dom, cod)
}

fn inclusion_between(pair: &NestedPair, dom: Arc<ChainSpace>, cod: Arc<ChainSpace>) -> Result<LinearMap> {
    let to_q: Vec<usize> = dom
        .plus()
        .iter()
        .map(|&b| pair.q.plus_position(b).expect("p_+ lies in q_+"))
        .collect();
    let cols = (0..dom.dim())
        .map(|idx| {
            let (sp, b) = dom.split(idx);
            let s: Vec<usize> = dom.subset(sp).iter().map(|&t| to_q[t]).collect();
            // to_q is increasing, so s stays sorted
            let i = cod.index_of(&s, b).expect("subset");
            [(i, q(1))].into_iter().collect()
        })
        .collect();
    LinearMap::new(dom.clone(), cod.clone(), SparseMatrix::from_columns(cod.dim(), cols))
}

/// `∂*_q ∘ j - j ∘ ∂*_p` at one degree.
#[derive(Clone, Debug)]
pub struct IntertwiningCheck {
    pub k: usize,
    pub holds: bool,
    pub defect: SparseMatrix,
}

pub fn verify_intertwining(pair: &NestedPair, k: usize) -> Result<IntertwiningCheck> {
    if k == 0 {
        return Err(Error::DegreeOutOfRange {
            degree: 0,
            max: pair.q.dim_plus(),
        });
    }
    let p_k = Arc::new(ChainSpace::with_degree(&pair.p, k));
    let p_below = Arc::new(ChainSpace::with_degree(&pair.p, k - 1));
    let q_k = Arc::new(ChainSpace::new(&pair.q, k)?);
    let q_below = Arc::new(ChainSpace::new(&pair.q, k - 1)?);
    let j_k = inclusion_between(pair, p_k.clone(), q_k.clone())?;
    let j_below = inclusion_between(pair, p_below.clone(), q_below.clone())?;
    let dstar_q = codifferential_between(&pair.q, q_k, q_below)?;
    let dstar_p = codifferential_between(&pair.p, p_k, p_below)?;
    let defect = dstar_q
        .matrix
        .mul(&j_k.matrix)
        .sub(&j_below.matrix.mul(&dstar_p.matrix));
    Ok(IntertwiningCheck {
        k,
        holds: defect.is_zero(),
        defect,
    })
}

/// Both descriptions of `𝔼 ⊂ C^2`.
#[derive(Clone, Debug)]
pub struct SubmoduleE {
    pub space: Arc<ChainSpace>,
    /// Basis of the image of `j`.
    pub image: Vec<SparseVec>,
    /// Basis of the maps vanishing when one entry lies in `p ∩ q_-`.
    pub kernel: Vec<SparseVec>,
    pub agree: bool,
}

impl SubmoduleE {
    pub fn dim(&self) -> usize {
        self.image.len()
    }

    pub fn echelon(&self) -> Echelon {
        Echelon::from_vectors(&self.image)
    }
}

pub fn submodule_e(pair: &NestedPair) -> Result<SubmoduleE> {
    let j = inclusion_j(pair, 2)?;
    let space = j.codomain.clone();
    let image: Vec<SparseVec> = j.matrix.columns().to_vec();
    let kernel = vanishing_on_intersection(pair, &space)?;
    let agree = Echelon::from_vectors(&image).same_span(&Echelon::from_vectors(&kernel));
    Ok(SubmoduleE {
        space,
        image,
        kernel,
        agree,
    })
}

/// Joint kernel of `φ ↦ φ(X, Y)_c` for `X` in `p ∩ q_-`, `Y` in `q_-`, `c` in `g`.
fn vanishing_on_intersection(pair: &NestedPair, space: &ChainSpace) -> Result<Vec<SparseVec>> {
    let dim_g = space.dim_g();
    let probes: Vec<(usize, usize)> = pair
        .intersection()
        .iter()
        .flat_map(|&x| pair.q.minus().into_iter().map(move |y| (x, y)))
        .collect();
    let columns: Vec<SparseVec> = (0..space.dim())
        .into_par_iter()
        .map(|i| {
            let unit: SparseVec = [(i, q(1))].into_iter().collect();
            let mut col = SparseVec::new();
            for (r, &(x, y)) in probes.iter().enumerate() {
                let v = evaluate(&pair.q, space, &unit, &[x, y]).expect("q_- entries");
                for (c, a) in v {
                    add_entry(&mut col, r * dim_g + c, &a);
                }
            }
            col
        })
        .collect();
    let functionals = SparseMatrix::from_columns(probes.len() * dim_g, columns).transpose();
    let rows = Echelon::from_vectors(functionals.columns());
    Ok(rows.kernel(&(0..space.dim()).collect::<Vec<_>>()))
}

/// `φ ↦ i_ψφ` on `C^k`.
#[derive(Clone, Debug)]
pub struct InsertionOperator {
    pub psi: SparseVec,
    pub matrix: LinearMap,
}

/// For each position `u` of `q_+`: the pairs `t < t'` with the `f_u` part of
/// `ψ(X_t, X_t')`, already multiplied by `B(e_u, f_u)`.
struct PsiTable {
    by_value: Vec<Vec<(usize, usize, Q)>>,
}

impl PsiTable {
    fn new(pd: &Parabolic, psi_space: &ChainSpace, psi: &SparseVec) -> Self {
        let alg = pd.algebra();
        let pairings = plus_pairings(pd);
        let mut by_value = vec![Vec::new(); pd.dim_plus()];
        for (&i, c) in psi {
            let (sp, b) = psi_space.split(i);
            if pd.degree(b) >= 0 {
                continue;
            }
            let u = match alg.label(b) {
                crate::lie_algebra::BasisLabel::F(a) => pd.plus_position(alg.e(a)).expect("q_- value"),
                _ => unreachable!("negative degree vectors are f's"),
            };
            let s = psi_space.subset(sp);
            by_value[u].push((s[0], s[1], c * q(pairings[u])));
        }
        PsiTable { by_value }
    }
}

fn insertion_column(table: &PsiTable, dom: &ChainSpace, cod: &ChainSpace, idx: usize) -> SparseVec {
    let (sp, b) = dom.split(idx);
    let s = dom.subset(sp);
    let mut col = SparseVec::new();
    for (pu, &u) in s.iter().enumerate() {
        let rest: Vec<usize> = s.iter().copied().filter(|&x| x != u).collect();
        for (t, t2, c) in &table.by_value[u] {
            if rest.contains(t) || rest.contains(t2) {
                continue;
            }
            let mut seq = rest.clone();
            seq.push(*t);
            seq.push(*t2);
            let (sorted, _) = sort_with_sign(&seq).expect("distinct");
            let i = sorted.iter().position(|x| x == t).expect("present");
            let j = sorted.iter().position(|x| x == t2).expect("present");
            let sign = if (i + j + 1 + pu) % 2 == 0 { 1 } else { -1 };
            let r = cod.subset_position(&sorted).expect("subset");
            add_entry(&mut col, cod.index(r, b), &(c * q(sign)));
        }
    }
    col
}

fn psi_space(pd: &Parabolic) -> Result<ChainSpace> {
    ChainSpace::new(pd, 2)
}

pub fn insertion_operator(pd: &Parabolic, psi: &SparseVec, k: usize) -> Result<InsertionOperator> {
    let table = PsiTable::new(pd, &psi_space(pd)?, psi);
    let dom = Arc::new(ChainSpace::new(pd, k)?);
    let cod = Arc::new(ChainSpace::with_degree(pd, k + 1));
    let cols = (0..dom.dim())
        .into_par_iter()
        .map(|i| insertion_column(&table, &dom, &cod, i))
        .collect();
    let matrix = LinearMap::new(dom.clone(), cod.clone(), SparseMatrix::from_columns(cod.dim(), cols))?;
    Ok(InsertionOperator {
        psi: psi.clone(),
        matrix,
    })
}

/// `i_ψφ` for `ψ` in `C^2` and `φ` in `C^k`.
pub fn insertion(pd: &Parabolic, psi: &SparseVec, phi: &SparseVec, k: usize) -> Result<SparseVec> {
    let table = PsiTable::new(pd, &psi_space(pd)?, psi);
    let dom = ChainSpace::new(pd, k)?;
    let cod = ChainSpace::with_degree(pd, k + 1);
    let mut out = SparseVec::new();
    for (&i, a) in phi {
        for (r, c) in insertion_column(&table, &dom, &cod, i) {
            add_entry(&mut out, r, &(a * c));
        }
    }
    Ok(out)
}

/// Result of the two stability checks for `𝔼`.
#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub e_dim: usize,
    pub box_stable: bool,
    /// A vector of `𝔼` whose image under `□` leaves `𝔼`.
    pub box_witness: Option<SparseVec>,
    pub insertion_stable: bool,
    /// Basis positions `(ψ, φ)` in `𝔼` with `∂*(i_ψφ)` outside `𝔼`.
    pub insertion_witness: Option<(usize, usize)>,
}

impl StabilityReport {
    pub fn holds(&self) -> bool {
        self.box_stable && self.insertion_stable
    }
}

pub fn verify_e_stability(pair: &NestedPair) -> Result<StabilityReport> {
    let e = submodule_e(pair)?;
    if !e.agree {
        return Err(Error::Consistency("the two descriptions of E differ".into()));
    }
    let span = e.echelon();
    let boxq = laplacian(&pair.q, 2)?;
    let box_witness = e.image.iter().map(|v| boxq.apply(v)).find(|w| !span.contains(w));

    let insertion_witness = if pair.q.dim_plus() < 3 {
        None
    } else {
        let pd = &pair.q;
        let c2 = e.space.clone();
        let c3 = Arc::new(ChainSpace::new(pd, 3)?);
        let dstar = codifferential_between(pd, c3.clone(), c2.clone())?;
        let columns: Vec<usize> = e.image.iter().map(|v| *v.keys().next().expect("unit vector")).collect();
        let failures: Vec<Option<(usize, usize)>> = e
            .image
            .par_iter()
            .enumerate()
            .map(|(a, psi)| {
                let table = PsiTable::new(pd, &c2, psi);
                columns.iter().enumerate().find_map(|(bi, &idx)| {
                    let ins = insertion_column(&table, &c2, &c3, idx);
                    (!span.contains(&dstar.apply(&ins))).then_some((a, bi))
                })
            })
            .collect();
        failures.into_iter().flatten().next()
    };
    Ok(StabilityReport {
        e_dim: e.dim(),
        box_stable: box_witness.is_none(),
        box_witness,
        insertion_stable: insertion_witness.is_none(),
        insertion_witness,
    })
}

/// One harmonic component of `H^2` for `q` with its twistor flags.
#[derive(Clone, Debug)]
pub struct ComponentVerdict {
    pub component: HarmonicComponent,
    pub regular: bool,
    pub obstructs_integrability: bool,
    pub obstructs_descent: bool,
    /// The component lies in `𝔼 ∩ ker □`.
    pub in_e0: bool,
}

#[derive(Clone, Debug)]
pub struct TwistorReport {
    pub pair: NestedPair,
    pub split: Option<Q1Split>,
    pub components: Vec<ComponentVerdict>,
}

impl TwistorReport {
    /// Regular components obstructing integrability.
    pub fn integrability_obstructions(&self) -> impl Iterator<Item = &ComponentVerdict> {
        self.components
            .iter()
            .filter(|c| c.regular && c.obstructs_integrability)
    }

    /// Regular components obstructing descent.
    pub fn descent_obstructions(&self) -> impl Iterator<Item = &ComponentVerdict> {
        self.components.iter().filter(|c| c.regular && c.obstructs_descent)
    }
}

/// Classifies with the default split of `q`.
pub fn classify(pair: &NestedPair) -> Result<TwistorReport> {
    classify_with(pair, pair.q.default_split().as_ref())
}

pub fn classify_with(pair: &NestedPair, split: Option<&Q1Split>) -> Result<TwistorReport> {
    let hodge = HodgeDecomposition::compute(&pair.q, 2)?;
    let comps = harmonic_components(&pair.q, &hodge, split)?;
    let e = submodule_e(pair)?.echelon();
    let space = hodge.space.clone();
    let inter = pair.intersection().to_vec();
    let minus = pair.q.minus();
    let outside_p: HashSet<usize> = (0..space.dim_g()).filter(|&c| pair.p.degree(c) < 0).collect();
    let components = comps
        .into_par_iter()
        .map(|component| {
            let mut integrability = false;
            let mut descent = false;
            for phi in &component.basis {
                for &x in &inter {
                    for &y in &minus {
                        let v = evaluate(&pair.q, &space, phi, &[x, y])?;
                        if v.is_empty() {
                            continue;
                        }
                        descent = true;
                        if inter.contains(&y) && v.keys().any(|c| outside_p.contains(c)) {
                            integrability = true;
                        }
                    }
                }
            }
            let in_e0 = component.basis.iter().all(|v| e.contains(v));
            Ok(ComponentVerdict {
                regular: component.homogeneity >= 1,
                obstructs_integrability: integrability,
                obstructs_descent: descent,
                in_e0,
                component,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TwistorReport {
        pair: pair.clone(),
        split: split.cloned(),
        components,
    })
}
