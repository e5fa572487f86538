//! Reports for the `parabolic` command line tool.
//!
//! A [`JobSpec`] is run by [`run_grading`], [`run_h2`] or [`run_twistor`] into a
//! [`Report`], which renders as text or as JSON with sorted keys.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use parabolic::chain::LocalComplex;
use parabolic::components::{harmonic_components, HarmonicComponent};
use parabolic::grading::{NestedPair, Parabolic, Q1Split};
use parabolic::hodge::{adjointness, HodgeDecomposition};
use parabolic::kostant::predict_h;
use parabolic::lie_algebra::LieAlgebra;
use parabolic::scalar::to_pq;
use parabolic::twistor::{classify_with, submodule_e, verify_e_stability, verify_intertwining};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub algebra_type: char,
    pub rank: usize,
    pub crossed_q: Vec<usize>,
    pub crossed_p: Option<Vec<usize>>,
    pub degree: usize,
    pub format: Format,
    pub output_path: Option<PathBuf>,
}

impl JobSpec {
    pub fn new(algebra_type: char, rank: usize, crossed_q: &[usize]) -> Self {
        JobSpec {
            algebra_type,
            rank,
            crossed_q: crossed_q.to_vec(),
            crossed_p: None,
            degree: 2,
            format: Format::Text,
            output_path: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("internal: {0}")]
    Internal(String),
    #[error("oracle mismatch\nharmonic:  {harmonic:?}\npredicted: {predicted:?}")]
    OracleMismatch {
        harmonic: Vec<String>,
        predicted: Vec<String>,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Internal(_) => 2,
            CliError::OracleMismatch { .. } => 3,
        }
    }
}

impl From<parabolic::Error> for CliError {
    fn from(e: parabolic::Error) -> Self {
        use parabolic::Error as E;
        match e {
            E::InvalidType { .. }
            | E::IndexOutOfRange { .. }
            | E::InvalidNodes { .. }
            | E::NotNested { .. }
            | E::DegreeOutOfRange { .. }
            | E::Precondition(_) => CliError::Usage(e.to_string()),
            E::InvalidCartan(_) | E::DimensionMismatch { .. } | E::Consistency(_) => CliError::Internal(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub algebra: String,
    pub dynkin: String,
    /// Crossed nodes of the larger parabolic, present for twistor jobs.
    pub sigma: Option<Vec<usize>>,
    /// Crossed nodes of the parabolic whose chains are computed.
    pub sigma_tilde: Vec<usize>,
    pub conventions: Vec<String>,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedPiece {
    pub degree: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSummary {
    pub inner: Vec<usize>,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingSummary {
    pub depth: i64,
    pub dims: Vec<GradedPiece>,
    pub split: Option<SplitSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub degree: usize,
    /// Dimensions of `C^{k-1}`, `C^k`, `C^{k+1}` where defined.
    pub chain_dims: BTreeMap<String, usize>,
    pub ranks: BTreeMap<String, usize>,
    pub im_d: usize,
    pub ker_box: usize,
    pub im_dstar: usize,
    pub harmonic_by_homogeneity: BTreeMap<String, usize>,
    /// `c` with `∂ᵀ G = c G ∂*` against the Killing-type inner product.
    pub adjointness_constant: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub name: Option<String>,
    pub weight: Vec<i64>,
    pub dual_weight: Vec<i64>,
    pub dimension: usize,
    pub homogeneity: i64,
    pub regular: bool,
    pub signature: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleEntry {
    pub weight: Vec<i64>,
    pub dimension: usize,
    pub homogeneity: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleStatus {
    pub agree: bool,
    pub predicted: Vec<OracleEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntertwiningResult {
    pub degree: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: Option<String>,
    pub signature: Vec<String>,
    pub homogeneity: i64,
    pub regular: bool,
    pub obstructs_integrability: bool,
    pub obstructs_descent: bool,
    pub in_e0: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistorSummary {
    pub sigma: Vec<usize>,
    pub sigma_tilde: Vec<usize>,
    pub intersection_dim: usize,
    pub e_dim: usize,
    pub e_descriptions_agree: bool,
    pub intertwining: Vec<IntertwiningResult>,
    pub box_stable: bool,
    pub insertion_stable: bool,
    pub verdicts: Vec<Verdict>,
}

impl TwistorSummary {
    pub fn checks_hold(&self) -> bool {
        self.e_descriptions_agree
            && self.box_stable
            && self.insertion_stable
            && self.intertwining.iter().all(|c| c.holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub meta: Meta,
    pub grading: GradingSummary,
    pub homology: Option<HomologySummary>,
    pub components: Vec<ComponentReport>,
    pub oracle: Option<OracleStatus>,
    pub twistor: Option<TwistorSummary>,
}

const CONVENTIONS: [&str; 4] = [
    "nodes are numbered from 1, left to right",
    "weights are Dynkin labels",
    "chains are Λ^k q_+ ⊗ g; harmonic weights are highest weights there, dual weights are -w0 of the Levi applied to them",
    "L is the degree -1 part with zero coefficient on the inner crossed node",
];

fn algebra(spec: &JobSpec) -> Result<Arc<LieAlgebra>> {
    Ok(Arc::new(LieAlgebra::of_type(spec.algebra_type, spec.rank)?))
}

fn dynkin_row(rank: usize, crossed: &[usize]) -> String {
    (1..=rank)
        .map(|n| if crossed.contains(&n) { "×" } else { "o" })
        .collect::<Vec<_>>()
        .join("─")
}

fn sorted(nodes: &[usize]) -> Vec<usize> {
    let mut v = nodes.to_vec();
    v.sort_unstable();
    v
}

fn meta(spec: &JobSpec) -> Meta {
    Meta {
        algebra: format!("{}{}", spec.algebra_type, spec.rank),
        dynkin: dynkin_row(spec.rank, &spec.crossed_q),
        sigma: spec.crossed_p.as_deref().map(sorted),
        sigma_tilde: sorted(&spec.crossed_q),
        conventions: CONVENTIONS.iter().map(|s| s.to_string()).collect(),
        version: VERSION.to_string(),
    }
}

fn grading_summary(pd: &Parabolic) -> GradingSummary {
    let depth = pd.depth();
    let alg = pd.algebra();
    let dims = pd
        .graded_dims()
        .into_iter()
        .enumerate()
        .map(|(i, dim)| GradedPiece {
            degree: i as i64 - depth,
            dim,
        })
        .collect();
    let split = pd.default_split().map(|s| SplitSummary {
        inner: s.inner.clone(),
        left: s.left.iter().map(|&b| alg.label_name(b)).collect(),
        right: s.right.iter().map(|&b| alg.label_name(b)).collect(),
    });
    GradingSummary { depth, dims, split }
}

fn parabolic(spec: &JobSpec) -> Result<Parabolic> {
    if spec.crossed_q.is_empty() {
        return Err(CliError::Usage("at least one crossed node is required".into()));
    }
    Ok(Parabolic::new(algebra(spec)?, &spec.crossed_q)?)
}

pub fn run_grading(spec: &JobSpec) -> Result<Report> {
    let pd = parabolic(spec)?;
    Ok(Report {
        meta: meta(spec),
        grading: grading_summary(&pd),
        homology: None,
        components: Vec::new(),
        oracle: None,
        twistor: None,
    })
}

/// Names used for the curvature components of the classical examples, matched by
/// signature under the default split.
pub fn known_name(letter: char, rank: usize, crossed: &[usize], signature: &[String]) -> Option<String> {
    let table: &[(&str, &str)] = match (letter, sorted(crossed).as_slice()) {
        ('A', [1, n]) if *n == rank && rank >= 3 => &[("Λ²R→L", "T^R"), ("Λ²L→R", "T^L"), ("L×R→𝔮₀", "ρ")],
        ('A', [1, 2]) if rank >= 4 => &[("L×(−2)→R", "T"), ("R×(−2)→𝔮₀", "ρ"), ("Λ²R→(−2)", "τ")],
        _ => return None,
    };
    table
        .iter()
        .find(|(sig, _)| signature.iter().any(|s| s == sig))
        .map(|(_, name)| name.to_string())
}

fn component_report(spec: &JobSpec, c: &HarmonicComponent) -> ComponentReport {
    let signature = c.signature_strings();
    ComponentReport {
        name: known_name(spec.algebra_type, spec.rank, &spec.crossed_q, &signature),
        weight: c.highest_weight.0.clone(),
        dual_weight: c.dual_weight.0.clone(),
        dimension: c.dimension,
        homogeneity: c.homogeneity,
        regular: c.is_regular(),
        signature,
    }
}

fn homology_summary(pd: &Parabolic, hodge: &HodgeDecomposition) -> Result<HomologySummary> {
    let k = hodge.k;
    let local = LocalComplex::new(pd, k)?;
    local.verify_squares()?;
    let mut chain_dims = BTreeMap::new();
    if let Some(s) = &local.below {
        chain_dims.insert(format!("C{}", k - 1), s.dim());
    }
    chain_dims.insert(format!("C{k}"), local.space.dim());
    if let Some(s) = &local.above {
        chain_dims.insert(format!("C{}", k + 1), s.dim());
    }
    // ranks follow from the Hodge decomposition: rank ∂*_k = rank ∂_{k-1}, rank ∂_k = rank ∂*_{k+1}
    let mut ranks = BTreeMap::new();
    if k > 0 {
        ranks.insert(format!("d{}", k - 1), hodge.dim_im_d());
        ranks.insert(format!("dstar{k}"), hodge.dim_im_d());
    }
    if local.above.is_some() {
        ranks.insert(format!("d{k}"), hodge.dim_im_dstar());
        ranks.insert(format!("dstar{}", k + 1), hodge.dim_im_dstar());
    }
    let adj = if k < pd.dim_plus() {
        adjointness(pd, k)?.global().map(|c| to_pq(&c))
    } else {
        None
    };
    Ok(HomologySummary {
        degree: k,
        chain_dims,
        ranks,
        im_d: hodge.dim_im_d(),
        ker_box: hodge.dim_ker_box(),
        im_dstar: hodge.dim_im_dstar(),
        harmonic_by_homogeneity: hodge
            .harmonic_by_homogeneity()
            .into_iter()
            .map(|(h, d)| (h.to_string(), d))
            .collect(),
        adjointness_constant: adj,
    })
}

fn oracle_key(w: &[i64], dim: usize, h: i64) -> String {
    format!("{w:?} dim {dim} homogeneity {h}")
}

fn oracle_status(pd: &Parabolic, k: usize, comps: &[HarmonicComponent]) -> Result<OracleStatus> {
    let rs = pd.algebra().root_system();
    let mut predicted: Vec<OracleEntry> = predict_h(rs, pd, k)?
        .entries
        .into_iter()
        .map(|e| OracleEntry {
            weight: e.predicted_highest_weight.0,
            dimension: e.predicted_dimension,
            homogeneity: e.homogeneity,
        })
        .collect();
    predicted.sort_by(|a, b| (a.homogeneity, &a.weight).cmp(&(b.homogeneity, &b.weight)));
    let mut want: Vec<String> = predicted
        .iter()
        .map(|e| oracle_key(&e.weight, e.dimension, e.homogeneity))
        .collect();
    let mut got: Vec<String> = comps
        .iter()
        .map(|c| oracle_key(&c.dual_weight.0, c.dimension, c.homogeneity))
        .collect();
    want.sort();
    got.sort();
    if want != got {
        return Err(CliError::OracleMismatch {
            harmonic: got,
            predicted: want,
        });
    }
    Ok(OracleStatus { agree: true, predicted })
}

pub fn run_h2(spec: &JobSpec) -> Result<Report> {
    let pd = parabolic(spec)?;
    let k = spec.degree;
    if k > pd.dim_plus() {
        return Err(CliError::Usage(format!(
            "degree {k} exceeds dim q_+ = {}",
            pd.dim_plus()
        )));
    }
    let hodge = HodgeDecomposition::compute(&pd, k)?;
    let split = pd.default_split();
    let comps = harmonic_components(&pd, &hodge, split.as_ref())?;
    let oracle = oracle_status(&pd, k, &comps)?;
    Ok(Report {
        meta: meta(spec),
        grading: grading_summary(&pd),
        homology: Some(homology_summary(&pd, &hodge)?),
        components: comps.iter().map(|c| component_report(spec, c)).collect(),
        oracle: Some(oracle),
        twistor: None,
    })
}

pub fn run_twistor(spec: &JobSpec) -> Result<Report> {
    let Some(crossed_p) = spec.crossed_p.as_deref() else {
        return Err(CliError::Usage("twistor jobs need --crossed-p".into()));
    };
    if crossed_p.is_empty() || !crossed_p.iter().all(|n| spec.crossed_q.contains(n)) {
        return Err(CliError::Usage(format!(
            "{crossed_p:?} is not a nonempty subset of {:?}",
            spec.crossed_q
        )));
    }
    if sorted(crossed_p) == sorted(&spec.crossed_q) {
        return Err(CliError::Usage(
            "--crossed-p must be a proper subset of --crossed-q".into(),
        ));
    }
    let pair = NestedPair::new(algebra(spec)?, crossed_p, &spec.crossed_q)?;
    let split: Option<Q1Split> = pair.q.default_split();
    let report = classify_with(&pair, split.as_ref())?;
    let e = submodule_e(&pair)?;
    let stability = verify_e_stability(&pair)?;
    let intertwining = (1..=3.min(pair.q.dim_plus()))
        .map(|k| {
            Ok(IntertwiningResult {
                degree: k,
                holds: verify_intertwining(&pair, k)?.holds,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let comps: Vec<HarmonicComponent> = report.components.iter().map(|v| v.component.clone()).collect();
    let oracle = oracle_status(&pair.q, 2, &comps)?;
    let verdicts = report
        .components
        .iter()
        .map(|v| {
            let c = component_report(spec, &v.component);
            Verdict {
                name: c.name,
                signature: c.signature,
                homogeneity: v.component.homogeneity,
                regular: v.regular,
                obstructs_integrability: v.obstructs_integrability,
                obstructs_descent: v.obstructs_descent,
                in_e0: v.in_e0,
            }
        })
        .collect();
    Ok(Report {
        meta: meta(spec),
        grading: grading_summary(&pair.q),
        homology: None,
        components: comps.iter().map(|c| component_report(spec, c)).collect(),
        oracle: Some(oracle),
        twistor: Some(TwistorSummary {
            sigma: sorted(crossed_p),
            sigma_tilde: sorted(&spec.crossed_q),
            intersection_dim: pair.intersection().len(),
            e_dim: e.dim(),
            e_descriptions_agree: e.agree,
            intertwining,
            box_stable: stability.box_stable,
            insertion_stable: stability.insertion_stable,
            verdicts,
        }),
    })
}

/// JSON with sorted keys, two-space indent and a trailing newline.
pub fn to_json(report: &Report) -> Result<String> {
    let value = serde_json::to_value(report).map_err(|e| CliError::Internal(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&value).map_err(|e| CliError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(s: &str) -> Result<Report> {
    serde_json::from_str(s).map_err(|e| CliError::Usage(e.to_string()))
}

fn weight(w: &[i64]) -> String {
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn to_text(report: &Report) -> String {
    let mut out = String::new();
    let m = &report.meta;
    let _ = writeln!(out, "parabolic {}", m.version);
    let _ = writeln!(out, "algebra   {}", m.algebra);
    let _ = writeln!(out, "dynkin    {}", m.dynkin);
    if let Some(s) = &m.sigma {
        let _ = writeln!(out, "sigma     {s:?}");
    }
    let _ = writeln!(out, "crossed   {:?}", m.sigma_tilde);
    let g = &report.grading;
    let _ = writeln!(out, "\ngrading depth {}", g.depth);
    for p in &g.dims {
        let _ = writeln!(out, "  g[{:+}]  {}", p.degree, p.dim);
    }
    if let Some(s) = &g.split {
        let _ = writeln!(
            out,
            "  split at {:?}: L = {}  R = {}",
            s.inner,
            s.left.join(" "),
            s.right.join(" ")
        );
    }
    if let Some(h) = &report.homology {
        let _ = writeln!(out, "\nhomology in degree {}", h.degree);
        for (name, d) in &h.chain_dims {
            let _ = writeln!(out, "  dim {name} = {d}");
        }
        for (name, r) in &h.ranks {
            let _ = writeln!(out, "  rank {name} = {r}");
        }
        let _ = writeln!(
            out,
            "  im ∂ = {}  ker □ = {}  im ∂* = {}",
            h.im_d, h.ker_box, h.im_dstar
        );
        for (hom, d) in &h.harmonic_by_homogeneity {
            let _ = writeln!(out, "  harmonic in homogeneity {hom}: {d}");
        }
        if let Some(c) = &h.adjointness_constant {
            let _ = writeln!(out, "  adjointness constant {c}");
        }
    }
    if !report.components.is_empty() {
        let _ = writeln!(out, "\ncomponents");
        for c in &report.components {
            let _ = writeln!(
                out,
                "  {:<4} weight {}  dual {}  dim {}  homogeneity {}{}  {}",
                c.name.as_deref().unwrap_or("-"),
                weight(&c.weight),
                weight(&c.dual_weight),
                c.dimension,
                c.homogeneity,
                if c.regular { "" } else { " (not regular)" },
                c.signature.join(", ")
            );
        }
    }
    if let Some(o) = &report.oracle {
        let _ = writeln!(
            out,
            "\nkostant oracle: {} ({} predicted)",
            if o.agree { "agrees" } else { "disagrees" },
            o.predicted.len()
        );
    }
    if let Some(t) = &report.twistor {
        let _ = writeln!(out, "\ntwistor {:?} ⊂ {:?}", t.sigma, t.sigma_tilde);
        let _ = writeln!(out, "  dim p ∩ q_- = {}  dim E = {}", t.intersection_dim, t.e_dim);
        let _ = writeln!(
            out,
            "  E as image of j and as vanishing maps agree: {}",
            yes_no(t.e_descriptions_agree)
        );
        for c in &t.intertwining {
            let _ = writeln!(out, "  ∂*∘j = j∘∂* in degree {}: {}", c.degree, yes_no(c.holds));
        }
        let _ = writeln!(out, "  □(E) ⊆ E: {}", yes_no(t.box_stable));
        let _ = writeln!(out, "  ∂*(i_ψ φ) ∈ E: {}", yes_no(t.insertion_stable));
        let _ = writeln!(out, "  verdicts");
        for v in &t.verdicts {
            let _ = writeln!(
                out,
                "    {:<4} {:<14} homogeneity {}{}  integrability {}  descent {}",
                v.name.as_deref().unwrap_or("-"),
                v.signature.join(", "),
                v.homogeneity,
                if v.regular { "" } else { " (not regular)" },
                yes_no(v.obstructs_integrability),
                yes_no(v.obstructs_descent)
            );
        }
    }
    out
}

pub fn render(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(to_text(report)),
        Format::Json => to_json(report),
    }
}
