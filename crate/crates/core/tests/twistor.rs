use std::sync::Arc;

use parabolic::grading::NestedPair;
use parabolic::lie_algebra::LieAlgebra;
use parabolic::twistor::{
    classify, submodule_e, verify_e_stability, verify_intertwining, ComponentVerdict, TwistorReport,
};

fn pair(n: usize, p: &[usize], q: &[usize]) -> NestedPair {
    NestedPair::new(Arc::new(LieAlgebra::of_type('A', n).unwrap()), p, q).unwrap()
}

fn by_signature<'a>(r: &'a TwistorReport, sig: &str) -> &'a ComponentVerdict {
    r.components
        .iter()
        .find(|c| c.component.signature_strings().iter().any(|s| s == sig))
        .unwrap_or_else(|| panic!("no component with {sig}"))
}

fn check_invariants(r: &TwistorReport) {
    let line = r.pair.intersection().len() == 1;
    for c in &r.components {
        assert!(!c.obstructs_integrability || c.obstructs_descent);
        assert_eq!(!c.obstructs_descent, c.in_e0);
        if line {
            assert!(!c.obstructs_integrability);
        }
    }
}

#[test]
fn lagrangean_contact_verdicts() {
    for n in 4..=5 {
        let r = classify(&pair(n, &[1], &[1, n])).unwrap();
        check_invariants(&r);
        assert_eq!(r.components.len(), 3);
        let tr = by_signature(&r, "Λ²R→L");
        let tl = by_signature(&r, "Λ²L→R");
        let rho = by_signature(&r, "L×R→𝔮₀");
        assert!(tr.regular && tr.obstructs_integrability && tr.obstructs_descent);
        assert!(rho.regular && !rho.obstructs_integrability && rho.obstructs_descent);
        assert!(tl.regular && !tl.obstructs_integrability && !tl.obstructs_descent);
    }
}

#[test]
fn path_geometry_verdicts() {
    for n in 3..=4 {
        let r = classify(&pair(n + 1, &[1], &[1, 2])).unwrap();
        check_invariants(&r);
        assert_eq!(r.components.len(), 3);
        let tau = by_signature(&r, "Λ²R→(−2)");
        let rho = by_signature(&r, "R×(−2)→𝔮₀");
        let t = by_signature(&r, "L×(−2)→R");
        assert_eq!(tau.component.homogeneity, 0);
        assert!(!tau.regular);
        assert!(rho.regular && rho.obstructs_descent && !rho.obstructs_integrability);
        assert!(t.regular && !t.obstructs_descent);
        assert_eq!(r.integrability_obstructions().count(), 0);
        assert_eq!(r.descent_obstructions().count(), 1);

        let hat = classify(&pair(n + 1, &[2], &[1, 2])).unwrap();
        check_invariants(&hat);
        assert_eq!(hat.integrability_obstructions().count(), 0);
        let names: Vec<String> = hat
            .descent_obstructions()
            .flat_map(|c| c.component.signature_strings())
            .collect();
        assert_eq!(names, vec!["L×(−2)→R".to_string()]);
    }
}

#[test]
fn intertwining_and_stability() {
    for (n, p, q) in [
        (2, vec![1], vec![1, 2]),
        (4, vec![1], vec![1, 4]),
        (4, vec![1, 4], vec![1, 4]),
    ] {
        let pr = pair(n, &p, &q);
        for k in 1..=3 {
            assert!(verify_intertwining(&pr, k).unwrap().holds, "A{n} {p:?} {q:?} k={k}");
        }
        let e = submodule_e(&pr).unwrap();
        assert!(e.agree);
        let r = verify_e_stability(&pr).unwrap();
        assert!(r.holds(), "{r:?}");
    }
}
