use std::collections::BTreeSet;

use ssb::classify::{
    derived_equivalent, derived_normal_form, is_listed_normal_form, isomorphic, stably_equivalent_morita,
    verify_explicit_iso, Auditor, Evidence, Invariant, Outcome,
};
use ssb::families::FamilySpec;
use ssb::kernel::Field;
use ssb::SsbError;

fn spec(s: &str) -> FamilySpec {
    s.parse().unwrap()
}

fn grid() -> Vec<FamilySpec> {
    let mut out = BTreeSet::new();
    for p in 1..=3 {
        for q in 1..=3 {
            for r in 1..=3 {
                out.insert(FamilySpec::Gamma { p, q, r }.canonical().unwrap());
            }
            for s in 1..=3 {
                for t in 1..=3 {
                    if let Ok(x) = (FamilySpec::Lambda { p, q, s, t }).canonical() {
                        out.insert(x);
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

#[test]
fn normal_forms_are_idempotent_and_listed() {
    for ch in [0, 2, 3] {
        for x in grid() {
            let n = derived_normal_form(x, ch).unwrap();
            assert_eq!(derived_normal_form(n, ch).unwrap(), n, "{x}");
            assert!(is_listed_normal_form(n, ch), "{x} -> {n}");
        }
    }
}

#[test]
fn derived_equivalence_is_an_equivalence_relation() {
    let g = grid();
    for ch in [0, 2, 3] {
        let m: Vec<Vec<bool>> = g
            .iter()
            .map(|&x| g.iter().map(|&y| derived_equivalent(x, y, ch).unwrap().is_equivalent()).collect())
            .collect();
        for i in 0..g.len() {
            assert!(m[i][i]);
            for j in 0..g.len() {
                assert_eq!(m[i][j], m[j][i]);
                if m[i][j] {
                    for k in 0..g.len() {
                        assert!(!m[j][k] || m[i][k], "{} {} {}", g[i], g[j], g[k]);
                    }
                }
            }
        }
    }
}

#[test]
fn derived_implies_stable_and_partitions_agree() {
    let g = grid();
    for ch in [0, 2, 3] {
        for &x in &g {
            for &y in &g {
                let d = derived_equivalent(x, y, ch).unwrap();
                let s = stably_equivalent_morita(x, y, ch).unwrap();
                assert_eq!(d.result, s.result, "{x} {y}");
                assert!(s.cited_facts.iter().any(|f| f.key == "R"));
                if !d.is_equivalent() {
                    assert!(!matches!(d.evidence, Evidence::NormalForm { .. }));
                }
            }
        }
    }
}

#[test]
fn separators_reproduce_numerically() {
    let g = grid();
    let mut auditor = Auditor::new();
    for ch in [0, 2, 3] {
        for (i, &x) in g.iter().enumerate() {
            for &y in &g[i..] {
                for v in [derived_equivalent(x, y, ch).unwrap(), stably_equivalent_morita(x, y, ch).unwrap()] {
                    let rep = auditor.audit(&v).unwrap();
                    assert!(rep.passed(), "{v}: {rep:?}");
                }
            }
        }
    }
}

#[test]
fn listed_examples() {
    let v = derived_equivalent(spec("gamma(2,3,2)"), spec("gamma(3,2,2)"), 0).unwrap();
    assert_eq!(v.result, Outcome::Equivalent);

    let v = derived_equivalent(spec("gamma(2,2,3)"), spec("lambda(2,2,2,2)"), 2).unwrap();
    assert_eq!(v.result, Outcome::Inequivalent);
    assert_eq!(v.evidence, Evidence::Cited { key: "H" });

    let v = derived_equivalent(spec("gamma(2,4,1)"), spec("gamma(3,3,1)"), 0).unwrap();
    assert_eq!(v.separator(), Some((Invariant::Hh { degree: 2 }, 2, 1)));
    let rep = Auditor::new().audit(&v).unwrap();
    assert!(rep.passed(), "{rep:?}");

    let v = derived_equivalent(spec("lambda(1,3,2,2)"), spec("nakayama(4,2)"), 0).unwrap();
    assert_eq!(v.result, Outcome::Inequivalent);
    assert!(v.cited_facts.iter().any(|f| f.key == "MH"));

    let v = stably_equivalent_morita(spec("lambda(1,4,2,3)"), spec("lambda(2,3,3,2)"), 0).unwrap();
    assert_eq!(v.evidence, Evidence::NormalForm { normal_form: spec("lambda(1,4,2,3)") });

    let v = stably_equivalent_morita(spec("nakayama(3,2)"), spec("nakayama(3,3)"), 0).unwrap();
    assert_eq!(v.separator(), Some((Invariant::CartanDet, 7, 10)));

    let v = stably_equivalent_morita(spec("lambda(1,3,2,2)"), spec("nakayama(3,5)"), 0).unwrap();
    assert_eq!(v.result, Outcome::Inequivalent);
    assert!(v.cited_facts.iter().any(|f| f.key == "GR"));
    assert!(v.cited_facts.iter().any(|f| f.key == "MH"));
}

#[test]
fn gamma_111_and_lambda_1122() {
    for ch in [0, 3, 5, 7] {
        let v = isomorphic(spec("gamma(1,1,1)"), spec("lambda(1,1,2,2)"), ch).unwrap();
        assert_eq!(v.evidence, Evidence::ExplicitIso);
        assert!(verify_explicit_iso(Field::new(ch).unwrap()).unwrap().isomorphism);
    }
    let v = isomorphic(spec("gamma(1,1,1)"), spec("lambda(1,1,2,2)"), 2).unwrap();
    assert_eq!(v.separator(), Some((Invariant::Hh { degree: 1 }, 8, 5)));
    assert!(Auditor::new().audit(&v).unwrap().passed());
    assert!(matches!(verify_explicit_iso(Field::new(2).unwrap()), Err(SsbError::CharUnsupported(2))));
}

#[test]
fn isomorphism_classes_within_families() {
    let g = grid();
    let mut auditor = Auditor::new();
    for (i, &x) in g.iter().enumerate() {
        for &y in &g[i..] {
            let v = isomorphic(x, y, 3).unwrap();
            assert_eq!(v.is_equivalent(), x == y || v.evidence == Evidence::ExplicitIso, "{v}");
            assert!(auditor.audit(&v).unwrap().passed(), "{v}");
        }
    }
    // Λ(q,q;s,t) = Λ(q,q;t,s) is the only coincidence
    assert!(isomorphic(spec("lambda(2,2,1,3)"), spec("lambda(2,2,3,1)"), 0).unwrap().is_equivalent());
    assert!(!isomorphic(spec("lambda(1,2,2,3)"), spec("lambda(1,2,3,2)"), 0).unwrap().is_equivalent());
}

#[test]
fn nakayama_closed_forms() {
    let mut auditor = Auditor::new();
    for n in 1..=4 {
        for m in 1..=3 {
            let x = FamilySpec::Nakayama { n, m };
            for ch in [0, 2, 3] {
                for inv in [Invariant::CentreDim, Invariant::Hh { degree: 1 }, Invariant::CartanDet] {
                    let want = ssb::classify::predicted(inv, x, ch).unwrap();
                    assert_eq!(auditor.value(inv, x, ch).unwrap(), want, "{x} char {ch} {inv}");
                }
            }
        }
    }
}
