use ssb::families::{validate_structure, FamilySpec};
use ssb::invariants::{centre, commutator_subspace, kulshammer_report};
use ssb::kernel::Field;

fn spec(s: &str) -> FamilySpec {
    s.parse().unwrap()
}

#[test]
fn dimensions_match_closed_forms() {
    let f = Field::rationals();
    for s in [
        "gamma(1,1,1)",
        "gamma(2,3,2)",
        "gamma(1,3,2)",
        "lambda(1,1,2,2)",
        "lambda(2,3,1,3)",
        "lambda(1,2,3,2)",
        "lambda(1,2,3,2)",
        "nakayama(2,3)",
        "nakayama(1,1)",
    ] {
        let x = spec(s);
        let a = x.build(f).unwrap();
        assert_eq!(a.dim() as u64, x.expected_dim(), "{s}");
    }
}

#[test]
fn structure_checks() {
    let f = Field::new(3).unwrap();
    for (s, nonuni) in
        [("gamma(2,3,1)", 1), ("nakayama(3,2)", 0), ("lambda(2,2,2,2)", 1), ("gamma(1,1,1)", 1), ("nakayama(1,1)", 0)]
    {
        let a = spec(s).build(f).unwrap();
        let r = validate_structure(&a);
        assert!(r.all_ok(), "{s}: {r:?}");
        assert_eq!(r.nonuniserial_count, nonuni, "{s}");
    }
}

#[test]
fn kulshammer_char_two() {
    let f = Field::new(2).unwrap();
    let g = spec("gamma(2,2,3)").build(f).unwrap();
    let rep = kulshammer_report(&g, 1).unwrap();
    assert_eq!(rep.commutator_dim, 44);
    assert_eq!(rep.t_perp_dim, 4);
    assert_eq!(rep.quotient_dim, 2);
    assert_eq!(rep.quotient_radical_layers.get(1).copied().unwrap_or(0), 1);
    assert_eq!(commutator_subspace(&g).dim(), 44);
    assert_eq!(centre(&g).dim(), 6);
    // α + y^(M/2) lies in T_1^⊥, so for m = 2 the square of y is α in the quotient
    for (s, layers) in
        [("lambda(1,3,2,2)", vec![1, 1]), ("lambda(1,3,2,4)", vec![1, 1, 1]), ("lambda(1,3,4,4)", vec![1, 2, 1])]
    {
        let l = spec(s).build(f).unwrap();
        let rep = kulshammer_report(&l, 1).unwrap();
        assert_eq!(rep.quotient_radical_layers, layers, "{s}");
    }
}
