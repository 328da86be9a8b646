use proptest::prelude::*;

use ssb::dsl::{emit, parse_document, parse_presentation, to_dot, SourceContent};
use ssb::families::FamilySpec;
use ssb::kernel::Field;
use ssb::SsbError;

fn family() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (1u32..4, 1u32..4, 1u32..4).prop_map(|(p, q, r)| FamilySpec::Gamma { p, q, r }),
        (1u32..4, 1u32..4, 1u32..5, 1u32..5)
            .prop_map(|(p, q, s, t)| FamilySpec::Lambda { p, q, s, t })
            .prop_filter("valid", |x| x.canonical().is_ok()),
        (1u32..4, 1u32..4).prop_map(|(n, m)| FamilySpec::Nakayama { n, m }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn family_strings_round_trip(x in family()) {
        let back: FamilySpec = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
        match parse_document(&x.to_string(), 0).unwrap().content {
            SourceContent::Family(f) => prop_assert_eq!(f, x),
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn emitted_presentations_reparse(x in family(), ch in prop::sample::select(vec![0u64, 2, 3, 5])) {
        let p = x.presentation(Field::new(ch).unwrap()).unwrap();
        let mut back = parse_presentation(&emit(&p), 0).unwrap();
        prop_assert_eq!(back.family, None);
        back.family = p.family;
        prop_assert_eq!(back, p);
    }
}

#[test]
fn endpoint_mismatch_is_a_validation_error() {
    let doc =
        "algebra { vertices = [1, 2]\n arrows = [ a: 1 -> 2, b: 2 -> 1, c: 2 -> 2 ]\n relations = [ a*b - b*a*c ] }";
    assert!(matches!(parse_presentation(doc, 0), Err(SsbError::ValidationError(_))));
}

#[test]
fn bad_characteristic_reports_position() {
    let doc = "algebra {\n  char = 4\n  vertices = [1]\n}";
    match parse_presentation(doc, 0) {
        Err(SsbError::ParseError { line, col, .. }) => assert_eq!((line, col), (2, 10)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn dot_uses_vertex_labels() {
    let p = FamilySpec::Gamma { p: 2, q: 3, r: 1 }.presentation(Field::rationals()).unwrap();
    let dot = to_dot(&p, "g");
    for v in 1..=4 {
        assert!(dot.contains(&format!("\"{v}\";")), "{dot}");
    }
    assert_eq!(dot.matches("->").count(), 5);
}
