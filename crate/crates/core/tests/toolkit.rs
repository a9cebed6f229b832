use proptest::prelude::*;

use sumplex::ordering::violations;
use sumplex::toolkit::{
    edge, export_dot, gen_random_ordered_flag, ordered_flag_corpus, parse_complex, path, point,
    serialize_complex, ComplexDocument, Fixture,
};
use sumplex::{connected_sum_window, Error, Method, Window};

fn dot_counts(text: &str) -> (usize, usize) {
    let body: Vec<&str> = text.lines().filter(|l| l.starts_with("  ")).collect();
    let edges = body.iter().filter(|l| l.contains(" -- ")).count();
    (body.len() - edges, edges)
}

#[test]
fn dot_examples() {
    assert_eq!(dot_counts(&export_dot(point().complex())), (1, 0));
    assert_eq!(dot_counts(&export_dot(path(3).complex())), (3, 2));
    let sum = connected_sum_window(&edge(), &point(), Window::new(0, 1).unwrap(), Method::DirectRule)
        .unwrap();
    assert_eq!(dot_counts(&export_dot(sum.primary().complex())), (4, 5));
}

#[test]
fn dot_counts_match_complex() {
    for seed in 0..50 {
        let k = gen_random_ordered_flag(6, seed);
        assert_eq!(
            dot_counts(&export_dot(k.complex())),
            (k.complex().vertex_count(), k.complex().edge_count())
        );
    }
}

#[test]
fn generator_never_violates_axioms() {
    for seed in 0..10_000u64 {
        let n = 1 + (seed % 6) as usize;
        let k = gen_random_ordered_flag(n, seed);
        assert!(k.complex().is_flag());
        assert!(violations(k.complex(), &k.relation()).unwrap().is_empty());
    }
}

#[test]
fn generator_is_deterministic() {
    for seed in [0, 1, 99, u64::MAX] {
        assert_eq!(gen_random_ordered_flag(5, seed), gen_random_ordered_flag(5, seed));
        assert_eq!(
            serialize_complex(&gen_random_ordered_flag(5, seed)),
            serialize_complex(&gen_random_ordered_flag(5, seed))
        );
    }
    assert_eq!(gen_random_ordered_flag(1, 42), point());
}

#[test]
fn fixtures_are_valid() {
    for f in ["POINT", "EDGE", "PATH:1", "PATH:5"] {
        let k = f.parse::<Fixture>().unwrap().build();
        assert!(k.complex().is_flag());
        assert!(violations(k.complex(), &k.relation()).unwrap().is_empty());
    }
    assert!("PATH:0".parse::<Fixture>().is_err());
}

#[test]
fn connected_sum_output_round_trips() {
    let sum = connected_sum_window(&path(3), &edge(), Window::new(-1, 1).unwrap(), Method::Both).unwrap();
    let oc = sum.primary().ordered();
    let text = serialize_complex(oc);
    assert_eq!(&parse_complex(&text).unwrap(), oc);
    let doc = ComplexDocument::from_ordered(oc, "sum", "path by edge");
    assert_eq!(doc.to_ordered().unwrap(), *oc);
}

#[test]
fn corpus_round_trips() {
    for k in ordered_flag_corpus(4) {
        let text = serialize_complex(&k);
        let back = parse_complex(&text).unwrap();
        assert_eq!(back, k);
        assert_eq!(serialize_complex(&back), text);
    }
}

#[test]
fn validation_failure_is_not_a_syntax_error() {
    // an order pair between vertices that are no longer adjacent
    let mut doc = ComplexDocument::from_ordered(&edge(), "EDGE", "");
    doc.edges = Some(Vec::new());
    let text = doc.to_text();
    match parse_complex(&text) {
        Err(Error::ValidationFailed(report)) => assert!(!report.is_empty()),
        other => panic!("unexpected {other:?} for\n{text}"),
    }
}

proptest! {
    #[test]
    fn random_complexes_round_trip(n in 1usize..=7, seed in any::<u64>()) {
        let k = gen_random_ordered_flag(n, seed);
        let text = serialize_complex(&k);
        let back = parse_complex(&text).unwrap();
        prop_assert_eq!(serialize_complex(&back), text);
        prop_assert_eq!(back, k);
    }
}
