mod common;

use std::collections::HashMap;

use argstrength::dsl::ParseErrorKind;
use argstrength::model::World;
use argstrength::{parse_argument, parse_rational, ratio, render_argument, render_rational, Formula};
use proptest::prelude::*;

#[test]
fn de_morgan_exhaustive() {
    for n in 1..=10 {
        let atoms = common::atom_names(n.min(8));
        let atoms: Vec<String> = if n > 8 { (0..n).map(|i| format!("X{i}")).collect() } else { atoms };
        let (a, b) = (Formula::atom(atoms[0].clone()), Formula::atom(atoms[n - 1].clone()));
        let lhs = a.clone().and(b.clone()).not();
        let rhs = a.clone().not().or(b.clone().not());
        let lhs_or = a.clone().or(b.clone()).not();
        let rhs_or = a.not().and(b.not());
        for bits in 0..1u64 << n {
            let view = World(bits).view(&atoms);
            assert_eq!(lhs.evaluate(&view), rhs.evaluate(&view));
            assert_eq!(lhs_or.evaluate(&view), rhs_or.evaluate(&view));
        }
    }
}

#[test]
fn de_morgan_on_random_subformulas() {
    let mut rng = common::rng(3);
    let atoms = common::atom_names(4);
    for _ in 0..200 {
        let (f, g) = (common::random_formula(&mut rng, &atoms, 3), common::random_formula(&mut rng, &atoms, 3));
        let lhs = f.clone().and(g.clone()).not();
        let rhs = f.not().or(g.not());
        for bits in 0..16 {
            let view = World(bits).view(&atoms);
            assert_eq!(lhs.evaluate(&view).unwrap(), rhs.evaluate(&view).unwrap());
        }
    }
}

#[test]
fn evaluation_against_a_map() {
    let f = Formula::atom("T").implies(Formula::atom("H"));
    let mut world = HashMap::new();
    world.insert("T".to_string(), true);
    world.insert("H".to_string(), false);
    assert_eq!(f.evaluate(&world), Ok(false));
    world.insert("H".to_string(), true);
    assert_eq!(f.evaluate(&world), Ok(true));
}

#[test]
fn decimal_literals_are_exact() {
    assert_eq!(parse_rational("0.33").unwrap(), ratio(33, 100));
    assert_eq!(parse_rational(&render_rational(&ratio(1, 3))).unwrap(), ratio(1, 3));
    assert_eq!(parse_rational(&render_rational(&ratio(67, 100))).unwrap(), ratio(67, 100));
}

#[test]
fn every_parse_error_has_a_span_inside_the_document() {
    let documents = [
        "",
        "atoms: A\n",
        "atoms: A\nconclusion: P(Q)",
        "atoms: A\nconclusion: P(A)\nconclusion: P(A)",
        "atoms: A\npremise: P(A) = 1.5\nconclusion: P(A)",
        "atoms: A\npremise: P(A) = \nconclusion: P(A)",
        "atoms: A\nbogus: x\nconclusion: P(A)",
        "atoms: A\nconstraint: A and not A\nconclusion: P(A)",
        "atoms: A\nconclusion: P(A | A and not A)",
        "atoms: A, B\nconclusion: P((A or B)",
    ];
    for doc in documents {
        let err = parse_argument(doc).unwrap_err();
        let lines: Vec<&str> = doc.split('\n').collect();
        assert!(err.span.line >= 1 && err.span.line <= lines.len(), "{doc:?}: {err}");
        let line = lines[err.span.line - 1];
        assert!(err.span.column >= 1 && err.span.column <= line.chars().count() + 1, "{doc:?}: {err}");
    }
    let err = parse_argument("atoms: A\nconclusion: P(A)\nconclusion: P(A)").unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::DuplicateConclusion);
}

fn respace(text: &str, seed: u64) -> String {
    // widen every existing run of spaces and pad around punctuation
    let mut out = String::new();
    let mut rng = common::rng(seed);
    for ch in text.chars() {
        let pad = |rng: &mut rand_chacha::ChaCha8Rng| " ".repeat(rand::Rng::random_range(rng, 0..3));
        match ch {
            '(' | ')' | ',' | '[' | ']' | '=' | '|' => {
                out.push_str(&pad(&mut rng));
                out.push(ch);
                out.push_str(&pad(&mut rng));
            }
            ' ' => out.push_str(&" ".repeat(rand::Rng::random_range(&mut rng, 1..4))),
            _ => out.push(ch),
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn round_trip_random_arguments(seed in any::<u64>()) {
        let arg = common::random_valid_argument(&mut common::rng(seed));
        let text = render_argument(&arg);
        prop_assert_eq!(parse_argument(&text).unwrap(), arg, "{}", text);
    }

    #[test]
    fn spacing_does_not_matter(seed in any::<u64>(), pad_seed in any::<u64>()) {
        let arg = common::random_valid_argument(&mut common::rng(seed));
        let text = render_argument(&arg);
        // labels are raw text, so only respace the structured lines
        let spaced: Vec<String> = text
            .lines()
            .map(|l| if l.starts_with("label:") { l.to_string() } else { respace(l, pad_seed) })
            .collect();
        prop_assert_eq!(parse_argument(&spaced.join("\n")).unwrap(), arg);
    }
}
