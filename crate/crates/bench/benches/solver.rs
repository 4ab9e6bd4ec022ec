use std::hint::black_box;

use argstrength::ellsberg::{table1, Variant};
use argstrength::{
    brute_force_bounds, parse_argument, propagate_bounds, ratio, Argument, Assessment, ConditionalEvent, Formula,
};
use criterion::{criterion_group, criterion_main, Criterion};

fn modus_ponens() -> Argument {
    let (t, h) = (Formula::atom("T"), Formula::atom("H"));
    Argument::new(["T", "H"], ConditionalEvent::unconditional(h.clone()))
        .with_premise(Assessment::point(ConditionalEvent::new(h, t.clone()), ratio(9, 10)))
        .with_premise(Assessment::point(ConditionalEvent::unconditional(t), ratio(4, 5)))
}

// three atoms, six admissible worlds, mixed conditional premises
const SIX_WORLDS: &str = "\
atoms: A, B, C
constraint: not (A and B and C) and (A or B or C)
premise: P(A | B or C) in [0.3, 0.6]
premise: P(B and not C) = 0.25
premise: P(C -> A) in [0.5, 0.9]
premise: P(B | A) = 0.4
conclusion: P(A and C | B or C)
";

fn solver(c: &mut Criterion) {
    let mp = modus_ponens();
    c.bench_function("propagate/modus_ponens", |b| b.iter(|| propagate_bounds(black_box(&mp)).unwrap()));

    c.bench_function("propagate/ellsberg_table", |b| b.iter(|| table1(black_box(Variant::Decimal)).unwrap()));

    let six = parse_argument(SIX_WORLDS).unwrap();
    c.bench_function("propagate/six_worlds", |b| b.iter(|| propagate_bounds(black_box(&six)).unwrap()));

    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("six_worlds_d20", |b| b.iter(|| brute_force_bounds(black_box(&six), 20).unwrap()));
    group.finish();

    c.bench_function("parse/six_worlds", |b| b.iter(|| parse_argument(black_box(SIX_WORLDS)).unwrap()));
}

criterion_group!(benches, solver);
criterion_main!(benches);
