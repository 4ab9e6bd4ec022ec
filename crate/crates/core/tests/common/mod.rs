//! Seeded random arguments shared by the integration tests.
#![allow(dead_code)]

use argstrength::model::World;
use argstrength::{ratio, validate, Argument, Assessment, ConditionalEvent, Formula, Rational};
use num_traits::{One, Zero};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn atom_names(count: usize) -> Vec<String> {
    const NAMES: [&str; 8] = ["A", "B", "C", "D", "E", "F", "G", "H"];
    NAMES[..count].iter().map(|s| s.to_string()).collect()
}

pub fn random_formula(rng: &mut impl Rng, atoms: &[String], depth: u32) -> Formula {
    if depth == 0 || rng.random_bool(0.3) {
        return match rng.random_range(0..20) {
            0 => Formula::True,
            1 => Formula::False,
            _ => Formula::atom(atoms.choose(rng).unwrap().clone()),
        };
    }
    let left = random_formula(rng, atoms, depth - 1);
    match rng.random_range(0..4) {
        0 => left.not(),
        1 => left.and(random_formula(rng, atoms, depth - 1)),
        2 => left.or(random_formula(rng, atoms, depth - 1)),
        _ => left.implies(random_formula(rng, atoms, depth - 1)),
    }
}

fn random_probability(rng: &mut impl Rng) -> Rational {
    match rng.random_range(0..4) {
        0 => ratio(rng.random_range(0..=100), 100),
        1 => ratio(rng.random_range(0..=20), 20),
        2 => {
            let den = rng.random_range(1..=12);
            ratio(rng.random_range(0..=den), den)
        }
        _ => ratio(rng.random_range(0..=1000), 1000),
    }
}

fn random_event(rng: &mut impl Rng, atoms: &[String]) -> ConditionalEvent {
    let consequent = random_formula(rng, atoms, 3);
    if rng.random_bool(0.4) {
        ConditionalEvent::new(consequent, random_formula(rng, atoms, 2))
    } else {
        ConditionalEvent::unconditional(consequent)
    }
}

/// A valid argument with up to 6 atoms and 5 premises; coherence is not
/// guaranteed.
pub fn random_valid_argument(rng: &mut impl Rng) -> Argument {
    loop {
        let atoms = atom_names(rng.random_range(1..=6));
        let mut arg = Argument::new(atoms.clone(), random_event(rng, &atoms));
        if rng.random_bool(0.3) {
            let words = ["modus", "ponens", "bet", "urn", "A7", "case"];
            let label: Vec<&str> = (0..rng.random_range(1..=3)).map(|_| *words.choose(rng).unwrap()).collect();
            arg = arg.with_label(label.join(" "));
        }
        for _ in 0..rng.random_range(0..=2) {
            arg = arg.with_constraint(random_formula(rng, &atoms, 2));
        }
        for _ in 0..rng.random_range(0..=5) {
            let target = random_event(rng, &atoms);
            let (a, b) = (random_probability(rng), random_probability(rng));
            let premise = if rng.random_bool(0.5) {
                Assessment::point(target, a)
            } else {
                Assessment::interval(target, a.clone().min(b.clone()), a.max(b))
            };
            arg = arg.with_premise(premise);
        }
        if validate(&arg).is_empty() {
            return arg;
        }
    }
}

/// Admissible worlds of `atoms` under `constraints`, in enumeration order
/// (computed by direct evaluation, not through the solver).
pub fn admissible_worlds(atoms: &[String], constraints: &[Formula]) -> Vec<World> {
    (0..1u64 << atoms.len())
        .map(World)
        .filter(|w| constraints.iter().all(|c| c.evaluate(&w.view(atoms)).unwrap()))
        .collect()
}

/// A valid argument over at most six admissible worlds whose premise bounds
/// are multiples of `1/grid`. The premises are read off a hidden grid
/// distribution, so the argument is coherent by construction; point values
/// are used where the hidden value is on the grid, otherwise the enclosing
/// grid cell (sometimes widened).
pub fn random_grid_argument(rng: &mut impl Rng, grid: i64) -> Argument {
    loop {
        let n = rng.random_range(1..=3);
        let atoms = atom_names(n);
        let mut constraints = Vec::new();
        if n == 3 {
            constraints.push(random_formula(rng, &atoms, 2));
        }
        let worlds = admissible_worlds(&atoms, &constraints);
        if worlds.is_empty() || worlds.len() > 6 {
            continue;
        }
        // hidden distribution on the grid
        let mut weights = vec![0i64; worlds.len()];
        for _ in 0..grid {
            weights[rng.random_range(0..worlds.len())] += 1;
        }
        let mass = |f: &Formula| -> i64 {
            worlds.iter().zip(&weights).filter(|(w, _)| f.evaluate(&w.view(&atoms)).unwrap()).map(|(_, m)| m).sum()
        };

        let conclusion = random_event(rng, &atoms);
        let mut arg = Argument::new(atoms.clone(), conclusion);
        for c in &constraints {
            arg = arg.with_constraint(c.clone());
        }
        for _ in 0..rng.random_range(1..=4) {
            let target = random_event(rng, &atoms);
            let h = mass(&target.antecedent);
            let premise = if h == 0 {
                // unconstrained by the hidden distribution; any grid value is coherent
                let v = ratio(rng.random_range(0..=grid), grid);
                Assessment::point(target, v)
            } else {
                let eh = mass(&target.consequent.clone().and(target.antecedent.clone()));
                let exact = ratio(eh, h);
                let scaled = &exact * Rational::from_integer(grid.into());
                let (mut lo, mut hi) = (scaled.floor(), scaled.ceil());
                if rng.random_bool(0.3) {
                    lo = (lo - Rational::one()).max(Rational::zero());
                    hi = (hi + Rational::one()).min(Rational::from_integer(grid.into()));
                }
                let scale = Rational::from_integer(grid.into());
                let (lo, hi) = (lo / &scale, hi / &scale);
                if lo == hi {
                    Assessment::point(target, lo)
                } else {
                    Assessment::interval(target, lo, hi)
                }
            };
            arg = arg.with_premise(premise);
        }
        if validate(&arg).is_empty() {
            return arg;
        }
    }
}

/// `k/d` when `value` has a denominator dividing `d`.
pub fn on_grid(value: &Rational, grid: i64) -> bool {
    (value * Rational::from_integer(grid.into())).is_integer()
}
