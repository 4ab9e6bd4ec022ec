//! Interval-based argument strength and the preferences it induces.
//!
//! For coherent conclusion bounds `[z', z'']` the strength is
//!
//! ```text
//! s = (1 − (z'' − z')) × (z' + z'') / 2
//! ```
//!
//! the product of a precision factor (one minus the interval width) and a
//! location factor (the interval midpoint).

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::model::ConclusionInterval;
use crate::numeric::{render_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed interval [{lower}, {upper}]; need 0 ≤ lower ≤ upper ≤ 1")]
pub struct MalformedInterval {
    pub lower: String,
    pub upper: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrengthScore {
    pub value: Rational,
    /// `1 − (z'' − z')`
    pub precision_factor: Rational,
    /// `(z' + z'') / 2`
    pub location_factor: Rational,
}

pub fn strength(interval: &ConclusionInterval) -> Result<StrengthScore, MalformedInterval> {
    strength_of_bounds(&interval.lower, &interval.upper)
}

pub fn strength_of_bounds(lower: &Rational, upper: &Rational) -> Result<StrengthScore, MalformedInterval> {
    if !ConclusionInterval::new(lower.clone(), upper.clone()).is_well_formed() {
        return Err(MalformedInterval { lower: render_rational(lower), upper: render_rational(upper) });
    }
    let precision_factor = Rational::one() - (upper - lower);
    let location_factor = (lower + upper) / BigRational::from_integer(2.into());
    Ok(StrengthScore { value: &precision_factor * &location_factor, precision_factor, location_factor })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preference {
    FirstPreferred,
    SecondPreferred,
    Indifferent,
}

pub fn compare(a: &StrengthScore, b: &StrengthScore) -> Preference {
    match a.value.cmp(&b.value) {
        Ordering::Greater => Preference::FirstPreferred,
        Ordering::Less => Preference::SecondPreferred,
        Ordering::Equal => Preference::Indifferent,
    }
}

/// Arguments sharing one strength value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndifferenceClass {
    pub strength: Rational,
    /// Labels in input order.
    pub labels: Vec<String>,
    /// Intervals in the same order as `labels`; kept so reports can tell
    /// apart equal scores from different intervals.
    pub intervals: Vec<(Rational, Rational)>,
}

/// Classes in strictly decreasing strength.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferenceOrder {
    pub classes: Vec<IndifferenceClass>,
}

impl PreferenceOrder {
    /// Class index of `label`, lower is stronger.
    pub fn position(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.labels.iter().any(|l| l == label))
    }

    /// Preference between two ranked labels.
    pub fn relation(&self, first: &str, second: &str) -> Option<Preference> {
        let (a, b) = (self.position(first)?, self.position(second)?);
        Some(match a.cmp(&b) {
            Ordering::Less => Preference::FirstPreferred,
            Ordering::Greater => Preference::SecondPreferred,
            Ordering::Equal => Preference::Indifferent,
        })
    }
}

impl fmt::Display for PreferenceOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes: Vec<String> = self.classes.iter().map(|c| c.labels.join(" ~ ")).collect();
        f.write_str(&classes.join(" ≻ "))
    }
}

/// Total preorder by descending strength; ties form one class, ordered by input position.
pub fn rank(arguments: &[(String, ConclusionInterval)]) -> Result<PreferenceOrder, MalformedInterval> {
    let mut scored = Vec::with_capacity(arguments.len());
    for (label, interval) in arguments {
        scored.push((label, interval, strength(interval)?.value));
    }
    // stable sort keeps input order within ties
    scored.sort_by(|a, b| b.2.cmp(&a.2));
    let mut classes: Vec<IndifferenceClass> = Vec::new();
    for (label, interval, value) in scored {
        let bounds = (interval.lower.clone(), interval.upper.clone());
        match classes.last_mut() {
            Some(class) if class.strength == value => {
                class.labels.push(label.clone());
                class.intervals.push(bounds);
            }
            _ => classes.push(IndifferenceClass { strength: value, labels: vec![label.clone()], intervals: vec![bounds] }),
        }
    }
    Ok(PreferenceOrder { classes })
}
