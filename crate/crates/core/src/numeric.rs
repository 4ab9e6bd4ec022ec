//! Exact rational numbers and their text forms.
//!
//! Every probability in the crate is a [`Rational`]. Decimal literals are
//! converted exactly (`0.33` is `33/100`), and display rounding happens only
//! at the edges via [`round_half_up`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Largest denominator that is still written as a decimal by [`render_rational`].
pub const DECIMAL_RENDER_MAX_DENOMINATOR: u32 = 100;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberError {
    #[error("empty number")]
    Empty,
    #[error("malformed number `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(numerator: i64, denominator: i64) -> Rational {
    Rational::new(BigInt::from(numerator), BigInt::from(denominator))
}

/// Parses `3`, `0.33`, `.5` or `1/3` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, NumberError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(NumberError::Empty);
    }
    if let Some((num, den)) = text.split_once('/') {
        let num = parse_decimal(num.trim()).ok_or_else(|| NumberError::Malformed(text.into()))?;
        let den = parse_decimal(den.trim()).ok_or_else(|| NumberError::Malformed(text.into()))?;
        if den.is_zero() {
            return Err(NumberError::ZeroDenominator(text.into()));
        }
        return Ok(num / den);
    }
    parse_decimal(text).ok_or_else(|| NumberError::Malformed(text.into()))
}

fn parse_decimal(text: &str) -> Option<Rational> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (whole, frac) = match body.split_once('.') {
        Some((w, f)) => (w, f),
        None => (body, ""),
    };
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let numerator: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let denominator = num_traits::pow(BigInt::from(10u32), frac.len());
    let value = Rational::new(numerator, denominator);
    Some(if negative { -value } else { value })
}

/// Returns `Some(k)` when the denominator is `2^a 5^b` so the value has a
/// terminating decimal expansion with `k = max(a, b)` fractional digits.
fn terminating_digits(value: &Rational) -> Option<usize> {
    let mut den = value.denom().clone();
    let two = BigInt::from(2u32);
    let five = BigInt::from(5u32);
    let (mut twos, mut fives) = (0usize, 0usize);
    while den.is_even() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    den.is_one().then_some(twos.max(fives))
}

/// Canonical text for a rational: integers as `0`/`1`, short terminating
/// decimals as `0.33`, everything else as `p/q`.
pub fn render_rational(value: &Rational) -> String {
    if value.is_integer() {
        return value.numer().to_string();
    }
    let small = value.denom() <= &BigInt::from(DECIMAL_RENDER_MAX_DENOMINATOR);
    match terminating_digits(value) {
        Some(digits) if small => exact_decimal(value, digits),
        _ => format!("{}/{}", value.numer(), value.denom()),
    }
}

fn exact_decimal(value: &Rational, digits: usize) -> String {
    let scaled = value * Rational::from_integer(num_traits::pow(BigInt::from(10u32), digits));
    debug_assert!(scaled.is_integer());
    place_point(&scaled.to_integer(), digits)
}

fn place_point(scaled: &BigInt, places: usize) -> String {
    let negative = scaled.is_negative();
    let mut digits = scaled.abs().to_string();
    if places == 0 {
        return if negative { format!("-{digits}") } else { digits };
    }
    if digits.len() <= places {
        digits = format!("{}{}", "0".repeat(places + 1 - digits.len()), digits);
    }
    let (whole, frac) = digits.split_at(digits.len() - places);
    let sign = if negative { "-" } else { "" };
    format!("{sign}{whole}.{frac}")
}

/// Rounds to `places` decimals, halves rounded away from zero, and renders
/// with exactly that many fractional digits.
pub fn round_half_up(value: &Rational, places: usize) -> String {
    let scale = Rational::from_integer(num_traits::pow(BigInt::from(10u32), places));
    let scaled = value.abs() * scale;
    let half = Rational::new(BigInt::one(), BigInt::from(2u32));
    let mut rounded = (scaled + half).floor().to_integer();
    if value.is_negative() {
        rounded = -rounded;
    }
    place_point(&rounded, places)
}

/// Lossy conversion for reporting.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

pub fn is_probability(value: &Rational) -> bool {
    !value.is_negative() && value <= &Rational::one()
}

/// Displays a rational with [`render_rational`].
pub struct Canonical<'a>(pub &'a Rational);

impl fmt::Display for Canonical<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_rational(self.0))
    }
}
