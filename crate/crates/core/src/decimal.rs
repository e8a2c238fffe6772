//! Decimal rendering and parsing of exact rationals.
//!
//! Rendering rounds half away from zero. Parsing of decimal literals is
//! exact: `"0.25"` becomes `1/4`, never a float.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::Rational;

/// Renders `r` with exactly `frac_digits` digits after the decimal point,
/// rounding half away from zero.
pub fn decimal_fixed(r: &Rational, frac_digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(frac_digits as u32);
    let units = round_half_away(&(r * Rational::from_integer(scale)));
    render_scaled(&units, frac_digits)
}

/// Renders `r` with `sig_digits` significant digits (no exponent notation).
pub fn decimal_sig(r: &Rational, sig_digits: usize) -> String {
    assert!(sig_digits >= 1, "need at least one significant digit");
    if r.is_zero() {
        return "0".to_string();
    }
    let exp10 = floor_log10_abs(r);
    let frac = sig_digits as i64 - 1 - exp10;
    if frac >= 0 {
        decimal_fixed(r, frac as usize)
    } else {
        // rounding position is left of the decimal point
        let scale = pow10(-frac);
        let units = round_half_away(&(r / &scale));
        let trailing = "0".repeat((-frac) as usize);
        format!("{units}{trailing}")
    }
}

/// The integer `e` with `10^e <= |r| < 10^(e+1)`. `r` must be nonzero.
pub fn floor_log10_abs(r: &Rational) -> i64 {
    debug_assert!(!r.is_zero());
    let a = r.abs();
    let bit_gap = a.numer().bits() as i64 - a.denom().bits() as i64;
    let mut e = (bit_gap as f64 * std::f64::consts::LOG10_2).floor() as i64 - 1;
    while a >= pow10(e + 1) {
        e += 1;
    }
    while a < pow10(e) {
        e -= 1;
    }
    e
}

/// `10^e` as an exact rational, for any sign of `e`.
pub fn pow10(e: i64) -> Rational {
    let p = BigInt::from(10u32).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Parses an exact number: either a rational `"p/q"`, an integer, or a
/// decimal literal such as `"100"`, `"-3.25"`, `".5"`.
pub fn parse_exact(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.contains('/') {
        return s.parse::<Rational>().ok();
    }
    parse_decimal(s)
}

/// Parses a decimal literal into the exact rational it denotes.
pub fn parse_decimal(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = digits.parse().ok()?;
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    let mut r = Rational::new(num, den);
    if negative {
        r = -r;
    }
    Some(r)
}

/// Nearest integer to `r`, rounding halves away from zero.
fn round_half_away(r: &Rational) -> BigInt {
    let num = r.numer();
    let den = r.denom(); // always positive
    let twice: BigInt = num.abs() * 2 + den;
    let q = twice.div_floor(&(den * 2));
    if num.is_negative() {
        -q
    } else {
        q
    }
}

fn render_scaled(units: &BigInt, frac_digits: usize) -> String {
    let sign = if units.is_negative() { "-" } else { "" };
    let digits = units.abs().to_string();
    let padded = if digits.len() <= frac_digits {
        format!("{}{}", "0".repeat(frac_digits + 1 - digits.len()), digits)
    } else {
        digits
    };
    if frac_digits == 0 {
        return format!("{sign}{padded}");
    }
    let (int_part, frac_part) = padded.split_at(padded.len() - frac_digits);
    format!("{sign}{int_part}.{frac_part}")
}
