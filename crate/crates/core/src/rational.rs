//! Exact rational scalars and their text formats.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Rational scalar used throughout the crate.
///
/// Overflow of the underlying `i128` panics (overflow checks are enabled in
/// every profile of this workspace), so a silent wrap can never produce a
/// wrong certificate.
pub type Q = Ratio<i128>;

pub fn q(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

pub fn qi(n: i128) -> Q {
    Q::from_integer(n)
}

pub fn to_f64(x: &Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

pub fn to_big(x: &Q) -> BigRational {
    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

pub fn big_to_f64(x: &BigRational) -> f64 {
    // Scale down huge numerators/denominators before converting.
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            let bits = x.denom().bits().max(x.numer().bits()) as i64 - 900;
            let shift = bits.max(0) as usize;
            let n = (x.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (x.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

/// Parses `"3"`, `"-3/2"` or a decimal such as `"0.75"` into an exact rational.
pub fn parse_q(text: &str) -> Result<Q> {
    let s = text.trim();
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: i128 = n.trim().parse().map_err(|_| bad())?;
        let d: i128 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if frac.is_empty() && int_digits.is_empty() {
            return Err(bad());
        }
        if !frac.chars().all(|c| c.is_ascii_digit()) || frac.len() > 18 {
            return Err(bad());
        }
        let whole: i128 = if int_digits.is_empty() { 0 } else { int_digits.parse().map_err(|_| bad())? };
        let denom = 10i128.pow(frac.len() as u32);
        let f: i128 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let mag = Q::new(whole * denom + f, denom);
        return Ok(if negative { -mag } else { mag });
    }
    let n: i128 = s.parse().map_err(|_| bad())?;
    Ok(Q::from_integer(n))
}

/// Canonical text form: `"3"` or `"3/2"`.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses a comma-separated list of positive rationals, e.g. `"1,3/2"`.
pub fn parse_positive_list(text: &str) -> Result<Vec<Q>> {
    let values = text
        .split(',')
        .map(parse_q)
        .collect::<Result<Vec<_>>>()?;
    if let Some(v) = values.iter().find(|v| !v.is_positive()) {
        return Err(Error::Parse(format!("metric entries must be positive, got {}", fmt_q(v))));
    }
    Ok(values)
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}
