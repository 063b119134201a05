//! The coefficient field: arbitrary-precision rationals.
//!
//! `num_rational::BigRational` already maintains the invariants we need
//! (lowest terms, positive denominator, exact arithmetic), so the module
//! only adds parsing/formatting in the `p/q` wire format and a rational
//! enclosure of π precise enough to take exact floors of π-multiples.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p`, `p/q`, or a plain decimal like `-2.5` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim())
            .map_err(|e| Error::Parse(format!("bad numerator {num:?}: {e}")))?;
        let d = BigInt::from_str(den.trim())
            .map_err(|e| Error::Parse(format!("bad denominator {den:?}: {e}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let sign = if whole.trim_start().starts_with('-') { -1 } else { 1 };
        let w = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            BigInt::from_str(whole).map_err(|e| Error::Parse(format!("bad number {s:?}: {e}")))?
        };
        let f = BigInt::from_str(frac).map_err(|e| Error::Parse(format!("bad number {s:?}: {e}")))?;
        if f.is_negative() {
            return Err(Error::Parse(format!("bad number {s:?}")));
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(Rat::new(w.abs() * &scale + f, scale) * Rat::from_integer(BigInt::from(sign)));
    }
    let n = BigInt::from_str(s).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))?;
    Ok(Rat::from_integer(n))
}

/// Formats as `p` or `p/q`, always in lowest terms.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// 40 decimal digits of π; the true value lies strictly between the two.
const PI_DIGITS: &str = "31415926535897932384626433832795028841971";
const PI_DIGITS_UP: &str = "31415926535897932384626433832795028841972";

fn pi_bounds() -> (Rat, Rat) {
    let scale = BigInt::from(10u32).pow(40);
    let lo = Rat::new(BigInt::from_str(PI_DIGITS).unwrap(), scale.clone());
    let hi = Rat::new(BigInt::from_str(PI_DIGITS_UP).unwrap(), scale);
    (lo, hi)
}

/// Exact `floor(π·x)` for positive rational `x`.
///
/// Both endpoints of the π enclosure must agree on the floor; with 40
/// digits this only fails when `π·x` sits within ~10⁻³⁵·x of an integer,
/// which no rational with numerator and denominator below ~10¹⁵ can do.
pub fn floor_pi_times(x: &Rat) -> Result<BigInt> {
    if !x.is_positive() {
        return Err(Error::Domain(format!("floor_pi_times needs x > 0, got {}", format_rat(x))));
    }
    let (lo, hi) = pi_bounds();
    let a = (lo * x).floor().to_integer();
    let b = (hi * x).floor().to_integer();
    if a != b {
        return Err(Error::Internal(format!(
            "π enclosure too coarse for floor(π·{})",
            format_rat(x)
        )));
    }
    Ok(a)
}
