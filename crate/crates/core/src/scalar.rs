//! Exact rational scalars.
//!
//! Everything in the crate is computed over the rationals, so a scalar is a
//! `BigRational`: always reduced, positive denominator, no rounding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{EvoError, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = |message: &str| EvoError::Parse {
        context: format!("rational `{text}`"),
        message: message.to_string(),
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("numerator is not an integer"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| bad("denominator is not an integer"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(value: &Scalar) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Integer drawn uniformly from `lo..=hi`.
pub fn sample_int<R: Rng + ?Sized>(rng: &mut R, lo: i64, hi: i64) -> Scalar {
    int(rng.gen_range(lo..=hi))
}

/// Small rational with numerator in `-bound..=bound` and denominator in `1..=bound`.
pub fn sample_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Scalar {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound.max(1));
    ratio(num, den)
}
