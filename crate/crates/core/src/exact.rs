//! Exact rational arithmetic helpers.
//!
//! Parameters are stored as f64; exact paths convert them through their
//! shortest round-trip decimal form, so `0.4` becomes `2/5` rather than the
//! binary fraction nearest to it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Rational value of the shortest decimal string that round-trips `x`.
pub fn rat(x: f64) -> BigRational {
    assert!(x.is_finite(), "non-finite value {x} has no rational form");
    let s = format!("{x}");
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.as_str()),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let digits: String = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().expect("decimal digits");
    let denom = num_traits::pow(BigInt::from(10u32), frac_part.len());
    let r = BigRational::new(numer, denom);
    if neg {
        -r
    } else {
        r
    }
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn one() -> BigRational {
    BigRational::one()
}

pub fn zero() -> BigRational {
    BigRational::zero()
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("rational within f64 range")
}
