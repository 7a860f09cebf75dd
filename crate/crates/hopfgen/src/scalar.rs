//! Exact rational scalars.
//!
//! Everything in this crate is computed over the rationals, so identities
//! either hold on the nose or fail with an exact counterexample. `Scalar` is
//! an arbitrary-precision rational kept in lowest terms with a positive
//! denominator (the invariants `BigRational` maintains).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::Error;

pub type Scalar = BigRational;

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` with optional sign; the denominator must be nonzero.
pub fn parse(s: &str) -> Result<Scalar, Error> {
    let s = s.trim();
    let make_err = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| make_err())?;
    let den: BigInt = den.parse().map_err(|_| make_err())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Scalar::new(num, den))
}

/// Renders in the shortest canonical form: `"p"` for integers, `"p/q"` otherwise.
pub fn render(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}

pub fn is_zero(s: &Scalar) -> bool {
    s.is_zero()
}
