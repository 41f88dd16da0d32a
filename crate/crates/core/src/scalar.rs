//! Exact rational scalars.
//!
//! Every coordinate in this crate is a [`Scalar`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. There is no
//! floating-point fallback anywhere in the geometry; `f64` appears only in
//! reports and rendering.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exact rational number. `BigRational` normalizes eagerly on construction,
/// which is what keeps the nested clearance values tractable.
pub type Scalar = BigRational;

/// Shorthand for an integer-valued scalar.
pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `p / q` as a scalar. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise (q > 0).
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parse `"p"` or `"p/q"`. The result is normalized regardless of the input
/// form; `q` must be non-zero.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let text = text.trim();
    let mk_err = || Error::BadScalar(text.to_string());
    match text.split_once('/') {
        None => {
            let p: BigInt = text.parse().map_err(|_| mk_err())?;
            Ok(BigRational::from_integer(p))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| mk_err())?;
            let q: BigInt = q.trim().parse().map_err(|_| mk_err())?;
            if q.is_zero() {
                return Err(mk_err());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Lossy conversion for reports and SVG output only.
pub fn to_f64(s: &Scalar) -> f64 {
    s.to_f64().unwrap_or(f64::NAN)
}

/// Largest integer `<= s`.
pub fn floor_int(s: &Scalar) -> BigInt {
    s.floor().to_integer()
}

pub fn abs(s: &Scalar) -> Scalar {
    s.abs()
}
