//! Exact arithmetic: big rationals and the two polynomial rings that hold every
//! invariant value.

mod bipoly;
mod unipoly;

pub use bipoly::BiPoly;
pub use unipoly::{interpolate, interpolate_consecutive, UniPoly};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn big(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `p` or `p/q` (with optional sign) into a canonical rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().ok()?;
            let q = q.trim().parse::<BigInt>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
    }
}

/// Formats a coefficient in front of a monomial. `None` means the coefficient is elided.
pub(crate) fn coefficient_prefix(c: &Rational, is_constant: bool) -> (bool, Option<String>) {
    let negative = c.is_negative();
    let abs = c.abs();
    if !is_constant && abs.is_one() {
        return (negative, None);
    }
    let body = if abs.is_integer() {
        abs.numer().to_string()
    } else if is_constant {
        format_rational(&abs)
    } else {
        format!("({})", format_rational(&abs))
    };
    (negative, Some(body))
}
