//! Exact rational coefficients. `BigRational` already keeps values in lowest
//! terms with a positive denominator, which is exactly the normal form the
//! rest of the crate relies on.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Shorthand for small literal rationals in code and tests.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(num: i64) -> Rational {
    Rational::from(BigInt::from(num))
}

/// Parse `p`, `-p`, or `p/q` with arbitrary-precision parts.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(Rational::new(num, den))
            }
        }
        None => {
            let num: BigInt = s.parse().ok()?;
            Some(Rational::from(num))
        }
    }
}

/// Canonical text form: `p` when the denominator is 1, else `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Floating approximation, for display only.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back on a scaled division for values whose parts overflow f64.
        let num = r.numer().to_f64().unwrap_or(f64::INFINITY * sign_of(r));
        let den = r.denom().to_f64().unwrap_or(f64::INFINITY);
        num / den
    })
}

fn sign_of(r: &Rational) -> f64 {
    if r.is_negative() {
        -1.0
    } else {
        1.0
    }
}
