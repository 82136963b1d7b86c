//! Exact scalar and polynomial arithmetic over the rationals.
//!
//! Everything downstream is built on [`Rational`] and the dense univariate
//! [`Poly`]. Floating point only appears in root approximations and in the
//! optional float path of the Bethe residual.

mod gform;
mod linalg;
mod poly;
mod roots;
mod wronskian;

pub use gform::GeneralizedForm;
pub use linalg::{echelon_at_infinity, in_span, rank, solve_in_span, SpanSolver};
pub use poly::{poly_gcd, Poly};
pub use roots::{real_roots, square_free_decomposition, sturm_count, RealRoot};
pub use wronskian::wronskian;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` as a rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Default precision for root isolation: 10^-12.
pub fn default_precision() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u64).pow(12))
}

/// Parses `"p/q"` or `"p"` exactly. Decimal points are rejected so that no
/// float ever sneaks into a parameter.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"num/den"` string (just `"num"` for integers).
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Returns the value as `i64` if it is an integer that fits.
pub fn as_integer(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

/// Nearest `f64`; exact rationals with huge numerators/denominators are
/// scaled to avoid overflow.
pub fn to_f64(q: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Shift both parts down to ~60 significant bits.
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift_n = (nb - 60).max(0);
    let shift_d = (db - 60).max(0);
    let n = (q.numer().abs() >> shift_n as usize).to_f64().unwrap_or(0.0);
    let d = (q.denom() >> shift_d as usize).to_f64().unwrap_or(1.0);
    let v = n / d * 2f64.powi((shift_n - shift_d) as i32);
    if q.is_negative() {
        -v
    } else {
        v
    }
}

/// Exact rational from a finite `f64` (binary expansion, no rounding).
pub fn from_f64(v: f64) -> Option<Rational> {
    Rational::from_float(v)
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)` as a rational.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc = acc.div_floor(&BigInt::from(i + 1));
    }
    Rational::from_integer(acc)
}

/// Serializes a rational as its `"num/den"` string.
pub fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

/// Serializes a slice of rationals as an array of `"num/den"` strings.
pub fn ser_rationals<S: serde::Serializer>(qs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(qs.len()))?;
    for q in qs {
        seq.serialize_element(&format_rational(q))?;
    }
    seq.end()
}

/// `(-1)^n` for a signed integer exponent.
pub fn sign_power(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}
