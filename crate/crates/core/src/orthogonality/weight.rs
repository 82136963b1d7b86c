use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{as_integer, int, sign_power, ser_rational, Poly, Rational};

/// The weight `x^a (1-x)^b` on `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiWeight {
    #[serde(serialize_with = "ser_rational")]
    pub a: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub b: Rational,
}

impl JacobiWeight {
    pub fn new(a: Rational, b: Rational) -> Self {
        JacobiWeight { a, b }
    }

    pub fn uniform() -> Self {
        JacobiWeight::new(int(0), int(0))
    }

    /// The weight `x^{-m-1} (1-x)^{-k-1}` of the pairing `(f, g)_{m,k}`.
    pub fn pineiro(m: &Rational, k: &Rational) -> Self {
        JacobiWeight::new(-m - int(1), -k - int(1))
    }

    /// True when the moments are convergent integrals.
    pub fn is_integrable(&self) -> bool {
        self.a > int(-1) && self.b > int(-1)
    }

    /// `x^s` times this weight.
    pub fn times_x_power(&self, s: &Rational) -> Self {
        JacobiWeight::new(&self.a + s, self.b.clone())
    }
}

/// `mu_n / mu_0` with `mu_n = B(a + n + 1, b + 1)`.
pub fn moment_ratio(w: &JacobiWeight, n: usize) -> Result<Rational> {
    let mut acc = Rational::one();
    for j in 0..n {
        let num = &w.a + int(j as i64 + 1);
        let den = &w.a + &w.b + int(j as i64 + 2);
        if num.is_zero() || den.is_zero() {
            return Err(Error::MomentPole { step: j });
        }
        acc = acc * num / den;
    }
    Ok(acc)
}

fn is_gamma_pole(z: &Rational) -> bool {
    z.is_integer() && !z.is_positive()
}

/// `Gamma(z1) / Gamma(z2)` for `z1 - z2` an integer.
fn gamma_ratio(z1: &Rational, z2: &Rational) -> Result<Rational> {
    let shift = z1 - z2;
    let n = as_integer(&shift).ok_or_else(|| Error::NonIntegerShift(shift.clone()))?;
    if is_gamma_pole(z1) || is_gamma_pole(z2) {
        return Err(Error::GammaPole(format!("Gamma({z1}) / Gamma({z2})")));
    }
    let (lo, steps, invert) = if n >= 0 { (z2, n, false) } else { (z1, -n, true) };
    let mut acc = Rational::one();
    for j in 0..steps {
        acc *= lo + int(j);
    }
    Ok(if invert { acc.recip() } else { acc })
}

/// `B(a1, b1) / B(a2, b2)` through `Gamma(z + 1) = z Gamma(z)`.
pub fn beta_ratio(a1: &Rational, b1: &Rational, a2: &Rational, b2: &Rational) -> Result<Rational> {
    let ga = gamma_ratio(a1, a2)?;
    let gb = gamma_ratio(b1, b2)?;
    let gs = gamma_ratio(&(a2 + b2), &(a1 + b1))?;
    Ok(ga * gb * gs)
}

/// `int f g w / int ref`, exactly. The two weights must differ by integer
/// shifts.
pub fn inner_product(f: &Poly, g: &Poly, w: &JacobiWeight, reference: &JacobiWeight) -> Result<Rational> {
    let fg = f * g;
    if fg.is_zero() {
        return Ok(Rational::zero());
    }
    let mut sum = Rational::zero();
    for (n, c) in fg.coeffs().iter().enumerate() {
        if !c.is_zero() {
            sum += c * moment_ratio(w, n)?;
        }
    }
    let norm = beta_ratio(
        &(&w.a + int(1)),
        &(&w.b + int(1)),
        &(&reference.a + int(1)),
        &(&reference.b + int(1)),
    )?;
    Ok(sum * norm)
}

/// As [`inner_product`] with both weights read with `(x-1)` in place of
/// `(1-x)`; the branch choices agree, so this differs by
/// `(-1)^{b - b_ref}`.
pub fn omega_inner_product(
    f: &Poly,
    g: &Poly,
    w: &JacobiWeight,
    reference: &JacobiWeight,
) -> Result<Rational> {
    let shift = &w.b - &reference.b;
    let n = as_integer(&shift).ok_or(Error::NonIntegerShift(shift))?;
    Ok(inner_product(f, g, w, reference)? * sign_power(n))
}

/// `(f, x^s)` against `w`, normalized by `int x^s w`.
pub fn moment_against_power(f: &Poly, s: &Rational, w: &JacobiWeight) -> Result<Rational> {
    let shifted = w.times_x_power(s);
    let mut sum = Rational::zero();
    for (n, c) in f.coeffs().iter().enumerate() {
        if !c.is_zero() {
            sum += c * moment_ratio(&shifted, n)?;
        }
    }
    Ok(sum)
}
