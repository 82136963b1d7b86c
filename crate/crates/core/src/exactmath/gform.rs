use num_traits::{One, Zero};

use super::{int, Poly, Rational};
use crate::error::{Error, Result};

/// The function `x^a (x-1)^b f(x)` with rational exponents.
///
/// This class is closed under differentiation and under multiplication by
/// powers of `x` and `x - 1`, which is all the nested Rodrigues formulas need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedForm {
    pub a: Rational,
    pub b: Rational,
    pub f: Poly,
}

impl GeneralizedForm {
    pub fn new(a: Rational, b: Rational, f: Poly) -> Self {
        GeneralizedForm { a, b, f }
    }

    pub fn from_poly(f: Poly) -> Self {
        GeneralizedForm::new(Rational::zero(), Rational::zero(), f)
    }

    /// `x^a (x-1)^b`.
    pub fn power(a: Rational, b: Rational) -> Self {
        GeneralizedForm::new(a, b, Poly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero()
    }

    /// Exact derivative: `(a-1, b-1, a(x-1)f + b x f + x(x-1)f')`.
    pub fn derivative(&self) -> Self {
        let xm1 = Poly::from_ints(&[-1, 1]);
        let x = Poly::x();
        let f = &self.f;
        let h = &(&(&xm1 * f).scale(&self.a) + &(&x * f).scale(&self.b))
            + &(&(&x * &xm1) * &f.derivative());
        GeneralizedForm::new(&self.a - int(1), &self.b - int(1), h)
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |g, _| g.derivative())
    }

    /// Multiplies by `x^da (x-1)^db`.
    pub fn mul_power(&self, da: &Rational, db: &Rational) -> Self {
        GeneralizedForm::new(&self.a + da, &self.b + db, self.f.clone())
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        GeneralizedForm::new(self.a.clone(), self.b.clone(), &self.f * p)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GeneralizedForm::new(self.a.clone(), self.b.clone(), self.f.scale(c))
    }

    /// Moves every factor `x` and `x - 1` of `f` into the exponents.
    pub fn reduce(&self) -> Self {
        if self.f.is_zero() {
            return self.clone();
        }
        let mut f = self.f.clone();
        let mut a = self.a.clone();
        let mut b = self.b.clone();
        let v0 = f.root_order_at(&Rational::zero()).unwrap_or(0);
        if v0 > 0 {
            f = Poly::new(f.coeffs()[v0..].to_vec());
            a += int(v0 as i64);
        }
        let xm1 = Poly::from_ints(&[-1, 1]);
        loop {
            let (q, r) = f.div_rem(&xm1);
            if !r.is_zero() {
                break;
            }
            f = q;
            b += Rational::one();
        }
        GeneralizedForm::new(a, b, f)
    }

    /// Rewrites `self` with exponents `(a, b)`, which must not exceed the
    /// current ones by a non-integer or positive amount.
    fn lowered_to(&self, a: &Rational, b: &Rational) -> Option<Poly> {
        let da = &self.a - a;
        let db = &self.b - b;
        let da = super::as_integer(&da).filter(|d| *d >= 0)?;
        let db = super::as_integer(&db).filter(|d| *d >= 0)?;
        let xm1 = Poly::from_ints(&[-1, 1]);
        Some(&self.f.shift_up(da as usize) * &xm1.pow(db as u32))
    }

    /// Sum of two forms whose exponents differ by integers.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let a = if self.a < other.a { &self.a } else { &other.a }.clone();
        let b = if self.b < other.b { &self.b } else { &other.b }.clone();
        let mismatch = || {
            Error::NotPolynomial(format!(
                "exponents ({}, {}) and ({}, {}) differ by a non-integer",
                self.a, self.b, other.a, other.b
            ))
        };
        let f1 = self.lowered_to(&a, &b).ok_or_else(mismatch)?;
        let f2 = other.lowered_to(&a, &b).ok_or_else(mismatch)?;
        Ok(GeneralizedForm::new(a, b, &f1 + &f2))
    }

    /// The expanded polynomial, if `self` is one.
    pub fn normalize(&self) -> Result<Poly> {
        if self.f.is_zero() {
            return Ok(Poly::zero());
        }
        let g = self.reduce();
        let a = super::as_integer(&g.a).filter(|v| *v >= 0);
        let b = super::as_integer(&g.b).filter(|v| *v >= 0);
        match (a, b) {
            (Some(a), Some(b)) => {
                let xm1 = Poly::from_ints(&[-1, 1]);
                Ok(&g.f.shift_up(a as usize) * &xm1.pow(b as u32))
            }
            _ => Err(Error::NotPolynomial(format!(
                "residual exponents ({}, {}) on {}",
                g.a, g.b, g.f
            ))),
        }
    }
}
