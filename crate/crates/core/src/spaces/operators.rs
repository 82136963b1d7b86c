use serde::Serialize;

use super::{e_u, e_v, Params};
use crate::error::{Error, Result};
use crate::exactmath::{int, GeneralizedForm, Poly, Rational};

/// The operator `p(x) d/dx + q(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FirstOrderOp {
    pub p: Poly,
    pub q: Poly,
}

impl FirstOrderOp {
    pub fn apply(&self, f: &Poly) -> Poly {
        &(&self.p * &f.derivative()) + &(&self.q * f)
    }

    pub fn apply_gf(&self, g: &GeneralizedForm) -> Result<GeneralizedForm> {
        g.derivative().mul_poly(&self.p).add(&g.mul_poly(&self.q))
    }

    pub fn to_diff_op(&self) -> DiffOp {
        DiffOp::new(vec![self.q.clone(), self.p.clone()])
    }
}

/// Linear differential operator `sum_i c_i(x) (d/dx)^i` with polynomial
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffOp {
    pub coeffs: Vec<Poly>,
}

impl DiffOp {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        DiffOp { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        let mut acc = Poly::zero();
        let mut d = f.clone();
        for c in &self.coeffs {
            acc = &acc + &(c * &d);
            d = d.derivative();
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        // (d/dx)^i (b y^{(j)}) expands by Leibniz into sum_t C(i,t) b^{(i-t)} y^{(j+t)}.
        let n = self.coeffs.len() + other.coeffs.len();
        let mut out = vec![Poly::zero(); n.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let mut bd = b.clone();
                let mut derivs = vec![bd.clone()];
                for _ in 0..i {
                    bd = bd.derivative();
                    derivs.push(bd.clone());
                }
                for t in 0..=i {
                    let c = crate::exactmath::binomial(i as u64, t as u64);
                    let term = (a * &derivs[i - t]).scale(&c);
                    out[j + t] = &out[j + t] + &term;
                }
            }
        }
        DiffOp::new(out)
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &Vec<Poly>, i: usize| v.get(i).cloned().unwrap_or_else(Poly::zero);
        DiffOp::new((0..n).map(|i| &get(&self.coeffs, i) + &get(&other.coeffs, i)).collect())
    }

    pub fn scale(&self, c: &Rational) -> DiffOp {
        DiffOp::new(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }
}

fn x_times_x_minus_one() -> Poly {
    Poly::from_ints(&[0, -1, 1])
}

fn check_index(i: usize, p: &Params) -> Result<()> {
    if i > p.r() {
        Err(Error::IndexOutOfRange { index: i, max: p.r() })
    } else {
        Ok(())
    }
}

/// `D_i = x(x-1) d/dx - e_i (x-1) - (k+1)`, mapping `V(l, k)` to
/// `V(l + 1_i, k + 1)`.
pub fn op_d(i: usize, p: &Params) -> Result<FirstOrderOp> {
    check_index(i, p)?;
    let e = e_v(p, i);
    // -e (x - 1) - (k + 1) = (e - k - 1) - e x
    let q = Poly::new(vec![&e - &p.k - int(1), -e]);
    Ok(FirstOrderOp {
        p: x_times_x_minus_one(),
        q,
    })
}

/// `D_i^dual = x d/dx - e^dual_{r-i}`, mapping `U(l, k)` to `U(l - 1_i, k - 1)`.
pub fn op_dvee(i: usize, p: &Params) -> Result<FirstOrderOp> {
    check_index(i, p)?;
    let e = e_u(p, p.r() - i);
    Ok(FirstOrderOp {
        p: Poly::x(),
        q: Poly::constant(-e),
    })
}

/// `T_1 = (x-1)^k x^{m_1}` and `T_i = x^{m_i}` for `i >= 2`.
pub fn weight_forms(p: &Params) -> Vec<GeneralizedForm> {
    (1..=p.r())
        .map(|i| {
            let b = if i == 1 { p.k.clone() } else { int(0) };
            GeneralizedForm::power(p.m_at(i).clone(), b)
        })
        .collect()
}

/// The weights as polynomials (requires non-negative integer `m` and `k`).
pub fn weight_polys(p: &Params) -> Result<Vec<Poly>> {
    weight_forms(p)
        .iter()
        .map(|t| t.normalize())
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::Inconsistent(format!("weights are not polynomials for {}", p.describe())))
}

/// Applies `D_{j_n} ∘ ... ∘ D_{j_1}` to `f`, starting at `start` and shifting
/// the parameters after each step. Returns the image and final parameters.
pub fn apply_d_chain(start: &Params, chain: &[usize], f: &Poly) -> Result<(Poly, Params)> {
    let mut p = start.clone();
    let mut g = f.clone();
    for &j in chain {
        g = op_d(j, &p)?.apply(&g);
        p = p.raised(j);
    }
    Ok((g, p))
}

/// Same as [`apply_d_chain`] on a generalized form.
pub fn apply_d_chain_gf(
    start: &Params,
    chain: &[usize],
    g: &GeneralizedForm,
) -> Result<(GeneralizedForm, Params)> {
    let mut p = start.clone();
    let mut g = g.clone();
    for &j in chain {
        g = op_d(j, &p)?.apply_gf(&g)?;
        p = p.raised(j);
    }
    Ok((g, p))
}
