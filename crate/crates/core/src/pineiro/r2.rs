use num_traits::Zero;
use serde::Serialize;

use super::constants::{a_const, a_vee};
use crate::error::{Error, Result};
use super::rodrigues::{pineiro_rodrigues, pineiro_rodrigues_params};
use crate::exactmath::{as_integer, binomial, int, ser_rationals, Poly, Rational};
use crate::spaces::{ascending_chain, e_u, e_v, Params};

/// Coefficients of `y_1 = sum a_n (x-1)^n` and `y_2 = sum b_n x^n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoeffSequences {
    #[serde(serialize_with = "ser_rationals")]
    pub a: Vec<Rational>,
    #[serde(serialize_with = "ser_rationals")]
    pub b: Vec<Rational>,
}

impl CoeffSequences {
    /// `y_1` expanded in powers of `x`.
    pub fn y1(&self) -> Poly {
        let xm1 = Poly::from_ints(&[-1, 1]);
        self.a
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &xm1) + &Poly::constant(c.clone()))
    }

    pub fn y2(&self) -> Poly {
        Poly::new(self.b.clone())
    }
}

fn require_rank_two(p: &Params) -> Result<()> {
    if p.r() != 2 {
        return Err(Error::UnsupportedRank(p.r()));
    }
    Ok(())
}

/// One step `(l, k) -> (l + 1_i, k + 1)` of both coefficient recursions:
/// `a_n' = ((n - k - 1) a_n + (n - 1 - e_i) a_{n-1}) / A_i` and
/// `b_n' = A_i^dual(l + 1_i, k + 1) b_n / (n - e^dual_{2-i}(l + 1_i, k + 1))`,
/// with the top `b` coefficient fixed to one by monicity.
pub fn coeff_step_r2(p: &Params, i: usize, seq: &CoeffSequences) -> Result<CoeffSequences> {
    require_rank_two(p)?;
    let ai = a_const(p, i)?;
    if ai.is_zero() {
        return Err(Error::PoleInConstant(format!("A_{i} = 0 at {}", p.describe())));
    }
    let ei = e_v(p, i);
    let k = &p.k;
    let q = p.raised(i);
    let deg_a = q.l[0] as usize;
    let get = |v: &[Rational], n: isize| {
        usize::try_from(n).ok().and_then(|n| v.get(n)).cloned().unwrap_or_else(Rational::zero)
    };
    let a = (0..=deg_a)
        .map(|n| {
            let nn = int(n as i64);
            ((&nn - k - int(1)) * get(&seq.a, n as isize)
                + (&nn - int(1) - &ei) * get(&seq.a, n as isize - 1))
                / &ai
        })
        .collect();
    let deg_b = q.l[1] as usize;
    let avee = a_vee(&q, i)?;
    let ev = e_u(&q, 2 - i);
    let mut b = Vec::with_capacity(deg_b + 1);
    for n in 0..=deg_b {
        let den = int(n as i64) - &ev;
        if n == deg_b {
            b.push(int(1));
        } else if den.is_zero() {
            return Err(Error::PoleInConstant(format!(
                "b_{n} step {i} at {}",
                q.describe()
            )));
        } else {
            b.push(&avee * get(&seq.b, n as isize) / den);
        }
    }
    Ok(CoeffSequences { a, b })
}

/// The sequences at `(m, l, k)` propagated from `l = 0, k = 0`, where
/// `a = b = (1)`, along the ascending index chain. One step of index
/// `last` (when the chain has one) is moved to the end of the chain.
pub fn coeff_recursion_r2(p: &Params, last: usize) -> Result<CoeffSequences> {
    require_rank_two(p)?;
    if last > 2 {
        return Err(Error::IndexOutOfRange { index: last, max: 2 });
    }
    let mut chain = ascending_chain(p)?;
    if let Some(pos) = chain.iter().position(|&j| j == last) {
        chain.remove(pos);
        chain.push(last);
    }
    let mut q = p.with_l_k(vec![0, 0], Rational::zero());
    let mut seq = CoeffSequences { a: vec![int(1)], b: vec![int(1)] };
    for j in chain {
        seq = coeff_step_r2(&q, j, &seq)?;
        q = q.raised(j);
    }
    Ok(seq)
}

/// The closed product for `y_2` as printed:
/// `C(l_2, n) prod_{i<l_2-n} prod_{j=1,2} (m_{3-j} + ... + m_2 - l_2 + i + j)
/// / (same + 1 + l_{2-j} - l_{3-j})`.
/// The true coefficient of `x^n` is this times `(-1)^{l_2 - n}`.
pub fn b_explicit_r2(p: &Params) -> Result<Vec<Rational>> {
    require_rank_two(p)?;
    let l2 = p.l[1];
    (0..=l2)
        .map(|n| {
            let mut acc = binomial(l2 as u64, n as u64);
            for i in 0..(l2 - n) {
                for j in 1..=2usize {
                    let num = p.m_sum(3 - j, 2) - p.l_at(2) + int(i + j as i64);
                    let den = &num + int(1) + p.l_at(2 - j) - p.l_at(3 - j);
                    if den.is_zero() {
                        return Err(Error::PoleInConstant(format!(
                            "b_{n} at {}",
                            p.describe()
                        )));
                    }
                    acc *= num / den;
                }
            }
            Ok(acc)
        })
        .collect()
}

/// Basis of `V(m, l, k)` for `r = 2` built from `y_1` at transformed
/// parameters: `y_1(m, l, k)`,
/// `x^{m_1 + 1} y_1((-m_1 - 2, m_1 + m_2 + 1), (k + l_2 - l_1, l_2), k)` and
/// `x^{m_1 + m_2 + 2} y_1((-m_2 - 2, -m_1 - 2), (k - l_2, k - l_1), k)`.
pub fn transformed_basis_r2(p: &Params) -> Result<Vec<Poly>> {
    require_rank_two(p)?;
    let (m1, m2) = (&p.m[0], &p.m[1]);
    let (l1, l2) = (p.l[0], p.l[1]);
    let k = p.k_int().ok_or_else(|| Error::InvalidInput(format!("integer k expected at {}", p.describe())))?;
    let first = pineiro_rodrigues_params(p)?;
    let second = pineiro_rodrigues(&[-m1 - int(2), m1 + m2 + int(1)], &[k + l2 - l1, l2], &p.k)?;
    let third = pineiro_rodrigues(&[-m2 - int(2), -m1 - int(2)], &[k - l2, k - l1], &p.k)?;
    let shift = |e: Rational| -> Result<usize> {
        as_integer(&e)
            .and_then(|n| usize::try_from(n).ok())
            .ok_or_else(|| Error::InvalidInput(format!("negative exponent {e} at {}", p.describe())))
    };
    Ok(vec![
        first,
        second.shift_up(shift(m1 + int(1))?),
        third.shift_up(shift(m1 + m2 + int(2))?),
    ])
}
