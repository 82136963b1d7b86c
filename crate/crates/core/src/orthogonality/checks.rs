use std::collections::BTreeMap;

use num_traits::Zero;

use super::weight::{moment_against_power, omega_inner_product, JacobiWeight};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, int, sign_power, solve_in_span, Poly, Rational};
use crate::pineiro::{pineiro_rodrigues_params, u0_explicit_params};
use crate::spaces::{op_d, op_dvee, Params};

/// `|m| = m_1 + ... + m_r + r - 1`.
pub fn m_norm(p: &Params) -> Rational {
    p.m_sum(1, p.r()) + int(p.r() as i64 - 1)
}

/// The exponents `s` with `(P, x^s)_{|m|,k} = 0`: for `i = 0..r-1`,
/// `s = m_{r-i+1} + ... + m_r + t` with `i <= t < i + l_{r-i} - l_{r-i+1}`.
pub fn orthogonality_exponents(p: &Params) -> Vec<Rational> {
    let r = p.r();
    let mut out = Vec::new();
    for i in 0..r {
        let base = p.m_sum(r - i + 1, r);
        let len = p.l_at(r - i) - p.l_at(r - i + 1);
        let len = len.to_integer().try_into().unwrap_or(0i64);
        for t in i as i64..i as i64 + len {
            out.push(&base + int(t));
        }
    }
    out
}

/// `(P, x^s)_{|m|,k}` normalized by `(1, x^s)_{|m|,k}`, one value per
/// orthogonality exponent.
pub fn orthogonality_residuals(p: &Params) -> Result<Vec<Rational>> {
    let poly = pineiro_rodrigues_params(p)?;
    let w = JacobiWeight::pineiro(&m_norm(p), &p.k);
    orthogonality_exponents(p)
        .iter()
        .map(|s| moment_against_power(&poly, s, &w))
        .collect()
}

/// True iff every orthogonality relation of `P(m, l, k)` holds exactly.
pub fn check_pineiro_orthogonality(p: &Params) -> Result<bool> {
    Ok(orthogonality_residuals(p)?.iter().all(Zero::is_zero))
}

/// The monic polynomial of degree `l_1` cut out by the orthogonality
/// relations, or `None` when they do not determine one.
pub fn orthogonal_polynomial(p: &Params) -> Result<Option<Poly>> {
    let n = p.l[0] as usize;
    let w = JacobiWeight::pineiro(&m_norm(p), &p.k);
    let exps = orthogonality_exponents(p);
    // Column `j` holds the normalized moments of `x^j` against each `x^s`.
    let mut columns = vec![Vec::with_capacity(exps.len()); n + 1];
    for s in &exps {
        for (j, col) in columns.iter_mut().enumerate() {
            col.push(moment_against_power(&Poly::monomial(int(1), j), s, &w)?);
        }
    }
    let as_vec = |c: &Vec<Rational>| Poly::new(c.clone());
    let unknowns: Vec<Poly> = columns[..n].iter().map(as_vec).collect();
    let target = -as_vec(&columns[n]);
    Ok(solve_in_span(&target, &unknowns).map(|mut c| {
        c.push(int(1));
        Poly::new(c)
    }))
}

fn nonzero(q: Rational, what: &str) -> Result<Rational> {
    if q.is_zero() {
        Err(Error::PoleInCoefficient(what.into()))
    } else {
        Ok(q)
    }
}

fn rank_one_norm(p: &Params) -> Result<(Rational, Rational)> {
    let y = pineiro_rodrigues_params(p)?;
    let m = p.m_at(1);
    let l = p.l[0];
    let w = JacobiWeight::pineiro(&(m + int(1)), &p.k);
    let reference = JacobiWeight::pineiro(&(m + int(1)), &(&p.k - int(l)));
    let lhs = omega_inner_product(&y, &y, &w, &reference)?;
    let mut rhs = factorial(l as u64);
    for i in 1..=l {
        let den = nonzero(&p.k + m + int(2 - l - i), "rank one norm")?;
        rhs = rhs * (m + int(1 - i)) / (&den * &den);
    }
    Ok((lhs, rhs))
}

fn rank_two_norm(p: &Params) -> Result<(Rational, Rational)> {
    let y1 = pineiro_rodrigues_params(p)?;
    let y2 = u0_explicit_params(p)?;
    let (m1, m2, k) = (p.m_at(1), p.m_at(2), &p.k);
    let (l1, l2) = (p.l[0], p.l[1]);
    let s = m1 + m2;
    let w = JacobiWeight::pineiro(&(&s + int(2)), k);
    let reference = JacobiWeight::pineiro(&(&s + int(2)), &(k - int(l1)));
    let lhs = omega_inner_product(&y1, &y2, &w, &reference)?;
    let mut rhs = factorial(l2 as u64);
    for i in 0..l2 {
        let d = nonzero(k + &s + int(2 - l1 - i), "rank two norm")?;
        let den = nonzero((m2 + int(l1 - l2 + 1 - i)) * &d * &d, "rank two norm")?;
        rhs = rhs * (m2 - int(i)) * (&s + int(1 - i)) / den;
    }
    for i in 0..(l1 - l2) {
        let den = nonzero(int(l1 + i - 1) - k - m1, "rank two norm")?;
        rhs = rhs * (m2 + int(2 + i)) / den;
    }
    Ok((lhs, rhs))
}

/// The last tuple member: `P` itself for rank one, the explicit `u_0`
/// otherwise.
fn last_member(p: &Params) -> Result<Poly> {
    if p.r() == 1 {
        pineiro_rodrigues_params(p)
    } else {
        u0_explicit_params(p)
    }
}

fn first_last_norm(p: &Params) -> Result<(Rational, Rational)> {
    let r = p.r();
    let y1 = pineiro_rodrigues_params(p)?;
    let yr = last_member(p)?;
    let mn = m_norm(p) + int(1);
    let w = JacobiWeight::pineiro(&mn, &p.k);
    let reference = JacobiWeight::pineiro(&mn, &(&p.k - int(p.l[0])));
    let lhs = omega_inner_product(&y1, &yr, &w, &reference)?;
    let lr = p.l[r - 1];
    let l1 = int(p.l[0]);
    let mut rhs = sign_power(p.l[0] - lr);
    for i in 0..r {
        let tail = p.m_sum(r - i, r) + int(i as i64);
        let gap = int(1) + p.l_at(r - i - 1) - p.l_at(r - i);
        for j in 0..lr {
            let num = &tail - int(j);
            let den = nonzero(&num + &gap, "first-last norm")?;
            rhs = rhs * num / den;
        }
    }
    for i in 1..=r {
        let head = p.m_sum(1, i) + int(i as i64) + &p.k - &l1;
        let tail = p.m_sum(i + 1, r) + int((r + 1 - i) as i64);
        for s in 0..(p.l[i - 1] - p.l.get(i).copied().unwrap_or(0)) {
            let den = nonzero(&head - int(s), "first-last norm")?;
            rhs = rhs * (&tail + int(s)) / den;
        }
    }
    Ok((lhs, rhs))
}

/// Named norm identities, each as `(lhs, rhs)` ratios to the reference
/// product `(1, 1)` at `k - l_1`.
pub fn norm_sides(p: &Params) -> Result<BTreeMap<String, (Rational, Rational)>> {
    let mut out = BTreeMap::new();
    match p.r() {
        1 => {
            out.insert("rank_one".into(), rank_one_norm(p)?);
        }
        2 => {
            out.insert("rank_two".into(), rank_two_norm(p)?);
        }
        _ => {}
    }
    out.insert("first_last".into(), first_last_norm(p)?);
    Ok(out)
}

/// `lhs - rhs` for every named norm identity.
pub fn check_norm_formulas(p: &Params) -> Result<BTreeMap<String, Rational>> {
    Ok(norm_sides(p)?.into_iter().map(|(k, (l, r))| (k, l - r)).collect())
}

/// `(D_i f, g)_{|m|+1,k+1} + (f, D_i^dual(l + 1_i, k + 1) g)_{|m|+1,k}` for
/// every pair of monomials of degree at most `max_degree`.
pub fn adjointness_residuals(p: &Params, i: usize, max_degree: usize) -> Result<Vec<Rational>> {
    let d = op_d(i, p)?;
    let dvee = op_dvee(i, &p.raised(i))?;
    let mn = m_norm(p) + int(1);
    let w_up = JacobiWeight::pineiro(&mn, &(&p.k + int(1)));
    let w = JacobiWeight::pineiro(&mn, &p.k);
    let mut out = Vec::new();
    for a in 0..=max_degree {
        let f = Poly::monomial(int(1), a);
        let df = d.apply(&f);
        for b in 0..=max_degree {
            let g = Poly::monomial(int(1), b);
            let left = omega_inner_product(&df, &g, &w_up, &w)?;
            let right = omega_inner_product(&f, &dvee.apply(&g), &w, &w)?;
            out.push(left + right);
        }
    }
    Ok(out)
}

/// Integration by parts: `D_i` and `-D_i^dual` are adjoint on monomials
/// up to degree 6.
pub fn check_integral_adjointness(p: &Params, i: usize) -> Result<bool> {
    Ok(adjointness_residuals(p, i, 6)?.iter().all(Zero::is_zero))
}
