use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{binomial, int, GeneralizedForm, Poly, Rational};
use crate::spaces::{
    apply_d_chain_gf, ascending_chain, divided_wronskian_of, Kind, Params,
};

/// `E_i = m_1 + ... + m_i + i`, the order at zero of the `i`-th `V` basis element.
pub fn v_order(p: &Params, i: usize) -> Rational {
    p.m_sum(1, i) + int(i as i64)
}

/// `m_{i+1} + ... + m_r + r - i`, the order at zero of `u_{r-i}`.
pub fn u_order(p: &Params, i: usize) -> Rational {
    p.m_sum(i + 1, p.r()) + int((p.r() - i) as i64)
}

fn degree_of(f: &Poly) -> Option<usize> {
    if f.is_zero() {
        None
    } else {
        f.degree()
    }
}

/// `v_i = x^{-E_i} D_{m,l,k} x^{E_i}` made monic; the composite operator
/// runs along the ascending chain from `l = 0, k = 0`.
pub fn v_element(p: &Params, i: usize) -> Result<Poly> {
    if i > p.r() {
        return Err(Error::IndexOutOfRange { index: i, max: p.r() });
    }
    let chain = ascending_chain(p)?;
    let start = p.with_l_k(vec![0; p.r()], Rational::zero());
    let e = v_order(p, i);
    let g = GeneralizedForm::power(e.clone(), Rational::zero());
    let (img, _) = apply_d_chain_gf(&start, &chain, &g)?;
    let f = img.mul_power(&-e, &Rational::zero()).normalize()?;
    let want = p.l_at(i) - p.l_at(i + 1);
    let want = (&p.k - &want).to_integer();
    let ok = degree_of(&f).is_some_and(|d| num_bigint::BigInt::from(d) == want);
    if !ok {
        return Err(Error::NotAdmissible(format!("v_{i} degenerates at {}", p.describe())));
    }
    Ok(f.monic())
}

/// `v_0..v_r`, see [`v_element`].
pub fn v_basis(p: &Params) -> Result<Vec<Poly>> {
    (0..=p.r()).map(|i| v_element(p, i)).collect()
}

/// `u_0..u_r`: `u_{r-i}` is the divided Wronskian of the `V` basis
/// `v_j x^{E_j}` with index `i` omitted, divided by `x^{m_{i+1} + ... + m_r + r - i}`
/// and made monic.
pub fn u_basis(p: &Params) -> Result<Vec<Poly>> {
    p.require_consistent()?;
    let r = p.r();
    let vs = v_basis(p)?;
    let fs: Vec<Poly> = vs
        .iter()
        .enumerate()
        .map(|(j, v)| {
            let e = v_order(p, j).to_integer();
            v.shift_up(e.try_into().expect("consistent orders are small"))
        })
        .collect();
    let mut out = vec![Poly::zero(); r + 1];
    for i in 0..=r {
        let rest: Vec<Poly> = (0..=r).filter(|&j| j != i).map(|j| fs[j].clone()).collect();
        let w = if rest.is_empty() {
            Poly::one()
        } else {
            divided_wronskian_of(Kind::V, p, &rest)?
        };
        let shift: usize = u_order(p, i)
            .to_integer()
            .try_into()
            .expect("consistent orders are small");
        let lead = w.coeffs().iter().take_while(|c| c.is_zero()).count();
        if lead < shift {
            return Err(Error::InternalExponentMismatch(format!(
                "divided Wronskian omitting {i} vanishes to order {lead} < {shift} at 0"
            )));
        }
        let u = Poly::new(w.coeffs()[shift..].to_vec());
        let want = (p.l_at(i) - p.l_at(i + 1)).to_integer();
        if degree_of(&u).map(num_bigint::BigInt::from) != Some(want) {
            return Err(Error::InternalExponentMismatch(format!(
                "u_{} has degree {:?} at {}",
                r - i,
                u.degree(),
                p.describe()
            )));
        }
        out[r - i] = u.monic();
    }
    Ok(out)
}

/// Coefficients `c_0..c_{l_r}` of `u_0 = sum (-1)^i c_i x^{l_r - i}`:
/// `c_i = C(l_r, i) prod_{j<i} prod_{s=1}^r
/// (m_{r-s+1} + ... + m_r - l_r + s + j) / (same + 1 + l_{r-s} - l_{r-s+1})`.
pub fn u0_coefficients(p: &Params) -> Result<Vec<Rational>> {
    let r = p.r();
    if r == 0 {
        return Ok(vec![int(1)]);
    }
    let lr = p.l[r - 1];
    if lr < 0 {
        return Err(Error::InvalidInput(format!("negative l_r = {lr}")));
    }
    let mut out = Vec::with_capacity(lr as usize + 1);
    let mut prod = int(1);
    for i in 0..=lr {
        if i > 0 {
            let j = int(i - 1);
            for s in 1..=r {
                let num = p.m_sum(r + 1 - s, r) - p.l_at(r) + int(s as i64) + &j;
                let den = &num + int(1) + p.l_at(r - s) - p.l_at(r + 1 - s);
                if den.is_zero() {
                    return Err(Error::PoleInCoefficient(format!(
                        "c_{i} at {}",
                        p.describe()
                    )));
                }
                prod *= num / den;
            }
        }
        out.push(binomial(lr as u64, i as u64) * &prod);
    }
    Ok(out)
}

/// `u_0(m, l, k)` from its explicit coefficients.
pub fn u0_explicit(m: &[Rational], l: &[i64], k: &Rational) -> Result<Poly> {
    let p = Params::new(m.to_vec(), l.to_vec(), k.clone())?;
    u0_explicit_params(&p)
}

pub fn u0_explicit_params(p: &Params) -> Result<Poly> {
    let c = u0_coefficients(p)?;
    let n = c.len() - 1;
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (i, ci) in c.into_iter().enumerate() {
        coeffs[n - i] = if i % 2 == 0 { ci } else { -ci };
    }
    Ok(Poly::new(coeffs))
}
