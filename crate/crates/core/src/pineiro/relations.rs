use num_traits::Zero;

use super::bases::{u0_explicit_params, v_order};
use super::constants::{a_const, a_vee};
use super::rodrigues::pineiro_rodrigues_params;
use crate::error::{Error, Result};
use crate::exactmath::{int, GeneralizedForm, Poly, Rational};
use crate::spaces::{e_v, Kind, Params};

/// Left-hand side of the three-term relation between neighbours of `(l, k)`.
///
/// Kind V: `A_i A_{js} P(l + 1_i) + A_j A_{si} P(l + 1_j) + A_s A_{ij} P(l + 1_s)`.
/// Kind U: the same with `A^dual` and `u_0(l - 1_*, k - 1)`.
/// Here `A_{ab} = e_a - e_b`. The result is identically zero.
pub fn three_term_residual(
    p: &Params,
    i: usize,
    j: usize,
    s: usize,
    kind: Kind,
) -> Result<Poly> {
    if !(i < j && j < s) {
        return Err(Error::InvalidInput(format!(
            "indices must satisfy i < j < s, got ({i}, {j}, {s})"
        )));
    }
    if s > p.r() {
        return Err(Error::IndexOutOfRange { index: s, max: p.r() });
    }
    let e = |a: usize| e_v(p, a);
    let triples = [(i, j, s), (j, s, i), (s, i, j)];
    let mut acc = Poly::zero();
    for (a, b, c) in triples {
        let diff = e(b) - e(c);
        let term = match kind {
            Kind::V => pineiro_rodrigues_params(&p.raised(a))?.scale(&(a_const(p, a)? * diff)),
            Kind::U => u0_explicit_params(&p.lowered(a))?.scale(&(a_vee(p, a)? * diff)),
        };
        acc = &acc + &term;
    }
    Ok(acc)
}

/// The Rodrigues factor `x^{E_i} d^{n} x^{n - E_i}` with `n = l_i - l_{i+1}`
/// and `E_i = m_1 + ... + m_i + i`.
pub fn rodrigues_factor(p: &Params, i: usize, g: &GeneralizedForm) -> Result<GeneralizedForm> {
    if i > p.r() {
        return Err(Error::IndexOutOfRange { index: i, max: p.r() });
    }
    let n = p.l_at(i) - p.l_at(i + 1);
    let steps: usize = n
        .to_integer()
        .try_into()
        .map_err(|_| Error::InvalidInput(format!("l_{i} - l_{} is negative", i + 1)))?;
    let e = v_order(p, i);
    Ok(g.mul_power(&(&n - &e), &Rational::zero())
        .nth_derivative(steps)
        .mul_power(&e, &Rational::zero()))
}

/// `(x-1)^{k+1} D~_r ... D~_0 (g / (x-1))`.
pub fn rodrigues_operator(p: &Params, g: &GeneralizedForm) -> Result<GeneralizedForm> {
    let mut h = g.mul_power(&Rational::zero(), &int(-1));
    for i in 0..=p.r() {
        h = rodrigues_factor(p, i, &h)?;
    }
    Ok(h.mul_power(&Rational::zero(), &(&p.k + int(1))).reduce())
}

/// Checks that the polynomials are all scalar multiples of one another
/// with a common ratio, returning that ratio.
pub fn common_ratio(lhs: &[Poly], rhs: &[Poly]) -> Option<Rational> {
    let mut ratio: Option<Rational> = None;
    for (a, b) in lhs.iter().zip(rhs) {
        if a.is_zero() || b.is_zero() {
            if a.is_zero() != b.is_zero() {
                return None;
            }
            continue;
        }
        let c = a.leading()? / b.leading()?;
        if b.scale(&c) != *a {
            return None;
        }
        match &ratio {
            Some(r) if *r != c => return None,
            _ => ratio = Some(c),
        }
    }
    ratio.filter(|r| !r.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_term_examples() {
        let p = Params::from_ints(&[2, 3], &[1, 0], 2);
        assert!(three_term_residual(&p, 0, 1, 2, Kind::V).unwrap().is_zero());
        let p = Params::from_ints(&[2, 3], &[2, 1], 4);
        assert!(three_term_residual(&p, 0, 1, 2, Kind::U).unwrap().is_zero());
        assert!(three_term_residual(&p, 1, 0, 2, Kind::V).is_err());
    }
}
