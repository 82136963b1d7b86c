use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{int, Rational};
use crate::spaces::{e_u, e_v, Params};

/// Constants of the two-term recursions
/// `D_i P(l, k) = A_i P(l + 1_i, k + 1)` and
/// `D_i^dual u_0(l, k) = A_i^dual u_0(l - 1_i, k - 1)`,
/// plus the differences `A_{ab} = e_a - e_b`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecursionConstants {
    #[serde(serialize_with = "ser_vec")]
    pub a: Vec<Rational>,
    #[serde(serialize_with = "ser_vec")]
    pub avee: Vec<Rational>,
    #[serde(serialize_with = "ser_mat")]
    pub aab: Vec<Vec<Rational>>,
}

fn ser_vec<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::exactmath::ser_rationals(v, s)
}

fn ser_mat<S: serde::Serializer>(
    v: &[Vec<Rational>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    #[derive(Serialize)]
    struct Row<'a>(#[serde(serialize_with = "ser_vec")] &'a [Rational]);
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for row in v {
        seq.serialize_element(&Row(row))?;
    }
    seq.end()
}

fn ratio(num: Rational, den: Rational, what: &str, p: &Params) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::PoleInConstant(format!("{what} at {}", p.describe())));
    }
    Ok(num / den)
}

/// `A_0`, the constant whose leading terms cancel:
/// `-prod_{s=0}^r (k + m_1 + ... + m_s - l_1 + s + 1) / (same + l_{s+1} - l_s)`.
pub fn a_zero(p: &Params) -> Result<Rational> {
    let mut acc = int(-1);
    for s in 0..=p.r() {
        let num = &p.k + p.m_sum(1, s) - p.l_at(1) + int(s as i64 + 1);
        let den = &num + p.l_at(s + 1) - p.l_at(s);
        acc *= ratio(num, den, "A_0", p)?;
    }
    Ok(acc)
}

/// `A_r^dual`, the dual constant whose leading terms cancel:
/// `-prod_{s=0}^r (m_{r-s+1} + ... + m_r - l_r + s) / (same + 1 + l_{r-s} - l_{r-s+1})`.
pub fn a_vee_top(p: &Params) -> Result<Rational> {
    let r = p.r();
    let mut acc = int(-1);
    for s in 0..=r {
        let num = p.m_sum(r + 1 - s, r) - p.l_at(r) + int(s as i64);
        let den = &num + int(1) + p.l_at(r - s) - p.l_at(r + 1 - s);
        acc *= ratio(num, den, "A_r^dual", p)?;
    }
    Ok(acc)
}

/// `A_i` for `0 <= i <= r`.
pub fn a_const(p: &Params, i: usize) -> Result<Rational> {
    if i > p.r() {
        return Err(Error::IndexOutOfRange { index: i, max: p.r() });
    }
    if i == 0 {
        a_zero(p)
    } else {
        Ok(e_v(p, 0) - e_v(p, i))
    }
}

/// `A_i^dual` for `0 <= i <= r`.
pub fn a_vee(p: &Params, i: usize) -> Result<Rational> {
    let r = p.r();
    if i > r {
        return Err(Error::IndexOutOfRange { index: i, max: r });
    }
    if i == r {
        a_vee_top(p)
    } else {
        Ok(e_u(p, 0) - e_u(p, r - i))
    }
}

/// `B_l = l prod_{s=1}^r (e_0 - e_s) / (e_0 - e_s - 1)` on the dual exponents
/// of `U(m, (l, ..., l), l)`: minus the subleading coefficient of `u_0`.
pub fn b_const(m: &[Rational], l: i64) -> Result<Rational> {
    let p = Params::new(m.to_vec(), vec![l; m.len()], int(l))?;
    let e0 = e_u(&p, 0);
    let mut acc = int(l);
    for s in 1..=p.r() {
        let d = &e0 - e_u(&p, s);
        acc *= ratio(d.clone(), d - int(1), "B_l", &p)?;
    }
    Ok(acc)
}

pub fn recursion_constants(p: &Params) -> Result<RecursionConstants> {
    let r = p.r();
    let a = (0..=r).map(|i| a_const(p, i)).collect::<Result<Vec<_>>>()?;
    let avee = (0..=r).map(|i| a_vee(p, i)).collect::<Result<Vec<_>>>()?;
    let e: Vec<Rational> = (0..=r).map(|i| e_v(p, i)).collect();
    let aab = e
        .iter()
        .map(|ea| e.iter().map(|eb| ea - eb).collect())
        .collect();
    Ok(RecursionConstants { a, avee, aab })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn rank_two_values() {
        let p = Params::from_ints(&[1, 1], &[1, 0], 1);
        let c = recursion_constants(&p).unwrap();
        assert_eq!(c.a[1], int(-1));
        // A_2 = l_1 + l_2 - k - m_1 - m_2 - 2
        assert_eq!(c.a[2], int(1 - 1 - 1 - 1 - 2));
        // A_0^dual = A_2 and A_1^dual = 2 l_2 - l_1 - m_2 - 1 at r = 2
        assert_eq!(c.avee[0], c.a[2]);
        assert_eq!(c.avee[1], int(-1 - 1 - 1));
    }

    #[test]
    fn initial_value() {
        let p = Params::new(vec![rat(1, 3), int(2)], vec![0, 0], rat(7, 2)).unwrap();
        assert_eq!(a_zero(&p).unwrap(), -(rat(7, 2) + int(1)));
    }

    #[test]
    fn pole_reported() {
        // r = 1, l = 1: the s = 1 denominator is k + m
        let p = Params::from_ints(&[-3], &[1], 3);
        assert!(matches!(a_zero(&p), Err(Error::PoleInConstant(_))));
    }
}
