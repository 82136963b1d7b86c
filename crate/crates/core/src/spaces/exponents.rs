use serde::Serialize;

use super::Params;
use crate::exactmath::{int, ser_rationals, Rational};

/// Degrees and root orders of `V(m, l, k)` and `U(m, l, k)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExponentData {
    #[serde(serialize_with = "ser_rationals")]
    pub e_v: Vec<Rational>,
    #[serde(serialize_with = "ser_rationals")]
    pub e_u: Vec<Rational>,
    #[serde(serialize_with = "ser_rationals")]
    pub root_orders0_v: Vec<Rational>,
    #[serde(serialize_with = "ser_rationals")]
    pub root_orders1_v: Vec<Rational>,
    #[serde(serialize_with = "ser_rationals")]
    pub root_orders0_u: Vec<Rational>,
    #[serde(serialize_with = "ser_rationals")]
    pub root_orders1_u: Vec<Rational>,
}

/// `e_i = k + m_1 + ... + m_i - l_i + l_{i+1} + i`.
pub fn e_v(p: &Params, i: usize) -> Rational {
    &p.k + p.m_sum(1, i) - p.l_at(i) + p.l_at(i + 1) + int(i as i64)
}

/// `e_i^dual = m_{r+1-i} + ... + m_r - l_{r+1-i} + l_{r-i} + i`.
pub fn e_u(p: &Params, i: usize) -> Rational {
    let r = p.r();
    p.m_sum(r + 1 - i, r) - p.l_at(r + 1 - i) + p.l_at(r - i) + int(i as i64)
}

pub fn exponents(p: &Params) -> ExponentData {
    let r = p.r();
    let idx = 0..=r;
    ExponentData {
        e_v: idx.clone().map(|i| e_v(p, i)).collect(),
        e_u: idx.clone().map(|i| e_u(p, i)).collect(),
        root_orders0_v: idx.clone().map(|i| p.m_sum(1, i) + int(i as i64)).collect(),
        root_orders1_v: idx
            .clone()
            .map(|i| if i == 0 { int(0) } else { &p.k + int(i as i64) })
            .collect(),
        root_orders0_u: idx
            .clone()
            .map(|i| p.m_sum(r + 1 - i, r) + int(i as i64))
            .collect(),
        root_orders1_u: idx
            .map(|i| if i < r { int(i as i64) } else { &p.k + int(r as i64) })
            .collect(),
    }
}
