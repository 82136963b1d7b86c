use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{as_integer, int, ser_rational, ser_rationals, Rational};

/// The data `(m, l, k)`; the rank `r` is the common length of `m` and `l`.
///
/// Indices follow the usual 1-based convention: `m(1)..m(r)`, `l(1)..l(r)`,
/// with `l(0) = k` and `l(r + 1) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    #[serde(serialize_with = "ser_rationals")]
    pub m: Vec<Rational>,
    pub l: Vec<i64>,
    #[serde(serialize_with = "ser_rational")]
    pub k: Rational,
}

impl Params {
    pub fn new(m: Vec<Rational>, l: Vec<i64>, k: Rational) -> Result<Self> {
        if m.len() != l.len() {
            return Err(Error::InvalidInput(format!(
                "m has {} entries but l has {}",
                m.len(),
                l.len()
            )));
        }
        Ok(Params { m, l, k })
    }

    pub fn from_ints(m: &[i64], l: &[i64], k: i64) -> Self {
        assert_eq!(m.len(), l.len(), "m and l must have equal length");
        Params {
            m: m.iter().map(|&v| int(v)).collect(),
            l: l.to_vec(),
            k: int(k),
        }
    }

    pub fn r(&self) -> usize {
        self.m.len()
    }

    /// `m_i` for `1 <= i <= r`.
    pub fn m_at(&self, i: usize) -> &Rational {
        &self.m[i - 1]
    }

    /// `l_i` for `0 <= i <= r + 1`, with `l_0 = k` and `l_{r+1} = 0`.
    pub fn l_at(&self, i: usize) -> Rational {
        if i == 0 {
            self.k.clone()
        } else if i > self.r() {
            Rational::zero()
        } else {
            int(self.l[i - 1])
        }
    }

    /// `m_a + ... + m_b` (empty when `a > b`).
    pub fn m_sum(&self, a: usize, b: usize) -> Rational {
        (a.max(1)..=b.min(self.r())).fold(Rational::zero(), |acc, i| acc + self.m_at(i))
    }

    pub fn k_int(&self) -> Option<i64> {
        as_integer(&self.k)
    }

    /// `(l + 1_i, k + 1)`: adds one to `l_1..l_i` and to `k`.
    pub fn raised(&self, i: usize) -> Params {
        let mut p = self.clone();
        for v in p.l.iter_mut().take(i) {
            *v += 1;
        }
        p.k += int(1);
        p
    }

    /// `(l - 1_i, k - 1)`.
    pub fn lowered(&self, i: usize) -> Params {
        let mut p = self.clone();
        for v in p.l.iter_mut().take(i) {
            *v -= 1;
        }
        p.k -= int(1);
        p
    }

    pub fn with_l_k(&self, l: Vec<i64>, k: Rational) -> Params {
        Params {
            m: self.m.clone(),
            l,
            k,
        }
    }

    /// Integer data with `k >= l_1 >= ... >= l_r >= 0` and
    /// `l_s - l_{s+1} <= m_s`.
    pub fn is_consistent(&self) -> bool {
        let Some(k) = self.k_int() else {
            return false;
        };
        let mut ms = Vec::with_capacity(self.r());
        for m in &self.m {
            match as_integer(m) {
                Some(v) if v >= 0 => ms.push(v),
                _ => return false,
            }
        }
        let mut prev = k;
        for &li in &self.l {
            if li < 0 || li > prev {
                return false;
            }
            prev = li;
        }
        (1..=self.r()).all(|s| {
            let next = if s == self.r() { 0 } else { self.l[s] };
            self.l[s - 1] - next <= ms[s - 1]
        })
    }

    pub fn require_consistent(&self) -> Result<()> {
        if self.is_consistent() {
            Ok(())
        } else {
            Err(Error::Inconsistent(self.describe()))
        }
    }

    /// `m` values as non-negative integers, when they are.
    pub fn m_ints(&self) -> Option<Vec<i64>> {
        self.m
            .iter()
            .map(|v| as_integer(v).filter(|x| *x >= 0))
            .collect()
    }

    pub fn describe(&self) -> String {
        let m: Vec<String> = self.m.iter().map(|v| v.to_string()).collect();
        let l: Vec<String> = self.l.iter().map(|v| v.to_string()).collect();
        format!("m=({}), l=({}), k={}", m.join(","), l.join(","), self.k)
    }

    /// True when `l` is weakly decreasing and non-negative.
    pub fn l_is_partition(&self) -> bool {
        self.l.windows(2).all(|w| w[0] >= w[1]) && self.l.iter().all(|v| *v >= 0)
    }

    pub fn k_is_negative(&self) -> bool {
        self.k.is_negative()
    }
}

/// Index sequence of the composition that carries `V(m, 0, 0)` to
/// `V(m, l, k)`: `0` repeated `k - l_1` times, then `i` repeated
/// `l_i - l_{i+1}` times, in ascending order.
pub fn ascending_chain(p: &Params) -> Result<Vec<usize>> {
    let k = p
        .k_int()
        .ok_or_else(|| Error::InvalidInput(format!("k must be an integer: {}", p.k)))?;
    let mut counts = Vec::with_capacity(p.r() + 1);
    counts.push(k - p.l.first().copied().unwrap_or(0));
    for i in 1..=p.r() {
        let next = if i == p.r() { 0 } else { p.l[i] };
        counts.push(p.l[i - 1] - next);
    }
    if counts.iter().any(|c| *c < 0) {
        return Err(Error::Inconsistent(format!(
            "{} is not reachable from l = 0, k = 0",
            p.describe()
        )));
    }
    Ok(counts
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(i, c as usize))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consistency_examples() {
        assert!(Params::from_ints(&[2, 3], &[2, 1], 49).is_consistent());
        assert!(!Params::from_ints(&[0], &[1], 0).is_consistent());
        assert!(!Params::from_ints(&[1, 1], &[2, 0], 3).is_consistent());
        assert!(Params::from_ints(&[], &[], 0).is_consistent());
    }

    #[test]
    fn conventions_and_shifts() {
        let p = Params::from_ints(&[2, 3], &[2, 1], 49);
        assert_eq!(p.l_at(0), int(49));
        assert_eq!(p.l_at(3), int(0));
        assert_eq!(p.raised(1).l, vec![3, 1]);
        assert_eq!(p.raised(2).k, int(50));
        assert_eq!(p.lowered(2).l, vec![1, 0]);
        assert_eq!(p.m_sum(1, 2), int(5));
        assert_eq!(p.m_sum(2, 1), int(0));
    }

    #[test]
    fn chain_counts() {
        let p = Params::from_ints(&[2, 3], &[2, 1], 5);
        assert_eq!(ascending_chain(&p).unwrap(), vec![0, 0, 0, 1, 2]);
    }
}
