use rayon::prelude::*;
use serde::Serialize;

use super::tuple::y_tuple;
use crate::exactmath::{int, Rational};
use crate::spaces::Params;

/// `(2 m_1 + m_2)^2 + k (4 m_1 - m_2^2)`; its vanishing forces `y_1 = y_2^2`
/// at `l = (2, 1)`.
pub fn counterexample_condition(m1: &Rational, m2: &Rational, k: &Rational) -> Rational {
    let s = int(2) * m1 + m2;
    &s * &s + k * (int(4) * m1 - m2 * m2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Counterexample {
    pub m1: i64,
    pub m2: i64,
    pub k: i64,
}

/// All integer triples `0 <= m1 <= m1_max`, `0 <= m2 <= m2_max`,
/// `0 <= k <= k_max` with consistent data at `l = (2, 1)` where the
/// condition vanishes, each confirmed by the exact equality `y_1 = y_2^2`.
/// Sorted by `(m1, m2, k)`.
pub fn scan_counterexamples(m1_max: i64, m2_max: i64, k_max: i64) -> Vec<Counterexample> {
    let pairs: Vec<(i64, i64)> = (0..=m1_max)
        .flat_map(|a| (0..=m2_max).map(move |b| (a, b)))
        .collect();
    let mut found: Vec<Counterexample> = pairs
        .par_iter()
        .flat_map_iter(|&(m1, m2)| {
            (0..=k_max).filter_map(move |k| {
                if counterexample_condition(&int(m1), &int(m2), &int(k)) != int(0) {
                    return None;
                }
                let p = Params::from_ints(&[m1, m2], &[2, 1], k);
                if !p.is_consistent() {
                    return None;
                }
                let yt = y_tuple(&p).ok()?;
                (yt.ys[0] == yt.ys[1].pow(2)).then_some(Counterexample { m1, m2, k })
            })
        })
        .collect();
    found.sort();
    found
}
