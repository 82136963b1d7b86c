use num_traits::Zero;

use super::{Poly, Rational};

/// Reduced echelon form "at infinity": a basis of the span sorted by strictly
/// increasing degree, each element monic and with zero coefficient at the
/// degree of every other element. Linearly dependent inputs are dropped.
pub fn echelon_at_infinity(polys: &[Poly]) -> Vec<Poly> {
    let mut rows: Vec<Vec<Rational>> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.coeffs().to_vec())
        .collect();
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    for r in rows.iter_mut() {
        r.resize(width, Rational::zero());
    }

    let mut next = 0;
    for col in (0..width).rev() {
        let Some(p) = (next..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(next, p);
        let inv = rows[next][col].recip();
        for c in rows[next].iter_mut() {
            *c *= &inv;
        }
        let pivot_row = rows[next].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == next || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (c, pc) in row.iter_mut().zip(pivot_row.iter()) {
                *c -= &f * pc;
            }
        }
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    let mut out: Vec<Poly> = rows.into_iter().map(Poly::new).collect();
    out.reverse();
    out
}

pub fn rank(polys: &[Poly]) -> usize {
    echelon_at_infinity(polys).len()
}

/// Coefficients `c` with `f = sum c_i basis_i`, or `None` if `f` is not in the
/// span. The basis must be linearly independent.
pub fn solve_in_span(f: &Poly, basis: &[Poly]) -> Option<Vec<Rational>> {
    let n = basis.len();
    let height = basis
        .iter()
        .chain(std::iter::once(f))
        .map(|p| p.coeffs().len())
        .max()
        .unwrap_or(0);
    // Augmented matrix: one row per degree, one column per basis element.
    let mut m: Vec<Vec<Rational>> = (0..height)
        .map(|d| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b.coeff(d)).collect();
            row.push(f.coeff(d));
            row
        })
        .collect();

    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..height).find(|&i| !m[i][col].is_zero()) else {
            return None; // dependent basis
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for c in m[r].iter_mut() {
            *c *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let fac = row[col].clone();
            for (c, pc) in row.iter_mut().zip(pivot_row.iter()) {
                *c -= &fac * pc;
            }
        }
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    Some((0..n).map(|i| m[i][n].clone()).collect())
}

/// Repeated [`solve_in_span`] against one fixed independent basis. The basis
/// is echelonized once; a solve then reads coefficients at the pivot
/// degrees, checks membership and changes back to the original basis.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    echelon: Vec<Poly>,
    pivots: Vec<usize>,
    /// Row `j` holds the coordinates of `echelon[j]` in the original basis.
    to_basis: Vec<Vec<Rational>>,
}

impl SpanSolver {
    /// `None` if the basis is linearly dependent.
    pub fn new(basis: &[Poly]) -> Option<Self> {
        let echelon = echelon_at_infinity(basis);
        if echelon.len() != basis.len() {
            return None;
        }
        let pivots = echelon.iter().map(|e| e.degree().unwrap_or(0)).collect();
        let to_basis = echelon
            .iter()
            .map(|e| solve_in_span(e, basis))
            .collect::<Option<Vec<_>>>()?;
        Some(SpanSolver { echelon, pivots, to_basis })
    }

    pub fn solve(&self, f: &Poly) -> Option<Vec<Rational>> {
        let c: Vec<Rational> = self.pivots.iter().map(|&d| f.coeff(d)).collect();
        let rebuilt = self
            .echelon
            .iter()
            .zip(&c)
            .fold(Poly::zero(), |acc, (e, cj)| &acc + &e.scale(cj));
        if rebuilt != *f {
            return None;
        }
        let n = self.to_basis.len();
        Some(
            (0..n)
                .map(|a| {
                    c.iter()
                        .zip(&self.to_basis)
                        .fold(Rational::zero(), |acc, (cj, row)| acc + cj * &row[a])
                })
                .collect(),
        )
    }
}

pub fn in_span(f: &Poly, basis: &[Poly]) -> bool {
    if f.is_zero() {
        return true;
    }
    let ech = echelon_at_infinity(basis);
    solve_in_span(f, &ech).is_some()
}
