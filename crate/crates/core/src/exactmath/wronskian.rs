use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{integer_form, mul_integer};
use super::{Poly, Rational};

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn derivative(f: &[BigInt]) -> Vec<BigInt> {
    f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

fn sub(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut a = a;
    a.resize(n, BigInt::zero());
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
    trim(a)
}

/// `a / b` in `Z[x]` when `b` divides `a` exactly.
fn exact_div(a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return a;
    }
    let mut rem = a;
    let db = b.len() - 1;
    let lead = &b[db];
    let mut q = vec![BigInt::zero(); rem.len() - db];
    for i in (0..q.len()).rev() {
        let c = &rem[i + db] / lead;
        debug_assert!((&c * lead) == rem[i + db], "Bareiss step divides exactly");
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "Bareiss step divides exactly");
    trim(q)
}

/// `det(d^i f_j / dx^i)` for `i, j < n`, by fraction-free (Bareiss)
/// elimination over `Z[x]` after clearing denominators. Every division is
/// exact.
pub fn wronskian(fs: &[Poly]) -> Poly {
    let n = fs.len();
    if n == 0 {
        return Poly::one();
    }
    let mut total = BigInt::one();
    let mut row: Vec<Vec<BigInt>> = fs
        .iter()
        .map(|f| {
            let (nums, d) = integer_form(f);
            total *= d;
            trim(nums)
        })
        .collect();
    let mut m: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(n);
    for _ in 0..n {
        let next = row.iter().map(|f| derivative(f)).collect();
        m.push(row);
        row = next;
    }

    let mut negate = false;
    let mut prev = vec![BigInt::one()];
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_empty() {
            match (k + 1..n).find(|&i| !m[i][k].is_empty()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = sub(mul_integer(&m[i][j], &m[k][k]), mul_integer(&m[i][k], &m[k][j]));
                m[i][j] = exact_div(num, &prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = Poly::new(
        m[n - 1][n - 1]
            .iter()
            .map(|c| Rational::new(c.clone(), total.clone()))
            .collect(),
    );
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    #[test]
    fn small_cases() {
        assert_eq!(wronskian(&[Poly::x()]), Poly::x());
        assert_eq!(wronskian(&[Poly::one(), Poly::x()]), Poly::one());
        let w = wronskian(&[Poly::one(), Poly::x().pow(3), Poly::x().pow(7)]);
        assert_eq!(w, Poly::monomial(int(84), 7));
    }

    #[test]
    fn zero_pivot_needs_swap() {
        // First row entry vanishes identically only for the zero polynomial, so
        // use a derivative-row pivot failure: f0 = x, f1 = 1 gives W = -1.
        assert_eq!(wronskian(&[Poly::x(), Poly::one()]), Poly::from_ints(&[-1]));
        assert!(wronskian(&[Poly::x(), Poly::x().scale(&int(3))]).is_zero());
    }
}
