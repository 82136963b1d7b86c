use super::bae::{BethePoint, Coord, Field};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, int, to_f64, Rational};

/// Largest level size accepted by the symmetrization.
pub const MAX_LEVEL_SIZE: i64 = 6;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One term of the symmetrization: chains of length `c` for `c = 1..r`,
/// `l_c - l_{c+1}` of them; chain `i` of length `c` uses `t^{(j)}_{i + l_j - l_c}`
/// and contributes `1 / ((t^{(1)} - 1)(t^{(2)} - t^{(1)}) ... (t^{(c)} - t^{(c-1)}))`.
fn term<F: Field>(t: &[Vec<F>], l: &[i64]) -> Option<F> {
    let one = F::from_rational(&int(1));
    let r = l.len();
    let mut acc = one.clone();
    for c in 1..=r {
        let next = if c == r { 0 } else { l[c] };
        for i in 0..(l[c - 1] - next) {
            let at = |j: usize| &t[j][(i + l[j] - l[c - 1]) as usize];
            let mut den = at(0).clone() - one.clone();
            for j in 1..c {
                den = den * (at(j).clone() - at(j - 1).clone());
            }
            if den.is_zero() {
                return None;
            }
            acc = acc / den;
        }
    }
    Some(acc)
}

fn symmetrized<F: Field>(t: &[Vec<F>], l: &[i64]) -> Result<F> {
    let perms: Vec<Vec<Vec<usize>>> = t.iter().map(|g| permutations(g.len())).collect();
    let mut total = F::zero();
    let mut idx = vec![0usize; t.len()];
    loop {
        let permuted: Vec<Vec<F>> = t
            .iter()
            .zip(&idx)
            .enumerate()
            .map(|(j, (g, &k))| perms[j][k].iter().map(|&s| g[s].clone()).collect())
            .collect();
        total = total
            + term(&permuted, l)
                .ok_or_else(|| Error::CoincidingCoordinates("in the weight function".into()))?;
        // Odometer over the product of symmetric groups.
        let mut j = 0;
        loop {
            if j == idx.len() {
                return Ok(total);
            }
            idx[j] += 1;
            if idx[j] < perms[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

/// The scalar weight function `nu(t)`, symmetrized over permutations within
/// each level and divided by `(l_1 - l_2)! ... (l_{r-1} - l_r)! l_r!`.
/// Exact when every coordinate is rational.
pub fn nu_weight(t: &BethePoint, l: &[i64]) -> Result<Coord> {
    let sizes: Vec<i64> = t.t.iter().map(|g| g.len() as i64).collect();
    if sizes != l {
        return Err(Error::InvalidInput(format!("group sizes {sizes:?} do not match l = {l:?}")));
    }
    if l.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(format!("l = {l:?} is not a partition")));
    }
    if l.iter().any(|&v| v > MAX_LEVEL_SIZE) {
        return Err(Error::TooLarge(format!(
            "symmetrization over levels of size > {MAX_LEVEL_SIZE}"
        )));
    }
    let mut norm = int(1);
    for (c, &lc) in l.iter().enumerate() {
        let next = l.get(c + 1).copied().unwrap_or(0);
        norm *= factorial((lc - next) as u64);
    }
    let exact: Option<Vec<Vec<Rational>>> = t
        .t
        .iter()
        .map(|g| g.iter().map(|c| c.as_exact().cloned()).collect())
        .collect();
    match exact {
        Some(q) => Ok(Coord::Exact(symmetrized(&q, l)? / norm)),
        None => {
            let f: Vec<Vec<f64>> = t.t.iter().map(|g| g.iter().map(Coord::approx).collect()).collect();
            Ok(Coord::Float(symmetrized(&f, l)? / to_f64(&norm)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn rank_one_value() {
        let t = BethePoint::exact(vec![vec![rat(2, 5)]]);
        assert_eq!(nu_weight(&t, &[1]).unwrap(), Coord::Exact(rat(-5, 3)));
        assert_eq!(nu_weight(&BethePoint::exact(vec![vec![]]), &[0]).unwrap(), Coord::Exact(int(1)));
    }

    #[test]
    fn symmetric_within_levels() {
        let a = BethePoint::exact(vec![vec![rat(1, 3), rat(3, 4)], vec![rat(1, 7)]]);
        let b = BethePoint::exact(vec![vec![rat(3, 4), rat(1, 3)], vec![rat(1, 7)]]);
        assert_eq!(nu_weight(&a, &[2, 1]).unwrap(), nu_weight(&b, &[2, 1]).unwrap());
    }

    #[test]
    fn guard() {
        let t = BethePoint::float(vec![(1..=7).map(|i| i as f64 / 10.0).collect()]);
        assert!(matches!(nu_weight(&t, &[7]), Err(Error::TooLarge(_))));
    }
}
