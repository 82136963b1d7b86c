use super::{Kind, Params};
use crate::error::{Error, Result};
use crate::exactmath::{int, GeneralizedForm, Poly, Rational};

/// Linear ODE `sum_i c_i(x) (d/dx)^i` whose coefficients are rational
/// functions with poles only at 0 and 1.
#[derive(Clone, Debug, PartialEq)]
pub struct OdeOperator {
    pub kind: Kind,
    pub coeffs: Vec<GeneralizedForm>,
}

impl OdeOperator {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Applies the operator and clears the denominators.
    pub fn apply(&self, f: &Poly) -> Result<GeneralizedForm> {
        let mut acc = GeneralizedForm::from_poly(Poly::zero());
        let mut d = f.clone();
        for c in &self.coeffs {
            acc = acc.add(&c.mul_poly(&d))?;
            d = d.derivative();
        }
        Ok(acc)
    }

    pub fn annihilates(&self, f: &Poly) -> Result<bool> {
        Ok(self.apply(f)?.is_zero())
    }
}

fn gf(a: i64, b: i64, coeffs: Vec<Rational>) -> GeneralizedForm {
    GeneralizedForm::new(int(a), int(b), Poly::new(coeffs))
}

fn sum(parts: &[GeneralizedForm]) -> Result<GeneralizedForm> {
    parts
        .iter()
        .try_fold(GeneralizedForm::from_poly(Poly::zero()), |acc, p| acc.add(p))
}

/// Closed-form operator annihilating `V(m, l, k)` (kind V) or `U(m, l, k)`
/// (kind U), available for `r = 1, 2`.
pub fn ode_operator(p: &Params, kind: Kind) -> Result<OdeOperator> {
    let zero = || int(0);
    let one = || int(1);
    match p.r() {
        1 => {
            // x(x-1) y'' - (k x + m (x-1)) y' + l (k + m + 1 - l) y
            let (m, k, l) = (p.m_at(1).clone(), p.k.clone(), p.l_at(1));
            let c2 = gf(0, 0, vec![zero(), -one(), one()]);
            let c1 = gf(0, 0, vec![m.clone(), -(&k + &m)]);
            let c0 = gf(0, 0, vec![&l * (&k + &m + one() - &l)]);
            Ok(OdeOperator { kind, coeffs: vec![c0, c1, c2] })
        }
        2 => {
            let (m1, m2, k) = (p.m_at(1).clone(), p.m_at(2).clone(), p.k.clone());
            let (l1, l2) = (p.l_at(1), p.l_at(2));
            match kind {
                Kind::V => {
                    // v_1 = c + k(k+1)/(x-1) - m_1(m_1+m_2+1)/x
                    let s = -&l2 * &l2 + &l2 * (&m2 + one())
                        + &l1 * (&k + &m1 + one() - &l1 + &l2);
                    let c = &s + (&m1 + &k) * (&m1 + &m2 + &k + one());
                    let c3 = gf(0, 0, vec![zero(), -one(), one()]);
                    let lead = int(2) * &m1 + &m2;
                    let c2 = gf(0, 0, vec![lead.clone(), -(&lead + int(2) * &k)]);
                    let c1 = sum(&[
                        gf(0, 0, vec![c]),
                        gf(0, -1, vec![&k * (&k + one())]),
                        gf(-1, 0, vec![-(&m1 * (&m1 + &m2 + one()))]),
                    ])?;
                    let t = &l1 * (&l2 - &l1 + &m1 + &k + one()) * (int(2) - &l2 + &m1 + &k + &m2);
                    let c0 = sum(&[
                        gf(-1, -1, vec![-((&k + one()) * &s)]),
                        gf(-1, 0, vec![-t]),
                    ])?;
                    Ok(OdeOperator { kind, coeffs: vec![c0, c1, c2, c3] })
                }
                Kind::U => {
                    let c3 = gf(0, 0, vec![zero(), -one(), one()]);
                    let lead = int(2) * &m2 + &m1;
                    let c2 = gf(0, 0, vec![lead.clone(), -(&lead + &k)]);
                    // e_0 e_1 + e_0 e_2 + e_1 e_2 - 2 - (2 m_2 + m_1 + k) in the dual degrees
                    let c = &l2 * (&l1 - &l2 + &m2 + one())
                        + (&l1 + &m2 + one()) * (&m2 + &m1 + &k + int(2) - &l1)
                        - int(2)
                        - int(2) * &m2
                        - &m1
                        - &k;
                    let c1 = sum(&[
                        gf(0, 0, vec![c]),
                        gf(-1, 0, vec![-(&m2 * (&m1 + &m2 + one()))]),
                    ])?;
                    let c0 = gf(
                        -1,
                        0,
                        vec![&l2 * (&l1 - &l2 + &m2 + one()) * (-int(2) - &m2 - &m1 - &k + &l1)],
                    );
                    Ok(OdeOperator { kind, coeffs: vec![c0, c1, c2, c3] })
                }
            }
        }
        r => Err(Error::UnsupportedRank(r)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn rank_one_kernel() {
        let op = ode_operator(&Params::from_ints(&[2], &[1], 3), Kind::V).unwrap();
        assert!(op.annihilates(&Poly::linear_root(rat(2, 5))).unwrap());
        let op = ode_operator(&Params::from_ints(&[4], &[0], 2), Kind::V).unwrap();
        assert!(op.annihilates(&Poly::one()).unwrap());
    }

    #[test]
    fn unsupported_rank() {
        let p = Params::from_ints(&[1, 1, 1], &[0, 0, 0], 0);
        assert_eq!(ode_operator(&p, Kind::V), Err(Error::UnsupportedRank(3)));
    }
}
