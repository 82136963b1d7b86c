use num_traits::Zero;

use super::constants::a_const;
use crate::error::{Error, Result};
use crate::exactmath::{int, Poly, Rational};
use crate::spaces::{ascending_chain, op_d, Params};

/// `P(m, l, k)` from `P(m, 0, 0) = 1` by the two-term recursion
/// `P(l + 1_i, k + 1) = D_i(l, k) P(l, k) / A_i(l, k)` along the ascending
/// index chain.
pub fn pineiro_recursive(m: &[Rational], l: &[i64], k: i64) -> Result<Poly> {
    let target = Params::new(m.to_vec(), l.to_vec(), int(k))?;
    pineiro_recursive_params(&target)
}

pub fn pineiro_recursive_params(target: &Params) -> Result<Poly> {
    if target.k_int().is_none() {
        return Err(Error::InvalidInput(format!(
            "the recursion needs an integer k, got {}",
            target.k
        )));
    }
    let chain = ascending_chain(target)?;
    let mut p = target.with_l_k(vec![0; target.r()], Rational::zero());
    let mut f = Poly::one();
    for j in chain {
        let a = a_const(&p, j)?;
        if a.is_zero() {
            return Err(Error::ZeroRecursionConstant(format!(
                "A_{j} vanishes at {}",
                p.describe()
            )));
        }
        f = op_d(j, &p)?.apply(&f).scale(&a.recip());
        p = p.raised(j);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn rank_one_value() {
        assert_eq!(
            pineiro_recursive(&[int(2)], &[1], 3).unwrap(),
            Poly::linear_root(rat(2, 5))
        );
    }

    #[test]
    fn zero_constant() {
        // A_1(0, 0) = -m_1 - 1 vanishes at m_1 = -1.
        assert!(matches!(
            pineiro_recursive(&[int(-1)], &[1], 1),
            Err(Error::ZeroRecursionConstant(_))
        ));
    }
}
