use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{int, GeneralizedForm, Poly, Rational};
use crate::spaces::Params;

fn check_partition(l: &[i64]) -> Result<()> {
    if l.iter().any(|&v| v < 0) || l.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(format!("l = {l:?} is not a partition")));
    }
    Ok(())
}

/// The Rodrigues-type product before normalization:
/// `omega^{-1} d^{l_r - l_{r+1}} x^{l_r - l_{r+1} - m_r - 1} ... d^{l_1 - l_2}
/// x^{l_1 - l_2 - m_1 - 1} (x - 1)^{l_1 - k - 1}` with
/// `omega = (x - 1)^{-k-1} x^{-m_1 - ... - m_r - r}`.
pub fn rodrigues_form(p: &Params) -> Result<GeneralizedForm> {
    check_partition(&p.l)?;
    let r = p.r();
    let mut g = GeneralizedForm::power(Rational::zero(), p.l_at(1) - &p.k - int(1));
    for s in 1..=r {
        let step = p.l_at(s) - p.l_at(s + 1);
        g = g.mul_power(&(&step - p.m_at(s) - int(1)), &Rational::zero());
        let n = step.to_integer().try_into().expect("partition steps fit in usize");
        g = g.nth_derivative(n);
    }
    let shift_x = p.m_sum(1, r) + int(r as i64);
    Ok(g.mul_power(&shift_x, &(&p.k + int(1))).reduce())
}

/// The monic Jacobi-Pineiro polynomial `P(m, l, k)` of degree `l_1`, from
/// the nested Rodrigues formula.
pub fn pineiro_rodrigues(m: &[Rational], l: &[i64], k: &Rational) -> Result<Poly> {
    let p = Params::new(m.to_vec(), l.to_vec(), k.clone())?;
    pineiro_rodrigues_params(&p)
}

pub fn pineiro_rodrigues_params(p: &Params) -> Result<Poly> {
    let f = rodrigues_form(p)?.normalize()?;
    let want = p.l.first().copied().unwrap_or(0) as usize;
    if f.degree() != Some(want) || f.is_zero() {
        return Err(Error::NotAdmissible(format!(
            "leading coefficient of P vanishes at {}",
            p.describe()
        )));
    }
    Ok(f.monic())
}
