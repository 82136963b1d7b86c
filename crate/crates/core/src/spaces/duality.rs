use num_traits::Zero;

use super::{build_v, divided_wronskian_of, omit_one_wronskians, Kind, Params, PolySpace};
use crate::error::{Error, Result};
use crate::exactmath::{GeneralizedForm, Poly, Rational, SpanSolver};

/// Precomputed data for the pairing `V(m, l, k) x U(m, l, k) -> Q`.
///
/// `<f, g> = W†_V(f, f_1, ..., f_r)` where `g = W†_V(f_1, ..., f_r)`. The
/// omit-one divided Wronskians `h_i` of the `V` basis `v_j` span `U`. The
/// Wronskian is alternating, so `<v_j, h_i>` vanishes for `j != i` and equals
/// `(-1)^i W†_V(v_0, ..., v_r)` for `j = i`; writing `f = sum a_j v_j` and
/// `g = sum c_i h_i` gives `<f, g> = W†_V(v) sum (-1)^i a_i c_i`.
#[derive(Clone, Debug)]
pub struct Pairing {
    pub v: PolySpace,
    generators: Vec<Poly>,
    top: Rational,
    in_v: SpanSolver,
    in_u: SpanSolver,
}

impl Pairing {
    pub fn new(params: &Params) -> Result<Self> {
        Self::from_space(build_v(params)?)
    }

    pub fn from_space(v: PolySpace) -> Result<Self> {
        let generators = omit_one_wronskians(&v)?;
        let w = divided_wronskian_of(Kind::V, &v.params, &v.basis)?;
        if w.degree().unwrap_or(0) != 0 {
            return Err(Error::InternalExponentMismatch(format!(
                "top divided Wronskian is not constant: {w}"
            )));
        }
        let top = w.coeff(0);
        let dependent = |what: &str| Error::InternalExponentMismatch(format!("{what} of {} is dependent", v.params.describe()));
        let in_v = SpanSolver::new(&v.basis).ok_or_else(|| dependent("V basis"))?;
        let in_u = SpanSolver::new(&generators).ok_or_else(|| dependent("U generators"))?;
        Ok(Pairing { v, generators, top, in_v, in_u })
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn pair(&self, f: &Poly, g: &Poly) -> Result<Rational> {
        let a = self
            .in_v
            .solve(f)
            .ok_or_else(|| Error::NotInSpace(format!("{f} is not in V({})", self.v.params.describe())))?;
        let c = self.in_u.solve(g).ok_or_else(|| {
            Error::NotInSpace(format!("{g} is not in U({})", self.v.params.describe()))
        })?;
        let mut total = Rational::zero();
        for (i, (ai, ci)) in a.iter().zip(&c).enumerate() {
            let term = ai * ci;
            if i % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        Ok(total * &self.top)
    }
}

/// `<f, g>` for `f` in `V(params)` and `g` in `U(params)`.
pub fn pairing(f: &Poly, g: &Poly, params: &Params) -> Result<Rational> {
    Pairing::new(params)?.pair(f, g)
}

/// Applies `x^{-n_1} d/dx ∘ ... ∘ x^{-n_s} d/dx` to `g` (rightmost first).
pub fn u_inclusion_project(g: &Poly, tail: &[Rational]) -> Result<Poly> {
    let mut h = GeneralizedForm::from_poly(g.clone());
    for n in tail.iter().rev() {
        h = h.derivative().mul_power(&-n.clone(), &Rational::zero());
    }
    h.normalize()
}
