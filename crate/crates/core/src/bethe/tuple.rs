use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{echelon_at_infinity, int, poly_gcd, wronskian, GeneralizedForm, Poly};
use crate::pineiro::{pineiro_rodrigues_params, u0_explicit_params};
use crate::spaces::{build_v, divided_wronskian, Params};

/// The monic divided Wronskians `y_1..y_r` of the leading flag of `V`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct YTuple {
    pub ys: Vec<Poly>,
}

/// `y_i` is the monic divided Wronskian of the first `i` echelon basis
/// elements of `V(params)`; its degree is `l_i`.
pub fn y_tuple(p: &Params) -> Result<YTuple> {
    let v = build_v(p)?;
    let mut ys = Vec::with_capacity(p.r());
    for i in 1..=p.r() {
        let idx: Vec<usize> = (0..i).collect();
        let y = divided_wronskian(&v, &idx)?.monic();
        if y.degree() != Some(p.l[i - 1] as usize) {
            return Err(Error::InternalExponentMismatch(format!(
                "y_{i} has degree {:?}, expected {}",
                y.degree(),
                p.l[i - 1]
            )));
        }
        ys.push(y);
    }
    Ok(YTuple { ys })
}

/// The tuple for rational parameters, where no space is available: `y_1` is
/// the Jacobi-Pineiro polynomial and `y_r` the explicit `u_0`. Ranks 1 and 2.
pub fn y_tuple_admissible(p: &Params) -> Result<YTuple> {
    match p.r() {
        1 => Ok(YTuple { ys: vec![pineiro_rodrigues_params(p)?] }),
        2 => Ok(YTuple {
            ys: vec![pineiro_rodrigues_params(p)?, u0_explicit_params(p)?],
        }),
        r => Err(Error::UnsupportedRank(r)),
    }
}

/// The tuple of an arbitrary space given by a spanning set: `y_i` is the
/// Wronskian of the first `i` echelon elements with its roots at 0 and 1
/// removed, made monic. Used for spaces outside the parametrized family.
pub fn y_tuple_from_basis(basis: &[Poly]) -> Result<YTuple> {
    let e = echelon_at_infinity(basis);
    if e.len() < 2 {
        return Err(Error::InvalidInput("need at least two independent polynomials".into()));
    }
    let ys = (1..e.len())
        .map(|i| GeneralizedForm::from_poly(wronskian(&e[..i])).reduce().f.monic())
        .collect();
    Ok(YTuple { ys })
}

/// Exact genericity data for a tuple.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenericityReport {
    /// `gcd(y_i, y_i') = 1` per level.
    pub squarefree: Vec<bool>,
    /// `gcd(y_i, y_{i+1}) = 1` per adjacent pair.
    pub neighbor_coprime: Vec<bool>,
    /// No common roots with the weight `T_i` per level.
    pub weight_coprime: Vec<bool>,
    pub generic: bool,
    /// Monic `gcd(y_i, y_{i+1})` per adjacent pair.
    pub neighbor_gcds: Vec<Poly>,
    /// Human-readable reason for the first failure.
    pub witness: Option<String>,
}

fn is_one(g: &Poly) -> bool {
    g.degree() == Some(0)
}

/// Checks square-freeness, coprimality with neighbours and with the
/// weights `T_1 = (x-1)^k x^{m_1}`, `T_i = x^{m_i}` (a factor only counts
/// when its exponent is nonzero).
pub fn is_generic(yt: &YTuple, p: &Params) -> GenericityReport {
    let r = yt.ys.len();
    let at_zero: Vec<bool> = (0..r).map(|i| p.m.get(i).is_some_and(|m| !m.is_zero())).collect();
    let at_one: Vec<bool> = (0..r).map(|i| i == 0 && !p.k.is_zero()).collect();
    genericity_report(yt, &at_zero, &at_one)
}

/// Genericity with explicit weight supports: level `i` must avoid 0 when
/// `at_zero[i]` and avoid 1 when `at_one[i]`.
pub fn genericity_report(yt: &YTuple, at_zero: &[bool], at_one: &[bool]) -> GenericityReport {
    let ys = &yt.ys;
    let squarefree: Vec<bool> = ys.iter().map(|y| is_one(&poly_gcd(y, &y.derivative()))).collect();
    let neighbor_gcds: Vec<Poly> = ys.windows(2).map(|w| poly_gcd(&w[0], &w[1])).collect();
    let neighbor_coprime: Vec<bool> = neighbor_gcds.iter().map(is_one).collect();
    let weight_coprime: Vec<bool> = ys
        .iter()
        .enumerate()
        .map(|(i, y)| {
            let zero_hit = at_zero.get(i).copied().unwrap_or(false) && y.coeff(0).is_zero();
            let one_hit = at_one.get(i).copied().unwrap_or(false) && y.eval(&int(1)).is_zero();
            !(zero_hit || one_hit)
        })
        .collect();
    let generic = squarefree.iter().chain(&neighbor_coprime).chain(&weight_coprime).all(|b| *b);
    let witness = if generic {
        None
    } else {
        Some(describe_failure(ys, &squarefree, &neighbor_gcds, &weight_coprime))
    };
    GenericityReport {
        squarefree,
        neighbor_coprime,
        weight_coprime,
        generic,
        neighbor_gcds,
        witness,
    }
}

fn describe_failure(
    ys: &[Poly],
    squarefree: &[bool],
    gcds: &[Poly],
    weight: &[bool],
) -> String {
    for (i, w) in ys.windows(2).enumerate() {
        let (a, b) = (i + 1, i + 2);
        if !w[1].is_zero() && w[0] == w[1].pow(2) {
            return format!("y{a} = y{b}^2");
        }
        if !w[0].is_zero() && w[1] == w[0].pow(2) {
            return format!("y{b} = y{a}^2");
        }
    }
    for (i, g) in gcds.iter().enumerate() {
        if !is_one(g) {
            return format!("gcd(y{}, y{}) = {g}", i + 1, i + 2);
        }
    }
    for (i, ok) in squarefree.iter().enumerate() {
        if !ok {
            return format!("y{} has a multiple root", i + 1);
        }
    }
    for (i, ok) in weight.iter().enumerate() {
        if !ok {
            return format!("y{} shares a root with T{}", i + 1, i + 1);
        }
    }
    "generic".into()
}
