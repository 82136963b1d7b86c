use num_traits::Zero;
use serde::Serialize;

use super::{ascending_chain, apply_d_chain, exponents, weight_polys, Params};
use crate::error::{Error, Result};
use crate::exactmath::{as_integer, echelon_at_infinity, int, wronskian, Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    V,
    U,
}

/// A space `V(m, l, k)` or `U(m, l, k)` with its echelon-at-infinity basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolySpace {
    pub kind: Kind,
    #[serde(flatten)]
    pub params: Params,
    pub r: usize,
    pub basis: Vec<Poly>,
}

impl PolySpace {
    pub fn degrees(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.degree().unwrap_or(0)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("space serializes")
    }
}

/// Distinct orders of vanishing at `z` realized by elements of the span.
pub fn orders_at(basis: &[Poly], z: &Rational) -> Vec<usize> {
    // Shift z to the origin and eliminate from the lowest degree up.
    let mut rows: Vec<Vec<Rational>> = basis
        .iter()
        .map(|b| b.taylor_shift(z).into_coeffs())
        .filter(|c| !c.is_empty())
        .collect();
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    for r in rows.iter_mut() {
        r.resize(width, Rational::zero());
    }
    let mut orders = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let Some(p) = (next..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(next, p);
        let pivot = rows[next].clone();
        for row in rows.iter_mut().skip(next + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot[col];
            for (c, pc) in row.iter_mut().zip(pivot.iter()) {
                *c -= &f * pc;
            }
        }
        orders.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    orders
}

fn exps_as_usize(v: &[Rational]) -> Option<Vec<usize>> {
    v.iter()
        .map(|e| as_integer(e).and_then(|x| usize::try_from(x).ok()))
        .collect()
}

/// Monomial basis `x^{e_i(m, 0, 0)}` of `V(m, 0, 0)`.
pub fn base_space_v0(m: &[Rational]) -> Result<PolySpace> {
    let params = Params::new(m.to_vec(), vec![0; m.len()], int(0))?;
    params.require_consistent()?;
    let ex = exponents(&params);
    let degs = exps_as_usize(&ex.e_v).expect("consistent data has integer exponents");
    Ok(PolySpace {
        kind: Kind::V,
        r: params.r(),
        params,
        basis: degs.into_iter().map(|d| Poly::monomial(int(1), d)).collect(),
    })
}

fn verify(space: &PolySpace) -> Result<()> {
    let ex = exponents(&space.params);
    let (degs, o0, o1) = match space.kind {
        Kind::V => (&ex.e_v, &ex.root_orders0_v, &ex.root_orders1_v),
        Kind::U => (&ex.e_u, &ex.root_orders0_u, &ex.root_orders1_u),
    };
    let mismatch = |what: &str, got: &[usize], want: &[Rational]| {
        Error::InternalExponentMismatch(format!(
            "{:?}-space {}: {what} {got:?} vs expected {}",
            space.kind,
            space.params.describe(),
            want.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        ))
    };
    let want = |v: &[Rational]| exps_as_usize(v);
    let got = space.degrees();
    if space.basis.len() != space.r + 1 || want(degs) != Some(got.clone()) {
        return Err(mismatch("degrees", &got, degs));
    }
    let got0 = orders_at(&space.basis, &int(0));
    if want(o0) != Some(got0.clone()) {
        return Err(mismatch("orders at 0", &got0, o0));
    }
    let got1 = orders_at(&space.basis, &int(1));
    if want(o1) != Some(got1.clone()) {
        return Err(mismatch("orders at 1", &got1, o1));
    }
    Ok(())
}

/// Images of the base basis under the composition for an explicit chain.
pub fn build_v_with_chain(params: &Params, chain: &[usize]) -> Result<PolySpace> {
    params.require_consistent()?;
    let base = base_space_v0(&params.m)?;
    let mut images = Vec::with_capacity(base.basis.len());
    let mut end = base.params.clone();
    for f in &base.basis {
        let (g, p) = apply_d_chain(&base.params, chain, f)?;
        images.push(g);
        end = p;
    }
    if end != *params {
        return Err(Error::InvalidInput(format!(
            "chain ends at {} instead of {}",
            end.describe(),
            params.describe()
        )));
    }
    let space = PolySpace {
        kind: Kind::V,
        r: params.r(),
        params: params.clone(),
        basis: echelon_at_infinity(&images),
    };
    verify(&space)?;
    Ok(space)
}

/// `V(m, l, k)`, obtained from the monomial space by the ascending operator
/// composition, echelon-reduced and checked against its exponents.
pub fn build_v(params: &Params) -> Result<PolySpace> {
    params.require_consistent()?;
    build_v_with_chain(params, &ascending_chain(params)?)
}

/// Product `prod_s T_{idx(s)}^{pow(s)}` for the divided Wronskian of `n`
/// elements of a space of the given kind.
fn divisor(kind: Kind, weights: &[Poly], n: usize) -> Poly {
    let r = weights.len();
    let mut d = Poly::one();
    for s in 1..n {
        let t = match kind {
            Kind::V => &weights[s - 1],
            Kind::U => &weights[r - s],
        };
        d = &d * &t.pow((n - s) as u32);
    }
    d
}

/// `W(fs) / (T_1^{n-1} T_2^{n-2} ... T_{n-1})` for kind V, and the mirrored
/// product `T_r^{n-1} T_{r-1}^{n-2} ...` for kind U.
pub fn divided_wronskian_of(kind: Kind, params: &Params, fs: &[Poly]) -> Result<Poly> {
    let weights = weight_polys(params)?;
    if fs.len() > weights.len() + 1 {
        return Err(Error::InvalidInput(format!(
            "{} functions exceed dimension {}",
            fs.len(),
            weights.len() + 1
        )));
    }
    wronskian(fs).exact_div(&divisor(kind, &weights, fs.len()))
}

/// Divided Wronskian of the basis elements at `indices`, taken in the given
/// order.
pub fn divided_wronskian(space: &PolySpace, indices: &[usize]) -> Result<Poly> {
    if indices.is_empty() {
        return Err(Error::InvalidInput("empty index set".into()));
    }
    let mut fs = Vec::with_capacity(indices.len());
    for &i in indices {
        fs.push(
            space
                .basis
                .get(i)
                .ok_or(Error::IndexOutOfRange { index: i, max: space.r })?
                .clone(),
        );
    }
    divided_wronskian_of(space.kind, &space.params, &fs)
}

/// Divided Wronskians of the `r`-element subsets omitting each index in
/// turn; entry `i` omits basis element `i`.
pub fn omit_one_wronskians(space: &PolySpace) -> Result<Vec<Poly>> {
    let n = space.basis.len();
    (0..n)
        .map(|i| {
            let idx: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            if idx.is_empty() {
                return Ok(Poly::one());
            }
            divided_wronskian(space, &idx)
        })
        .collect()
}

/// `U(m, l, k)` spanned by the divided Wronskians of `r`-subsets of the
/// `V(m, l, k)` basis.
pub fn build_u(params: &Params) -> Result<PolySpace> {
    let v = build_v(params)?;
    build_u_from_v(&v)
}

pub fn build_u_from_v(v: &PolySpace) -> Result<PolySpace> {
    let gens = omit_one_wronskians(v)?;
    let space = PolySpace {
        kind: Kind::U,
        r: v.r,
        params: v.params.clone(),
        basis: echelon_at_infinity(&gens),
    };
    verify(&space)?;
    Ok(space)
}

/// `T_1^r T_2^{r-1} ... T_r` (kind V) or `T_r^r ... T_1` (kind U).
pub fn wronskian_law(kind: Kind, params: &Params) -> Result<Poly> {
    let weights = weight_polys(params)?;
    Ok(divisor(kind, &weights, weights.len() + 1))
}
