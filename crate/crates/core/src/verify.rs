//! Identity suites over parameter grids, shared by the command line and
//! the test suites.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bethe::{scan_counterexamples, solve_bae, y_tuple, y_tuple_admissible, BaeOutcome};
use crate::error::Result;
use crate::exactmath::{default_precision, int, rank, rat, GeneralizedForm, Poly, Rational};
use crate::orthogonality::{
    check_integral_adjointness, check_norm_formulas, check_pineiro_orthogonality,
};
use crate::pineiro::{
    coeff_recursion_r2, pineiro_recursive_params, pineiro_rodrigues_params, rodrigues_operator,
    three_term_residual, u0_explicit_params, u_basis, v_basis, weyl_act, WeylElement,
};
use crate::spaces::{
    apply_d_chain_gf, ascending_chain, build_u, build_v, exponents, ode_operator, op_d,
    op_dvee, orders_at, FirstOrderOp, Kind, Pairing, Params,
};

/// Outcome of one suite: each case passes or contributes a failure line.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteReport::ok)
    }
}

/// Runs `check` on every case in parallel; `Ok(None)` is a pass,
/// `Ok(Some(msg))` and `Err` are failures. Order of failures follows the
/// order of the cases.
pub fn run_suite<F>(name: &str, cases: &[Params], check: F) -> SuiteReport
where
    F: Fn(&Params) -> Result<Option<String>> + Sync,
{
    let results: Vec<Option<String>> = cases
        .par_iter()
        .map(|p| match check(p) {
            Ok(None) => None,
            Ok(Some(msg)) => Some(format!("{}: {msg}", p.describe())),
            Err(e) => Some(format!("{}: {e}", p.describe())),
        })
        .collect();
    let failures: Vec<String> = results.into_iter().flatten().collect();
    SuiteReport {
        name: name.into(),
        cases: cases.len(),
        passed: cases.len() - failures.len(),
        failures,
    }
}

/// Every consistent integer point with `r <= r_max`, `l_1 <= l_max`,
/// `k <= k_max` and `0 <= m_i <= m_max`, in lexicographic order.
pub fn consistent_grid(r_max: usize, l_max: i64, k_max: i64, m_max: i64) -> Vec<Params> {
    let mut out = Vec::new();
    for r in 1..=r_max {
        for m in tuples(r, 0, m_max) {
            for l in partitions(r, l_max) {
                for k in 0..=k_max {
                    let p = Params::from_ints(&m, &l, k);
                    if p.is_consistent() {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn tuples(r: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..r).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                (lo..=hi).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect()
    })
}

/// Weakly decreasing sequences of length `r` with entries in `0..=max`.
pub fn partitions(r: usize, max: i64) -> Vec<Vec<i64>> {
    tuples(r, 0, max)
        .into_iter()
        .filter(|l| l.windows(2).all(|w| w[0] >= w[1]))
        .collect()
}

fn random_fraction(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    let den = [2, 3, 5, 7, 11][rng.gen_range(0..5)];
    let num = rng.gen_range(lo * den + 1..hi * den);
    rat(num, den)
}

fn non_integer(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    loop {
        let q = random_fraction(rng, lo, hi);
        if !q.is_integer() {
            return q;
        }
    }
}

/// Deterministic points in the negative region where the orthogonality
/// integrals converge: `m_i` in `(-4, -1)`, `k` in `(-2, 0)`, non-integer,
/// with `l` a partition bounded by `l_max`. Points where a formula meets a
/// pole are skipped.
pub fn admissible_points(r: usize, count: usize, l_max: i64, seed: u64) -> Vec<Params> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let m: Vec<Rational> = (0..r).map(|_| non_integer(&mut rng, -4, -1)).collect();
        let k = non_integer(&mut rng, -2, 0);
        let mut l = Vec::with_capacity(r);
        let mut top = l_max;
        for j in 0..r {
            let lo = if j == 0 { 1 } else { 0 };
            let v = rng.gen_range(lo..=top.max(lo));
            l.push(v);
            top = v;
        }
        let p = Params::new(m, l, k).expect("valid shape");
        let usable = pineiro_rodrigues_params(&p).is_ok()
            && u0_explicit_params(&p).is_ok()
            && check_norm_formulas(&p).is_ok();
        if usable {
            out.push(p);
        }
    }
    out
}

fn routes(p: &Params) -> Result<Option<String>> {
    let a = pineiro_rodrigues_params(p)?;
    let b = pineiro_recursive_params(p)?;
    let c = v_basis(p)?[0].clone();
    Ok((a != b || a != c).then(|| format!("rodrigues {a}, recursive {b}, v0 {c}")))
}

fn exponent_check(p: &Params) -> Result<Option<String>> {
    let ex = exponents(p);
    let v = build_v(p)?;
    let u = build_u(p)?;
    let as_ints = |q: &[Rational]| -> Vec<usize> {
        q.iter().map(|e| e.to_integer().try_into().unwrap_or(usize::MAX)).collect()
    };
    let checks = [
        (v.degrees(), as_ints(&ex.e_v), "V degrees"),
        (u.degrees(), as_ints(&ex.e_u), "U degrees"),
        (orders_at(&v.basis, &int(0)), as_ints(&ex.root_orders0_v), "V orders at 0"),
        (orders_at(&v.basis, &int(1)), as_ints(&ex.root_orders1_v), "V orders at 1"),
        (orders_at(&u.basis, &int(0)), as_ints(&ex.root_orders0_u), "U orders at 0"),
        (orders_at(&u.basis, &int(1)), as_ints(&ex.root_orders1_u), "U orders at 1"),
    ];
    Ok(checks
        .into_iter()
        .find(|(got, want, _)| got != want)
        .map(|(got, want, what)| format!("{what} {got:?} vs {want:?}")))
}

fn ode_check(p: &Params) -> Result<Option<String>> {
    for kind in [Kind::V, Kind::U] {
        let op = ode_operator(p, kind)?;
        let space = match kind {
            Kind::V => build_v(p)?,
            Kind::U => build_u(p)?,
        };
        for f in &space.basis {
            if !op.annihilates(f)? {
                return Ok(Some(format!("{kind:?} operator does not annihilate {f}")));
            }
        }
    }
    Ok(None)
}

fn duality_check(p: &Params) -> Result<Option<String>> {
    let pairing = Pairing::new(p)?;
    let u = build_u(p)?;
    let rows: Vec<Poly> = pairing
        .v
        .basis
        .iter()
        .map(|f| {
            u.basis
                .iter()
                .map(|g| pairing.pair(f, g))
                .collect::<Result<Vec<_>>>()
                .map(Poly::new)
        })
        .collect::<Result<_>>()?;
    if rank(&rows) != rows.len() {
        return Ok(Some("pairing is degenerate".into()));
    }
    if p.r() == 2 {
        let yt = y_tuple(p)?;
        let v = pairing.pair(&yt.ys[0], &yt.ys[1])?;
        if !v.is_zero() {
            return Ok(Some(format!("<y1, y2> = {v}")));
        }
    }
    Ok(None)
}

fn pairing_adjointness(p: &Params) -> Result<Option<String>> {
    let v = build_v(p)?;
    let here = Pairing::from_space(v.clone())?;
    for i in 0..=p.r() {
        let q = p.raised(i);
        if !q.is_consistent() {
            continue;
        }
        let up = Pairing::new(&q)?;
        let uq = build_u(&q)?;
        let d = op_d(i, p)?;
        let dv = op_dvee(i, &q)?;
        for f in &v.basis {
            for g in &uq.basis {
                let lhs = up.pair(&d.apply(f), g)?;
                let rhs = here.pair(f, &dv.apply(g))?;
                if lhs != -rhs.clone() {
                    return Ok(Some(format!("i = {i}: {lhs} vs {}", -rhs)));
                }
            }
        }
    }
    Ok(None)
}

fn three_term(p: &Params) -> Result<Option<String>> {
    let r = p.r();
    for i in 0..=r {
        for j in i + 1..=r {
            for s in j + 1..=r {
                let res = three_term_residual(p, i, j, s, Kind::V)?;
                if !res.is_zero() {
                    return Ok(Some(format!("V ({i},{j},{s}) residual {res}")));
                }
                if [i, j, s].iter().all(|&a| p.lowered(a).is_consistent()) {
                    let res = three_term_residual(p, i, j, s, Kind::U)?;
                    if !res.is_zero() {
                        return Ok(Some(format!("U ({i},{j},{s}) residual {res}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn weyl_equivariance(p: &Params) -> Result<Option<String>> {
    let r = p.r();
    let v = v_basis(p)?;
    let u = u_basis(p)?;
    for w in WeylElement::all(r) {
        let q = weyl_act(&w, p)?;
        let vq = v_basis(&q)?;
        for (j, f) in vq.iter().enumerate() {
            if *f != v[w.apply(j)] {
                return Ok(Some(format!("v_{j} at w = {:?}", w.perm())));
            }
        }
        if pineiro_rodrigues_params(&q)? != v[w.apply(0)] {
            return Ok(Some(format!("P at w = {:?}", w.perm())));
        }
        if u0_explicit_params(&q)?.monic() != u[r - w.apply(r)] {
            return Ok(Some(format!("u_0 at w = {:?}", w.perm())));
        }
    }
    Ok(None)
}

fn rodrigues_identity(p: &Params) -> Result<Option<String>> {
    let chain = ascending_chain(p)?;
    let start = p.with_l_k(vec![0; p.r()], int(0));
    for a in [int(0), int(1), int(2), rat(1, 3), rat(5, 2)] {
        let g = GeneralizedForm::power(a.clone(), int(0));
        let lhs = apply_d_chain_gf(&start, &chain, &g)?.0.reduce();
        let rhs = rodrigues_operator(p, &g)?;
        if lhs != rhs {
            return Ok(Some(format!("x^{a}")));
        }
    }
    Ok(None)
}

/// `x^{-c} (P d + Q) x^c = P d + Q + c P / x` for `P = x (x - 1)`.
fn conjugate(d: &FirstOrderOp, c: &Rational) -> FirstOrderOp {
    FirstOrderOp {
        p: d.p.clone(),
        q: &d.q + &Poly::new(vec![-c.clone(), c.clone()]),
    }
}

fn affine_relations(p: &Params) -> Result<Option<String>> {
    let r = p.r();
    for i in 0..=r {
        for j in 0..=r {
            let a = op_d(i, &p.raised(j))?.to_diff_op().compose(&op_d(j, p)?.to_diff_op());
            let b = op_d(j, &p.raised(i))?.to_diff_op().compose(&op_d(i, p)?.to_diff_op());
            if a != b {
                return Ok(Some(format!("D_{i} D_{j} != D_{j} D_{i}")));
            }
        }
    }
    for s in 1..=r {
        let w = WeylElement::simple(r, s)?;
        let q = weyl_act(&w, p)?;
        let c = if s == 1 { p.m_at(1) + int(1) } else { int(0) };
        for j in 0..=r {
            if conjugate(&op_d(j, p)?, &c) != op_d(w.apply(j), &q)? {
                return Ok(Some(format!("s_{s} D_{j} != D_{} s_{s}", w.apply(j))));
            }
        }
    }
    Ok(None)
}

fn tuple_check(p: &Params) -> Result<Option<String>> {
    let a = y_tuple(p)?;
    let b = y_tuple_admissible(p)?;
    if a != b {
        return Ok(Some("space tuple differs from the explicit tuple".into()));
    }
    if p.r() == 2 {
        for last in 0..=2 {
            let seq = coeff_recursion_r2(p, last)?;
            if seq.y1() != a.ys[0] || seq.y2() != a.ys[1] {
                return Ok(Some(format!("coefficient recursion, last step {last}")));
            }
        }
    }
    Ok(None)
}

fn orthogonality_check(p: &Params) -> Result<Option<String>> {
    if !check_pineiro_orthogonality(p)? {
        return Ok(Some("orthogonality".into()));
    }
    if let Some((name, v)) = check_norm_formulas(p)?.into_iter().find(|(_, v)| !v.is_zero()) {
        return Ok(Some(format!("norm {name} residual {v}")));
    }
    for i in 0..=p.r() {
        if !check_integral_adjointness(p, i)? {
            return Ok(Some(format!("integral adjointness i = {i}")));
        }
    }
    Ok(None)
}

fn counterexample_suite() -> SuiteReport {
    let found = scan_counterexamples(5, 5, 100);
    let cases: Vec<Params> = found
        .iter()
        .map(|c| Params::from_ints(&[c.m1, c.m2], &[2, 1], c.k))
        .collect();
    let mut report = run_suite("counterexamples", &cases, |p| {
        Ok(match solve_bae(p, &default_precision())? {
            BaeOutcome::NoSolution { .. } => None,
            other => Some(format!("expected no solution, got {other:?}")),
        })
    });
    if !found.iter().any(|c| (c.m1, c.m2, c.k) == (2, 3, 49)) {
        report.failures.push("(2, 3, 49) missing from the scan".into());
    }
    report
}

/// Every identity suite on a small consistent grid, plus the negative
/// region checks at deterministic rational points.
pub fn verify_all() -> VerifyReport {
    let grid = consistent_grid(2, 2, 4, 2);
    let mut grid3 = grid.clone();
    grid3.extend(consistent_grid(3, 1, 2, 1).into_iter().filter(|p| p.r() == 3));
    let low: Vec<Params> = grid.iter().filter(|p| p.r() <= 2).cloned().collect();
    let mut negative = admissible_points(1, 10, 3, 1);
    negative.extend(admissible_points(2, 10, 3, 2));
    let suites = vec![
        run_suite("routes", &grid3, routes),
        run_suite("exponents", &grid3, exponent_check),
        run_suite("ode", &low, ode_check),
        run_suite("duality", &grid3, duality_check),
        run_suite("pairing_adjointness", &grid3, pairing_adjointness),
        run_suite("three_term", &grid3, three_term),
        run_suite("weyl", &grid3, weyl_equivariance),
        run_suite("rodrigues_operator", &grid3, rodrigues_identity),
        run_suite("affine_relations", &grid3, affine_relations),
        run_suite("tuple", &low, tuple_check),
        run_suite("orthogonality", &negative, orthogonality_check),
        counterexample_suite(),
    ];
    VerifyReport { suites }
}
