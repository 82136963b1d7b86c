use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bethe_pineiro::bethe::{
    genericity_report, scan_counterexamples, solve_bae, y_tuple, y_tuple_admissible,
    y_tuple_from_basis, BaeOutcome,
};
use bethe_pineiro::exactmath::{
    binomial, default_precision, in_span, int, rank, rat, real_roots, to_f64, Poly, Rational,
};
use bethe_pineiro::orthogonality::{
    check_norm_formulas, check_pineiro_orthogonality, moment_ratio, JacobiWeight,
};
use bethe_pineiro::pineiro::{
    a_const, a_vee, b_const, b_explicit_r2, coeff_recursion_r2, pineiro_recursive_params,
    pineiro_rodrigues_params, three_term_residual, u0_explicit_params, v_basis, v_element, weyl_act,
    WeylElement,
};
use bethe_pineiro::spaces::{
    build_u, build_u_from_v, build_v, divided_wronskian_of, omit_one_wronskians, op_d, op_dvee, orders_at,
    DiffOp, FirstOrderOp, Kind, Pairing, Params,
};
use bethe_pineiro::verify::{admissible_points, consistent_grid};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Sub-checks of one criterion.
#[derive(Default)]
struct Report {
    checks: Vec<(String, bool)>,
}

impl Report {
    fn check(&mut self, what: impl Into<String>, ok: bool) {
        self.checks.push((what.into(), ok));
    }

    fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|(_, ok)| *ok)
    }
}

type Criterion = (u32, &'static str, fn() -> Report);

/// Turns library errors and missing values into failure messages, so that
/// no check can pass by erroring out.
trait Must<T> {
    fn must(self, what: &str) -> Result<T, String>;
}

impl<T, E: std::fmt::Display> Must<T> for Result<T, E> {
    fn must(self, what: &str) -> Result<T, String> {
        self.map_err(|e| format!("{what}: {e}"))
    }
}

impl<T> Must<T> for Option<T> {
    fn must(self, what: &str) -> Result<T, String> {
        self.ok_or_else(|| format!("{what}: missing"))
    }
}

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn main() -> ExitCode {
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let criteria: [Criterion; 11] = [
        (1, "counterexample reproduction", criterion_counterexample),
        (2, "second counterexample", criterion_second_counterexample),
        (3, "scanner completeness", criterion_scanner),
        (4, "route equality", criterion_routes),
        (5, "exponents and flags", criterion_exponents),
        (6, "duality and pairing", criterion_duality),
        (7, "identity suites at rational parameters", criterion_identities),
        (8, "explicit coefficients", criterion_coefficients),
        (9, "orthogonality and norms", criterion_orthogonality),
        (10, "bethe equation numerics", criterion_bae_numerics),
        (11, "remark space", criterion_remark),
    ];
    let mut failed = 0;
    for (n, name, run) in criteria {
        let label = format!("criterion {n:>2} {name}");
        if !filters.is_empty() && !filters.iter().any(|f| label.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let report = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            let mut r = Report::default();
            r.check(format!("panicked: {msg}"), false);
            r
        });
        let verdict = if report.pass() { "PASS" } else { "FAIL" };
        println!("{label}: {verdict} ({} checks, {:.2?})", report.checks.len(), start.elapsed());
        for (what, ok) in &report.checks {
            if !ok {
                println!("    failed: {what}");
            }
        }
        if !report.pass() {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

// Independent oracles.

fn consistent_by_definition(m: &[i64], l: &[i64], k: i64) -> bool {
    let r = l.len();
    let mut prev = k;
    for &li in l {
        if li < 0 || li > prev {
            return false;
        }
        prev = li;
    }
    (0..r).all(|s| m[s] >= 0 && l[s] - l.get(s + 1).copied().unwrap_or(0) <= m[s])
}

fn counter_condition(m1: i64, m2: i64, k: i64) -> i64 {
    (2 * m1 + m2).pow(2) + k * (4 * m1 - m2 * m2)
}

fn xm1() -> Poly {
    Poly::from_ints(&[-1, 1])
}

/// Closed form of the first Bethe polynomial at `l = (2, 1)`.
fn y1_closed(m1: &Rational, m2: &Rational, k: &Rational) -> Poly {
    let one = int(1);
    let lin = (k - &one) * (int(2) * k + int(2) * m1 + m2) / ((m1 + k - &one) * (m1 + m2 + k));
    let cst = k * (k - &one) / ((m2 + m1 + k) * (m1 + k - &one));
    &(&xm1().pow(2) + &xm1().scale(&lin)) + &Poly::constant(cst)
}

/// Closed form of the second Bethe polynomial at `l = (2, 1)`.
fn y2_closed(m1: &Rational, m2: &Rational, k: &Rational) -> Poly {
    let root = m2 * (m1 + m2 + int(1)) / ((m2 + int(2)) * (k + m1 + m2));
    Poly::linear_root(root)
}

fn random_fraction(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    loop {
        let d = [2, 3, 5, 7, 11, 13][rng.gen_range(0..6)];
        let n = rng.gen_range(lo * d + 1..hi * d);
        let q = rat(n, d);
        if !q.is_integer() {
            return q;
        }
    }
}

/// Falling factorial `a (a - 1) ... (a - n + 1)`.
fn falling(a: &Rational, n: usize) -> Rational {
    (0..n).fold(int(1), |acc, j| acc * (a - int(j as i64)))
}

fn det(mat: &[Vec<Poly>]) -> Poly {
    let n = mat.len();
    if n == 0 {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for j in 0..n {
        let minor: Vec<Vec<Poly>> = mat[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &mat[0][j] * &det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `W(x^{a_j} f_j) / x^{sum a_j - n(n-1)/2}`, for rational `a_j`.
fn power_wronskian(fs: &[(Rational, Poly)]) -> Poly {
    let n = fs.len();
    let mat: Vec<Vec<Poly>> = (0..n)
        .map(|t| {
            fs.iter()
                .map(|(a, f)| {
                    (0..=t).fold(Poly::zero(), |acc, s| {
                        let c = binomial(t as u64, s as u64) * falling(a, t - s);
                        &acc + &f.nth_derivative(s).shift_up(s).scale(&c)
                    })
                })
                .collect()
        })
        .collect();
    det(&mat)
}

/// Removes every factor `x` and `x - 1`, then makes the result monic.
fn strip_endpoints(f: &Poly) -> Poly {
    let mut g = f.clone();
    for lin in [Poly::x(), xm1()] {
        loop {
            let (q, rem) = g.div_rem(&lin);
            if !rem.is_zero() || g.degree() == Some(0) {
                break;
            }
            g = q;
        }
    }
    g.monic()
}

fn counterexample_battery(m1: i64, m2: i64, k: i64, root: Rational) -> Report {
    let mut rep = Report::default();
    let start = Instant::now();
    let p = Params::from_ints(&[m1, m2], &[2, 1], k);
    rep.check("consistent by definition", consistent_by_definition(&[m1, m2], &[2, 1], k));
    rep.check("is_consistent", p.is_consistent());
    let yt = y_tuple(&p).expect("tuple");
    let y2 = Poly::linear_root(root);
    rep.check(format!("y1 = {}", yt.ys[0]), yt.ys[0] == y2.pow(2));
    rep.check(format!("y2 = {}", yt.ys[1]), yt.ys[1] == y2);
    let (a, b, c) = (int(m1), int(m2), int(k));
    rep.check("closed-form y1", yt.ys[0] == y1_closed(&a, &b, &c));
    rep.check("closed-form y2", yt.ys[1] == y2_closed(&a, &b, &c));
    rep.check("condition vanishes", counter_condition(m1, m2, k) == 0);
    match solve_bae(&p, &default_precision()).expect("solve") {
        BaeOutcome::NoSolution { witness, report } => {
            rep.check("no solution", true);
            rep.check(format!("witness {witness}"), witness == "y1 = y2^2" && !report.generic);
        }
        other => rep.check(format!("expected no solution, got {other:?}"), false),
    }
    let elapsed = start.elapsed();
    rep.check(format!("runtime {elapsed:.2?} < 1 s"), elapsed < Duration::from_secs(1));
    rep
}

fn criterion_counterexample() -> Report {
    counterexample_battery(2, 3, 49, rat(1, 15))
}

fn criterion_second_counterexample() -> Report {
    let mut rep = counterexample_battery(1, 3, 5, rat(1, 3));
    let found = scan_counterexamples(5, 5, 10);
    rep.check("found by the scanner", found.iter().any(|c| (c.m1, c.m2, c.k) == (1, 3, 5)));
    rep
}

fn criterion_scanner() -> Report {
    let mut rep = Report::default();
    let mut brute = BTreeSet::new();
    for m1 in 0..=5 {
        for m2 in 0..=5 {
            for k in 0..=100 {
                if counter_condition(m1, m2, k) == 0 && consistent_by_definition(&[m1, m2], &[2, 1], k) {
                    brute.insert((m1, m2, k));
                }
            }
        }
    }
    let scanned: BTreeSet<(i64, i64, i64)> =
        scan_counterexamples(5, 5, 100).iter().map(|c| (c.m1, c.m2, c.k)).collect();
    rep.check(format!("scan {scanned:?} equals brute force {brute:?}"), scanned == brute);
    rep.check("contains (2, 3, 49)", brute.contains(&(2, 3, 49)));
    rep
}

fn partitions_by_definition(r: usize, max: i64) -> Vec<Vec<i64>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=max {
        for rest in partitions_by_definition(r - 1, first) {
            let mut l = vec![first];
            l.extend(rest);
            out.push(l);
        }
    }
    out
}

/// Every consistent point with `r <= 3`, `l_1 <= 4`, `k <= 6`, `m_i <= 4`.
fn acceptance_grid() -> (Vec<Params>, usize) {
    let grid = consistent_grid(3, 4, 6, 4);
    let mut expected = 0;
    for r in 1..=3usize {
        for code in 0..5i64.pow(r as u32) {
            let m: Vec<i64> = (0..r).map(|s| (code / 5i64.pow(s as u32)) % 5).collect();
            for l in partitions_by_definition(r, 4) {
                for k in 0..=6 {
                    if consistent_by_definition(&m, &l, k) {
                        expected += 1;
                    }
                }
            }
        }
    }
    (grid, expected)
}

fn criterion_routes() -> Report {
    let mut rep = Report::default();
    let start = Instant::now();
    let (grid, expected) = acceptance_grid();
    rep.check(format!("grid has {} points, enumeration {expected}", grid.len()), grid.len() == expected);
    rep.check("grid points are consistent", grid.iter().all(Params::is_consistent));
    let outcomes: Vec<Result<bool, String>> = grid
        .par_iter()
        .map(|p| {
            let a = pineiro_rodrigues_params(p).must("rodrigues")?;
            let b = pineiro_recursive_params(p).must("recursive")?;
            let c = v_element(p, 0).must("v_0")?;
            Ok(a == b && a == c)
        })
        .collect();
    let bad: Vec<String> = grid
        .iter()
        .zip(&outcomes)
        .filter(|(_, o)| matches!(o, Ok(false)))
        .map(|(p, _)| p.describe())
        .collect();
    let errors: Vec<&String> = outcomes.iter().filter_map(|o| o.as_ref().err()).collect();
    rep.check(format!("route mismatches {bad:?}"), bad.is_empty());
    rep.check(format!("{} points raised errors {:?}", errors.len(), &errors[..errors.len().min(3)]), errors.is_empty());
    let elapsed = start.elapsed();
    rep.check(format!("runtime {elapsed:.2?} < 60 s"), elapsed < Duration::from_secs(60));
    rep
}

fn partial_sums(v: &[i64]) -> Vec<i64> {
    (0..=v.len()).map(|i| v[..i].iter().sum::<i64>() + i as i64).collect()
}

fn sorted_usize(mut v: Vec<i64>) -> Vec<usize> {
    v.sort();
    v.into_iter().map(|x| x as usize).collect()
}

fn exponent_check(p: &Params) -> Outcome {
    let r = p.r();
    let m = p.m_ints().must("integer m")?;
    let k = p.k_int().must("integer k")?;
    let l = |i: usize| -> i64 {
        match i {
            0 => k,
            i if i > r => 0,
            i => p.l[i - 1],
        }
    };
    let msum = partial_sums(&m);
    let rev: Vec<i64> = m.iter().rev().copied().collect();
    let rsum = partial_sums(&rev);
    let deg_v: Vec<i64> = (0..=r).map(|i| k + msum[i] - l(i) + l(i + 1)).collect();
    let deg_u: Vec<i64> = (0..=r).map(|i| rsum[i] - l(r + 1 - i) + l(r - i)).collect();
    let at1_v: Vec<i64> = (0..=r).map(|i| if i == 0 { 0 } else { k + i as i64 }).collect();
    let at1_u: Vec<i64> = (0..=r).map(|i| if i < r { i as i64 } else { k + r as i64 }).collect();
    let v = build_v(p).must("V")?;
    let u = build_u(p).must("U")?;
    let degrees = |s: &[usize]| sorted_usize(s.iter().map(|&d| d as i64).collect());
    let checks = [
        ("V degrees", degrees(&v.degrees()), sorted_usize(deg_v)),
        ("U degrees", degrees(&u.degrees()), sorted_usize(deg_u)),
        ("V orders at 0", orders_at(&v.basis, &int(0)), sorted_usize(msum)),
        ("V orders at 1", orders_at(&v.basis, &int(1)), sorted_usize(at1_v)),
        ("U orders at 0", orders_at(&u.basis, &int(0)), sorted_usize(rsum)),
        ("U orders at 1", orders_at(&u.basis, &int(1)), sorted_usize(at1_u)),
    ];
    for (what, got, want) in checks {
        ensure(got == want, || format!("{what} {got:?} vs {want:?}"))?;
    }
    Ok(())
}

/// Runs `check` on every point in parallel and records one sub-check with
/// the first few failures.
fn run_points(rep: &mut Report, name: &str, points: &[Params], check: impl Fn(&Params) -> Outcome + Sync) {
    let bad: Vec<String> = points
        .par_iter()
        .filter_map(|p| check(p).err().map(|e| format!("{}: {e}", p.describe())))
        .collect();
    rep.check(
        format!("{name} on {} points, {} failures {:?}", points.len(), bad.len(), &bad[..bad.len().min(3)]),
        bad.is_empty() && !points.is_empty(),
    );
}

fn criterion_exponents() -> Report {
    let mut rep = Report::default();
    let (grid, _) = acceptance_grid();
    run_points(&mut rep, "exponents", &grid, exponent_check);
    rep
}

fn same_span(a: &[Poly], b: &[Poly]) -> bool {
    rank(a) == rank(b) && a.iter().all(|f| in_span(f, b)) && b.iter().all(|g| in_span(g, a))
}

fn duality_check(p: &Params) -> Outcome {
    let v = build_v(p).must("V")?;
    let u = build_u_from_v(&v).must("U")?;
    let gens = omit_one_wronskians(&v).must("omit-one Wronskians of V")?;
    ensure(same_span(&gens, &u.basis), || "Wronskians of V do not span U".into())?;
    let r = p.r();
    let back = (0..=r)
        .map(|i| {
            let rest: Vec<Poly> = (0..=r).filter(|&j| j != i).map(|j| u.basis[j].clone()).collect();
            divided_wronskian_of(Kind::U, p, &rest).must("Wronskian of U")
        })
        .collect::<Result<Vec<_>, _>>()?;
    ensure(same_span(&back, &v.basis), || "Wronskians of U do not span V".into())?;
    let pairing = Pairing::from_space(v.clone()).must("pairing")?;
    if r == 2 {
        let yt = y_tuple(p).must("tuple")?;
        let value = pairing.pair(&yt.ys[0], &yt.ys[1]).must("<y1, y2>")?;
        ensure(value.is_zero(), || format!("<y1, y2> = {value}"))?;
    }
    for i in 0..=r {
        let q = p.raised(i);
        if !q.is_consistent() {
            continue;
        }
        let up = Pairing::new(&q).must("raised pairing")?;
        let uq = build_u_from_v(&up.v).must("raised U")?;
        let d = op_d(i, p).must("D")?;
        let dv = op_dvee(i, &q).must("dual D")?;
        for f in &v.basis {
            for g in &uq.basis {
                let lhs = up.pair(&d.apply(f), g).must("<D f, g>")?;
                let rhs = pairing.pair(f, &dv.apply(g)).must("<f, D g>")?;
                ensure(lhs == -rhs.clone(), || format!("adjointness i = {i}: {lhs} vs {}", -rhs))?;
            }
        }
    }
    Ok(())
}

fn criterion_duality() -> Report {
    let mut rep = Report::default();
    let (grid, _) = acceptance_grid();
    run_points(&mut rep, "closure, <y1, y2> and adjointness", &grid, duality_check);
    rep
}

/// Random rational `m` with integer `l` strictly decreasing to at least one
/// and integer `k > l_1`, so every neighbour `l +- 1_i` stays a partition.
fn rational_points(count: usize, seed: u64) -> Vec<Params> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|n| {
            let r = 1 + n % 3;
            // Integer contiguous sums of m put the point on a pole of the coefficients.
            let m: Vec<Rational> = loop {
                let m: Vec<Rational> = (0..r).map(|_| random_fraction(&mut rng, -6, 6)).collect();
                let on_pole = (0..r).any(|a| (a + 1..=r).any(|b| m[a..b].iter().sum::<Rational>().is_integer()));
                if !on_pole {
                    break m;
                }
            };
            let mut l = vec![0i64; r];
            let mut below = 0;
            for s in (0..r).rev() {
                below += rng.gen_range(1..=2);
                l[s] = below;
            }
            let k = l[0] + rng.gen_range(1..=3);
            Params::new(m, l, int(k)).expect("shape")
        })
        .collect()
}

fn ev(p: &Params, i: usize) -> Rational {
    &p.k + p.m.iter().take(i).sum::<Rational>() - p.l_at(i) + p.l_at(i + 1) + int(i as i64)
}

fn triples(r: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..=r {
        for j in i + 1..=r {
            for s in j + 1..=r {
                out.push((i, j, s));
            }
        }
    }
    out
}

fn linear_relation(p: &Params, dual: bool) -> Outcome {
    for (i, j, s) in triples(p.r()) {
        let op = |a: usize| -> Result<DiffOp, String> {
            let d = if dual { op_dvee(a, p) } else { op_d(a, p) };
            Ok(d.must("operator")?.to_diff_op())
        };
        let a = |x: usize, y: usize| ev(p, x) - ev(p, y);
        let sum = op(i)?.scale(&a(j, s)).add(&op(j)?.scale(&a(s, i))).add(&op(s)?.scale(&a(i, j)));
        ensure(sum.is_zero(), || format!("({i}, {j}, {s})"))?;
    }
    Ok(())
}

fn holonomy(p: &Params) -> Outcome {
    let r = p.r();
    let d = |a: usize, q: &Params| -> Result<DiffOp, String> { Ok(op_d(a, q).must("D")?.to_diff_op()) };
    let dv = |a: usize, q: &Params| -> Result<DiffOp, String> { Ok(op_dvee(a, q).must("dual D")?.to_diff_op()) };
    for i in 0..=r {
        for j in 0..=r {
            let lhs = d(j, &p.raised(i))?.compose(&d(i, p)?);
            let rhs = d(i, &p.raised(j))?.compose(&d(j, p)?);
            ensure(lhs == rhs, || format!("D_{j} D_{i}"))?;
            let lhs = dv(j, &p.lowered(i))?.compose(&dv(i, p)?);
            let rhs = dv(i, &p.lowered(j))?.compose(&dv(j, p)?);
            ensure(lhs == rhs, || format!("dual D_{j} D_{i}"))?;
        }
    }
    Ok(())
}

fn constants_holonomy(p: &Params) -> Outcome {
    let r = p.r();
    for i in 0..=r {
        for j in 0..=r {
            let lhs = a_const(&p.raised(j), i).must("A")? * a_const(p, j).must("A")?;
            let rhs = a_const(&p.raised(i), j).must("A")? * a_const(p, i).must("A")?;
            ensure(lhs == rhs, || format!("A ({i}, {j})"))?;
            let lhs = a_vee(&p.lowered(j), i).must("dual A")? * a_vee(p, j).must("dual A")?;
            let rhs = a_vee(&p.lowered(i), j).must("dual A")? * a_vee(p, i).must("dual A")?;
            ensure(lhs == rhs, || format!("dual A ({i}, {j})"))?;
        }
    }
    let k = p.l[0];
    let flat = Params::new(p.m.clone(), vec![k; r], int(k)).must("flat point")?;
    let top = a_vee(&flat, r).must("top dual constant")?;
    let b = b_const(&p.m, k).must("B_l")?;
    ensure(top == b, || format!("top dual constant {top} vs B_l {b}"))
}

fn three_terms(p: &Params) -> Outcome {
    for (i, j, s) in triples(p.r()) {
        for kind in [Kind::V, Kind::U] {
            let res = three_term_residual(p, i, j, s, kind).must("three-term residual")?;
            ensure(res.is_zero(), || format!("{kind:?} ({i}, {j}, {s}) residual {res}"))?;
        }
    }
    Ok(())
}

/// The `U` basis `u_0..u_r` as Wronskians of `x^{E_j} v_j` with one index
/// omitted, for arbitrary rational `m`.
fn u_basis_oracle(p: &Params) -> Result<Vec<Poly>, String> {
    let r = p.r();
    let vs = v_basis(p).must("v basis")?;
    let orders: Vec<Rational> =
        (0..=r).map(|j| p.m.iter().take(j).sum::<Rational>() + int(j as i64)).collect();
    let mut out = vec![Poly::zero(); r + 1];
    for i in 0..=r {
        let rest: Vec<(Rational, Poly)> =
            (0..=r).filter(|&j| j != i).map(|j| (orders[j].clone(), vs[j].clone())).collect();
        let u = strip_endpoints(&power_wronskian(&rest));
        let want = p.l_at(i) - p.l_at(i + 1);
        let got = int(u.degree().must("degree")? as i64);
        ensure(got == want, || format!("u_{} has degree {got}, expected {want}", r - i))?;
        out[r - i] = u;
    }
    Ok(out)
}

fn weyl_equivariance(p: &Params) -> Outcome {
    let r = p.r();
    let v = v_basis(p).must("v basis")?;
    let u = u_basis_oracle(p)?;
    for w in WeylElement::all(r) {
        let q = weyl_act(&w, p).must("Weyl action")?;
        let vq = v_basis(&q).must("acted v basis")?;
        ensure((0..=r).all(|j| vq[j] == v[w.apply(j)]), || format!("v at {:?}", w.perm()))?;
        let pq = pineiro_rodrigues_params(&q).must("acted P")?;
        ensure(pq == v[w.apply(0)], || format!("P at {:?}", w.perm()))?;
        let uq = u0_explicit_params(&q).must("acted u_0")?.monic();
        ensure(uq == u[r - w.apply(r)], || format!("u_0 at {:?}", w.perm()))?;
    }
    Ok(())
}

/// `x^{-c} D x^{c}` for `D = x (x - 1) d + q`.
fn conjugate(d: &FirstOrderOp, c: &Rational) -> FirstOrderOp {
    FirstOrderOp {
        p: d.p.clone(),
        q: &d.q + &Poly::new(vec![-c.clone(), c.clone()]),
    }
}

fn affine_relations(p: &Params) -> Outcome {
    let r = p.r();
    for s in 1..=r {
        let w = WeylElement::simple(r, s).must("simple reflection")?;
        let q = weyl_act(&w, p).must("Weyl action")?;
        let c = if s == 1 { &p.m[0] + int(1) } else { int(0) };
        for j in 0..=r {
            let lhs = conjugate(&op_d(j, p).must("D")?, &c);
            let rhs = op_d(w.apply(j), &q).must("acted D")?;
            ensure(lhs == rhs, || format!("s_{s} D_{j}"))?;
        }
    }
    holonomy(p)
}

/// Name, seed and per-point check of one identity suite.
type Suite = (&'static str, u64, fn(&Params) -> Outcome);

fn criterion_identities() -> Report {
    let mut rep = Report::default();
    let suites: [Suite; 7] = [
        ("V linear relations", 11, |p| linear_relation(p, false)),
        ("U linear relations", 12, |p| linear_relation(p, true)),
        ("holonomy", 13, holonomy),
        ("constant holonomy", 14, constants_holonomy),
        ("three-term relations", 15, three_terms),
        ("Weyl equivariance", 16, weyl_equivariance),
        ("affine Weyl relations", 17, affine_relations),
    ];
    for (name, seed, check) in suites {
        run_points(&mut rep, name, &rational_points(100, seed), check);
    }
    rep
}

fn criterion_coefficients() -> Report {
    let mut rep = Report::default();
    let mut rng = ChaCha8Rng::seed_from_u64(80);
    let mut points = Vec::new();
    for _ in 0..50 {
        let m1 = random_fraction(&mut rng, -5, 8);
        let m2 = random_fraction(&mut rng, -5, 8);
        let k = random_fraction(&mut rng, -5, 8);
        let ki = int(rng.gen_range(2..=12));
        points.push((m1, m2, k, ki));
    }
    let explicit = |(m1, m2, k, _): &(Rational, Rational, Rational, Rational)| -> Outcome {
        let p = Params::new(vec![m1.clone(), m2.clone()], vec![2, 1], k.clone()).must("point")?;
        let u0 = u0_explicit_params(&p).must("u_0")?;
        ensure(u0 == y2_closed(m1, m2, k), || format!("u_0 = {u0}"))?;
        let y1 = pineiro_rodrigues_params(&p).must("P")?;
        ensure(y1 == y1_closed(m1, m2, k), || format!("P = {y1}"))
    };
    let recursion = |(m1, m2, _, k): &(Rational, Rational, Rational, Rational)| -> Outcome {
        let p = Params::new(vec![m1.clone(), m2.clone()], vec![2, 1], k.clone()).must("point")?;
        let y1 = y1_closed(m1, m2, k);
        let a_want: Vec<Rational> = (0..=2).map(|n| y1.taylor_shift(&int(1)).coeff(n)).collect();
        for last in 0..=2 {
            let seq = coeff_recursion_r2(&p, last).must("recursion")?;
            ensure(seq.a == a_want, || format!("a-sequence, last step {last}"))?;
            ensure(seq.y2() == y2_closed(m1, m2, k), || format!("b-sequence, last step {last}"))?;
        }
        Ok(())
    };
    for (name, check) in [("explicit u_0 and P", &explicit as &dyn Fn(&_) -> Outcome), ("coefficient recursion", &recursion)] {
        let bad: Vec<String> = points.iter().filter_map(|q| check(q).err()).collect();
        rep.check(format!("{name} on 50 points: {:?}", &bad[..bad.len().min(3)]), bad.is_empty());
    }
    let grid: Vec<Params> = consistent_grid(2, 4, 6, 4).into_iter().filter(|p| p.r() == 2).collect();
    run_points(&mut rep, "b_n against the divided Wronskian", &grid, |p| {
        let y2 = y_tuple(p).must("tuple")?.ys[1].clone();
        let b = b_explicit_r2(p).must("b_n")?;
        let l2 = p.l[1] as usize;
        for (n, bn) in b.iter().enumerate().take(l2 + 1) {
            ensure(y2.coeff(n).abs() == bn.abs(), || format!("|b_{n}|"))?;
            let sign = if (l2 - n).is_multiple_of(2) { int(1) } else { int(-1) };
            ensure(y2.coeff(n) == bn * sign, || format!("sign of b_{n}"))?;
        }
        Ok(())
    });
    rep
}

/// `int_0^X x^c g(x) dx` for `c > -1`, after `x = u^{1/(c+1)}`, which turns
/// the endpoint weight into the constant `1/(c+1)`.
fn endpoint_weighted(c: f64, g: impl Fn(f64) -> f64, upper: f64) -> f64 {
    let q = 1.0 / (c + 1.0);
    let top = upper.powf(c + 1.0);
    quadrature::double_exponential::integrate(|u: f64| g(u.powf(q)), 0.0, top, 1e-15).integral * q
}

/// `int_0^1 x^{n + a} (1 - x)^b dx`, split at one half so that each
/// endpoint singularity is handled by its own substitution.
fn beta_integral(a: f64, b: f64, n: i32) -> f64 {
    let c = a + n as f64;
    let left = endpoint_weighted(c, |x| (1.0 - x).powf(b), 0.5);
    let right = endpoint_weighted(b, |y| (1.0 - y).powf(c), 0.5);
    left + right
}

fn criterion_orthogonality() -> Report {
    let mut rep = Report::default();
    for (r, seed) in [(1usize, 91u64), (2, 92)] {
        let points = admissible_points(r, 10, 3, seed);
        rep.check(format!("r = {r}: 10 points"), points.len() == 10);
        for p in &points {
            rep.check(
                format!("orthogonality at {}", p.describe()),
                check_pineiro_orthogonality(p).unwrap_or(false),
            );
            let norms = check_norm_formulas(p);
            let ok = norms.as_ref().is_ok_and(|m| !m.is_empty() && m.values().all(Zero::is_zero));
            rep.check(format!("norms at {}: {norms:?}", p.describe()), ok);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(93);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let a = random_fraction(&mut rng, -1, 4);
        let b = random_fraction(&mut rng, -1, 4);
        let w = JacobiWeight::new(a.clone(), b.clone());
        let (af, bf) = (to_f64(&a), to_f64(&b));
        let base = beta_integral(af, bf, 0);
        for n in 1..=6 {
            let exact = to_f64(&moment_ratio(&w, n).expect("moment"));
            let numeric = beta_integral(af, bf, n as i32) / base;
            worst = worst.max(((numeric - exact) / exact).abs());
        }
    }
    rep.check(format!("quadrature bridge worst relative error {worst:e} <= 1e-10"), worst <= 1e-10);
    let p = Params::new(vec![rat(-5, 2)], vec![1], rat(-3, 2)).unwrap();
    let y = pineiro_rodrigues_params(&p).unwrap();
    let (a, b) = (1.5, 0.5);
    let proj = y.coeff(1).is_one()
        && (beta_integral(a, b, 1) + to_f64(&y.coeff(0)) * beta_integral(a, b, 0)).abs() <= 1e-12;
    rep.check(format!("numeric orthogonality of {y}"), proj);
    rep
}

fn discriminant_negative(y: &Poly) -> bool {
    let c = |i: usize| y.coeff(i);
    match y.degree() {
        Some(2) => c(1) * c(1) - int(4) * c(2) * c(0) < int(0),
        Some(3) => {
            let (a, b, cc, d) = (c(3), c(2), c(1), c(0));
            let disc = int(18) * &a * &b * &cc * &d - int(4) * b.pow(3) * &d + b.pow(2) * cc.pow(2)
                - int(4) * &a * cc.pow(3)
                - int(27) * a.pow(2) * d.pow(2);
            disc < int(0)
        }
        _ => false,
    }
}

fn zone_check(rep: &mut Report) {
    let p = Params::new(vec![int(-1_000_000), int(-1_000)], vec![2, 1], rat(-1, 2)).unwrap();
    let yt = y_tuple_admissible(&p).expect("tuple");
    let tol = 1e-6;
    let prec = rat(1, 1_000_000_000_000);
    let roots: Vec<Vec<f64>> = yt.ys.iter().map(|y| real_roots(y, &prec).iter().map(|r| r.approx()).collect()).collect();
    for (j, y) in yt.ys.iter().enumerate() {
        let rs = &roots[j];
        rep.check(format!("zone: level {} roots {rs:?} real and distinct", j + 1), rs.len() == y.degree().unwrap_or(0));
        rep.check(
            format!("zone: level {} roots {rs:?} inside (0, 1)", j + 1),
            rs.iter().all(|&t| t > -tol && t < 1.0 + tol),
        );
    }
    let lowest_first = roots[0].iter().cloned().fold(f64::INFINITY, f64::min);
    let highest_second = roots[1].iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    rep.check(
        format!("zone: level 1 roots above level 2 roots ({lowest_first} vs {highest_second})"),
        lowest_first + tol > highest_second,
    );
}

fn limit_check(rep: &mut Report) {
    let c = 100.0;
    for m1 in [1_000i64, 1_000_000] {
        let p = Params::from_ints(&[m1, 3], &[3, 1], 5);
        let yt = y_tuple_admissible(&p).expect("tuple");
        let gap = |a: &Poly, b: &Poly| (a - b).max_abs_coeff_f64();
        let g1 = gap(&yt.ys[0], &xm1().pow(3));
        let reduced = Params::from_ints(&[3], &[1], 3);
        let g2 = gap(&yt.ys[1], &pineiro_rodrigues_params(&reduced).unwrap());
        let bound = c / m1 as f64;
        rep.check(format!("limit at m1 = {m1}: y1 gap {g1:e} <= {bound:e}"), g1 <= bound);
        rep.check(format!("limit at m1 = {m1}: y2 gap {g2:e} <= {bound:e}"), g2 <= bound);
    }
}

fn criterion_bae_numerics() -> Report {
    let mut rep = Report::default();
    let grid: Vec<Params> =
        consistent_grid(2, 3, 6, 4).into_iter().filter(|p| p.r() == 2).collect();
    let fine = default_precision() * default_precision();
    let outcomes: Vec<(String, bool, &'static str)> = grid
        .par_iter()
        .map(|p| {
            let tag = p.describe();
            match solve_bae(p, &default_precision()) {
                Ok(BaeOutcome::Solution { residual, .. }) => {
                    let improved = match solve_bae(p, &fine) {
                        Ok(BaeOutcome::Solution { residual: r2, .. }) => {
                            residual == 0.0 || r2 * 100.0 <= residual
                        }
                        _ => false,
                    };
                    (format!("{tag} residual {residual:e}"), residual <= 1e-8 && improved, "solution")
                }
                Ok(BaeOutcome::NoSolution { .. }) => {
                    let shared = y_tuple(p).is_ok_and(|yt| {
                        let (y1, y2) = (&yt.ys[0], &yt.ys[1]);
                        y2.degree().is_some_and(|d| d > 0) && y1.div_rem(y2).1.is_zero()
                    });
                    (format!("{tag} no solution"), shared, "non-generic")
                }
                Ok(BaeOutcome::ComplexRoots { level, .. }) => {
                    let certified = y_tuple(p).is_ok_and(|yt| discriminant_negative(&yt.ys[level - 1]));
                    (format!("{tag} complex roots"), certified, "complex")
                }
                Err(e) => (format!("{tag} error {e}"), false, "error"),
            }
        })
        .collect();
    for kind in ["solution", "non-generic", "complex", "error"] {
        let all: Vec<&(String, bool, &str)> = outcomes.iter().filter(|o| o.2 == kind).collect();
        let bad: Vec<&String> = all.iter().filter(|o| !o.1).map(|o| &o.0).collect();
        let ok = bad.is_empty() && (kind != "error" || all.is_empty());
        rep.check(format!("{} {kind} cases: {:?}", all.len(), &bad[..bad.len().min(3)]), ok);
    }
    rep.check("irrational roots exercised", outcomes.iter().any(|o| o.2 == "solution" && !o.0.ends_with(" 0e0")));
    zone_check(&mut rep);
    limit_check(&mut rep);
    rep
}

fn criterion_remark() -> Report {
    let mut rep = Report::default();
    let basis = [Poly::from_ints(&[-1, 2]).pow(2), xm1().pow(4), Poly::x().pow(4)];
    let yt = y_tuple_from_basis(&basis).expect("tuple");
    let half = Poly::linear_root(rat(1, 2)).pow(2);
    rep.check(format!("tuple {:?}", yt.ys), yt.ys == vec![half.clone(), half.clone()]);
    let (f, g) = (&basis[0], &(&basis[1] - &basis[2]));
    let w2 = &(f * &g.derivative()) - &(&f.derivative() * g);
    rep.check("level-2 Wronskian by hand", strip_endpoints(&w2) == half);
    let rep_g = genericity_report(&yt, &[true, true], &[true, true]);
    rep.check("reported non-generic", !rep_g.generic);
    rep.check("not square-free", rep_g.squarefree.iter().all(|s| !s));
    rep.check("neighbours share a root", rep_g.neighbor_coprime == vec![false]);
    rep
}
