use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{int, poly_gcd, to_f64, Poly, Rational};

/// A real root approximated by a rational inside an isolating interval of
/// width at most the requested precision.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RealRoot {
    #[serde(serialize_with = "super::ser_rational")]
    pub value: Rational,
    #[serde(serialize_with = "super::ser_rational")]
    pub lo: Rational,
    #[serde(serialize_with = "super::ser_rational")]
    pub hi: Rational,
    pub multiplicity: usize,
    /// True when `value` is the root itself.
    pub exact: bool,
}

impl RealRoot {
    pub fn approx(&self) -> f64 {
        to_f64(&self.value)
    }
}

/// Yun's algorithm: returns `(g_i, i)` with `f = c * prod g_i^i`, every `g_i`
/// monic, square-free and pairwise coprime. Factors equal to one are omitted.
pub fn square_free_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    let mut a = poly_gcd(f, &fp);
    let mut b = f.exact_div(&a).expect("gcd divides").monic();
    let mut c = fp.exact_div(&a).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        a = poly_gcd(&b, &d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

fn sturm_sequence(g: &Poly) -> Vec<Poly> {
    let mut seq = vec![g.clone(), g.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    seq
}

fn sign_changes(seq: &[Poly], x: &Rational) -> usize {
    let mut changes = 0;
    let mut last: Option<bool> = None;
    for p in seq {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(l) = last {
            if l != pos {
                changes += 1;
            }
        }
        last = Some(pos);
    }
    changes
}

/// Number of distinct real roots of `f` in the half-open interval `(lo, hi]`.
pub fn sturm_count(f: &Poly, lo: &Rational, hi: &Rational) -> usize {
    if f.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let g = square_free_decomposition(f)
        .into_iter()
        .fold(Poly::one(), |acc, (p, _)| &acc * &p);
    let seq = sturm_sequence(&g);
    sign_changes(&seq, lo).saturating_sub(sign_changes(&seq, hi))
}

fn cauchy_bound(g: &Poly) -> Rational {
    let lc = g.leading().expect("nonzero").abs();
    let m = g
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lc)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    m + int(1)
}

fn isolate_squarefree(g: &Poly, precision: &Rational, multiplicity: usize, out: &mut Vec<RealRoot>) {
    if g.degree() == Some(1) {
        let c = g.coeffs();
        let root = -(&c[0] / &c[1]);
        out.push(RealRoot {
            lo: root.clone(),
            hi: root.clone(),
            value: root,
            multiplicity,
            exact: true,
        });
        return;
    }
    let seq = sturm_sequence(g);
    let bound = cauchy_bound(g);
    let mut stack = vec![(-bound.clone(), bound, None::<usize>)];
    let half = Rational::new(1.into(), 2.into());
    while let Some((lo, hi, known)) = stack.pop() {
        let count = known.unwrap_or_else(|| {
            sign_changes(&seq, &lo).saturating_sub(sign_changes(&seq, &hi))
        });
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(refine(g, lo, hi, precision, multiplicity));
            continue;
        }
        let mid = (&lo + &hi) * &half;
        let left = sign_changes(&seq, &lo).saturating_sub(sign_changes(&seq, &mid));
        stack.push((lo, mid.clone(), Some(left)));
        stack.push((mid, hi, Some(count - left)));
    }
}

/// Bisects `(lo, hi]`, known to contain exactly one root, to the precision.
fn refine(
    g: &Poly,
    mut lo: Rational,
    mut hi: Rational,
    precision: &Rational,
    multiplicity: usize,
) -> RealRoot {
    let half = Rational::new(1.into(), 2.into());
    if g.eval(&hi).is_zero() {
        return RealRoot {
            lo: hi.clone(),
            hi: hi.clone(),
            value: hi,
            multiplicity,
            exact: true,
        };
    }
    let sign_hi = g.eval(&hi).is_positive();
    while &hi - &lo > *precision {
        let mid = (&lo + &hi) * &half;
        let v = g.eval(&mid);
        if v.is_zero() {
            return RealRoot {
                lo: mid.clone(),
                hi: mid.clone(),
                value: mid,
                multiplicity,
                exact: true,
            };
        }
        // The single root is simple, so a sign change against hi locates it.
        if v.is_positive() != sign_hi {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RealRoot {
        value: (&lo + &hi) * &half,
        lo,
        hi,
        multiplicity,
        exact: false,
    }
}

/// Sorted real roots of `f` with exact multiplicities. Each approximation
/// lies within an isolating interval of width at most `precision`.
pub fn real_roots(f: &Poly, precision: &Rational) -> Vec<RealRoot> {
    assert!(!f.is_zero(), "real_roots of the zero polynomial");
    let precision = if precision.is_positive() {
        precision.clone()
    } else {
        super::default_precision()
    };
    let mut out = Vec::new();
    for (g, mult) in square_free_decomposition(f) {
        isolate_squarefree(&g, &precision, mult, &mut out);
    }
    out.sort_by(|a, b| a.value.cmp(&b.value));
    out
}
