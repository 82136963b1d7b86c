use std::ops::{Add, Div, Mul, Sub};

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::tuple::{is_generic, y_tuple, GenericityReport};
use crate::error::{Error, Result};
use crate::exactmath::{int, real_roots, to_f64, Rational};
use crate::spaces::Params;

/// A coordinate, exact when it is known as a rational.
#[derive(Clone, Debug, PartialEq)]
pub enum Coord {
    Exact(Rational),
    Float(f64),
}

impl Coord {
    pub fn approx(&self) -> f64 {
        match self {
            Coord::Exact(q) => to_f64(q),
            Coord::Float(v) => *v,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Coord::Exact(q) => Some(q),
            Coord::Float(_) => None,
        }
    }
}

impl Serialize for Coord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Coord::Exact(q) => s.serialize_str(&q.to_string()),
            Coord::Float(v) => s.serialize_f64(*v),
        }
    }
}

/// Coordinates `t^{(j)}_i`, one group per level.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BethePoint {
    pub t: Vec<Vec<Coord>>,
}

impl BethePoint {
    pub fn exact(t: Vec<Vec<Rational>>) -> Self {
        BethePoint {
            t: t.into_iter().map(|g| g.into_iter().map(Coord::Exact).collect()).collect(),
        }
    }

    pub fn float(t: Vec<Vec<f64>>) -> Self {
        BethePoint {
            t: t.into_iter().map(|g| g.into_iter().map(Coord::Float).collect()).collect(),
        }
    }

    fn all_exact(&self) -> Option<Vec<Vec<Rational>>> {
        self.t
            .iter()
            .map(|g| g.iter().map(|c| c.as_exact().cloned()).collect())
            .collect()
    }

    fn floats(&self) -> Vec<Vec<f64>> {
        self.t.iter().map(|g| g.iter().map(Coord::approx).collect()).collect()
    }
}

/// The arithmetic needed to evaluate the equations and the weight function
/// either exactly or in floating point.
pub(crate) trait Field:
    Clone
    + PartialEq
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;
    fn magnitude(&self) -> f64;
}

impl Field for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn magnitude(&self) -> f64 {
        to_f64(&self.abs())
    }
}

impl Field for f64 {
    fn from_rational(q: &Rational) -> Self {
        to_f64(q)
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

fn check_shape<T>(t: &[Vec<T>], l: &[i64]) -> Result<()> {
    let sizes: Vec<i64> = t.iter().map(|g| g.len() as i64).collect();
    if sizes != l {
        return Err(Error::InvalidInput(format!("group sizes {sizes:?} do not match l = {l:?}")));
    }
    Ok(())
}

/// Rejects coinciding coordinates within a level or across adjacent levels,
/// coordinates at 0, and level-1 coordinates at 1.
fn check_distinct<F: Field>(t: &[Vec<F>]) -> Result<()> {
    let zero = F::zero();
    let one = F::from_rational(&int(1));
    for (j, g) in t.iter().enumerate() {
        for (i, a) in g.iter().enumerate() {
            if *a == zero || (j == 0 && *a == one) {
                return Err(Error::CoordinateAtSingularPoint(format!(
                    "t({})_{} sits on a marked point",
                    j + 1,
                    i + 1
                )));
            }
            if g[i + 1..].contains(a) {
                return Err(Error::CoincidingCoordinates(format!("within level {}", j + 1)));
            }
            if t.get(j + 1).is_some_and(|h| h.contains(a)) {
                return Err(Error::CoincidingCoordinates(format!(
                    "between levels {} and {}",
                    j + 1,
                    j + 2
                )));
            }
        }
    }
    Ok(())
}

fn residuals<F: Field>(t: &[Vec<F>], p: &Params) -> Vec<F> {
    let two = F::from_rational(&int(2));
    let one = F::from_rational(&int(1));
    let mut out = Vec::new();
    for (j, g) in t.iter().enumerate() {
        let m = F::from_rational(p.m_at(j + 1));
        for (i, a) in g.iter().enumerate() {
            let mut lhs = m.clone() / a.clone();
            if j == 0 {
                lhs = lhs + F::from_rational(&p.k) / (a.clone() - one.clone());
            }
            for (s, b) in g.iter().enumerate() {
                if s != i {
                    lhs = lhs - two.clone() / (a.clone() - b.clone());
                }
            }
            for nb in [j.checked_sub(1), Some(j + 1)].into_iter().flatten() {
                if let Some(h) = t.get(nb) {
                    for b in h {
                        lhs = lhs + one.clone() / (a.clone() - b.clone());
                    }
                }
            }
            out.push(lhs);
        }
    }
    out
}

/// Largest absolute value of the Bethe equations at `t`; evaluated exactly
/// when every coordinate is rational.
pub fn bae_residual(t: &BethePoint, p: &Params) -> Result<f64> {
    check_shape(&t.t, &p.l)?;
    let max = |v: Vec<f64>| v.into_iter().fold(0.0, f64::max);
    match t.all_exact() {
        Some(q) => {
            check_distinct(&q)?;
            Ok(max(residuals(&q, p).iter().map(Field::magnitude).collect()))
        }
        None => {
            let f = t.floats();
            check_distinct(&f)?;
            Ok(max(residuals(&f, p).iter().map(Field::magnitude).collect()))
        }
    }
}

/// Exact residuals (each equation's left-hand side) at a rational point.
pub fn bae_residuals_exact(t: &[Vec<Rational>], p: &Params) -> Result<Vec<Rational>> {
    check_shape(t, &p.l)?;
    check_distinct(t)?;
    Ok(residuals(t, p))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum BaeOutcome {
    Solution {
        point: BethePoint,
        residual: f64,
    },
    NoSolution {
        witness: String,
        report: GenericityReport,
    },
    /// The tuple is generic but some level has non-real roots; the point
    /// exists over the complex numbers and is not computed here.
    ComplexRoots {
        level: usize,
        real_roots: usize,
        degree: usize,
    },
}

/// Solves the Bethe equations through the tuple: non-generic tuples give
/// `NoSolution`, generic ones give their roots with the residual. Root
/// approximations are rationals within `precision` of the true roots.
pub fn solve_bae(p: &Params, precision: &Rational) -> Result<BaeOutcome> {
    let yt = y_tuple(p)?;
    let report = is_generic(&yt, p);
    if !report.generic {
        let witness = report.witness.clone().unwrap_or_default();
        return Ok(BaeOutcome::NoSolution { witness, report });
    }
    let mut t = Vec::with_capacity(p.r());
    for (j, y) in yt.ys.iter().enumerate() {
        let roots = real_roots(y, precision);
        let degree = y.degree().unwrap_or(0);
        if roots.len() < degree {
            return Ok(BaeOutcome::ComplexRoots {
                level: j + 1,
                real_roots: roots.len(),
                degree,
            });
        }
        t.push(roots.into_iter().map(|r| r.value).collect());
    }
    let point = BethePoint::exact(t);
    let residual = bae_residual(&point, p)?;
    Ok(BaeOutcome::Solution { point, residual })
}
