//! True-singular hyperplane bookkeeping for T and S1-S4: which linear
//! forms in (s, t, u) hit which integer sets, and distances to them.

use num_complex::Complex64;
use std::fmt;

use crate::error::{EvalError, Result};
use crate::series::TriplePoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionId {
    T,
    S1,
    S2,
    S3,
    S4,
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FunctionId::T => "T",
            FunctionId::S1 => "S1",
            FunctionId::S2 => "S2",
            FunctionId::S3 => "S3",
            FunctionId::S4 => "S4",
        };
        f.write_str(name)
    }
}

/// Linear form in the arguments whose value is constrained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearForm {
    /// s + t
    St,
    /// t + u
    Tu,
    /// u + s
    Us,
    /// s + t + u
    Total,
}

impl LinearForm {
    pub fn eval(&self, p: &TriplePoint) -> Complex64 {
        match self {
            LinearForm::St => p.s + p.t,
            LinearForm::Tu => p.t + p.u,
            LinearForm::Us => p.u + p.s,
            LinearForm::Total => p.s + p.t + p.u,
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LinearForm::St => "s+t",
            LinearForm::Tu => "t+u",
            LinearForm::Us => "u+s",
            LinearForm::Total => "s+t+u",
        };
        f.write_str(name)
    }
}

/// Admissible integer set (or the fixed plane value 2) for a constrained
/// linear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegerSet {
    /// Integers <= 1.
    IntLeq1,
    /// Odd integers <= 1.
    OddLeq1,
    /// Even integers <= 0.
    EvenLeq0,
    /// The single value 2 (the plane s+t+u = 2).
    Two,
}

impl IntegerSet {
    /// Nearest admissible value to z (by real part), and the distance.
    pub fn nearest(&self, z: Complex64) -> (f64, f64) {
        let target = match self {
            IntegerSet::IntLeq1 => z.re.round().min(1.0),
            IntegerSet::OddLeq1 => {
                let odd = 2.0 * ((z.re - 1.0) / 2.0).round() + 1.0;
                odd.min(1.0)
            }
            IntegerSet::EvenLeq0 => {
                let even = 2.0 * (z.re / 2.0).round();
                even.min(0.0)
            }
            IntegerSet::Two => 2.0,
        };
        (target, (z - target).norm())
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            IntegerSet::IntLeq1 => "Z<=1",
            IntegerSet::OddLeq1 => "odd Z<=1",
            IntegerSet::EvenLeq0 => "even Z<=0",
            IntegerSet::Two => "{2}",
        };
        f.write_str(name)
    }
}

/// A true-singular hyperplane of some function, with the distance of a
/// concrete point from it.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularityReport {
    pub function: FunctionId,
    pub form: LinearForm,
    pub set: IntegerSet,
    /// Nearest admissible integer (or 2 for the plane).
    pub nearest: f64,
    pub distance: f64,
}

impl fmt::Display for SingularityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} in {} (nearest {}, distance {:.3e})",
            self.function, self.form, self.set, self.nearest, self.distance
        )
    }
}

fn hyperplanes(f: FunctionId) -> &'static [(LinearForm, IntegerSet)] {
    use IntegerSet::*;
    use LinearForm::*;
    match f {
        FunctionId::T => &[(Tu, IntLeq1), (Us, IntLeq1), (Total, Two)],
        FunctionId::S1 => &[(St, IntLeq1)],
        FunctionId::S2 => &[(St, IntLeq1), (Tu, IntLeq1), (Us, IntLeq1), (Total, Two)],
        FunctionId::S3 => &[(St, OddLeq1), (Tu, OddLeq1), (Us, OddLeq1), (Total, Two)],
        FunctionId::S4 => &[(St, OddLeq1), (Tu, EvenLeq0), (Us, EvenLeq0), (Total, Two)],
    }
}

/// All declared true-singular hyperplanes of `f`, each with the distance
/// of `p` from it.
pub fn classify(p: &TriplePoint, f: FunctionId) -> Vec<SingularityReport> {
    hyperplanes(f)
        .iter()
        .map(|&(form, set)| {
            let (nearest, distance) = set.nearest(form.eval(p));
            SingularityReport {
                function: f,
                form,
                set,
                nearest,
                distance,
            }
        })
        .collect()
}

/// Distance from `p` to the nearest true-singular hyperplane of `f`.
pub fn min_singular_distance(p: &TriplePoint, f: FunctionId) -> f64 {
    classify(p, f)
        .iter()
        .map(|r| r.distance)
        .fold(f64::INFINITY, f64::min)
}

/// Reject points on or within `proximity` of a singular hyperplane.
pub fn guard(p: &TriplePoint, f: FunctionId, proximity: f64) -> Result<()> {
    let hits: Vec<SingularityReport> = classify(p, f)
        .into_iter()
        .filter(|r| r.distance <= proximity)
        .collect();
    if hits.is_empty() {
        Ok(())
    } else {
        Err(EvalError::SingularPoint(hits))
    }
}
