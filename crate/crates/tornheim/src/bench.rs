//! Term-count and wall-time comparison of the eta-based S1/S2 series
//! against the legacy nested-sum representations, on a fixed-seed point
//! set away from every singular hyperplane.

use std::fmt::Write as _;
use std::time::Instant;

use crate::error::Result;
use crate::selftest::seeded_points;
use crate::series::{
    eval_s1, eval_s1_legacy, eval_s2, eval_s2_legacy, EvalConfig, SeriesValue, TriplePoint,
};
use crate::singular::{min_singular_distance, FunctionId};

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub label: String,
    pub function: &'static str,
    pub terms_new: usize,
    pub terms_legacy: usize,
    pub ns_new: u128,
    pub ns_legacy: u128,
    /// Values agree to 1e-9 relative.
    pub agree: bool,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// Rows where the eta-based series needed no more terms than legacy.
    pub wins: usize,
}

impl BenchReport {
    pub fn win_fraction(&self) -> f64 {
        self.wins as f64 / self.rows.len().max(1) as f64
    }

    pub fn to_csv(&self) -> String {
        let mut csv =
            String::from("label,function,terms_new,terms_legacy,ns_new,ns_legacy,agree\n");
        for r in &self.rows {
            let _ = writeln!(
                csv,
                "{},{},{},{},{},{},{}",
                r.label, r.function, r.terms_new, r.terms_legacy, r.ns_new, r.ns_legacy, r.agree
            );
        }
        let _ = writeln!(
            csv,
            "summary,both,{},{},,,{}",
            self.wins,
            self.rows.len(),
            self.win_fraction()
        );
        csv
    }
}

type SeriesFn = fn(&TriplePoint, &EvalConfig) -> Result<SeriesValue>;

pub fn run_bench(tol: f64) -> Result<BenchReport> {
    let cfg = EvalConfig::with_tol(tol);
    let points: Vec<TriplePoint> = seeded_points(200, -2.5, 3.0, 0xb5297a4d3f84d5b9)
        .into_iter()
        .filter(|q| {
            min_singular_distance(q, FunctionId::S1) > 0.15
                && min_singular_distance(q, FunctionId::S2) > 0.15
        })
        .take(12)
        .collect();
    let mut rows = Vec::new();
    let mut wins = 0usize;
    for (i, q) in points.iter().enumerate() {
        for (function, new_eval, legacy_eval) in [
            ("S1", eval_s1 as SeriesFn, eval_s1_legacy as SeriesFn),
            ("S2", eval_s2, eval_s2_legacy),
        ] {
            let t0 = Instant::now();
            let a = new_eval(q, &cfg)?;
            let ns_new = t0.elapsed().as_nanos();
            let t1 = Instant::now();
            let b = legacy_eval(q, &cfg)?;
            let ns_legacy = t1.elapsed().as_nanos();
            if a.terms_used <= b.terms_used {
                wins += 1;
            }
            rows.push(BenchRow {
                label: format!("p{i}"),
                function,
                terms_new: a.terms_used,
                terms_legacy: b.terms_used,
                ns_new,
                ns_legacy,
                agree: (a.value - b.value).norm() <= 1e-9 * (1.0 + a.value.norm()),
            });
        }
    }
    Ok(BenchReport { rows, wins })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_is_deterministic_in_terms() {
        let a = run_bench(1e-8).unwrap();
        let b = run_bench(1e-8).unwrap();
        assert_eq!(a.rows.len(), b.rows.len());
        for (x, y) in a.rows.iter().zip(&b.rows) {
            assert_eq!(x.terms_new, y.terms_new);
            assert_eq!(x.terms_legacy, y.terms_legacy);
            assert!(x.agree);
        }
    }
}
