//! Greedy Leja selection on a finite discretization of a compact set.
//!
//! Each step appends the candidate maximizing `Σ_j log|z - e_j|`, the log of
//! the distance product. Ties go to the lowest candidate index, and candidates
//! within [`COINCIDENCE_TOL`] of an existing node are never selected.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::angle::DyadicAngle;
use crate::error::{LejaError, Result};
use crate::exec::{self, Execution};
use crate::section::{LejaSection, Node, Origin, CIRCLE_TOL};

pub const COINCIDENCE_TOL: f64 = 1e-14;
pub const DEFAULT_CIRCLE_POINTS: usize = 8192;

/// A finite point cloud standing in for a compact set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscretizedCompact {
    points: Vec<Complex64>,
    label: String,
}

impl DiscretizedCompact {
    pub fn new(points: Vec<Complex64>, label: impl Into<String>) -> Result<Self> {
        let distinct = points.iter().skip(1).any(|p| (p - points[0]).norm() >= COINCIDENCE_TOL);
        if points.len() < 2 || !distinct {
            return Err(LejaError::TooFewCandidates(points.len()));
        }
        Ok(DiscretizedCompact { points, label: label.into() })
    }

    /// `n` equispaced points `exp(2πi m / n)` on the unit circle, starting at 1.
    ///
    /// For `n` a power of two the points come from exact dyadic angles, so
    /// quadrant points are exact.
    pub fn circle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(LejaError::TooFewCandidates(n));
        }
        let points = if n.is_power_of_two() && n.trailing_zeros() < 62 {
            let b = n.trailing_zeros();
            (0..n as u64).map(|m| DyadicAngle::new(2 * m, b).expect("b < 62").to_point()).collect()
        } else {
            (0..n).map(|m| Complex64::from_polar(1.0, 2.0 * PI * m as f64 / n as f64)).collect()
        };
        Ok(DiscretizedCompact { points, label: format!("unit circle, {n} points") })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_on_circle(&self) -> bool {
        self.points.iter().all(|p| (p.norm() - 1.0).abs() <= CIRCLE_TOL)
    }

    /// A sub-cloud keeping the listed indices, in their original order.
    pub fn subset(&self, keep: impl Fn(usize) -> bool) -> Result<Self> {
        let points = self.points.iter().enumerate().filter(|(i, _)| keep(*i)).map(|(_, p)| *p).collect();
        Self::new(points, format!("{} (subset)", self.label))
    }
}

fn log_score(z: Complex64, nodes: &[Complex64]) -> Option<f64> {
    let mut acc = 0.0;
    for e in nodes {
        let d = (z - e).norm();
        if d < COINCIDENCE_TOL {
            return None;
        }
        acc += d.ln();
    }
    Some(acc)
}

/// Appends one greedily chosen candidate.
pub fn greedy_extend(section: &LejaSection, candidates: &DiscretizedCompact) -> Result<LejaSection> {
    greedy_extend_with(section, candidates, Execution::default())
}

pub fn greedy_extend_with(
    section: &LejaSection,
    candidates: &DiscretizedCompact,
    exec: Execution,
) -> Result<LejaSection> {
    let nodes = section.points();
    let pts = candidates.points();
    let (best, _) =
        exec::argmax(pts.len(), exec, |i| log_score(pts[i], &nodes)).ok_or(LejaError::CandidatesExhausted)?;
    let mut out = section.clone();
    out.push_unchecked(Node::Coord(pts[best]));
    out.set_origin(Origin::Greedy);
    Ok(out)
}

/// A length-`k` greedy section started at `seed`.
///
/// Log scores are accumulated incrementally, one node at a time in order, so
/// the result matches `k - 1` calls of [`greedy_extend`].
pub fn greedy_section(k: usize, candidates: &DiscretizedCompact, seed: Complex64) -> Result<LejaSection> {
    greedy_section_with(k, candidates, seed, Execution::default())
}

pub fn greedy_section_with(
    k: usize,
    candidates: &DiscretizedCompact,
    seed: Complex64,
    exec: Execution,
) -> Result<LejaSection> {
    if k == 0 {
        return Err(LejaError::ZeroIndex);
    }
    let pts = candidates.points();
    if !pts.iter().any(|p| (p - seed).norm() < COINCIDENCE_TOL) {
        return Err(LejaError::SeedNotCandidate { re: seed.re, im: seed.im });
    }
    let mut section = LejaSection::from_nodes_unchecked(vec![Node::Coord(seed)], Origin::Greedy);
    let mut scores: Vec<Option<f64>> = vec![Some(0.0); pts.len()];
    let mut last = seed;
    for _ in 1..k {
        scores = exec::map_range(pts.len(), exec, |i| {
            scores[i].and_then(|acc| {
                let d = (pts[i] - last).norm();
                (d >= COINCIDENCE_TOL).then(|| acc + d.ln())
            })
        });
        let (best, _) = exec::argmax(pts.len(), exec, |i| scores[i]).ok_or(LejaError::CandidatesExhausted)?;
        last = pts[best];
        section.push_unchecked(Node::Coord(last));
    }
    Ok(section)
}

/// `(k, (Π_{j<k} |e_k - e_j|)^{1/k})` for `k = 1 .. len-1`.
pub fn transfinite_diameter_diagnostic(section: &LejaSection) -> Result<Vec<(usize, f64)>> {
    if section.len() < 2 {
        return Err(LejaError::InvalidParameter("diagnostic needs at least two nodes".into()));
    }
    let pts = section.points();
    Ok((1..pts.len())
        .map(|k| {
            let log_sum: f64 = pts[..k].iter().map(|e| (pts[k] - e).norm().ln()).sum();
            (k, (log_sum / k as f64).exp())
        })
        .collect())
}

/// Finds a unit `ρ` (returned as its argument in radians) with `a = ρ·b` as sets,
/// each point matched within angular distance `tol`. Both sets must lie on the
/// unit circle.
pub fn rotation_between(a: &[Complex64], b: &[Complex64], tol: f64) -> Option<f64> {
    if a.len() != b.len() || a.is_empty() {
        return None;
    }
    let close = |x: Complex64, y: Complex64| (x / y).arg().abs() <= tol;
    let covers = |xs: &[Complex64], ys: &[Complex64], rho: Complex64| {
        xs.iter().all(|&x| ys.iter().any(|&y| close(x, rho * y)))
    };
    b.iter().find_map(|&bj| {
        let rho = a[0] / bj;
        let rho = rho / rho.norm();
        let inv = rho.conj();
        (covers(a, b, rho) && covers(b, a, inv)).then(|| rho.arg().rem_euclid(2.0 * PI))
    })
}
