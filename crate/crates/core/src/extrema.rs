//! Suprema of boundary functions over the unit circle.
//!
//! Both Lebesgue functions are subharmonic, so their suprema over the closed disk
//! are attained on `|z| = 1`. A dense equispaced scan locates candidate local
//! maxima, and golden-section search refines the best brackets.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{LejaError, Result};
use crate::exec::{self, Execution};
use crate::interp::{LagrangeBasis, LebesgueValues};

pub const DEFAULT_GRID: usize = 1 << 17;
pub const DEFAULT_REFINE_TOL: f64 = 1e-12;
pub const DEFAULT_BRACKETS: usize = 32;
pub const MIN_GRID: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchParams {
    pub grid_size: usize,
    pub refine_tolerance: f64,
    /// How many of the best grid local maxima get refined.
    pub brackets: usize,
    pub execution: Execution,
}

impl SearchParams {
    pub fn new(grid_size: usize, refine_tolerance: f64) -> Result<Self> {
        if grid_size < MIN_GRID {
            return Err(LejaError::InvalidParameter(format!("grid size {grid_size} is below {MIN_GRID}")));
        }
        if !(refine_tolerance > 0.0 && refine_tolerance.is_finite()) {
            return Err(LejaError::InvalidParameter(format!(
                "refine tolerance {refine_tolerance} must be positive"
            )));
        }
        Ok(SearchParams { grid_size, refine_tolerance, brackets: DEFAULT_BRACKETS, execution: Execution::default() })
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn with_grid(mut self, grid_size: usize) -> Self {
        self.grid_size = grid_size.max(MIN_GRID);
        self
    }
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams::new(DEFAULT_GRID, DEFAULT_REFINE_TOL).expect("defaults are valid")
    }
}

/// A computed supremum over the circle, with the parameters that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtremumReport {
    pub value: f64,
    /// Angle of the maximizer in radians, in `[0, 2π)`.
    pub argmax_angle: f64,
    pub grid_size: usize,
    pub refine_tolerance: f64,
    /// True when the reported value came from refinement rather than a raw grid sample.
    pub refined: bool,
}

/// The Lebesgue and quadratic Lebesgue constants of the explicit section of length `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LebesgueConstants {
    pub k: usize,
    pub lambda: ExtremumReport,
    pub lambda2: ExtremumReport,
}

pub fn circle_point(theta: f64) -> Complex64 {
    let (s, c) = theta.sin_cos();
    Complex64::new(c, s)
}

fn grid_angle(i: usize, n: usize) -> f64 {
    TAU * i as f64 / n as f64
}

/// Golden-section search for a maximum of `f` on `[a, b]`, down to width `tol`.
pub fn golden_section_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > tol {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
        // interior points collapse once the bracket hits float resolution
        if x2 <= x1 {
            break;
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Indices of grid local maxima (cyclic), best first, ties to lower index.
fn top_local_maxima(samples: &[f64], count: usize) -> Vec<usize> {
    let n = samples.len();
    let mut peaks: Vec<usize> = (0..n)
        .filter(|&i| {
            let v = samples[i];
            v >= samples[(i + n - 1) % n] && v >= samples[(i + 1) % n]
        })
        .collect();
    peaks.sort_by(|&a, &b| samples[b].total_cmp(&samples[a]).then(a.cmp(&b)));
    peaks.truncate(count);
    peaks
}

/// Refines the best local maxima of pre-computed grid samples of `objective`.
fn refine_samples<F>(samples: &[f64], objective: &F, params: &SearchParams) -> ExtremumReport
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    let n = samples.len();
    let (grid_best, grid_value) = samples
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, (i, &v)| if v > acc.1 { (i, v) } else { acc });
    let mut report = ExtremumReport {
        value: grid_value,
        argmax_angle: grid_angle(grid_best, n),
        grid_size: n,
        refine_tolerance: params.refine_tolerance,
        refined: false,
    };
    let peaks = top_local_maxima(samples, params.brackets);
    let refined = exec::map_slice(&peaks, params.execution, |&i| {
        let centre = grid_angle(i, n);
        let step = TAU / n as f64;
        golden_section_max(objective, centre - step, centre + step, params.refine_tolerance)
    });
    for (theta, value) in refined {
        if value > report.value {
            report.value = value;
            report.argmax_angle = theta.rem_euclid(TAU);
            report.refined = true;
        }
    }
    report
}

/// Supremum of `objective(θ)` over `θ ∈ [0, 2π)`.
pub fn sup_on_circle<F>(objective: F, params: &SearchParams) -> ExtremumReport
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    let n = params.grid_size;
    let samples = exec::map_range(n, params.execution, |i| objective(grid_angle(i, n)));
    refine_samples(&samples, &objective, params)
}

/// Both constants of a basis from a single grid scan.
pub fn basis_constants(basis: &LagrangeBasis, params: &SearchParams) -> (ExtremumReport, ExtremumReport) {
    let n = params.grid_size;
    let samples: Vec<LebesgueValues> =
        exec::map_range(n, params.execution, |i| basis.lebesgue_values(circle_point(grid_angle(i, n))));
    let lambda: Vec<f64> = samples.iter().map(|v| v.lambda).collect();
    let lambda2: Vec<f64> = samples.iter().map(|v| v.lambda2).collect();
    let f1 = |t: f64| basis.lebesgue_function(circle_point(t));
    let f2 = |t: f64| basis.quadratic_lebesgue_function(circle_point(t));
    (refine_samples(&lambda, &f1, params), refine_samples(&lambda2, &f2, params))
}

/// `Λ_k`, the Lebesgue constant of the explicit disk section of length `k`.
pub fn lebesgue_constant(k: usize, params: &SearchParams) -> Result<ExtremumReport> {
    let basis = LagrangeBasis::explicit(k)?;
    Ok(sup_on_circle(|t| basis.lebesgue_function(circle_point(t)), params))
}

/// `Λ_{k,2}`, the quadratic Lebesgue constant of the explicit disk section of length `k`.
pub fn quadratic_lebesgue_constant(k: usize, params: &SearchParams) -> Result<ExtremumReport> {
    let basis = LagrangeBasis::explicit(k)?;
    Ok(sup_on_circle(|t| basis.quadratic_lebesgue_function(circle_point(t)), params))
}

pub fn lebesgue_constants(k: usize, params: &SearchParams) -> Result<LebesgueConstants> {
    let basis = LagrangeBasis::explicit(k)?;
    let (lambda, lambda2) = basis_constants(&basis, params);
    Ok(LebesgueConstants { k, lambda, lambda2 })
}

/// Grid size for sweeping many `k`: 64 samples per unit of `k.next_power_of_two()`
/// (at least 32 per gap between neighbouring nodes), clamped to `[4096, cap]`.
pub fn sweep_grid_size(k: usize, cap: usize) -> usize {
    (64 * k.next_power_of_two()).max(4096).min(cap.max(MIN_GRID))
}
