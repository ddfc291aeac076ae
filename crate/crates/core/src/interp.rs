//! Fundamental Lagrange polynomials and the (quadratic) Lebesgue functions of a section.

use num_complex::Complex64;
use serde::Serialize;

use crate::disk::explicit_section;
use crate::error::{LejaError, Result};
use crate::section::LejaSection;

/// Below this distance to a node, the basis value at that node is formed by a
/// direct product instead of dividing the nodal polynomial by a tiny factor.
pub const NEAR_NODE: f64 = 1e-8;
/// Evaluation is meaningful on the closed disk; points up to this far outside are accepted.
pub const DOMAIN_SLACK: f64 = 1e-9;

/// Values of `λ(z) = Σ|l_j(z)|` and `λ₂(z) = (Σ|l_j(z)|²)^{1/2}` at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LebesgueValues {
    pub lambda: f64,
    pub lambda2: f64,
}

/// Lagrange basis over a section, with precomputed `1/Π_{i≠j}(e_j - e_i)`.
#[derive(Debug, Clone)]
pub struct LagrangeBasis {
    nodes: Vec<Complex64>,
    inverse_denominators: Vec<Complex64>,
    // split coordinates and weight moduli for the real-valued hot loop
    xs: Vec<f64>,
    ys: Vec<f64>,
    weights: Vec<f64>,
    weights_sq: Vec<f64>,
}

impl LagrangeBasis {
    pub fn new(section: &LejaSection) -> Self {
        Self::from_distinct_points(section.points())
    }

    /// Basis over the explicit disk section of length `k`.
    pub fn explicit(k: usize) -> Result<Self> {
        Ok(Self::new(&explicit_section(k)?))
    }

    fn from_distinct_points(nodes: Vec<Complex64>) -> Self {
        let inverse_denominators: Vec<Complex64> = nodes
            .iter()
            .enumerate()
            .map(|(j, &ej)| {
                let den = nodes
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .fold(Complex64::new(1.0, 0.0), |acc, (_, &ei)| acc * (ej - ei));
                den.inv()
            })
            .collect();
        let weights: Vec<f64> = inverse_denominators.iter().map(|w| w.norm()).collect();
        LagrangeBasis {
            xs: nodes.iter().map(|z| z.re).collect(),
            ys: nodes.iter().map(|z| z.im).collect(),
            weights_sq: weights.iter().map(|w| w * w).collect(),
            weights,
            inverse_denominators,
            nodes,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    pub fn inverse_denominators(&self) -> &[Complex64] {
        &self.inverse_denominators
    }

    /// `l_j(z) = Π_{i≠j}(z - e_i) / Π_{i≠j}(e_j - e_i)`.
    pub fn basis_eval(&self, j: usize, z: Complex64) -> Complex64 {
        debug_assert!(z.norm() <= 1.0 + DOMAIN_SLACK);
        let prod = self
            .nodes
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .fold(Complex64::new(1.0, 0.0), |acc, (_, &ei)| acc * (z - ei));
        prod * self.inverse_denominators[j]
    }

    /// All `l_j(z)`, from one nodal product.
    pub fn basis_values(&self, z: Complex64) -> Vec<Complex64> {
        let diffs: Vec<Complex64> = self.nodes.iter().map(|&e| z - e).collect();
        let near = diffs
            .iter()
            .enumerate()
            .filter(|(_, d)| d.norm() < NEAR_NODE)
            .min_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .map(|(j, _)| j);
        match near {
            None => {
                let full: Complex64 = diffs.iter().product();
                diffs.iter().zip(&self.inverse_denominators).map(|(d, w)| full / d * w).collect()
            }
            Some(n) => {
                let rest: Complex64 =
                    diffs.iter().enumerate().filter(|&(i, _)| i != n).map(|(_, d)| d).product();
                diffs
                    .iter()
                    .zip(&self.inverse_denominators)
                    .enumerate()
                    .map(|(j, (d, w))| if j == n { rest * w } else { rest * diffs[n] / d * w })
                    .collect()
            }
        }
    }

    /// Both Lebesgue functions in one `O(k)` pass.
    pub fn lebesgue_values(&self, z: Complex64) -> LebesgueValues {
        debug_assert!(z.norm() <= 1.0 + DOMAIN_SLACK);
        if self.xs.len() == 1 {
            return LebesgueValues { lambda: 1.0, lambda2: 1.0 };
        }
        let (x, y) = (z.re, z.im);
        // four independent lanes so the reductions can be vectorized
        const LANES: usize = 4;
        let mut prod = [1.0f64; LANES];
        let mut sum = [0.0f64; LANES];
        let mut sum_sq = [0.0f64; LANES];
        let mut min_d2 = [f64::INFINITY; LANES];
        let n = self.xs.len();
        let body = n - n % LANES;
        let lanes = self.xs[..body]
            .chunks_exact(LANES)
            .zip(self.ys[..body].chunks_exact(LANES))
            .zip(self.weights[..body].chunks_exact(LANES).zip(self.weights_sq[..body].chunks_exact(LANES)));
        for ((xs, ys), (ws, ws2)) in lanes {
            for l in 0..LANES {
                let dx = x - xs[l];
                let dy = y - ys[l];
                let d2 = dx * dx + dy * dy;
                let d = d2.sqrt();
                let inv = 1.0 / d;
                prod[l] *= d;
                sum[l] += ws[l] * inv;
                sum_sq[l] += ws2[l] * inv * inv;
                min_d2[l] = min_d2[l].min(d2);
            }
        }
        for j in body..n {
            let dx = x - self.xs[j];
            let dy = y - self.ys[j];
            let d2 = dx * dx + dy * dy;
            let d = d2.sqrt();
            let inv = 1.0 / d;
            prod[0] *= d;
            sum[0] += self.weights[j] * inv;
            sum_sq[0] += self.weights_sq[j] * inv * inv;
            min_d2[0] = min_d2[0].min(d2);
        }
        let prod = (prod[0] * prod[1]) * (prod[2] * prod[3]);
        let sum = (sum[0] + sum[1]) + (sum[2] + sum[3]);
        let sum_sq = (sum_sq[0] + sum_sq[1]) + (sum_sq[2] + sum_sq[3]);
        let min_d2 = min_d2.into_iter().fold(f64::INFINITY, f64::min);
        if min_d2 >= NEAR_NODE * NEAR_NODE {
            return LebesgueValues { lambda: prod * sum, lambda2: prod * sum_sq.sqrt() };
        }
        self.lebesgue_values_near_node(x, y)
    }

    fn lebesgue_values_near_node(&self, x: f64, y: f64) -> LebesgueValues {
        let dist: Vec<f64> =
            self.xs.iter().zip(&self.ys).map(|(a, b)| (x - a).hypot(y - b)).collect();
        let n = (0..dist.len()).min_by(|&a, &b| dist[a].total_cmp(&dist[b])).expect("non-empty");
        if dist[n] == 0.0 {
            // Kronecker property
            return LebesgueValues { lambda: 1.0, lambda2: 1.0 };
        }
        let rest: f64 = dist.iter().enumerate().filter(|&(i, _)| i != n).map(|(_, d)| d).product();
        let mut lambda = 0.0;
        let mut sum_sq = 0.0;
        for j in 0..dist.len() {
            let l = if j == n { rest * self.weights[j] } else { rest * dist[n] / dist[j] * self.weights[j] };
            lambda += l;
            sum_sq += l * l;
        }
        LebesgueValues { lambda, lambda2: sum_sq.sqrt() }
    }

    /// `λ(z) = Σ_j |l_j(z)|`.
    pub fn lebesgue_function(&self, z: Complex64) -> f64 {
        self.lebesgue_values(z).lambda
    }

    /// `λ₂(z) = (Σ_j |l_j(z)|²)^{1/2}`.
    pub fn quadratic_lebesgue_function(&self, z: Complex64) -> f64 {
        self.lebesgue_values(z).lambda2
    }

    /// Value at `z` of the interpolant of `samples` taken at the nodes.
    pub fn interpolate(&self, samples: &[Complex64], z: Complex64) -> Result<Complex64> {
        if samples.len() != self.len() {
            return Err(LejaError::LengthMismatch { expected: self.len(), got: samples.len() });
        }
        Ok(self.basis_values(z).iter().zip(samples).map(|(l, f)| l * f).sum())
    }
}

/// Relative gap `|λ_{2N,2}(z) - λ_{N,2}(z²)| / λ_{N,2}(z²)`.
pub fn halving_residual(double: &LagrangeBasis, single: &LagrangeBasis, z: Complex64) -> f64 {
    let lhs = double.quadratic_lebesgue_function(z);
    let rhs = single.quadratic_lebesgue_function(z * z);
    (lhs - rhs).abs() / rhs
}

/// Whether `λ_{2N,2}(z) = λ_{N,2}(z²)` holds within `1e-10` relative on explicit sections.
pub fn halving_identity_check(n: usize, z: Complex64) -> Result<bool> {
    let double = LagrangeBasis::explicit(2 * n)?;
    let single = LagrangeBasis::explicit(n)?;
    Ok(halving_residual(&double, &single, z) <= 1e-10)
}
