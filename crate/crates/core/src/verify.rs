//! Verification suites for the identities and bounds on disk Leja sections.
//!
//! Numerical suites share one table of computed constants; exact suites work on
//! dyadic rationals and use exact equality only.

use std::collections::BTreeSet;
use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::binary::binary_expand;
use crate::disk::{check_symmetry_relations, doubling_section, explicit_section};
use crate::error::{LejaError, Result};
use crate::exec::{self, Execution};
use crate::extrema::{self, circle_point, LebesgueConstants, SearchParams};
use crate::greedy::{self, DiscretizedCompact};
use crate::interp::{halving_residual, LagrangeBasis};
use crate::recursion::{self, USequenceCache};

/// Slack allowed on numerically computed suprema.
pub const SUP_TOL: f64 = 1e-6;
/// Tolerance on `Λ_{2N,2} = Λ_{N,2}` and `Λ_{2^n,2} = 1`.
pub const HALVING_CONST_TOL: f64 = 1e-8;
/// Relative tolerance on the pointwise halving identity.
pub const HALVING_POINT_TOL: f64 = 1e-10;
/// Tolerance on `|l_{k-1,k}| <= 1`.
pub const LAST_BASIS_TOL: f64 = 1e-9;
pub const LAST_BASIS_SAMPLES: usize = 10_000;
pub const LAST_BASIS_MAX_K: usize = 512;
pub const HALVING_POINTS: usize = 1000;
pub const HALVING_POINT_MAX_N: usize = 64;
pub const HALVING_CONST_MAX_N: usize = 256;
pub const LAMBDA2_EQUALITY_MAX_K: usize = 255;
pub const SYMMETRY_MAX_LEN: u64 = 1 << 13;
pub const GREEDY_SIZES: [usize; 4] = [2, 4, 8, 16];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Bounds,
    Sandwich,
    Recursion,
    Lemma3,
    Symmetry,
    Greedy,
    Halving,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Bounds, Suite::Sandwich, Suite::Recursion, Suite::Lemma3, Suite::Symmetry, Suite::Greedy, Suite::Halving];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bounds => "bounds",
            Suite::Sandwich => "sandwich",
            Suite::Recursion => "recursion",
            Suite::Lemma3 => "lemma3",
            Suite::Symmetry => "symmetry",
            Suite::Greedy => "greedy",
            Suite::Halving => "halving",
        }
    }

    /// Whether the suite uses exact arithmetic only.
    pub fn is_exact(self) -> bool {
        matches!(self, Suite::Recursion | Suite::Lemma3 | Suite::Symmetry)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = LejaError;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| LejaError::UnknownSuite(s.to_string()))
    }
}

/// How many circle samples to use for each `k` of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GridPolicy {
    Fixed(usize),
    /// [`extrema::sweep_grid_size`] capped at the given size.
    Sweep { cap: usize },
}

impl GridPolicy {
    pub fn grid_for(self, k: usize) -> usize {
        match self {
            GridPolicy::Fixed(n) => n,
            GridPolicy::Sweep { cap } => extrema::sweep_grid_size(k, cap),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerifyConfig {
    /// Largest `k` for suites that compute suprema.
    pub max_k: usize,
    /// Largest `k` for exact suites.
    pub exact_max_k: u64,
    pub grid: GridPolicy,
    pub refine_tolerance: f64,
    pub execution: Execution,
    pub greedy_candidates: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_k: 1024,
            exact_max_k: 1 << 16,
            grid: GridPolicy::Fixed(extrema::DEFAULT_GRID),
            refine_tolerance: extrema::DEFAULT_REFINE_TOL,
            execution: Execution::default(),
            greedy_candidates: greedy::DEFAULT_CIRCLE_POINTS,
            seed: 0x1e7a,
        }
    }
}

impl VerifyConfig {
    fn validate(&self) -> Result<()> {
        if self.max_k == 0 || self.exact_max_k == 0 {
            return Err(LejaError::ZeroIndex);
        }
        SearchParams::new(self.grid.grid_for(1), self.refine_tolerance)?;
        Ok(())
    }

    pub fn search_params(&self, k: usize) -> SearchParams {
        SearchParams::new(self.grid.grid_for(k), self.refine_tolerance)
            .expect("validated")
            .with_execution(self.execution)
    }
}

/// Outcome of one family of checks inside a suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyOutcome {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    /// Smallest observed slack (bound minus value); negative beyond tolerance means failure.
    pub worst_slack: Option<f64>,
    pub worst_k: Option<u64>,
    pub first_failure: Option<String>,
}

impl FamilyOutcome {
    fn new(name: &'static str) -> Self {
        FamilyOutcome { name, checks: 0, failures: 0, worst_slack: None, worst_k: None, first_failure: None }
    }

    /// Records `slack >= -tol`.
    fn slack(&mut self, k: u64, slack: f64, tol: f64) {
        self.checks += 1;
        if self.worst_slack.is_none_or(|w| slack < w) {
            self.worst_slack = Some(slack);
            self.worst_k = Some(k);
        }
        if !(slack >= -tol) {
            self.fail(format!("k = {k}: slack {slack:e} below -{tol:e}"));
        }
    }

    fn exact(&mut self, k: u64, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(format!("k = {k}: {}", detail()));
        }
    }

    fn fail(&mut self, msg: String) {
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(format!("{}: {msg}", self.name));
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub exact: bool,
    pub families: Vec<FamilyOutcome>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyOutcome::passed)
    }

    pub fn checks(&self) -> usize {
        self.families.iter().map(|f| f.checks).sum()
    }

    pub fn failures(&self) -> usize {
        self.families.iter().map(|f| f.failures).sum()
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.families.iter().find_map(|f| f.first_failure.as_deref())
    }

    /// The headline family's worst slack: the first family that records slack.
    pub fn worst(&self) -> Option<(&'static str, u64, f64)> {
        self.families.iter().find_map(|f| Some((f.name, f.worst_k?, f.worst_slack?)))
    }
}

/// Computes `Λ_k` and `Λ_{k,2}` for `k = 1..=max_k` of the explicit sections.
pub fn constants_table(max_k: usize, config: &VerifyConfig) -> Vec<LebesgueConstants> {
    exec::map_range(max_k, config.execution, |i| {
        let k = i + 1;
        let params = config.search_params(k).with_execution(Execution::Sequential);
        extrema::lebesgue_constants(k, &params).expect("k >= 1")
    })
}

/// `sup |l_{k-1,k}|` over `samples` equispaced boundary points (offset off the grid of nodes).
pub fn last_basis_sup(k: usize, samples: usize) -> Result<f64> {
    let basis = LagrangeBasis::explicit(k)?;
    Ok((0..samples)
        .map(|m| {
            let z = circle_point(TAU * (m as f64 + 0.5) / samples as f64);
            basis.basis_eval(k - 1, z).norm()
        })
        .fold(0.0, f64::max))
}

/// `2^{-p_0/2} k`.
pub fn theorem_bound(k: u64) -> f64 {
    let p0 = k.trailing_zeros() as i32;
    2f64.powf(-f64::from(p0) / 2.0) * k as f64
}

/// `(2^{-p_0} k)^{1/2}`.
pub fn proposition_bound(k: u64) -> f64 {
    ((k >> k.trailing_zeros()) as f64).sqrt()
}

/// Runs suites against a lazily computed table of constants.
pub struct Verifier {
    config: VerifyConfig,
    table: Vec<LebesgueConstants>,
    cache: USequenceCache,
}

impl Verifier {
    pub fn new(config: VerifyConfig) -> Result<Self> {
        config.validate()?;
        Ok(Verifier { config, table: Vec::new(), cache: USequenceCache::new() })
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.config
    }

    /// Constants for `k = 1..=upto`, computing any missing entries.
    pub fn constants(&mut self, upto: usize) -> &[LebesgueConstants] {
        if self.table.len() < upto {
            let start = self.table.len();
            let cfg = self.config;
            let extra = exec::map_range(upto - start, cfg.execution, |i| {
                let k = start + i + 1;
                let params = cfg.search_params(k).with_execution(Execution::Sequential);
                extrema::lebesgue_constants(k, &params).expect("k >= 1")
            });
            self.table.extend(extra);
        }
        &self.table[..upto]
    }

    pub fn run_all(&mut self, suites: &[Suite]) -> Vec<SuiteOutcome> {
        suites.iter().map(|&s| self.run(s)).collect()
    }

    pub fn run(&mut self, suite: Suite) -> SuiteOutcome {
        let families = match suite {
            Suite::Bounds => self.bounds(),
            Suite::Sandwich => self.sandwich(),
            Suite::Recursion => self.recursion(),
            Suite::Lemma3 => self.lemma3(),
            Suite::Symmetry => self.symmetry(),
            Suite::Greedy => self.greedy(),
            Suite::Halving => self.halving(),
        };
        SuiteOutcome { suite, exact: suite.is_exact(), families }
    }

    fn bounds(&mut self) -> Vec<FamilyOutcome> {
        let max_k = self.config.max_k;
        let table = self.constants(max_k).to_vec();
        let mut theorem = FamilyOutcome::new("lambda <= 2^(-p0/2) k");
        let mut linear = FamilyOutcome::new("lambda <= 2k");
        let mut proposition = FamilyOutcome::new("lambda2 <= sqrt(2^(-p0) k)");
        let mut majorant = FamilyOutcome::new("lambda2^2 <= U_k");
        let mut sharper = FamilyOutcome::new("lambda <= sqrt(k (2^(-p0) k - delta_k))");
        let mut uniform = FamilyOutcome::new("max_j |l_j| <= pi exp(3 pi)");
        let mut lambda_eq = FamilyOutcome::new("lambda = k at k = 2^n - 1");
        let mut lambda2_eq = FamilyOutcome::new("lambda2 = sqrt(2^(-p0) k) at k = 2^p (2^n - 1)");
        let mut last = FamilyOutcome::new("|l_{k-1,k}| <= 1");
        let equality: BTreeSet<u64> = recursion::equality_set(max_k as u64).into_iter().collect();
        let uniform_bound = PI * (3.0 * PI).exp();
        for c in &table {
            let k = c.k as u64;
            let (lam, lam2) = (c.lambda.value, c.lambda2.value);
            theorem.slack(k, theorem_bound(k) - lam, SUP_TOL);
            linear.slack(k, 2.0 * k as f64 - lam, SUP_TOL);
            proposition.slack(k, proposition_bound(k) - lam2, SUP_TOL);
            let u = self.cache.u(k).expect("k >= 1").to_f64();
            majorant.slack(k, u - lam2 * lam2, SUP_TOL);
            let delta = self.cache.delta(k).expect("k >= 1").to_f64();
            let odd = (k >> k.trailing_zeros()) as f64;
            sharper.slack(k, (k as f64 * (odd - delta)).sqrt() - lam, SUP_TOL);
            // every |l_j(z)| is bounded by λ(z) <= Λ_k
            uniform.slack(k, uniform_bound - lam, 0.0);
            if (k + 1).is_power_of_two() {
                let gap = (lam - k as f64).abs() / k as f64;
                lambda_eq.slack(k, -gap, SUP_TOL);
            }
            if c.k <= LAMBDA2_EQUALITY_MAX_K && equality.contains(&k) {
                lambda2_eq.slack(k, -(lam2 - proposition_bound(k)).abs(), SUP_TOL);
            }
        }
        let last_ks: Vec<usize> = (2..=max_k.min(LAST_BASIS_MAX_K)).collect();
        let sups = exec::map_slice(&last_ks, self.config.execution, |&k| {
            last_basis_sup(k, LAST_BASIS_SAMPLES).expect("k >= 2")
        });
        for (k, s) in last_ks.iter().zip(sups) {
            last.slack(*k as u64, 1.0 - s, LAST_BASIS_TOL);
        }
        vec![theorem, linear, proposition, majorant, sharper, uniform, lambda_eq, lambda2_eq, last]
    }

    fn sandwich(&mut self) -> Vec<FamilyOutcome> {
        let table = self.constants(self.config.max_k).to_vec();
        let mut lower = FamilyOutcome::new("lambda2 >= sqrt(2^(s+1) - 1)");
        let mut upper = FamilyOutcome::new("lambda2 <= sqrt(3 (2^(s+1) - 1))");
        let mut at_next = FamilyOutcome::new("lambda2(e_k) = sqrt(2^(s+1) - 1)");
        for c in &table {
            let k = c.k as u64;
            let ones = 2f64.powi(k.count_ones() as i32) - 1.0;
            lower.slack(k, c.lambda2.value - ones.sqrt(), SUP_TOL);
            upper.slack(k, (3.0 * ones).sqrt() - c.lambda2.value, SUP_TOL);
        }
        let ks: Vec<usize> = (1..=self.config.max_k).collect();
        let values = exec::map_slice(&ks, self.config.execution, |&k| {
            let basis = LagrangeBasis::explicit(k).expect("k >= 1");
            basis.quadratic_lebesgue_function(crate::disk::explicit_leja_point(k as u64).to_point())
        });
        for (&k, v) in ks.iter().zip(values) {
            let want = (2f64.powi(k.count_ones() as i32) - 1.0).sqrt();
            at_next.slack(k as u64, -(v - want).abs() / want, 1e-9);
        }
        vec![lower, upper, at_next]
    }

    fn halving(&mut self) -> Vec<FamilyOutcome> {
        let max_k = self.config.max_k;
        let mut pointwise = FamilyOutcome::new("lambda2_{2N}(z) = lambda2_N(z^2)");
        let mut constants = FamilyOutcome::new("Lambda2_{2N} = Lambda2_N");
        let mut powers = FamilyOutcome::new("Lambda2_{2^n} = 1");
        let mut lemma2 = FamilyOutcome::new("Lambda2_{2N+1}^2 <= Lambda2_{N+1}^2/2 + 2 Lambda2_N^2 + 1/2");

        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        let angles: Vec<f64> = (0..HALVING_POINTS).map(|_| rng.gen_range(0.0..TAU)).collect();
        let ns: Vec<usize> = (1..=(max_k / 2).min(HALVING_POINT_MAX_N)).collect();
        let worst = exec::map_slice(&ns, self.config.execution, |&n| {
            let double = LagrangeBasis::explicit(2 * n).expect("n >= 1");
            let single = LagrangeBasis::explicit(n).expect("n >= 1");
            angles.iter().map(|&t| halving_residual(&double, &single, circle_point(t))).fold(0.0, f64::max)
        });
        for (&n, w) in ns.iter().zip(worst) {
            pointwise.slack(n as u64, -w, HALVING_POINT_TOL);
        }

        let table = self.constants(max_k).to_vec();
        let l2 = |k: usize| table[k - 1].lambda2.value;
        for n in 1..=(max_k / 2).min(HALVING_CONST_MAX_N) {
            constants.slack(n as u64, -(l2(2 * n) - l2(n)).abs(), HALVING_CONST_TOL);
        }
        let mut p = 1usize;
        while p <= max_k {
            powers.slack(p as u64, -(l2(p) - 1.0).abs(), HALVING_CONST_TOL);
            p *= 2;
        }
        for n in 1..=((max_k.saturating_sub(1)) / 2).min(HALVING_CONST_MAX_N) {
            let rhs = 0.5 * l2(n + 1).powi(2) + 2.0 * l2(n).powi(2) + 0.5;
            lemma2.slack(n as u64, rhs - l2(2 * n + 1).powi(2), SUP_TOL);
        }
        vec![pointwise, constants, powers, lemma2]
    }

    fn recursion(&mut self) -> Vec<FamilyOutcome> {
        let limit = self.config.exact_max_k;
        let mut nonneg = FamilyOutcome::new("delta_k >= 0");
        let mut range = FamilyOutcome::new("0 <= U_k <= k");
        let mut closed = FamilyOutcome::new("U_{2^n m}, U_{2^n m + 1} closed forms");
        let mut reduction = FamilyOutcome::new("delta_k = delta_{2^(-p0) k}");
        let mut two_terms = FamilyOutcome::new("delta_{2^p0 + 2^p1} = 2^(p0-p1) (2^(p1-p0) - 2)^2");
        let mut equality = FamilyOutcome::new("delta_k = 0 iff k = 2^p (2^n - 1)");

        let deltas = recursion::delta_table(limit, self.config.execution);
        let mut zeros = Vec::new();
        let cache = &mut self.cache;
        for (i, delta) in deltas.iter().enumerate() {
            let k = i as u64 + 1;
            nonneg.exact(k, !delta.is_negative(), || format!("delta = {delta}"));
            if delta.is_zero() {
                zeros.push(k);
            }
            // the smallest Δ is the headline slack
            let d = delta.to_f64();
            if nonneg.worst_slack.is_none_or(|w| d < w) {
                nonneg.worst_slack = Some(d);
                nonneg.worst_k = Some(k);
            }
            let u = cache.u(k).expect("k >= 1");
            range.exact(k, !u.is_negative() && u <= crate::DyadicRational::from(k), || format!("U = {u}"));
            let odd = k >> k.trailing_zeros();
            reduction.exact(k, *delta == deltas[odd as usize - 1], || "reduction differs".into());
            if k.count_ones() == 2 {
                let e = binary_expand(k).expect("k >= 1");
                let (p0, p1) = (i64::from(e.exponents()[0]), i64::from(e.exponents()[1]));
                let g = crate::DyadicRational::pow2(p1 - p0) - crate::DyadicRational::from_int(2);
                let want = (&g * &g).scale_pow2(p0 - p1);
                two_terms.exact(k, *delta == want, || format!("delta = {delta}, expected {want}"));
            }
        }
        for n in 0..=10u32 {
            for m in 1..=100u64 {
                if (m << n) < limit {
                    let ok = recursion::u_closed_form_check(cache, n, m).unwrap_or(false);
                    closed.exact(m << n, ok, || format!("n = {n}, m = {m}"));
                }
            }
        }
        let expected = recursion::equality_set(limit);
        let ok = zeros == expected;
        equality.exact(limit, ok, || {
            let z: BTreeSet<_> = zeros.iter().collect();
            let e: BTreeSet<_> = expected.iter().collect();
            format!("first mismatch at {:?}", z.symmetric_difference(&e).next())
        });
        vec![nonneg, range, closed, reduction, two_terms, equality]
    }

    fn lemma3(&mut self) -> Vec<FamilyOutcome> {
        let limit = self.config.exact_max_k;
        let mut identity = FamilyOutcome::new("closed-form sum = delta_k");
        let mut nonneg = FamilyOutcome::new("every term >= 0");
        let mut unit_gap = FamilyOutcome::new("unit gaps contribute 0");
        for k in 1..=limit {
            let e = binary_expand(k).expect("k >= 1");
            if e.s() == 0 {
                continue;
            }
            let terms = self.cache.lemma3_terms(&e).expect("s >= 1");
            let sum = terms.iter().fold(crate::DyadicRational::zero(), |acc, t| acc + t);
            let delta = self.cache.delta(k).expect("k >= 1");
            identity.exact(k, sum == delta, || format!("sum = {sum}, delta = {delta}"));
            nonneg.exact(k, terms.iter().all(|t| !t.is_negative()), || "negative term".into());
            let p = e.exponents();
            let vanish = terms.iter().enumerate().all(|(i, t)| p[i + 1] - p[i] != 1 || t.is_zero());
            unit_gap.exact(k, vanish, || "unit-gap term is non-zero".into());
        }
        vec![identity, nonneg, unit_gap]
    }

    fn symmetry(&mut self) -> Vec<FamilyOutcome> {
        let limit = self.config.exact_max_k.min(SYMMETRY_MAX_LEN);
        let mut relations = FamilyOutcome::new("e_{2j+1} = -e_{2j}, e_{2j}^2 = e_{2j+1}^2 = e_j");
        let mut doubling = FamilyOutcome::new("doubling = closed form");
        let mut roots = FamilyOutcome::new("E_{2^n} = 2^n-th roots of unity");
        let lens: Vec<u64> = (1..=limit / 2).map(|m| 2 * m).collect();
        let reports = exec::map_slice(&lens, self.config.execution, |&len| {
            let s = explicit_section(len as usize).expect("len >= 2");
            check_symmetry_relations(&s).expect("even, angle-backed").into_result()
        });
        for (&len, r) in lens.iter().zip(reports) {
            relations.exact(len, r.is_ok(), || format!("{}", r.clone().unwrap_err()));
        }
        let mut n = 0u32;
        while (2u64 << n) <= limit {
            let d = doubling_section(n).expect("small n").angles().expect("angles");
            let e = explicit_section(2 << n).expect("len >= 2").angles().expect("angles");
            doubling.exact(2 << n, d == e, || "sequences differ".into());
            n += 1;
        }
        let mut n = 0u32;
        while (1u64 << n) <= limit {
            let set = explicit_section(1 << n).expect("len >= 1").angle_set().expect("angles");
            let want = (0..(1u64 << n)).map(|m| crate::DyadicAngle::new(2 * m, n).expect("small")).collect();
            roots.exact(1 << n, set == want, || "node set is not the roots of unity".into());
            n += 1;
        }
        vec![relations, doubling, roots]
    }

    fn greedy(&mut self) -> Vec<FamilyOutcome> {
        let mut rotation = FamilyOutcome::new("greedy set = rotated explicit set");
        let mut capacity = FamilyOutcome::new("distance-product means approach 1");
        let grid = match DiscretizedCompact::circle(self.config.greedy_candidates) {
            Ok(g) => g,
            Err(e) => {
                rotation.exact(0, false, || e.to_string());
                return vec![rotation, capacity];
            }
        };
        let tol = TAU / self.config.greedy_candidates as f64;
        let largest = GREEDY_SIZES.iter().copied().filter(|&k| k <= self.config.max_k.max(2)).max().unwrap_or(2);
        let section = greedy::greedy_section_with(largest, &grid, Complex64::new(1.0, 0.0), self.config.execution);
        match section {
            Ok(section) => {
                for k in GREEDY_SIZES.into_iter().filter(|&k| k <= largest) {
                    let g = section.prefix(k).points();
                    let e = explicit_section(k).expect("k >= 1").points();
                    let ok = greedy::rotation_between(&g, &e, tol).is_some();
                    rotation.exact(k as u64, ok, || "no rotation matches the node sets".into());
                }
            }
            Err(e) => rotation.exact(largest as u64, false, || e.to_string()),
        }
        let len = self.config.max_k.clamp(2, 256);
        let diag = greedy::transfinite_diameter_diagnostic(&explicit_section(len).expect("len >= 2"))
            .expect("len >= 2");
        let (last_k, last) = *diag.last().expect("non-empty");
        if len == 256 {
            capacity.slack(last_k as u64, 0.05 - (last - 1.0).abs(), 0.0);
        }
        for (k, v) in diag {
            capacity.slack(k as u64, 4.0 - v, 0.0);
        }
        vec![rotation, capacity]
    }
}

/// Parses a comma-separated suite list.
pub fn parse_suites(list: &str) -> Result<Vec<Suite>> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(Suite::from_str).collect()
}
