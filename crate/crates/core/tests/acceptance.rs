//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::BTreeSet;
use std::f64::consts::TAU;
use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use leja::binary_expand;
use leja::disk::{check_symmetry_relations, explicit_section};
use leja::extrema::{self, circle_point, SearchParams, DEFAULT_GRID};
use leja::greedy::{greedy_section, rotation_between, DiscretizedCompact};
use leja::interp::{halving_residual, LagrangeBasis};
use leja::recursion::{self, USequenceCache};
use leja::verify::{constants_table, last_basis_sup, proposition_bound, theorem_bound, GridPolicy, VerifyConfig};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

/// Tracks the worst (smallest) slack of an inequality family.
struct Worst {
    slack: f64,
    k: u64,
    violations: usize,
}

impl Worst {
    fn new() -> Self {
        Worst { slack: f64::INFINITY, k: 0, violations: 0 }
    }

    fn push(&mut self, k: u64, slack: f64, tol: f64) {
        if slack < self.slack {
            self.slack = slack;
            self.k = k;
        }
        if !(slack >= -tol) {
            self.violations += 1;
        }
    }
}

fn exact_nonnegativity() -> Outcome {
    let deltas = recursion::delta_table(1 << 16, leja::Execution::default());
    let negative: Vec<_> = deltas.iter().enumerate().filter(|(_, d)| d.is_negative()).map(|(i, _)| i + 1).collect();
    outcome(negative.is_empty(), format!("{} values checked, negatives at {:?}", deltas.len(), negative.first()))
}

fn exact_lemma3_identity() -> Outcome {
    let mut cache = USequenceCache::new();
    let mut checked = 0;
    let mut first_bad = None;
    for k in 1..=(1u64 << 12) {
        let e = binary_expand(k).unwrap();
        if e.s() == 0 {
            continue;
        }
        checked += 1;
        if cache.lemma3_sum(&e).unwrap() != cache.delta(k).unwrap() && first_bad.is_none() {
            first_bad = Some(k);
        }
    }
    outcome(first_bad.is_none(), format!("{checked} indices, first mismatch {first_bad:?}"))
}

fn equality_characterization() -> Outcome {
    let limit = 1u64 << 16;
    let scanned: BTreeSet<u64> = recursion::equality_characterization(limit).unwrap().into_iter().collect();
    let formula: BTreeSet<u64> = recursion::equality_set(limit).into_iter().collect();
    let diff: Vec<_> = scanned.symmetric_difference(&formula).take(3).collect();
    outcome(diff.is_empty(), format!("{} zeros of delta, differences {diff:?}", scanned.len()))
}

fn mersenne_lebesgue_constants() -> Outcome {
    let params = SearchParams::new(DEFAULT_GRID, extrema::DEFAULT_REFINE_TOL).unwrap();
    let mut worst = 0.0f64;
    for n in 1..=8u32 {
        let k = (1usize << n) - 1;
        let r = extrema::lebesgue_constant(k, &params).unwrap();
        worst = worst.max((r.value - k as f64).abs() / k as f64);
    }
    outcome(worst <= 1e-6, format!("max relative error {worst:.3e} (tol 1e-6, grid 2^17)"))
}

fn powers_of_two_quadratic() -> Outcome {
    let params = SearchParams::new(DEFAULT_GRID, extrema::DEFAULT_REFINE_TOL).unwrap();
    let mut worst = 0.0f64;
    for n in 0..=9u32 {
        let r = extrema::quadratic_lebesgue_constant(1 << n, &params).unwrap();
        worst = worst.max((r.value - 1.0).abs());
    }
    outcome(worst <= 1e-8, format!("max |Lambda2 - 1| = {worst:.3e} (tol 1e-8)"))
}

fn theorem_bound_and_equality(table: &[extrema::LebesgueConstants]) -> Outcome {
    let mut bound = Worst::new();
    for c in table {
        let k = c.k as u64;
        bound.push(k, theorem_bound(k) - c.lambda.value, 1e-6);
    }
    let equality: BTreeSet<u64> = recursion::equality_set(255).into_iter().collect();
    let mut eq = Worst::new();
    for &k in &equality {
        let c = &table[k as usize - 1];
        eq.push(k, -(c.lambda2.value - proposition_bound(k)).abs(), 1e-6);
    }
    outcome(
        bound.violations == 0 && eq.violations == 0,
        format!(
            "k<=1024 worst slack {:.3e} at k={}; lambda2 equality at {} indices, worst gap {:.3e} at k={}",
            bound.slack,
            bound.k,
            equality.len(),
            -eq.slack,
            eq.k
        ),
    )
}

fn sandwich(table: &[extrema::LebesgueConstants]) -> Outcome {
    let mut lower = Worst::new();
    let mut upper = Worst::new();
    for c in table {
        let k = c.k as u64;
        let m = 2f64.powi(k.count_ones() as i32) - 1.0;
        lower.push(k, c.lambda2.value - m.sqrt(), 1e-6);
        upper.push(k, (3.0 * m).sqrt() - c.lambda2.value, 1e-6);
    }
    outcome(
        lower.violations + upper.violations == 0,
        format!(
            "lower worst slack {:.3e} at k={}, upper worst slack {:.3e} at k={}",
            lower.slack, lower.k, upper.slack, upper.k
        ),
    )
}

fn lemma2(table: &[extrema::LebesgueConstants]) -> Outcome {
    let l2 = |k: usize| table[k - 1].lambda2.value;
    let mut w = Worst::new();
    for n in 1..=256usize {
        let rhs = 0.5 * l2(n + 1).powi(2) + 2.0 * l2(n).powi(2) + 0.5;
        w.push(n as u64, rhs - l2(2 * n + 1).powi(2), 1e-6);
    }
    outcome(w.violations == 0, format!("worst slack {:.3e} at N={}", w.slack, w.k))
}

fn halving_pointwise() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    let mut worst_n = 0;
    for n in 1..=64usize {
        let double = LagrangeBasis::explicit(2 * n).unwrap();
        let single = LagrangeBasis::explicit(n).unwrap();
        for _ in 0..1000 {
            let z = circle_point(rng.gen_range(0.0..TAU));
            let r = halving_residual(&double, &single, z);
            if r > worst {
                worst = r;
                worst_n = n;
            }
        }
    }
    outcome(worst <= 1e-10, format!("max relative residual {worst:.3e} at N={worst_n} (tol 1e-10)"))
}

fn symmetry_relations() -> Outcome {
    let mut first_bad = None;
    let mut count = 0;
    for len in (2..=(1usize << 13)).step_by(2) {
        count += 1;
        let report = check_symmetry_relations(&explicit_section(len).unwrap()).unwrap();
        if !report.all_hold() && first_bad.is_none() {
            first_bad = Some(len);
        }
    }
    outcome(first_bad.is_none(), format!("{count} even sections, first failure {first_bad:?}"))
}

fn greedy_rotation() -> Outcome {
    let grid = DiscretizedCompact::circle(8192).unwrap();
    let g = greedy_section(16, &grid, Complex64::new(1.0, 0.0)).unwrap();
    let e = explicit_section(16).unwrap();
    match rotation_between(&g.points(), &e.points(), TAU / 8192.0) {
        Some(rho) => outcome(true, format!("rotation angle {rho:.6} rad")),
        None => outcome(false, "no rotation aligns the node sets"),
    }
}

fn last_basis_bound() -> Outcome {
    let mut worst = 0.0f64;
    let mut worst_k = 0;
    for k in 1..=512usize {
        let s = if k == 1 { 1.0 } else { last_basis_sup(k, 10_000).unwrap() };
        if s > worst {
            worst = s;
            worst_k = k;
        }
    }
    outcome(worst <= 1.0 + 1e-9, format!("max sup |l_(k-1,k)| = {worst:.12} at k={worst_k}"))
}

fn main() -> ExitCode {
    let config = VerifyConfig { grid: GridPolicy::Sweep { cap: DEFAULT_GRID }, ..VerifyConfig::default() };
    let mut table = None;
    let table_for = |t: &mut Option<Vec<_>>| -> Vec<extrema::LebesgueConstants> {
        t.get_or_insert_with(|| constants_table(1024, &config)).clone()
    };

    let mut failures = 0;
    let mut report = |id: usize, name: &str, run: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = run();
        let status = if o.passed { "PASS" } else { "FAIL" };
        if !o.passed {
            failures += 1;
        }
        println!("[{status}] AC{id:02} {name}: {} ({:.1}s)", o.detail, start.elapsed().as_secs_f64());
    };

    report(1, "delta_k >= 0 exactly for k <= 2^16", &mut exact_nonnegativity);
    report(2, "closed-form delta sum = delta_k exactly for k <= 2^12", &mut exact_lemma3_identity);
    report(3, "delta_k = 0 iff k = 2^p (2^n - 1), k <= 2^16", &mut equality_characterization);
    report(4, "Lambda_{2^n-1} = 2^n - 1, n = 1..8", &mut mersenne_lebesgue_constants);
    report(5, "Lambda2_{2^n} = 1, n = 0..9", &mut powers_of_two_quadratic);
    report(6, "Lambda_k <= 2^(-p0/2) k, k <= 1024; lambda2 equality cases", &mut || {
        theorem_bound_and_equality(&table_for(&mut table))
    });
    report(7, "sqrt(2^(s+1)-1) <= Lambda2_k <= sqrt(3(2^(s+1)-1)), k <= 1024", &mut || {
        sandwich(&table_for(&mut table))
    });
    report(8, "Lambda2_{2N+1}^2 <= Lambda2_{N+1}^2/2 + 2 Lambda2_N^2 + 1/2, N <= 256", &mut || {
        lemma2(&table_for(&mut table))
    });
    report(9, "lambda2_{2N}(z) = lambda2_N(z^2), N <= 64, 1000 points", &mut halving_pointwise);
    report(10, "symmetry relations exact on even sections <= 2^13", &mut symmetry_relations);
    report(11, "greedy 16-section is a rotation of the explicit one", &mut greedy_rotation);
    report(12, "sup |l_(k-1,k)| <= 1 + 1e-9, k <= 512", &mut last_basis_bound);

    if failures == 0 {
        println!("acceptance: all 12 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}
