use leja::disk::explicit_section;
use leja::extrema::{self, circle_point, SearchParams};
use leja::greedy::{greedy_extend, DiscretizedCompact};
use leja::verify::theorem_bound;
use leja::{Execution, LagrangeBasis};
use num_complex::Complex64;
use proptest::prelude::*;

fn point(theta: f64, r: f64) -> Complex64 {
    Complex64::from_polar(r, theta)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn basis_sums_to_one(k in 1usize..200, theta in 0.0..std::f64::consts::TAU, r in 0.0..1.0f64) {
        let basis = LagrangeBasis::explicit(k).unwrap();
        let sum: Complex64 = basis.basis_values(point(theta, r)).iter().sum();
        prop_assert!((sum - 1.0).norm() < 1e-9 * k as f64);
    }

    #[test]
    fn lebesgue_function_ordering(k in 1usize..300, theta in 0.0..std::f64::consts::TAU) {
        let basis = LagrangeBasis::explicit(k).unwrap();
        let v = basis.lebesgue_values(circle_point(theta));
        prop_assert!(v.lambda >= 1.0 - 1e-12);
        prop_assert!(v.lambda2 <= v.lambda * (1.0 + 1e-12));
        prop_assert!(v.lambda <= (k as f64).sqrt() * v.lambda2 * (1.0 + 1e-12));
    }

    #[test]
    fn fast_values_match_basis(k in 1usize..128, theta in 0.0..std::f64::consts::TAU) {
        let basis = LagrangeBasis::explicit(k).unwrap();
        let z = circle_point(theta);
        let l = basis.basis_values(z);
        let lambda: f64 = l.iter().map(|c| c.norm()).sum();
        let lambda2 = l.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        let v = basis.lebesgue_values(z);
        prop_assert!((v.lambda - lambda).abs() <= 1e-10 * lambda);
        prop_assert!((v.lambda2 - lambda2).abs() <= 1e-10 * lambda2);
    }

    #[test]
    fn basis_bounded_by_constant_bound(k in 1u64..256, theta in 0.0..std::f64::consts::TAU) {
        let basis = LagrangeBasis::explicit(k as usize).unwrap();
        let l = basis.basis_values(circle_point(theta));
        let worst = l.iter().map(|c| c.norm()).fold(0.0, f64::max);
        prop_assert!(worst <= theorem_bound(k) * (1.0 + 1e-9));
    }

    #[test]
    fn interpolation_reproduces_polynomials(
        coeffs in prop::collection::vec(-2.0..2.0f64, 1..24),
        extra in 0usize..16,
        theta in 0.0..std::f64::consts::TAU,
        r in 0.0..1.0f64,
    ) {
        let k = coeffs.len() + extra;
        let basis = LagrangeBasis::explicit(k).unwrap();
        let p = |z: Complex64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
        let samples: Vec<Complex64> = basis.nodes().iter().map(|&z| p(z)).collect();
        let z = point(theta, r);
        let got = basis.interpolate(&samples, z).unwrap();
        prop_assert!((got - p(z)).norm() < 1e-8 * (1.0 + p(z).norm()) * k as f64);
    }

    #[test]
    fn greedy_step_monotone_in_candidates(len in 1usize..12, mask in any::<u64>()) {
        let full = DiscretizedCompact::circle(256).unwrap();
        let section = explicit_section(len).unwrap();
        let nodes = section.points();
        // keep every candidate that is a node plus a pseudo-random half of the rest
        let sub = full.subset(|i| (mask.rotate_left((i % 64) as u32) ^ i as u64) & 1 == 1 || i % 64 == 0).unwrap();
        let product = |s: &leja::LejaSection| {
            let z = *s.points().last().unwrap();
            nodes.iter().map(|e| (z - e).norm().ln()).sum::<f64>()
        };
        let (Ok(big), Ok(small)) = (greedy_extend(&section, &full), greedy_extend(&section, &sub)) else {
            return Ok(());
        };
        prop_assert!(product(&big) >= product(&small) - 1e-12);
    }
}

#[test]
fn report_dominates_grid_samples() {
    let params = SearchParams::new(4096, 1e-12).unwrap();
    for k in [3usize, 6, 11, 27, 100] {
        let basis = LagrangeBasis::explicit(k).unwrap();
        let report = extrema::sup_on_circle(|t| basis.lebesgue_function(circle_point(t)), &params);
        let grid_max = (0..4096)
            .map(|i| basis.lebesgue_function(circle_point(std::f64::consts::TAU * i as f64 / 4096.0)))
            .fold(0.0, f64::max);
        assert!(report.value >= grid_max, "k={k}");
    }
}

#[test]
fn finer_grid_agrees() {
    let coarse = SearchParams::new(1 << 17, 1e-12).unwrap();
    let fine = coarse.with_grid(1 << 18);
    for k in [5usize, 37, 100, 255] {
        let a = extrema::lebesgue_constants(k, &coarse).unwrap();
        let b = extrema::lebesgue_constants(k, &fine).unwrap();
        assert!((a.lambda.value - b.lambda.value).abs() < 1e-8, "k={k}");
        assert!((a.lambda2.value - b.lambda2.value).abs() < 1e-8, "k={k}");
    }
}

#[test]
fn sequential_matches_parallel() {
    let par = SearchParams::new(8192, 1e-12).unwrap();
    let seq = par.with_execution(Execution::Sequential);
    for k in [9usize, 50] {
        assert_eq!(extrema::lebesgue_constants(k, &par).unwrap(), extrema::lebesgue_constants(k, &seq).unwrap());
    }
}

#[test]
fn quadratic_constant_of_six() {
    let params = SearchParams::default();
    let r = extrema::quadratic_lebesgue_constant(6, &params).unwrap();
    assert!((r.value - 3f64.sqrt()).abs() < 1e-10);
}
