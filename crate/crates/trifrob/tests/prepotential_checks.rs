//! Pavlyk's solution, the flat pencil of its third metric, and the two
//! negative controls.

use num_rational::Rational64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trifrob::frobenius::*;
use trifrob::hurwitz_examples::{nonsplit_prepotential, pavlyk_prepotential, pavlyk_radicand, pavlyk_sample_points};
use trifrob::C64;

fn real(xs: [f64; 4]) -> Vec<C64> {
    xs.iter().map(|x| C64::new(*x, 0.0)).collect()
}

fn samples(count: usize) -> Vec<Vec<C64>> {
    pavlyk_sample_points(&mut ChaCha8Rng::seed_from_u64(2024), count)
}

#[test]
fn value_at_the_unit_radicand_point() {
    // only the radical term survives: (48)^(5/2) / (32 * 81 * 5) = 32 sqrt(3) / 45
    let f = pavlyk_prepotential();
    let v = f.value(&real([0.0, 1.0, 0.0, 0.0])).unwrap();
    assert!((v - 32.0 * 3f64.sqrt() / 45.0).norm() < 1e-14);
    assert!((v.re - 1.231_681).abs() < 1e-6);
}

#[test]
fn grading_and_term_degrees() {
    let f = pavlyk_prepotential();
    assert_eq!(f.charge(), Rational64::new(1, 2));
    assert_eq!(f.monomials().len() + f.radicals().len(), 9);
    assert!(f.term_degree_mismatches().is_empty());
    let mu: Vec<Rational64> = f.mu_rational();
    assert_eq!(mu, vec![Rational64::new(-1, 4), Rational64::new(-1, 4), Rational64::new(1, 4), Rational64::new(1, 4)]);
}

#[test]
fn wdvv_unit_and_homogeneity_at_seeded_points() {
    let f = pavlyk_prepotential();
    let pts = samples(100);
    assert!(pts.iter().all(|t| pavlyk_radicand(t).re > 0.0));
    assert!(check_wdvv(&f, &pts).unwrap() < 1e-9);
    for t in &pts {
        let p = evaluate_point(&f, t).unwrap();
        assert!(check_unit(&p) < 1e-12);
        assert!(check_quasihomogeneity(&f, 2.0, t).unwrap() < 1e-10);
    }
}

#[test]
fn generic_sampler_agrees_with_the_radicand_rule() {
    let f = pavlyk_prepotential();
    let pts = sample_points(&f, &mut ChaCha8Rng::seed_from_u64(3), 30);
    assert_eq!(pts.len(), 30);
    assert!(pts.iter().all(|t| pavlyk_radicand(t).re > 0.1));
}

#[test]
fn almost_dual_associativity() {
    let f = pavlyk_prepotential();
    for t in samples(5) {
        assert!(check_wwdvv(&evaluate_point(&f, &t).unwrap()) < 1e-9);
    }
}

#[test]
fn flat_pencil_of_the_third_metric() {
    let f = pavlyk_prepotential();
    for t in samples(20) {
        let r = check_flat_pencil(&f, &t).unwrap();
        assert!(r.max() < 1e-6, "{r:?}");
        assert!(third_metric_curvature(&f, &t, 2e-4).unwrap().max_abs() < 1e-6);
        assert!(pencil_shift_residual(&f, &t, 0.1).unwrap() < 1e-9);
    }
}

#[test]
fn christoffel_identities_hold() {
    let f = pavlyk_prepotential();
    let t = &samples(1)[0];
    for m in [PencilMetric::Third, PencilMetric::Intersection] {
        let (metric, torsion) = check_christoffel_identities(&f, t, m, 1e-3).unwrap();
        assert!(metric < 1e-6 && torsion < 1e-6, "{m:?}: {metric:e} {torsion:e}");
    }
}

#[test]
fn perturbed_coefficient_breaks_wdvv() {
    let g = pavlyk_prepotential().with_scaled_monomial(5, 1.01);
    assert!(check_wdvv(&g, &samples(20)).unwrap() > 1e-6);
}

#[test]
fn nonsplit_control_fails_the_pencil() {
    let g = nonsplit_prepotential();
    let pts = sample_points(&g, &mut ChaCha8Rng::seed_from_u64(5), 10);
    // the polynomial itself is a genuine solution
    assert!(check_wdvv(&g, &pts).unwrap() < 1e-9);
    assert!(!check_trihamiltonian(&g).unwrap().is_trihamiltonian);
    let curv = pts.iter().map(|t| third_metric_curvature(&g, t, 2e-4).unwrap().max_abs()).fold(0.0, f64::max);
    assert!(curv > 1e-3, "{curv:e}");
}

#[test]
fn bundled_document_matches_the_builtin() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/pavlyk.json")).unwrap();
    let doc = Prepotential::from_json(&text).unwrap();
    let f = pavlyk_prepotential();
    for t in samples(5) {
        assert_eq!(doc.value(&t).unwrap(), f.value(&t).unwrap());
    }
}
