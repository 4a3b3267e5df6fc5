//! Genus-one Hurwitz spaces: periods, Carlson forms and the lifted solution.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trifrob::cli::random_elliptic_charts;
use trifrob::hurwitz_examples::elliptic::*;
use trifrob::hurwitz_examples::HurwitzError;
use trifrob::numkit::carlson_rf;
use trifrob::C64;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[test]
fn carlson_reference_values() {
    let z = c(0.0, 0.0);
    let cases = [
        ((c(1.0, 0.0), c(2.0, 0.0), z), c(1.311_028_777_146_06, 0.0)),
        ((c(0.0, 1.0), c(0.0, -1.0), z), c(1.854_074_677_301_37, 0.0)),
        // R_F(0, 1 - m, 1) = K(m)
        ((c(0.5, 0.0), c(1.0, 0.0), z), c(1.854_074_677_301_37, 0.0)),
        ((c(-1.0, 1.0), c(0.0, 1.0), c(1.0, -1.0)), c(0.939_120_502_186_194, -0.532_962_520_186_353)),
        ((c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)), c(0.584_082_841_677_152, 0.0)),
    ];
    for ((x, y, w), want) in cases {
        let got = carlson_rf(x, y, w).unwrap();
        assert!((got - want).norm() < 1e-12, "R_F({x}, {y}, {w}) = {got}, want {want}");
    }
}

#[test]
fn a_period_agrees_with_the_carlson_form() {
    for s in [c(0.3, 0.2), c(-1.5, 0.4), c(2.5, -0.7), c(0.5, -1.0)] {
        let p = elliptic_period_data(s).unwrap();
        let rf = 2.0 / (-s).sqrt() * carlson_rf(c(0.0, 0.0), 1.0 - 1.0 / s, c(1.0, 0.0)).unwrap();
        assert!((p.omega1 - rf).norm() < 1e-12 * rf.norm(), "s = {s}: {} vs {rf}", p.omega1);
    }
}

#[test]
fn ibar_reflection_symmetry() {
    for s in [c(0.3, 0.2), c(-0.8, 1.1), c(1.7, -0.5)] {
        let a = elliptic_period_data(s).unwrap().ibar;
        let b = elliptic_period_data(1.0 - s).unwrap().ibar;
        assert!((a + b - 1.0).norm() < 1e-9, "s = {s}");
    }
}

#[test]
fn reduced_state_has_constant_casimir() {
    let k0 = elliptic_v(c(0.3, 0.4)).unwrap().casimir();
    for s in [c(-1.0, 0.5), c(2.0, -1.0), c(0.5, 2.0)] {
        assert!((elliptic_v(s).unwrap().casimir() - k0).norm() < 1e-10);
    }
}

#[test]
fn seeded_charts_pass_every_check() {
    let charts = random_elliptic_charts(&mut ChaCha8Rng::seed_from_u64(42), 5);
    for v in charts {
        let r = elliptic_w_check(&v, 1e-5).unwrap();
        assert!(r.w_residual < 1e-5, "{v:?}: W {:e}", r.w_residual);
        assert!(r.period_identity < 1e-6, "{v:?}: period_identity {:e}", r.period_identity);
        assert!(r.bar_j1 < 1e-6, "{v:?}: J1 {:e}", r.bar_j1);
    }
}

#[test]
fn three_point_metric_gives_the_reduced_state() {
    let charts = random_elliptic_charts(&mut ChaCha8Rng::seed_from_u64(9), 3);
    for v in charts {
        assert!(elliptic3_v_check(&[v[0], v[1], v[2]], 1e-5).unwrap() < 1e-5);
    }
}

#[test]
fn domain_rule_is_enforced() {
    assert!(matches!(elliptic_v(c(0.4, 0.01)), Err(HurwitzError::ChartTooCloseToCut(_))));
    // s = 2 but the normalized branch point P = 0.5 sits on the cut
    let v = [c(0.0, 0.0), c(1.0, 0.0), c(0.5, 0.0), c(3.0, 0.0)];
    assert!(genus_one_chart(&v).is_err());
}
