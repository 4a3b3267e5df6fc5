//! The 2x2 Fuchsian systems of the A3 example and their explicit solutions.

use trifrob::fuchsian::*;
use trifrob::hurwitz_examples::{a3, appell};
use trifrob::numkit::{CMatrix, CPath, NumError};
use trifrob::C64;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn mu() -> C64 {
    c(a3::A3_MU, 0.0)
}

/// Twenty `(t, eps)` pairs away from the poles and the cut of the roots.
fn points() -> Vec<(C64, C64)> {
    (0..20)
        .map(|k| {
            let k = k as f64;
            (c(1.3 + 0.11 * k, 0.35 - 0.04 * k), c(-2.5 + 0.23 * k, 0.8 - 0.07 * k))
        })
        .collect()
}

#[test]
fn appell_closed_forms_match_the_double_series() {
    for k in 0..10 {
        let th = k as f64 * 0.6;
        let x = C64::from_polar(0.5 * (0.3 + 0.07 * k as f64), th);
        let y = C64::from_polar(0.45 - 0.03 * k as f64, -1.3 * th + 0.4);
        let (f, g) = appell::appell_fg(x, y).unwrap();
        let fs = appell::appell_f1_series(1.25, 0.75, 0.75, 1.5, x, y, 140);
        let gs = appell::appell_f1_series(0.25, 0.75, 0.75, 0.5, x, y, 140);
        assert!((f - fs).norm() < 1e-10, "f at {x}, {y}: {:e}", (f - fs).norm());
        assert!((g - gs).norm() < 1e-10, "g at {x}, {y}: {:e}", (g - gs).norm());
    }
}

#[test]
fn explicit_solution_satisfies_the_b_system() {
    for (t, eps) in points() {
        let checked = a3::a3_chi_checked(t, eps, 1e-6).unwrap();
        assert!(checked.residual < 1e-6);
        let sys = a3::a3_b_system(t).unwrap();
        let chi = |e: C64| -> std::result::Result<CMatrix, NumError> {
            a3::chi_from_roots(&a3::track_roots(a3::a3_roots(t, e).map_err(|_| NumError::Singular)?, &checked.roots))
                .map_err(|_| NumError::Singular)
        };
        assert!(fuchsian_residual(&sys, chi, eps, 1e-5).unwrap() < 1e-6);
    }
}

#[test]
fn wronskian_follows_the_trace_exponents() {
    let t = c(2.0, 0.2);
    let sys = a3::a3_b_system(t).unwrap();
    let e0 = c(0.4, 0.9);
    let chi0 = a3::a3_chi_checked(t, e0, 1e-6).unwrap().chi;
    let path = CPath::new(vec![e0, c(-1.5, 1.2), c(-2.0, -0.8), c(0.5, -1.5)]).unwrap();
    assert!(wronskian_residual(&sys, &path, &chi0, 1e-12).unwrap() < 1e-7);
}

#[test]
fn continued_solution_agrees_with_the_closed_form() {
    let t = c(2.0, 0.2);
    let sys = a3::a3_b_system(t).unwrap();
    let e0 = c(0.4, 0.9);
    let e1 = c(0.9, 1.3);
    let start = a3::a3_chi_checked(t, e0, 1e-6).unwrap();
    let numeric = integrate_system(&sys, &CPath::segment(e0, e1).unwrap(), &start.chi, 1e-12).unwrap();
    let closed = a3::chi_from_roots(&a3::track_roots(a3::a3_roots(t, e1).unwrap(), &start.roots)).unwrap();
    // each closed-form column is fixed only up to a fourth root of unity
    for k in 0..2 {
        let (n, cl) = (numeric.col(k), closed.col(k));
        let d = (0..4)
            .map(|j| {
                let w = C64::new(0.0, 1.0).powi(j);
                n.iter().zip(&cl).map(|(a, b)| (a - b * w).norm()).fold(0.0, f64::max)
            })
            .fold(f64::INFINITY, f64::min);
        assert!(d < 1e-8 * closed.max_abs(), "column {k}: {d:e}");
    }
}

#[test]
fn residues_at_infinity() {
    for t in [c(2.0, 0.0), c(1.5, 0.5)] {
        let phi = a3::a3_phi(t).unwrap();
        let s = a3::s_of_t(t);
        for sys in [reduce_a(&phi, mu(), s).unwrap(), reduce_b(&phi, mu(), s).unwrap()] {
            let want = sys.expected_infinity().unwrap();
            assert!(sys.residue_at_infinity().max_abs_diff(&want) < 1e-13, "{:?}", sys.kind);
        }
    }
}

#[test]
fn eigenspace_systems_gauge_to_the_b_system() {
    let t = c(1.8, -0.3);
    let phi = a3::a3_phi(t).unwrap();
    let s = a3::s_of_t(t);
    let b = reduce_b(&phi, mu(), s).unwrap();
    let (sc, sd) = build_c_d(&phi, mu(), s).unwrap();
    assert!(residue_distance(&gauge_c_to_b(&sc), &b) < 1e-14);
    assert!(residue_distance(&gauge_d_to_b(&sd), &b) < 1e-14);
}

#[test]
fn twisted_periods_restrict_to_the_reduced_systems() {
    let t = c(2.3, 0.4);
    let phi = a3::a3_phi(t).unwrap();
    let s = a3::s_of_t(t);
    let u = [c(0.0, 0.0), c(1.0, 0.0), s];
    let mu_hat = a3::a3_mu_hat();
    let b = restrict_to_standard(&residues_r(&phi, &mu_hat, &u, mu() + 0.5).unwrap(), &[1, 2], mu(), ResidueKind::B).unwrap();
    assert!(residue_distance(&b, &reduce_b(&phi, mu(), s).unwrap()) < 1e-13);
    let a = restrict_to_standard(&residues_r(&phi, &mu_hat, &u, c(0.5, 0.0)).unwrap(), &[0, 2], mu(), ResidueKind::A).unwrap();
    assert!(residue_distance(&a, &reduce_a(&phi, mu(), s).unwrap()) < 1e-13);
    // the dropped direction decouples
    let full = residues_r(&phi, &mu_hat, &u, mu() + 0.5).unwrap();
    for r in &full.residues {
        assert!(r.col(0).iter().all(|z| z.norm() < 1e-14));
    }
}

#[test]
fn critical_values_sit_at_the_shifted_poles() {
    for (t, eps) in points().into_iter().take(5) {
        let s = a3::s_of_t(t);
        let got = a3::a3_critical_values(t, eps).unwrap();
        for want in [-eps, 1.0 - eps, s - eps] {
            let d = got.iter().map(|g| (g - want).norm()).fold(f64::INFINITY, f64::min);
            assert!(d < 1e-10, "t = {t}: missing {want}, nearest {d:e}");
        }
    }
}

fn family(eps: C64, t0: C64, reference: [C64; 4], frozen: Option<CMatrix>) -> impl Fn(C64) -> std::result::Result<(CMatrix, CMatrix), NumError> {
    move |s| {
        let (m3, chi) = a3::a3_isomonodromic_pair(s, eps, t0, &reference).map_err(|_| NumError::Singular)?;
        Ok((m3, frozen.clone().unwrap_or(chi)))
    }
}

#[test]
fn deformation_in_s_is_isomonodromic() {
    let eps = c(0.3, 0.7);
    for s0 in [1.3, 1.6, 2.5] {
        let s = c(s0, 0.0);
        let t0 = a3::t_of_s(s, c(2.0, 0.0)).unwrap();
        let base = a3::a3_chi_checked(t0, eps, 1e-6).unwrap();
        let live = isomonodromy_residual(family(eps, t0, base.roots, None), s, eps, 1e-5).unwrap();
        assert!(live < 1e-8, "s = {s0}: {live:e}");
        let frozen = isomonodromy_residual(family(eps, t0, base.roots, Some(base.chi.clone())), s, eps, 1e-5).unwrap();
        assert!(frozen > 1e-2, "s = {s0}: frozen solution passed with {frozen:e}");
    }
}
