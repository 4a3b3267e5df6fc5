//! `y(s)` from the A3 reduced systems and the two Painleve VI equations.

use trifrob::cli::a3_painleve_curve;
use trifrob::fuchsian::*;
use trifrob::hurwitz_examples::a3;
use trifrob::C64;

fn mu() -> C64 {
    C64::new(a3::A3_MU, 0.0)
}

fn grid(start: f64, end: f64, h: f64) -> Vec<C64> {
    let n = ((end - start) / h).round() as usize;
    (0..=n).map(|k| C64::new(start + h * k as f64, 0.0)).collect()
}

fn y_at(variant: PainleveVariant) -> impl Fn(C64) -> Result<C64> {
    move |s| {
        let t = a3::t_of_s(s, C64::new(2.0, 0.0)).map_err(|e| FuchsianError::GridTooCoarse(e.to_string()))?;
        let phi = a3::a3_phi(t).map_err(|e| FuchsianError::GridTooCoarse(e.to_string()))?;
        let sys = match variant {
            PainleveVariant::PviMu => reduce_a(&phi, mu(), s)?,
            PainleveVariant::Okamoto => reduce_b(&phi, mu(), s)?,
        };
        painleve_y(&sys)
    }
}

#[test]
fn both_systems_solve_their_equation() {
    let g = grid(1.2, 2.0, 1e-3);
    for v in [PainleveVariant::PviMu, PainleveVariant::Okamoto] {
        let sample = a3_painleve_curve(&g, v).unwrap();
        let r = pvi_residual(&sample, mu(), v).unwrap();
        assert!(r < 1e-4, "{v:?}: {r:e}");
    }
}

#[test]
fn halving_the_step_reduces_the_residual() {
    for v in [PainleveVariant::PviMu, PainleveVariant::Okamoto] {
        for s in [1.3, 1.6, 1.9] {
            let (r1, r2) = pvi_richardson(y_at(v), C64::new(s, 0.0), 1e-3, mu(), v).unwrap();
            assert!(r1 / r2 >= 3.0, "{v:?} at {s}: {r1:e} -> {r2:e}");
        }
    }
}

#[test]
fn exchanging_the_equations_fails() {
    let g = grid(1.4, 1.6, 1e-3);
    let a = a3_painleve_curve(&g, PainleveVariant::PviMu).unwrap();
    let b = a3_painleve_curve(&g, PainleveVariant::Okamoto).unwrap();
    assert!(pvi_residual(&a, mu(), PainleveVariant::Okamoto).unwrap() > 1e-2);
    assert!(pvi_residual(&b, mu(), PainleveVariant::PviMu).unwrap() > 1e-2);
}

#[test]
fn wrong_parameter_fails() {
    let g = grid(1.4, 1.6, 1e-3);
    let a = a3_painleve_curve(&g, PainleveVariant::PviMu).unwrap();
    assert!(pvi_residual(&a, C64::new(0.3, 0.0), PainleveVariant::PviMu).unwrap() > 1e-2);
}

#[test]
fn near_the_fixed_singularity_the_error_is_differencing() {
    // close to s = 1 the residual is far above 1e-4 but still falls like h^2
    for v in [PainleveVariant::PviMu, PainleveVariant::Okamoto] {
        let (r1, r2) = pvi_richardson(y_at(v), C64::new(1.03, 0.0), 1e-3, mu(), v).unwrap();
        assert!(r1 / r2 > 3.5 && r1 / r2 < 4.5, "{v:?}: {r1:e} -> {r2:e}");
    }
}
