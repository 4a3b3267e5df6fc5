//! Genus-one Hurwitz spaces: periods by quadrature over the `a`-cycle, the
//! closed-form `(a, b, c)` of the three-point case, and the comparison of the
//! four-point metric with the lifted solution.

use super::{HurwitzError, Result};
use crate::darboux_egoroff::{lift_to_w, rotation_coefficients, sign_gauge_distance, v_from_gamma, DEState};
use crate::numkit::{contour_quadrature, CPath, NumError};
use crate::C64;

/// Relative accuracy requested from every period quadrature.
pub const PERIOD_TOL: f64 = 1e-14;

/// Minimum distance of the normalized branch points from the cut `[0, 1]`.
pub const CUT_MARGIN: f64 = 0.1;

/// `integral over the cut [u1, u2] of lambda^k dlambda / sqrt((lambda-u1)(u2-lambda) prod (lambda-o))`.
///
/// With `lambda = u1 + (u2-u1)(1 - cos theta)/2` the first two factors cancel
/// against `dlambda`; each remaining root is continued from its principal
/// value at the midpoint of the cut.
pub fn cut_integral(u1: C64, u2: C64, others: &[C64], k: i32) -> std::result::Result<C64, NumError> {
    let m = (u1 + u2) * 0.5;
    let d = u2 - u1;
    let roots: Vec<(C64, C64)> = others.iter().map(|&o| (o, (m - o).sqrt())).collect();
    let integrand = |th: C64| {
        let lam = u1 + d * (1.0 - th.re.cos()) * 0.5;
        let mut den = C64::new(1.0, 0.0);
        for (o, r) in &roots {
            den *= r * ((lam - o) / (m - o)).sqrt();
        }
        lam.powi(k) / den
    };
    let path = CPath::real(0.0, std::f64::consts::PI)?;
    let scale = integrand(C64::new(std::f64::consts::FRAC_PI_2, 0.0)).norm().max(1e-300);
    contour_quadrature(integrand, &path, PERIOD_TOL * scale * std::f64::consts::PI)
}

/// Distance from `z` to the real segment `[0, 1]`.
pub fn distance_to_unit_cut(z: C64) -> f64 {
    let x = z.re.clamp(0.0, 1.0);
    (z - C64::new(x, 0.0)).norm()
}

fn check_s(s: C64) -> Result<()> {
    if distance_to_unit_cut(s) < CUT_MARGIN {
        return Err(HurwitzError::ChartTooCloseToCut(s));
    }
    Ok(())
}

/// `(omega_1, I(s))` for the curve `mu^2 = lambda (lambda-1)(lambda-s)`.
#[derive(Debug, Clone, Copy)]
pub struct PeriodData {
    pub omega1: C64,
    pub ibar: C64,
}

pub fn elliptic_period_data(s: C64) -> Result<PeriodData> {
    check_s(s)?;
    let zero = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let omega1 = cut_integral(zero, one, &[s], 0)?;
    let first = cut_integral(zero, one, &[s], 1)?;
    Ok(PeriodData { omega1, ibar: first / omega1 })
}

/// `(a, b, c)` of the three-point metric in the normalized chart `(0, 1, s)`.
pub fn elliptic_v(s: C64) -> Result<DEState> {
    let i = elliptic_period_data(s)?.ibar;
    let a = i / (2.0 * (-s).sqrt());
    let b = -(i - 1.0) / (2.0 * (s - 1.0).sqrt());
    let c = (i - s) / (2.0 * (s * (1.0 - s)).sqrt());
    Ok(DEState::new(s, a, b, c))
}

/// Cross-ratio `s` and affine invariant `eps` of four points, plus the
/// normalized positions `P = (v3-v1)/(v2-v1)`, `Q = (v4-v1)/(v2-v1)`.
#[derive(Debug, Clone, Copy)]
pub struct GenusOneChart {
    pub s: C64,
    pub eps: C64,
    pub p: C64,
    pub q: C64,
}

pub fn genus_one_chart(v: &[C64; 4]) -> Result<GenusOneChart> {
    crate::darboux_egoroff::check_chart(v).map_err(|_| HurwitzError::RootCollision)?;
    let v21 = v[1] - v[0];
    let s = (v[2] - v[0]) * (v[3] - v[1]) / (v21 * (v[3] - v[2]));
    let eps = (v[1] - v[3]) / v21;
    let chart = GenusOneChart { s, eps, p: (v[2] - v[0]) / v21, q: (v[3] - v[0]) / v21 };
    for z in [chart.s, chart.p, chart.q] {
        check_s(z)?;
    }
    Ok(chart)
}

/// The three-point period `integral dlambda / sqrt(...)` over the cut `[u1, u2]`.
pub fn omega1_3(u: &[C64]) -> std::result::Result<C64, NumError> {
    cut_integral(u[0], u[1], &[u[2]], 0)
}

/// The four-point period over the cut `[v1, v2]`.
pub fn omega1_4(v: &[C64]) -> std::result::Result<C64, NumError> {
    cut_integral(v[0], v[1], &[v[2], v[3]], 0)
}

/// `eta_i = 1 / (2 omega_1^2 prod_{j != i} (u_i - u_j))`.
pub fn eta3(u: &[C64]) -> std::result::Result<Vec<C64>, NumError> {
    let o = omega1_3(u)?;
    Ok((0..3).map(|i| 1.0 / (2.0 * o * o * prod_diff(u, i))).collect())
}

/// `eta_i = 2 / (Omega_1^2 prod_{j != i} (v_i - v_j))`.
pub fn eta4(v: &[C64]) -> std::result::Result<Vec<C64>, NumError> {
    let o = omega1_4(v)?;
    Ok((0..4).map(|i| 2.0 / (o * o * prod_diff(v, i))).collect())
}

fn prod_diff(u: &[C64], i: usize) -> C64 {
    (0..u.len()).filter(|&j| j != i).map(|j| u[i] - u[j]).product()
}

/// Residuals of the genus-one checks at one four-point chart.
#[derive(Debug, Clone)]
pub struct EllipticReport {
    pub v: [C64; 4],
    pub s: C64,
    pub eps: C64,
    /// `min over sign gauges |W_num - lift(elliptic_v(s))|`.
    pub w_residual: f64,
    /// Diagonal sign gauge realizing `w_residual`.
    pub signs: Vec<i8>,
    /// `|sum v_i^2 d_i Omega_1 + (1/2) sum v_i Omega_1| / |Omega_1|`.
    pub period_identity: f64,
    /// `|J1 - (eps I1 - 1)/(eps - 1)|` with `I1 = I/s`.
    pub bar_j1: f64,
    pub ibar: C64,
}

impl EllipticReport {
    pub fn max(&self) -> f64 {
        self.w_residual.max(self.period_identity).max(self.bar_j1)
    }
}

/// Three-point check: `|V_num - V(elliptic_v)|` up to sign gauge at chart `u`.
pub fn elliptic3_v_check(u: &[C64; 3], h: f64) -> Result<f64> {
    let s = (u[2] - u[0]) / (u[1] - u[0]);
    let state = elliptic_v(s)?;
    let gamma = rotation_coefficients(eta3, u, h)?;
    let v = v_from_gamma(&gamma, u);
    Ok(sign_gauge_distance(&v, &crate::darboux_egoroff::v_from_state(&state)).0)
}

pub fn elliptic_w_check(v: &[C64; 4], h: f64) -> Result<EllipticReport> {
    let chart = genus_one_chart(v)?;
    let state = elliptic_v(chart.s)?;
    let gamma = rotation_coefficients(eta4, v, h)?;
    let w_num = v_from_gamma(&gamma, v);
    let (w_residual, signs) = sign_gauge_distance(&w_num, &lift_to_w(&state, 1));

    let omega = omega1_4(v)?;
    let d = |i: usize| -> std::result::Result<C64, NumError> {
        let (mut p, mut m) = (v.to_vec(), v.to_vec());
        p[i] += h;
        m[i] -= h;
        Ok((omega1_4(&p)? - omega1_4(&m)?) / (2.0 * h))
    };
    let mut euler = C64::new(0.0, 0.0);
    let mut sum_v = C64::new(0.0, 0.0);
    for i in 0..4 {
        euler += v[i] * v[i] * d(i)?;
        sum_v += v[i];
    }
    let period_identity = (euler + 0.5 * sum_v * omega).norm() / omega.norm();

    let ibar = elliptic_period_data(chart.s)?.ibar;
    let j1 = (v[1] - v[0]) * 2.0 * d(0)? / omega;
    let pred = (chart.eps * ibar / chart.s - 1.0) / (chart.eps - 1.0);
    Ok(EllipticReport {
        v: *v,
        s: chart.s,
        eps: chart.eps,
        w_residual,
        signs,
        period_identity,
        bar_j1: (j1 - pred).norm(),
        ibar,
    })
}
