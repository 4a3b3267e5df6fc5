//! Dormand-Prince 5(4) along polylines in the complex plane.

use super::{ensure_finite, CMatrix, CPath, NumError, Result};
use crate::C64;

#[derive(Debug, Clone, Copy)]
pub struct OdeOptions {
    /// Local error target per step (mixed absolute/relative).
    pub tol: f64,
    /// Steps below `min_step_ratio * path length` raise `StepUnderflow`.
    pub min_step_ratio: f64,
    pub max_steps: usize,
}

impl OdeOptions {
    pub fn with_tol(tol: f64) -> Self {
        OdeOptions { tol, min_step_ratio: 1e-13, max_steps: 1_000_000 }
    }
}

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// b - b* (fifth minus embedded fourth order weights)
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

fn axpy(y: &[C64], terms: &[(f64, &[C64])], h: C64) -> Vec<C64> {
    let mut out = y.to_vec();
    for (c, k) in terms {
        if *c == 0.0 {
            continue;
        }
        for (o, kv) in out.iter_mut().zip(k.iter()) {
            *o += h * *c * kv;
        }
    }
    out
}

/// Continues the solution of `dy/dz = rhs(z, y)` from `y0` at `path.start()`
/// along the polyline to `path.end()`.
///
/// The error estimate of each accepted step is at most `tol * (1 + |y|)`
/// componentwise.
pub fn ode_flow<F>(rhs: F, path: &CPath, y0: &[C64], tol: f64) -> Result<Vec<C64>>
where
    F: Fn(C64, &[C64]) -> Vec<C64>,
{
    ode_flow_opts(rhs, path, y0, OdeOptions::with_tol(tol))
}

pub fn ode_flow_opts<F>(rhs: F, path: &CPath, y0: &[C64], opts: OdeOptions) -> Result<Vec<C64>>
where
    F: Fn(C64, &[C64]) -> Vec<C64>,
{
    if !(opts.tol > 0.0) {
        return Err(NumError::Degenerate("ODE tolerance must be positive"));
    }
    ensure_finite(y0, "initial state")?;
    let total = path.length();
    let hmin = opts.min_step_ratio * total;
    let mut y = y0.to_vec();
    let mut steps = 0usize;
    let mut travelled = 0.0;
    for (a, b) in path.segments() {
        let dir = b - a;
        let len = dir.norm();
        let unit = dir / len;
        // arclength parameter along the segment
        let f = |x: f64, y: &[C64]| -> Vec<C64> {
            rhs(a + unit * x, y).into_iter().map(|v| v * unit).collect()
        };
        let mut x = 0.0;
        let mut h = (len * 0.01).max(hmin * 10.0);
        let mut k1 = f(x, &y);
        ensure_finite(&k1, "ODE right-hand side")?;
        while x < len {
            if steps >= opts.max_steps {
                return Err(NumError::StepUnderflow { at: travelled + x });
            }
            steps += 1;
            let last = x + h >= len;
            if last {
                h = len - x;
            }
            let hc = C64::new(h, 0.0);
            let k2 = f(x + C2 * h, &axpy(&y, &[(A21, &k1)], hc));
            let k3 = f(x + C3 * h, &axpy(&y, &[(A31, &k1), (A32, &k2)], hc));
            let k4 = f(x + C4 * h, &axpy(&y, &[(A41, &k1), (A42, &k2), (A43, &k3)], hc));
            let k5 = f(
                x + C5 * h,
                &axpy(&y, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)], hc),
            );
            let k6 = f(
                x + h,
                &axpy(&y, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)], hc),
            );
            let ynew = axpy(&y, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)], hc);
            let k7 = f(x + h, &ynew);
            let mut err: f64 = 0.0;
            for i in 0..y.len() {
                let e = hc
                    * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i]
                        + E7 * k7[i]);
                let sc = opts.tol * (1.0 + y[i].norm().max(ynew[i].norm()));
                err = err.max(e.norm() / sc);
            }
            if !err.is_finite() {
                // treat as a failed step; shrink hard
                h *= 0.1;
                if h < hmin {
                    return Err(NumError::NonFinite(format!(
                        " in ODE state near parameter {}",
                        travelled + x
                    )));
                }
                continue;
            }
            if err <= 1.0 {
                x = if last { len } else { x + h };
                y = ynew;
                ensure_finite(&y, "ODE state")?;
                k1 = k7;
            }
            let fac = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
            h *= fac;
            if h < hmin && x < len {
                return Err(NumError::StepUnderflow { at: travelled + x });
            }
        }
        travelled += len;
    }
    Ok(y)
}

/// Fundamental-matrix flow for a linear system `dY/dz = M(z) Y`.
pub fn ode_flow_linear<F>(m: F, path: &CPath, y0: &CMatrix, tol: f64) -> Result<CMatrix>
where
    F: Fn(C64) -> CMatrix,
{
    let (r, c) = (y0.rows(), y0.cols());
    let rhs = |z: C64, y: &[C64]| -> Vec<C64> {
        let ym = CMatrix::from_vec(r, c, y.to_vec()).expect("state shape");
        (&m(z) * &ym).into_vec()
    };
    let out = ode_flow(rhs, path, y0.as_slice(), tol)?;
    CMatrix::from_vec(r, c, out)
}
