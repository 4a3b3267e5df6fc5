//! The Darboux-Egoroff system in canonical coordinates: the reduced flow in
//! the invariant parameter `s`, the 3x3 matrix `V`, its 4x4 lift `W`, side
//! matrices and rotation coefficients.

use thiserror::Error;

use crate::numkit::{ode_flow, CMatrix, CPath, NumError};
use crate::C64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DeError {
    #[error("s = {0} is a pole of the reduced flow")]
    PoleAtS(C64),
    #[error("canonical coordinates {0} and {1} coincide (separation below 1e-6)")]
    CoincidentCoordinates(usize, usize),
    #[error("metric coefficient eta_{0} vanishes on the stencil")]
    ZeroMetricCoefficient(usize),
    #[error("path starts at {path_start} but the state lives at s = {state_s}")]
    PathMismatch { path_start: C64, state_s: C64 },
    #[error(transparent)]
    Num(#[from] NumError),
}

pub type Result<T> = std::result::Result<T, DeError>;

/// Minimum separation of canonical coordinates.
pub const MIN_SEPARATION: f64 = 1e-6;

/// A point `(s, a, b, c)` of a reduced Darboux-Egoroff trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DEState {
    pub s: C64,
    pub a: C64,
    pub b: C64,
    pub c: C64,
}

impl DEState {
    pub fn new(s: C64, a: C64, b: C64, c: C64) -> Self {
        DEState { s, a, b, c }
    }

    /// `a^2 + b^2 + c^2`, equal to `-mu^2`.
    pub fn casimir(&self) -> C64 {
        self.a * self.a + self.b * self.b + self.c * self.c
    }

    pub fn abc(&self) -> [C64; 3] {
        [self.a, self.b, self.c]
    }

    /// Reads `(a, b, c)` off a 3x3 skew matrix laid out as in [`v_from_state`].
    pub fn from_v(s: C64, v: &CMatrix) -> Self {
        DEState { s, a: v[(2, 1)], b: v[(0, 2)], c: v[(1, 0)] }
    }
}

fn check_s(s: C64) -> Result<()> {
    if s.norm() < 1e-14 || (s - 1.0).norm() < 1e-14 {
        Err(DeError::PoleAtS(s))
    } else {
        Ok(())
    }
}

fn rhs_raw(s: C64, a: C64, b: C64, c: C64) -> [C64; 3] {
    [b * c / s, a * c / (1.0 - s), a * b / (s * (s - 1.0))]
}

/// `(da/ds, db/ds, dc/ds) = (bc/s, ac/(1-s), ab/(s(s-1)))`.
pub fn de_rhs(state: &DEState) -> Result<[C64; 3]> {
    check_s(state.s)?;
    Ok(rhs_raw(state.s, state.a, state.b, state.c))
}

/// Continues `(a, b, c)` along an `s`-path starting at `state.s`.
pub fn de_flow(state: &DEState, path: &CPath, tol: f64) -> Result<DEState> {
    if (path.start() - state.s).norm() > 1e-12 * (1.0 + state.s.norm()) {
        return Err(DeError::PathMismatch { path_start: path.start(), state_s: state.s });
    }
    let y = ode_flow(
        |s, y| rhs_raw(s, y[0], y[1], y[2]).to_vec(),
        path,
        &[state.a, state.b, state.c],
        tol,
    )?;
    Ok(DEState { s: path.end(), a: y[0], b: y[1], c: y[2] })
}

/// Rows `(0, -c, b; c, 0, -a; -b, a, 0)`.
pub fn v_from_state(state: &DEState) -> CMatrix {
    let (a, b, c) = (state.a, state.b, state.c);
    let z = C64::new(0.0, 0.0);
    CMatrix::from_rows(&[[z, -c, b], [c, z, -a], [-b, a, z]])
}

/// The 4x4 lift; `sign = -1` negates the last row and column.
pub fn lift_to_w(state: &DEState, sign: i8) -> CMatrix {
    let (a, b, c) = (state.a, state.b, state.c);
    let z = C64::new(0.0, 0.0);
    let mut w = CMatrix::from_rows(&[[z, -c, b, -a], [c, z, -a, -b], [-b, a, z, -c], [a, b, c, z]]);
    if sign < 0 {
        for k in 0..4 {
            w[(3, k)] = -w[(3, k)];
            w[(k, 3)] = -w[(k, 3)];
        }
    }
    w
}

pub fn check_chart(u: &[C64]) -> Result<()> {
    for j in 0..u.len() {
        for k in j + 1..u.len() {
            if (u[j] - u[k]).norm() < MIN_SEPARATION {
                return Err(DeError::CoincidentCoordinates(j, k));
            }
        }
    }
    Ok(())
}

/// `(V_i)_{jk} = (delta_ij - delta_ik) V_jk / (u_j - u_k)`, i.e. `ad_{E_i} ad_U^{-1} V`.
pub fn side_matrices(v: &CMatrix, u: &[C64]) -> Result<Vec<CMatrix>> {
    check_chart(u)?;
    let n = u.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut m = CMatrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                if j == k {
                    continue;
                }
                let w = (j == i) as i32 - (k == i) as i32;
                if w != 0 {
                    m[(j, k)] = v[(j, k)] * w as f64 / (u[j] - u[k]);
                }
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// `gamma_ij = (1/sqrt(eta_i)) d_i sqrt(eta_j)` by central differences of step `h`.
///
/// One square root per index is fixed at the base point, so the result is
/// determined up to conjugation by a constant diagonal sign matrix.
pub fn rotation_coefficients<F>(eta: F, u: &[C64], h: f64) -> Result<CMatrix>
where
    F: Fn(&[C64]) -> std::result::Result<Vec<C64>, NumError>,
{
    check_chart(u)?;
    let n = u.len();
    let e0 = eta(u)?;
    for (i, e) in e0.iter().enumerate() {
        if e.norm() == 0.0 {
            return Err(DeError::ZeroMetricCoefficient(i));
        }
    }
    let roots: Vec<C64> = e0.iter().map(|e| e.sqrt()).collect();
    let mut gamma = CMatrix::zeros(n, n);
    for i in 0..n {
        let shifted = |k: f64| -> std::result::Result<Vec<C64>, NumError> {
            let mut us = u.to_vec();
            us[i] += k * h;
            eta(&us)
        };
        let (ep, em) = (shifted(1.0)?, shifted(-1.0)?);
        for j in 0..n {
            if j == i {
                continue;
            }
            if ep[j].norm() == 0.0 || em[j].norm() == 0.0 {
                return Err(DeError::ZeroMetricCoefficient(j));
            }
            // d log eta_j, with logs of ratios to stay off the branch cut
            let dlog = ((ep[j] / e0[j]).ln() - (em[j] / e0[j]).ln()) / (2.0 * h);
            gamma[(i, j)] = roots[j] / roots[i] * 0.5 * dlog;
        }
    }
    Ok(gamma)
}

/// `V = [Gamma, U]` with `U = diag(u)`.
pub fn v_from_gamma(gamma: &CMatrix, u: &[C64]) -> CMatrix {
    let n = u.len();
    let mut v = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            v[(i, j)] = gamma[(i, j)] * (u[j] - u[i]);
        }
    }
    v
}

/// `min over diagonal sign matrices D of max |D A D - B|`, with the minimising signs.
pub fn sign_gauge_distance(a: &CMatrix, b: &CMatrix) -> (f64, Vec<i8>) {
    let n = a.rows();
    let mut best = (f64::INFINITY, vec![1i8; n]);
    for bits in 0..(1u32 << (n - 1)) {
        let d: Vec<i8> = (0..n).map(|k| if k > 0 && (bits >> (k - 1)) & 1 == 1 { -1 } else { 1 }).collect();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let s = (d[i] * d[j]) as f64;
                worst = worst.max((a[(i, j)] * s - b[(i, j)]).norm());
            }
        }
        if worst < best.0 {
            best = (worst, d);
        }
    }
    best
}
