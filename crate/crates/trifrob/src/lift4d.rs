//! Assembly of the four-dimensional transition matrix from three-dimensional
//! data and solutions of the 2x2 Fuchsian system, its verification, and the
//! reconstruction of the Frobenius structure it determines.

use std::cell::RefCell;

use thiserror::Error;

use crate::darboux_egoroff::{check_chart, lift_to_w, side_matrices, DEState, DeError};
use crate::frobenius::Tensor3;
use crate::hurwitz_examples::a3::{self, A3_MU};
use crate::hurwitz_examples::HurwitzError;
use crate::numkit::{ode_flow, pow_near, CMatrix, CPath, NumError};
use crate::C64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LiftError {
    #[error("canonical coordinates {0} and {1} coincide")]
    CoincidentCoordinates(usize, usize),
    #[error("degenerate chart: s = {s}, eps = {eps}")]
    DegenerateCrossRatio { s: C64, eps: C64 },
    #[error("no eigenframe variant diagonalizes W (best residual {residual:e})")]
    EigenCheckFailed { residual: f64 },
    #[error("marked column {column} has a vanishing entry in row {row}")]
    MarkedColumnZero { column: usize, row: usize },
    #[error("marked column {0} out of range")]
    MarkedColumnRange(usize),
    #[error("flat-coordinate differentials are not closed (residual {residual:e})")]
    NonClosedForms { residual: f64 },
    #[error("sign must be +1 or -1, got {0}")]
    InvalidSign(i8),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    Num(#[from] NumError),
}

impl From<DeError> for LiftError {
    fn from(e: DeError) -> Self {
        match e {
            DeError::CoincidentCoordinates(i, j) => LiftError::CoincidentCoordinates(i, j),
            other => LiftError::Hurwitz(HurwitzError::DarbouxEgoroff(other)),
        }
    }
}

pub type Result<T> = std::result::Result<T, LiftError>;

/// Cross-ratio `s` and affine invariant `eps` of a four-point chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chart4Params {
    pub v: [C64; 4],
    pub s: C64,
    pub eps: C64,
}

impl Chart4Params {
    pub fn v21(&self) -> C64 {
        self.v[1] - self.v[0]
    }
}

pub fn chart_params(v: &[C64; 4]) -> Result<Chart4Params> {
    if v.iter().any(|z| !z.is_finite()) {
        return Err(NumError::NonFinite(" in chart".into()).into());
    }
    check_chart(v)?;
    let s = (v[2] - v[0]) * (v[3] - v[1]) / ((v[1] - v[0]) * (v[3] - v[2]));
    let eps = (v[1] - v[3]) / (v[1] - v[0]);
    let tiny = 1e-10;
    if s.norm() < tiny || (s - 1.0).norm() < tiny || eps.norm() < tiny || (eps - 1.0).norm() < tiny || (eps - s).norm() < tiny {
        return Err(LiftError::DegenerateCrossRatio { s, eps });
    }
    Ok(Chart4Params { v: *v, s, eps })
}

/// Which entry fills row 3 of the third eigenvector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenVariant {
    /// `phi_32`, matching the middle columns of the assembled frame.
    Phi32,
    /// `phi_23`, the entry as typeset.
    Phi23,
}

/// Columns `(phi_1, 0), (phi_2, i), (phi_2, -i), (phi_3, 0)`.
pub fn eigenframe4_variant(phi: &CMatrix, variant: EigenVariant) -> CMatrix {
    let i = C64::new(0.0, 1.0);
    let z = C64::new(0.0, 0.0);
    let mut m = CMatrix::zeros(4, 4);
    for r in 0..3 {
        m[(r, 0)] = phi[(r, 0)];
        m[(r, 1)] = phi[(r, 1)];
        m[(r, 2)] = phi[(r, 1)];
        m[(r, 3)] = phi[(r, 2)];
    }
    if variant == EigenVariant::Phi23 {
        m[(2, 2)] = phi[(1, 2)];
    }
    m[(3, 0)] = z;
    m[(3, 1)] = i;
    m[(3, 2)] = -i;
    m[(3, 3)] = z;
    m
}

/// `max |W Phi_hat - Phi_hat diag(mu, mu, -mu, -mu)|`.
pub fn eigen_residual(w: &CMatrix, frame: &CMatrix, mu: C64) -> f64 {
    let d = CMatrix::from_diag(&[mu, mu, -mu, -mu]);
    (&(w * frame) - &(frame * &d)).max_abs()
}

/// The 4D eigenframe of `W`, checking both variants of the third column.
pub fn eigenframe4(phi: &CMatrix, w: &CMatrix, mu: C64) -> Result<(CMatrix, EigenVariant)> {
    let mut best = f64::INFINITY;
    for variant in [EigenVariant::Phi32, EigenVariant::Phi23] {
        let m = eigenframe4_variant(phi, variant);
        let r = eigen_residual(w, &m, mu);
        if r < 1e-10 * (1.0 + w.max_abs()) {
            return Ok((m, variant));
        }
        best = best.min(r);
    }
    Err(LiftError::EigenCheckFailed { residual: best })
}

/// `+1` if `det Phi` is closer to `i` than to `-i`.
pub fn natural_sign(phi: &CMatrix) -> Result<i8> {
    let d = phi.det()?;
    let i = C64::new(0.0, 1.0);
    Ok(if (d - i).norm() <= (d + i).norm() { 1 } else { -1 })
}

/// The three multivalued factors `v21^mu`, `(eps-s)^mu`, `(eps(eps-1))^mu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Powers {
    pub v21: C64,
    pub eps_s: C64,
    pub eps_eps1: C64,
}

impl Powers {
    pub fn principal(p: &Chart4Params, mu: f64) -> Self {
        Powers {
            v21: p.v21().powf(mu),
            eps_s: (p.eps - p.s).powf(mu),
            eps_eps1: (p.eps * (p.eps - 1.0)).powf(mu),
        }
    }

    pub fn near(p: &Chart4Params, mu: f64, prev: &Powers) -> Self {
        Powers {
            v21: pow_near(p.v21(), mu, prev.v21),
            eps_s: pow_near(p.eps - p.s, mu, prev.eps_s),
            eps_eps1: pow_near(p.eps * (p.eps - 1.0), mu, prev.eps_eps1),
        }
    }
}

/// `Phi_hat . diag(-v21^mu/(eps-s)^mu, v21^mu/(eps-s)^mu,
/// v21^-mu/(2 (eps(eps-1))^mu), v21^-mu/(eps(eps-1))^mu) . blockdiag(chi, chi)`.
pub fn assemble_psi_hat(frame: &CMatrix, chi: &CMatrix, pw: &Powers) -> CMatrix {
    let a = pw.v21 / pw.eps_s;
    let b = 1.0 / (pw.v21 * pw.eps_eps1);
    let d = CMatrix::from_diag(&[-a, a, 0.5 * b, b]);
    &(frame * &d) * &CMatrix::block_diag(&[chi, chi])
}

/// `D Psi` with `D = diag(1, 1, 1, -1)` for `sign = -1`.
pub fn apply_sign(psi: &CMatrix, sign: i8) -> CMatrix {
    let mut out = psi.clone();
    if sign < 0 {
        let n = out.rows();
        for k in 0..out.cols() {
            out[(n - 1, k)] = -out[(n - 1, k)];
        }
    }
    out
}

/// Everything computed at one chart of the lifted A3 example.
#[derive(Debug, Clone)]
pub struct LiftPoint {
    pub params: Chart4Params,
    pub t: C64,
    pub phi: CMatrix,
    pub chi: CMatrix,
    pub psi_hat: CMatrix,
    pub state: DEState,
    /// `W` with the sign convention matching `psi_hat`.
    pub w: CMatrix,
    pub variant: EigenVariant,
}

#[derive(Debug, Clone)]
struct Track {
    t: C64,
    roots: [C64; 4],
    powers: Powers,
    chi: CMatrix,
}

/// The A3 solution lifted to four dimensions, with branches anchored at a
/// base chart. [`A3Lift::evaluate`] uses the anchor for every call, so
/// finite-difference stencils stay on one branch; [`A3Lift::advance`] moves
/// the anchor along a path.
#[derive(Debug)]
pub struct A3Lift {
    sign: i8,
    track: RefCell<Track>,
}

impl A3Lift {
    /// Anchors at `v0`; `t_guess` selects the preimage of `s` under `s(t)`.
    pub fn new(v0: &[C64; 4], sign: i8, t_guess: C64) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(LiftError::InvalidSign(sign));
        }
        let p = chart_params(v0)?;
        let t = a3::t_of_s(p.s, t_guess)?;
        let checked = a3::a3_chi_checked(t, p.eps, 1e-6)?;
        let track = Track { t, roots: checked.roots, powers: Powers::principal(&p, A3_MU), chi: checked.chi };
        Ok(A3Lift { sign, track: RefCell::new(track) })
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn evaluate(&self, v: &[C64; 4]) -> Result<LiftPoint> {
        let tr = self.track.borrow().clone();
        Ok(self.compute(v, &tr)?.0)
    }

    /// Evaluates at `v` and moves the anchor there. Each column of the Appell
    /// solution is multiplied by the fourth root of unity that keeps it
    /// closest to its previous value.
    pub fn advance(&self, v: &[C64; 4]) -> Result<LiftPoint> {
        let tr = self.track.borrow().clone();
        let (point, next) = self.compute(v, &tr)?;
        *self.track.borrow_mut() = next;
        Ok(point)
    }

    fn compute(&self, v: &[C64; 4], tr: &Track) -> Result<(LiftPoint, Track)> {
        let p = chart_params(v)?;
        let t = a3::t_of_s(p.s, tr.t)?;
        let roots = a3::track_roots(a3::a3_roots(t, p.eps)?, &tr.roots);
        let mut chi = a3::chi_from_roots(&roots)?;
        align_columns(&mut chi, &tr.chi);
        let powers = Powers::near(&p, A3_MU, &tr.powers);
        let phi = a3::a3_phi(t)?;
        let state = a3::a3_abc(t)?;
        let nat = natural_sign(&phi)?;
        let w_nat = lift_to_w(&state, nat);
        let mu = C64::new(A3_MU, 0.0);
        let (frame, variant) = eigenframe4(&phi, &w_nat, mu)?;
        let psi = assemble_psi_hat(&frame, &chi, &powers);
        let point = LiftPoint {
            params: p,
            t,
            phi,
            chi: chi.clone(),
            psi_hat: apply_sign(&psi, self.sign),
            state,
            w: lift_to_w(&state, nat * self.sign),
            variant,
        };
        Ok((point, Track { t, roots, powers, chi }))
    }
}

fn align_columns(chi: &mut CMatrix, prev: &CMatrix) {
    let units = [C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.0, -1.0)];
    for k in 0..chi.cols() {
        let col = chi.col(k);
        let old = prev.col(k);
        let best = units
            .iter()
            .min_by(|a, b| {
                let da: f64 = col.iter().zip(&old).map(|(x, y)| (x * *a - y).norm()).sum();
                let db: f64 = col.iter().zip(&old).map(|(x, y)| (x * *b - y).norm()).sum();
                da.total_cmp(&db)
            })
            .copied()
            .unwrap_or(units[0]);
        let scaled: Vec<C64> = col.iter().map(|x| x * best).collect();
        chi.set_col(k, &scaled);
    }
}

/// `max_i |d Psi/d v_i - W_i Psi|` with central differences of step `h`.
pub fn check_linear_system<F>(psi: F, w: &CMatrix, v: &[C64], h: f64) -> Result<f64>
where
    F: Fn(&[C64]) -> Result<CMatrix>,
{
    let sides = side_matrices(w, v)?;
    let p0 = psi(v)?;
    let mut worst: f64 = 0.0;
    for (i, wi) in sides.iter().enumerate() {
        let d = derivative(&psi, v, i, h)?;
        worst = worst.max((&d - &(wi * &p0)).max_abs());
    }
    Ok(worst)
}

fn derivative<F>(psi: &F, v: &[C64], i: usize, h: f64) -> Result<CMatrix>
where
    F: Fn(&[C64]) -> Result<CMatrix>,
{
    let (mut vp, mut vm) = (v.to_vec(), v.to_vec());
    vp[i] += h;
    vm[i] -= h;
    Ok((&psi(&vp)? - &psi(&vm)?).scale_re(0.5 / h))
}

/// `|sum v_i^2 d_i Psi - (U W + W U) Psi|`.
pub fn e_tilde_residual<F>(psi: F, w: &CMatrix, v: &[C64], h: f64) -> Result<f64>
where
    F: Fn(&[C64]) -> Result<CMatrix>,
{
    let n = v.len();
    let p0 = psi(v)?;
    let mut lhs = CMatrix::zeros(n, p0.cols());
    for i in 0..n {
        lhs = &lhs + &derivative(&psi, v, i, h)?.scale(v[i] * v[i]);
    }
    let u = CMatrix::from_diag(v);
    let wt = &(&u * w) + &(w * &u);
    Ok((&lhs - &(&wt * &p0)).max_abs())
}

/// `Psi^t Psi`.
pub fn gram(psi: &CMatrix) -> CMatrix {
    &psi.transpose() * psi
}

/// `kappa = G_23` and `max |G - kappa antidiag(-1, 1, 1, -1)|`.
pub fn antidiagonal_pattern(g: &CMatrix) -> (C64, f64) {
    let kappa = g[(1, 2)];
    let z = C64::new(0.0, 0.0);
    let pattern = CMatrix::from_rows(&[[z, z, z, -kappa], [z, z, kappa, z], [z, kappa, z, z], [-kappa, z, z, z]]);
    (kappa, g.max_abs_diff(&pattern))
}

/// Metric and structure constants determined by a frame and a marked column.
#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub eta: CMatrix,
    /// `dt^alpha/du_i` as a matrix indexed `[alpha][i]`.
    pub dt: CMatrix,
    pub c: Tensor3,
}

fn check_marked(psi: &CMatrix, marked: usize) -> Result<()> {
    if marked >= psi.cols() {
        return Err(LiftError::MarkedColumnRange(marked));
    }
    let scale = psi.max_abs();
    for row in 0..psi.rows() {
        if psi[(row, marked)].norm() <= 1e-12 * scale {
            return Err(LiftError::MarkedColumnZero { column: marked, row });
        }
    }
    Ok(())
}

/// `eta = Psi^t Psi`, `dt^a = sum eta^{ab} psi_{i1} psi_{ib} du_i`,
/// `c_{abg} = sum psi_{ia} psi_{ib} psi_{ig} / psi_{i1}` with `1` the marked column.
pub fn reconstruct(psi: &CMatrix, marked: usize) -> Result<Reconstruction> {
    check_marked(psi, marked)?;
    let n = psi.rows();
    let eta = gram(psi);
    let eta_inv = eta.inverse()?;
    let mut dt = CMatrix::zeros(n, n);
    for a in 0..n {
        for i in 0..n {
            dt[(a, i)] = (0..n).map(|b| eta_inv[(a, b)] * psi[(i, marked)] * psi[(i, b)]).sum();
        }
    }
    let mut c = Tensor3::zeros(n);
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                let v: C64 = (0..n).map(|i| psi[(i, a)] * psi[(i, b)] * psi[(i, g)] / psi[(i, marked)]).sum();
                c.set(a, b, g, v);
            }
        }
    }
    Ok(Reconstruction { eta, dt, c })
}

/// `max |d_j (dt^a/du_i) - d_i (dt^a/du_j)|` relative to `max |dt|`.
pub fn closure_residual<F>(psi: F, v: &[C64], marked: usize, h: f64) -> Result<f64>
where
    F: Fn(&[C64]) -> Result<CMatrix>,
{
    let n = v.len();
    let base = reconstruct(&psi(v)?, marked)?.dt;
    let mut ddt = Vec::with_capacity(n);
    for j in 0..n {
        let (mut vp, mut vm) = (v.to_vec(), v.to_vec());
        vp[j] += h;
        vm[j] -= h;
        let d = &reconstruct(&psi(&vp)?, marked)?.dt - &reconstruct(&psi(&vm)?, marked)?.dt;
        ddt.push(d.scale_re(0.5 / h));
    }
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for i in 0..n {
            for j in i + 1..n {
                worst = worst.max((ddt[j][(a, i)] - ddt[i][(a, j)]).norm());
            }
        }
    }
    Ok(worst / base.max_abs())
}

/// `max |c(lambda v) - lambda^{e_a + e_b + e_g - e_m} c(v)|` for column
/// exponents `e` under `v -> lambda v`, relative to `max |c|`.
pub fn homogeneity_residual<F>(psi: F, v: &[C64], marked: usize, exponents: &[f64], lambda: f64) -> Result<f64>
where
    F: Fn(&[C64]) -> Result<CMatrix>,
{
    let c0 = reconstruct(&psi(v)?, marked)?.c;
    let scaled: Vec<C64> = v.iter().map(|z| z * lambda).collect();
    let c1 = reconstruct(&psi(&scaled)?, marked)?.c;
    let n = v.len();
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                let k = lambda.powf(exponents[a] + exponents[b] + exponents[g] - exponents[marked]);
                worst = worst.max((c1.get(a, b, g) - c0.get(a, b, g) * k).norm());
            }
        }
    }
    Ok(worst / c0.max_abs())
}

/// Flat coordinates, first and second derivatives of `F` and `F` itself at
/// the end of a chart path, all measured from the start of the path.
#[derive(Debug, Clone)]
pub struct PrepotentialSample {
    pub u: Vec<C64>,
    pub t: Vec<C64>,
    pub grad: Vec<C64>,
    pub hessian: CMatrix,
    pub f: C64,
}

/// Integrates `dt^a`, `d(d_a F) = d_a d_b F dt^b`, `d(d_a d_b F) = c_{abg} dt^g`
/// and `dF = d_a F dt^a` along the polygon through `waypoints`, starting from
/// zero. The result is `F` minus its quadratic Taylor polynomial at the start.
pub fn integrate_prepotential<F>(frame: F, waypoints: &[Vec<C64>], marked: usize, tol: f64) -> Result<PrepotentialSample>
where
    F: Fn(&[C64]) -> Result<CMatrix>,
{
    if waypoints.len() < 2 {
        return Err(NumError::InvalidPath("need at least two waypoints").into());
    }
    let n = waypoints[0].len();
    let closure = closure_residual(&frame, &waypoints[0], marked, 1e-5)?;
    if closure > 1e-4 {
        return Err(LiftError::NonClosedForms { residual: closure });
    }
    let dim = 2 * n + n * n + 1;
    let mut y = vec![C64::new(0.0, 0.0); dim];
    let failure: RefCell<Option<LiftError>> = RefCell::new(None);
    for leg in waypoints.windows(2) {
        let (a, b) = (&leg[0], &leg[1]);
        let du: Vec<C64> = a.iter().zip(b).map(|(x, y)| y - x).collect();
        let rhs = |tau: C64, y: &[C64]| -> Vec<C64> {
            let u: Vec<C64> = a.iter().zip(&du).map(|(x, d)| x + d * tau.re).collect();
            match frame(&u).and_then(|p| reconstruct(&p, marked)) {
                Ok(rec) => prepotential_rhs(&rec, &du, y, n),
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    vec![C64::new(f64::NAN, 0.0); y.len()]
                }
            }
        };
        let res = ode_flow(rhs, &CPath::real(0.0, 1.0)?, &y, tol);
        if let Some(e) = failure.borrow_mut().take() {
            return Err(e);
        }
        y = res?;
    }
    let hessian = CMatrix::from_vec(n, n, y[2 * n..2 * n + n * n].to_vec())?;
    Ok(PrepotentialSample {
        u: waypoints.last().cloned().unwrap_or_default(),
        t: y[..n].to_vec(),
        grad: y[n..2 * n].to_vec(),
        hessian,
        f: y[dim - 1],
    })
}

fn prepotential_rhs(rec: &Reconstruction, du: &[C64], y: &[C64], n: usize) -> Vec<C64> {
    let dt: Vec<C64> = (0..n).map(|a| (0..n).map(|i| rec.dt[(a, i)] * du[i]).sum()).collect();
    let grad = &y[n..2 * n];
    let hess = &y[2 * n..2 * n + n * n];
    let mut out = Vec::with_capacity(y.len());
    out.extend_from_slice(&dt);
    for a in 0..n {
        out.push((0..n).map(|b| hess[a * n + b] * dt[b]).sum());
    }
    for a in 0..n {
        for b in 0..n {
            out.push((0..n).map(|g| rec.c.get(a, b, g) * dt[g]).sum());
        }
    }
    out.push((0..n).map(|a| grad[a] * dt[a]).sum());
    out
}

/// The two-dimensional frame of the constant solution `V = mu (0 1; -1 0)`:
/// columns `x^m (i, 1)/sqrt 2` and `x^{-m} (-i, 1)/sqrt 2` with `x = u1 - u2`,
/// continued from the principal branch at `x_ref`.
pub fn constant_frame_2d(m: f64, u: &[C64], x_ref: C64) -> Result<CMatrix> {
    if u.len() != 2 {
        return Err(NumError::DimensionMismatch(format!("expected 2 coordinates, got {}", u.len())).into());
    }
    check_chart(u)?;
    let x = u[0] - u[1];
    let xm = pow_near(x, m, x_ref.powf(m) * (x / x_ref).powf(m));
    let i = C64::new(0.0, 1.0);
    let r = std::f64::consts::FRAC_1_SQRT_2;
    Ok(CMatrix::from_rows(&[[xm * i * r, -i * r / xm], [xm * r, r / xm]]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn chart_invariants_of_an_integer_chart() {
        let p = chart_params(&[r(0.0), r(1.0), r(2.0), r(3.0)]).unwrap();
        assert!((p.s - 4.0).norm() < 1e-15);
        assert!((p.eps + 2.0).norm() < 1e-15);
    }

    #[test]
    fn coincident_chart_is_rejected() {
        let e = chart_params(&[r(0.0), r(1.0), r(1.0), r(3.0)]).unwrap_err();
        assert_eq!(e, LiftError::CoincidentCoordinates(1, 2));
        assert!(chart_params(&[r(0.0), r(1.0), r(f64::NAN), r(3.0)]).is_err());
    }

    #[test]
    fn sign_flip_is_an_involution_on_the_last_row() {
        let m = CMatrix::from_real_rows(&[[1.0, 2.0], [3.0, 4.0]]);
        let f = apply_sign(&m, -1);
        assert_eq!(f[(1, 0)], r(-3.0));
        assert_eq!(f[(0, 1)], r(2.0));
        assert_eq!(apply_sign(&f, -1), m);
        assert_eq!(apply_sign(&m, 1), m);
    }

    #[test]
    fn marked_column_errors() {
        let m = CMatrix::from_real_rows(&[[1.0, 0.0], [0.0, 1.0]]);
        assert_eq!(reconstruct(&m, 0).unwrap_err(), LiftError::MarkedColumnZero { column: 0, row: 1 });
        assert_eq!(reconstruct(&m, 2).unwrap_err(), LiftError::MarkedColumnRange(2));
    }

    #[test]
    fn antidiagonal_pattern_reads_kappa() {
        let k = C64::new(0.3, -0.2);
        let z = r(0.0);
        let g = CMatrix::from_rows(&[[z, z, z, -k], [z, z, k, z], [z, k, z, z], [-k, z, z, z]]);
        let (kappa, off) = antidiagonal_pattern(&g);
        assert_eq!(kappa, k);
        assert_eq!(off, 0.0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        // Structure constants of any semisimple frame are associative.
        #[test]
        fn reconstructed_tensor_solves_wdvv(entries in proptest::collection::vec(0.2f64..1.5, 16), signs in proptest::collection::vec(any::<bool>(), 16)) {
            let data: Vec<C64> = entries.iter().zip(&signs).map(|(x, s)| r(if *s { *x } else { -*x })).collect();
            let psi = CMatrix::from_vec(4, 4, data).unwrap();
            prop_assume!(psi.det().map(|d| d.norm() > 1e-2).unwrap_or(false));
            let gram_ok = gram(&psi).inverse().map(|g| g.max_abs() < 1e4).unwrap_or(false);
            prop_assume!(gram_ok);
            let rec = reconstruct(&psi, 0).unwrap();
            let res = crate::frobenius::wdvv_residual_tensor(&rec.c, &rec.eta).unwrap();
            prop_assert!(res < 1e-8 * (1.0 + rec.c.max_abs().powi(2)), "residual {res:e}");
        }
    }
}
