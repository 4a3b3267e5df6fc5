//! Twisted-period Fuchsian systems, their 2x2 reductions with poles at
//! `{0, 1, s, inf}`, isomonodromy checks and Painleve VI extraction.

use thiserror::Error;

use crate::numkit::{ode_flow_linear, CMatrix, CPath, NumError};
use crate::C64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FuchsianError {
    #[error("transition frame is singular")]
    SingularFrame,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("the degree-one polynomial defining y(s) has vanishing linear coefficient")]
    DegeneratePolynomial,
    #[error("grid too coarse for second differences: {0}")]
    GridTooCoarse(String),
    #[error("point {0} coincides with a pole")]
    AtPole(C64),
    #[error(transparent)]
    Num(#[from] NumError),
}

pub type Result<T> = std::result::Result<T, FuchsianError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueKind {
    A,
    B,
    C,
    D,
}

/// `d chi/d eps = (M1/eps + M2/(eps-1) + M3/(eps-s)) chi`.
#[derive(Debug, Clone)]
pub struct ResidueSystem {
    pub s: C64,
    pub kind: ResidueKind,
    pub mu: C64,
    pub residues: [CMatrix; 3],
}

impl ResidueSystem {
    pub fn poles(&self) -> [C64; 3] {
        [C64::new(0.0, 0.0), C64::new(1.0, 0.0), self.s]
    }

    /// `-(M1 + M2 + M3)`.
    pub fn residue_at_infinity(&self) -> CMatrix {
        -&(&(&self.residues[0] + &self.residues[1]) + &self.residues[2])
    }

    /// The expected residue at infinity for kinds A and B.
    pub fn expected_infinity(&self) -> Option<CMatrix> {
        let m = self.mu;
        match self.kind {
            ResidueKind::A => Some(CMatrix::from_diag(&[m, -m])),
            ResidueKind::B => Some(CMatrix::from_diag(&[-m, -2.0 * m])),
            _ => None,
        }
    }

    pub fn coefficient(&self, eps: C64) -> CMatrix {
        let mut out = CMatrix::zeros(2, 2);
        for (m, p) in self.residues.iter().zip(self.poles()) {
            out = &out + &m.scale(1.0 / (eps - p));
        }
        out
    }

    /// Top-right entry of the coefficient times `eps (eps-1)(eps-s)`, as
    /// polynomial coefficients `[c2, c1, c0]`.
    pub fn top_right_polynomial(&self) -> [C64; 3] {
        let s = self.s;
        let b: Vec<C64> = self.residues.iter().map(|m| m[(0, 1)]).collect();
        [b[0] + b[1] + b[2], -(b[0] * (1.0 + s) + b[1] * s + b[2]), b[0] * s]
    }
}

fn frame_check(phi: &CMatrix) -> Result<()> {
    if phi.rows() != 3 || phi.cols() != 3 {
        return Err(FuchsianError::Dimension(format!("expected 3x3 frame, got {}x{}", phi.rows(), phi.cols())));
    }
    Ok(())
}

fn m2(a: C64, b: C64, c: C64, d: C64) -> CMatrix {
    CMatrix::from_rows(&[[a, b], [c, d]])
}

/// `A_i = mu (-f1 f3, f3^2; -f1^2, f1 f3)` with `f = phi[i, :]`.
pub fn reduce_a(phi: &CMatrix, mu: C64, s: C64) -> Result<ResidueSystem> {
    frame_check(phi)?;
    let r = |i: usize| {
        let (f1, f3) = (phi[(i, 0)], phi[(i, 2)]);
        m2(-f1 * f3, f3 * f3, -f1 * f1, f1 * f3).scale(mu)
    };
    Ok(ResidueSystem { s, kind: ResidueKind::A, mu, residues: [r(0), r(1), r(2)] })
}

/// `B_i = mu (f2^2, 2 f2 f3; f1 f2, 2 f1 f3)`.
pub fn reduce_b(phi: &CMatrix, mu: C64, s: C64) -> Result<ResidueSystem> {
    frame_check(phi)?;
    let r = |i: usize| {
        let (f1, f2, f3) = (phi[(i, 0)], phi[(i, 1)], phi[(i, 2)]);
        m2(f2 * f2, 2.0 * f2 * f3, f1 * f2, 2.0 * f1 * f3).scale(mu)
    };
    Ok(ResidueSystem { s, kind: ResidueKind::B, mu, residues: [r(0), r(1), r(2)] })
}

/// The systems obtained from the two eigenspaces of the lifted 4D frame,
/// before gauging to the B form.
pub fn build_c_d(phi: &CMatrix, mu: C64, s: C64) -> Result<(ResidueSystem, ResidueSystem)> {
    frame_check(phi)?;
    let one = C64::new(1.0, 0.0);
    let c = |i: usize, shift: C64| {
        let (f1, f2, f3) = (phi[(i, 0)], phi[(i, 1)], phi[(i, 2)]);
        m2(f2 * f2 - shift, -2.0 * f2 * f3, -f1 * f2, 2.0 * f1 * f3 - shift).scale(mu)
    };
    let d = |i: usize, shift: C64| {
        let (f1, f2, f3) = (phi[(i, 0)], phi[(i, 1)], phi[(i, 2)]);
        m2(f2 * f2 - shift, f2 * f3, 2.0 * f1 * f2, 2.0 * f1 * f3 - shift).scale(mu)
    };
    let z = C64::new(0.0, 0.0);
    Ok((
        ResidueSystem { s, kind: ResidueKind::C, mu, residues: [c(0, z), c(1, z), c(2, one)] },
        ResidueSystem { s, kind: ResidueKind::D, mu, residues: [d(0, one), d(1, one), d(2, z)] },
    ))
}

/// Residues after `chi = (eps-s)^mu diag(-1,1) alpha`.
pub fn gauge_c_to_b(sys: &ResidueSystem) -> ResidueSystem {
    let g = CMatrix::from_real_rows(&[[-1.0, 0.0], [0.0, 1.0]]);
    let conj = |m: &CMatrix| &(&g * m) * &g;
    let shift = CMatrix::identity(2).scale(sys.mu);
    ResidueSystem {
        s: sys.s,
        kind: ResidueKind::B,
        mu: sys.mu,
        residues: [conj(&sys.residues[0]), conj(&sys.residues[1]), &conj(&sys.residues[2]) + &shift],
    }
}

/// Residues after `chi = eps^mu (eps-1)^mu diag(2,1) beta`.
pub fn gauge_d_to_b(sys: &ResidueSystem) -> ResidueSystem {
    let h = CMatrix::from_real_rows(&[[2.0, 0.0], [0.0, 1.0]]);
    let hi = CMatrix::from_real_rows(&[[0.5, 0.0], [0.0, 1.0]]);
    let conj = |m: &CMatrix| &(&h * m) * &hi;
    let shift = CMatrix::identity(2).scale(sys.mu);
    ResidueSystem {
        s: sys.s,
        kind: ResidueKind::B,
        mu: sys.mu,
        residues: [&conj(&sys.residues[0]) + &shift, &conj(&sys.residues[1]) + &shift, conj(&sys.residues[2])],
    }
}

/// Largest entrywise difference between the residues of two systems.
pub fn residue_distance(a: &ResidueSystem, b: &ResidueSystem) -> f64 {
    a.residues.iter().zip(&b.residues).map(|(x, y)| x.max_abs_diff(y)).fold(0.0, f64::max)
}

/// `n`-dimensional system `d chi/d eps = sum R_i/(eps - u_i) chi`.
#[derive(Debug, Clone)]
pub struct TwistedPeriodSystem {
    pub u: Vec<C64>,
    pub nu: C64,
    pub residues: Vec<CMatrix>,
}

impl TwistedPeriodSystem {
    pub fn dim(&self) -> usize {
        self.u.len()
    }

    pub fn coefficient(&self, eps: C64) -> CMatrix {
        let n = self.dim();
        let mut out = CMatrix::zeros(n, n);
        for (m, p) in self.residues.iter().zip(&self.u) {
            out = &out + &m.scale(1.0 / (eps - p));
        }
        out
    }
}

/// `R_i = -Psi^{-1} E_i Psi (1/2 - nu + mu_hat)`.
pub fn residues_r(psi: &CMatrix, mu_hat: &[C64], u: &[C64], nu: C64) -> Result<TwistedPeriodSystem> {
    let n = psi.rows();
    if psi.cols() != n || mu_hat.len() != n || u.len() != n {
        return Err(FuchsianError::Dimension("frame, spectrum and chart sizes differ".into()));
    }
    let inv = psi.inverse().map_err(|_| FuchsianError::SingularFrame)?;
    let diag: Vec<C64> = mu_hat.iter().map(|m| 0.5 - nu + m).collect();
    let right = CMatrix::from_diag(&diag);
    let residues = (0..n)
        .map(|i| {
            let mut e = CMatrix::zeros(n, n);
            e[(i, i)] = C64::new(1.0, 0.0);
            -&(&(&(&inv * &e) * psi) * &right)
        })
        .collect();
    Ok(TwistedPeriodSystem { u: u.to_vec(), nu, residues })
}

/// Extracts rows/columns `idx` of each residue (e.g. `[1, 2]` once a
/// component decouples), mapped to the standard poles by
/// `eps -> (u2-u1) eps + u1`.
pub fn restrict_to_standard(sys: &TwistedPeriodSystem, idx: &[usize], mu: C64, kind: ResidueKind) -> Result<ResidueSystem> {
    if sys.dim() != 3 || idx.len() != 2 {
        return Err(FuchsianError::Dimension("restriction needs a 3D system and two indices".into()));
    }
    let s = (sys.u[2] - sys.u[0]) / (sys.u[1] - sys.u[0]);
    let sub = |m: &CMatrix| m2(m[(idx[0], idx[0])], m[(idx[0], idx[1])], m[(idx[1], idx[0])], m[(idx[1], idx[1])]);
    Ok(ResidueSystem {
        s,
        kind,
        mu,
        residues: [sub(&sys.residues[0]), sub(&sys.residues[1]), sub(&sys.residues[2])],
    })
}

/// Fundamental solution along `path` starting from `chi0`.
pub fn integrate_system(sys: &ResidueSystem, path: &CPath, chi0: &CMatrix, tol: f64) -> Result<CMatrix> {
    for &p in &sys.poles() {
        for w in path.segments() {
            if segment_distance(w.0, w.1, p) < 1e-12 {
                return Err(FuchsianError::AtPole(p));
            }
        }
    }
    Ok(ode_flow_linear(|e| sys.coefficient(e), path, chi0, tol)?)
}

fn segment_distance(a: C64, b: C64, p: C64) -> f64 {
    let d = b - a;
    let t = (((p - a) * d.conj()).re / d.norm_sqr()).clamp(0.0, 1.0);
    (a + d * t - p).norm()
}

/// `log` of `(end - p)/(start - p)` continued along the straight segments of `path`.
pub fn continued_log(path: &CPath, p: C64) -> C64 {
    path.segments().map(|(a, b)| ((b - p) / (a - p)).ln()).sum()
}

/// `|w(end)/w(start) - prod ((end-p)/(start-p))^{tr M_p}|`, relative to the
/// predicted ratio.
pub fn wronskian_residual(sys: &ResidueSystem, path: &CPath, chi0: &CMatrix, tol: f64) -> Result<f64> {
    let chi1 = integrate_system(sys, path, chi0, tol)?;
    let ratio = chi1.det()? / chi0.det()?;
    let mut log_pred = C64::new(0.0, 0.0);
    for (m, p) in sys.residues.iter().zip(sys.poles()) {
        log_pred += m.trace() * continued_log(path, p);
    }
    let pred = log_pred.exp();
    Ok((ratio - pred).norm() / pred.norm())
}

/// `max |d_eps chi - M(eps) chi|` with a 5-point difference in `eps`,
/// scaled by `max |chi|`.
pub fn fuchsian_residual<F>(sys: &ResidueSystem, chi: F, eps: C64, h: f64) -> Result<f64>
where
    F: Fn(C64) -> std::result::Result<CMatrix, NumError>,
{
    let c0 = chi(eps)?;
    let d = five_point(|e| chi(e), eps, h)?;
    let lhs = &d - &(&sys.coefficient(eps) * &c0);
    Ok(lhs.max_abs() / c0.max_abs().max(1e-300))
}

fn five_point<F>(f: F, z: C64, h: f64) -> std::result::Result<CMatrix, NumError>
where
    F: Fn(C64) -> std::result::Result<CMatrix, NumError>,
{
    let v: Vec<CMatrix> = [-2.0, -1.0, 1.0, 2.0].iter().map(|k| f(z + k * h)).collect::<std::result::Result<_, _>>()?;
    let num = &(&v[0].scale_re(1.0) - &v[1].scale_re(8.0)) + &(&v[2].scale_re(8.0) - &v[3].scale_re(1.0));
    Ok(num.scale_re(1.0 / (12.0 * h)))
}

/// `max |d_s chi + M3(s) chi/(eps - s)|` at fixed `eps`, where `family(s)`
/// returns the third residue and the solution at that `s`; scaled by `max |chi|`.
pub fn isomonodromy_residual<F>(family: F, s: C64, eps: C64, h: f64) -> Result<f64>
where
    F: Fn(C64) -> std::result::Result<(CMatrix, CMatrix), NumError>,
{
    if (eps - s).norm() < 1e-12 {
        return Err(FuchsianError::AtPole(s));
    }
    let (m3, c0) = family(s)?;
    let d = five_point(|z| family(z).map(|p| p.1), s, h)?;
    let lhs = &d + &(&m3 * &c0).scale(1.0 / (eps - s));
    Ok(lhs.max_abs() / c0.max_abs().max(1e-300))
}

/// Unique zero of the top-right polynomial; its quadratic coefficient is
/// assumed to vanish.
pub fn painleve_y(sys: &ResidueSystem) -> Result<C64> {
    let [_, c1, c0] = sys.top_right_polynomial();
    let scale: f64 = sys.residues.iter().map(|m| m[(0, 1)].norm()).sum::<f64>() * (1.0 + sys.s.norm());
    if c1.norm() <= 1e-14 * scale.max(1e-300) || scale == 0.0 {
        return Err(FuchsianError::DegeneratePolynomial);
    }
    Ok(-c0 / c1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PainleveVariant {
    /// The one-parameter form with `(2 mu - 1)^2`.
    PviMu,
    /// The Okamoto-transformed form satisfied by the B-system.
    Okamoto,
}

/// Right-hand side of the Painleve VI equation.
pub fn pvi_rhs(s: C64, y: C64, yp: C64, mu: C64, variant: PainleveVariant) -> C64 {
    let mut r = 0.5 * (1.0 / y + 1.0 / (y - 1.0) + 1.0 / (y - s)) * yp * yp
        - (1.0 / s + 1.0 / (s - 1.0) + 1.0 / (y - s)) * yp;
    let pre = 0.5 * y * (y - 1.0) * (y - s) / (s * s * (s - 1.0) * (s - 1.0));
    let ys2 = (y - s) * (y - s);
    let bracket = match variant {
        PainleveVariant::PviMu => (2.0 * mu - 1.0).powi(2) + s * (s - 1.0) / ys2,
        PainleveVariant::Okamoto => {
            (mu - 1.0).powi(2) - mu * mu * s / (y * y) + mu * mu * (s - 1.0) / ((y - 1.0) * (y - 1.0))
                + (1.0 - mu * mu) * s * (s - 1.0) / ys2
        }
    };
    r += pre * bracket;
    r
}

/// Samples `(s_k, y(s_k))` on a uniformly spaced grid.
#[derive(Debug, Clone, Default)]
pub struct PainleveSample {
    pub s: Vec<C64>,
    pub y: Vec<C64>,
}

impl PainleveSample {
    pub fn from_fn<F>(grid: &[C64], mut y: F) -> Result<Self>
    where
        F: FnMut(C64) -> Result<C64>,
    {
        let ys = grid.iter().map(|&s| y(s)).collect::<Result<Vec<_>>>()?;
        Ok(PainleveSample { s: grid.to_vec(), y: ys })
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }
}

/// Largest grid spacing accepted by [`pvi_residuals`].
pub const MAX_SPACING: f64 = 1e-2;

/// Residuals `|y'' - RHS|` at interior points, with `y', y''` from
/// three-point central differences. Entry `k` belongs to sample `k + 1`.
pub fn pvi_residuals(samples: &PainleveSample, mu: C64, variant: PainleveVariant) -> Result<Vec<f64>> {
    let n = samples.len();
    if n < 3 || samples.y.len() != n {
        return Err(FuchsianError::GridTooCoarse(format!("{n} samples, need at least 3")));
    }
    let h = samples.s[1] - samples.s[0];
    if h.norm() == 0.0 {
        return Err(FuchsianError::GridTooCoarse("zero spacing".into()));
    }
    for w in samples.s.windows(2) {
        if ((w[1] - w[0]) - h).norm() > 1e-9 * h.norm() {
            return Err(FuchsianError::GridTooCoarse("grid is not uniformly spaced".into()));
        }
    }
    if h.norm() > MAX_SPACING * (1.0 + 1e-9) {
        return Err(FuchsianError::GridTooCoarse(format!("spacing {} exceeds {MAX_SPACING}", h.norm())));
    }
    let y = &samples.y;
    Ok((1..n - 1)
        .map(|k| {
            let yp = (y[k + 1] - y[k - 1]) / (2.0 * h);
            let ypp = (y[k + 1] - 2.0 * y[k] + y[k - 1]) / (h * h);
            (ypp - pvi_rhs(samples.s[k], y[k], yp, mu, variant)).norm()
        })
        .collect())
}

/// Maximum of [`pvi_residuals`].
pub fn pvi_residual(samples: &PainleveSample, mu: C64, variant: PainleveVariant) -> Result<f64> {
    Ok(pvi_residuals(samples, mu, variant)?.into_iter().fold(0.0, f64::max))
}

/// Pointwise residual at `s` with spacing `h` and `h/2`, for a Richardson check.
pub fn pvi_richardson<F>(y: F, s: C64, h: f64, mu: C64, variant: PainleveVariant) -> Result<(f64, f64)>
where
    F: Fn(C64) -> Result<C64>,
{
    let at = |h: f64| -> Result<f64> {
        let g = [s - h, s, s + h];
        let sample = PainleveSample::from_fn(&g, |z| y(z))?;
        Ok(pvi_residuals(&sample, mu, variant)?[0])
    };
    Ok((at(h)?, at(h / 2.0)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn with_top_right(s: C64, b: [C64; 3]) -> ResidueSystem {
        let z = c(0.0, 0.0);
        let r = |x: C64| m2(c(0.3, 0.0), x, c(-0.1, 0.2), z);
        ResidueSystem { s, kind: ResidueKind::B, mu: c(-0.25, 0.0), residues: [r(b[0]), r(b[1]), r(b[2])] }
    }

    #[test]
    fn y_from_balanced_top_right_entries() {
        let s = c(1.7, 0.3);
        let sys = with_top_right(s, [c(1.0, 0.0), c(1.0, 0.0), c(-2.0, 0.0)]);
        assert!(sys.top_right_polynomial()[0].norm() < 1e-15);
        let y = painleve_y(&sys).unwrap();
        assert!((y - s / (2.0 * s - 1.0)).norm() < 1e-14);
    }

    #[test]
    fn vanishing_top_right_is_degenerate() {
        let z = c(0.0, 0.0);
        let sys = with_top_right(c(2.0, 0.0), [z, z, z]);
        assert!(matches!(painleve_y(&sys), Err(FuchsianError::DegeneratePolynomial)));
    }

    #[test]
    fn grid_validation() {
        let s: Vec<C64> = (0..5).map(|k| c(1.5 + 0.02 * k as f64, 0.0)).collect();
        let coarse = PainleveSample { s: s.clone(), y: s.clone() };
        let mu = c(-0.25, 0.0);
        assert!(matches!(pvi_residuals(&coarse, mu, PainleveVariant::PviMu), Err(FuchsianError::GridTooCoarse(_))));
        let short = PainleveSample { s: s[..2].to_vec(), y: s[..2].to_vec() };
        assert!(matches!(pvi_residuals(&short, mu, PainleveVariant::PviMu), Err(FuchsianError::GridTooCoarse(_))));
        let mut uneven: Vec<C64> = (0..5).map(|k| c(1.5 + 0.001 * k as f64, 0.0)).collect();
        uneven[2] += 1e-5;
        let bad = PainleveSample { s: uneven.clone(), y: uneven };
        assert!(matches!(pvi_residuals(&bad, mu, PainleveVariant::PviMu), Err(FuchsianError::GridTooCoarse(_))));
    }

    #[test]
    fn spacing_at_the_limit_is_accepted() {
        let s: Vec<C64> = (0..4).map(|k| c(1.5 + MAX_SPACING * k as f64, 0.0)).collect();
        let sample = PainleveSample { s: s.clone(), y: s.iter().map(|z| z * 0.5).collect() };
        assert_eq!(pvi_residuals(&sample, c(-0.25, 0.0), PainleveVariant::Okamoto).unwrap().len(), 2);
    }

    #[test]
    fn gauges_shift_traces_by_mu() {
        let sys = with_top_right(c(2.0, 0.0), [c(1.0, 0.0), c(0.5, 0.0), c(0.2, 0.0)]);
        let gc = gauge_c_to_b(&sys);
        let gd = gauge_d_to_b(&sys);
        let two_mu = 2.0 * sys.mu;
        assert!((gc.residues[2].trace() - sys.residues[2].trace() - two_mu).norm() < 1e-15);
        assert!((gd.residues[0].trace() - sys.residues[0].trace() - two_mu).norm() < 1e-15);
        assert!((gd.residues[2].trace() - sys.residues[2].trace()).norm() < 1e-15);
    }

    #[test]
    fn integration_refuses_to_cross_a_pole() {
        let sys = with_top_right(c(2.0, 0.0), [c(1.0, 0.0), c(0.5, 0.0), c(0.2, 0.0)]);
        let p = CPath::real(0.5, 1.5).unwrap();
        assert!(matches!(integrate_system(&sys, &p, &CMatrix::identity(2), 1e-10), Err(FuchsianError::AtPole(_))));
    }

    proptest! {
        #[test]
        fn y_is_invariant_under_diagonal_gauge(lr in 0.2f64..3.0, li in -1.0f64..1.0, b0 in 0.1f64..2.0, b1 in -2.0f64..2.0) {
            // conjugation by diag(lambda, 1) scales every top-right entry by lambda
            let s = c(1.6, 0.2);
            let b = [c(b0, 0.0), c(b1, 0.3), c(-b0 - b1, -0.3)];
            let sys = with_top_right(s, b);
            let l = c(lr, li);
            let g = CMatrix::from_diag(&[l, c(1.0, 0.0)]);
            let gi = CMatrix::from_diag(&[1.0 / l, c(1.0, 0.0)]);
            let conj = |m: &CMatrix| &(&g * m) * &gi;
            let gauged = ResidueSystem { residues: [conj(&sys.residues[0]), conj(&sys.residues[1]), conj(&sys.residues[2])], ..sys.clone() };
            let (y0, y1) = (painleve_y(&sys).unwrap(), painleve_y(&gauged).unwrap());
            prop_assert!((y0 - y1).norm() < 1e-12 * (1.0 + y0.norm()));
        }
    }
}
