//! The A3 example: closed-form rescaled frame, the reduced Darboux-Egoroff
//! data, and the Appell-type solutions of the 2x2 system.

use super::appell::appell_fg;
use super::{HurwitzError, Result};
use crate::darboux_egoroff::DEState;
use crate::fuchsian::{reduce_b, ResidueSystem};
use crate::numkit::{poly_eval, quartic_roots, CMatrix, NumError};
use crate::C64;

/// The eigenvalue parameter of the example.
pub const A3_MU: f64 = -0.25;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// `s = t (2+t)^3 / (1+2t)^3`.
pub fn s_of_t(t: C64) -> C64 {
    t * (2.0 + t).powi(3) / (1.0 + 2.0 * t).powi(3)
}

pub fn ds_dt(t: C64) -> C64 {
    s_of_t(t) * (1.0 / t + 3.0 / (2.0 + t) - 6.0 / (1.0 + 2.0 * t))
}

/// Solves `s_of_t(t) = s` by Newton's method from `guess`.
pub fn t_of_s(s: C64, guess: C64) -> Result<C64> {
    let mut t = guess;
    for _ in 0..100 {
        let step = (s_of_t(t) - s) / ds_dt(t);
        if !step.is_finite() {
            return Err(HurwitzError::DomainViolation(t));
        }
        t -= step;
        if step.norm() <= 1e-15 * (1.0 + t.norm()) {
            break;
        }
    }
    if (s_of_t(t) - s).norm() > 1e-11 * (1.0 + s.norm()) {
        return Err(NumError::NoConvergence { estimate: (s_of_t(t) - s).norm(), tol: 1e-11 }.into());
    }
    Ok(t)
}

fn check_t(t: C64) -> Result<()> {
    let bad = [c(0.0), c(1.0), c(-2.0), c(-0.5), c(-1.0)];
    if !t.is_finite() || bad.iter().any(|b| (t - b).norm() < 1e-9) {
        return Err(HurwitzError::DomainViolation(t));
    }
    Ok(())
}

/// The rescaled transition matrix `Phi(s(t))`.
///
/// Every power of `1+2t` is taken as a power of one fixed root
/// `r = (1+2t)^{1/4}`, so the entries stay mutually consistent when `t`
/// crosses the principal cut of the individual roots.
pub fn a3_phi(t: C64) -> Result<CMatrix> {
    check_t(t)?;
    let r = (1.0 + 2.0 * t).powf(0.25);
    let p = (2.0 + t).sqrt();
    let q = (t - 1.0).sqrt();
    let q2 = (1.0 - t).sqrt();
    let (r2, r3) = (r * r, r * r * r);
    let f1 = 1.0 / (p * r2);
    let f2 = 1.0 / (q * r2);
    let f3 = 1.0 / (q2 * p);
    Ok(CMatrix::from_rows(&[
        [f1 * r3 / 2.0, f1 * (-1.0 - t), f1 * (1.0 + 3.0 * t + t * t) / r3],
        [f2 * r3 / 2.0, f2 * t, f2 * (t * t - t - 1.0) / r3],
        [f3 * r3 / 2.0, f3, f3 * (1.0 - t - t * t) / r3],
    ]))
}

/// `diag(mu, 0, -mu)`.
pub fn a3_mu_hat() -> [C64; 3] {
    [c(A3_MU), c(0.0), c(-A3_MU)]
}

/// `V = Phi mu_hat Phi^{-1}`.
pub fn a3_v(t: C64) -> Result<CMatrix> {
    let phi = a3_phi(t)?;
    let inv = phi.inverse()?;
    Ok(&(&phi * &CMatrix::from_diag(&a3_mu_hat())) * &inv)
}

pub fn a3_abc(t: C64) -> Result<DEState> {
    Ok(DEState::from_v(s_of_t(t), &a3_v(t)?))
}

/// The kind-B residue system at `s(t)`.
pub fn a3_b_system(t: C64) -> Result<ResidueSystem> {
    Ok(reduce_b(&a3_phi(t)?, c(A3_MU), s_of_t(t))?)
}

/// Coefficients (highest degree first) of the rescaled superpotential
/// `z^4 + c2 z^2 + c1 z + c0 - eps`.
pub fn a3_quartic(t: C64, eps: C64) -> [C64; 5] {
    let r = (1.0 + 2.0 * t).powf(0.25);
    let r3 = r * r * r;
    let r6 = r3 * r3;
    [
        c(1.0),
        c(0.0),
        -2.0 * (1.0 + t + t * t) / r6,
        4.0 * t * (1.0 + t) / (r6 * r3),
        (1.0 + t).powi(2) * (1.0 + 4.0 * t + t * t) / (r6 * r6) - eps,
    ]
}

/// Critical values of the quartic at `eps`.
pub fn a3_critical_values(t: C64, eps: C64) -> Result<[C64; 3]> {
    let q = a3_quartic(t, eps);
    let d = [4.0 * q[0], 3.0 * q[1], 2.0 * q[2], q[3]];
    let zs = crate::numkit::cubic_roots(d[0], d[1], d[2], d[3])?;
    Ok([poly_eval(&q, zs[0]), poly_eval(&q, zs[1]), poly_eval(&q, zs[2])])
}

fn lex(a: &C64, b: &C64) -> std::cmp::Ordering {
    if (a.re - b.re).abs() > 1e-12 * (1.0 + a.re.abs().max(b.re.abs())) {
        a.re.total_cmp(&b.re)
    } else {
        a.im.total_cmp(&b.im)
    }
}

/// Roots of the quartic sorted by real, then imaginary part.
pub fn a3_roots(t: C64, eps: C64) -> Result<[C64; 4]> {
    let q = a3_quartic(t, eps);
    let mut r = quartic_roots(q[0], q[1], q[2], q[3], q[4])?;
    r.sort_by(lex);
    for i in 0..4 {
        for j in i + 1..4 {
            if (r[i] - r[j]).norm() < 1e-10 {
                return Err(HurwitzError::RootCollision);
            }
        }
    }
    Ok(r)
}

/// Reorders `roots` to the permutation closest to `reference`.
pub fn track_roots(roots: [C64; 4], reference: &[C64; 4]) -> [C64; 4] {
    let mut best = (f64::INFINITY, roots);
    let mut idx = [0usize, 1, 2, 3];
    permute(&mut idx, 0, &mut |p| {
        let cand = [roots[p[0]], roots[p[1]], roots[p[2]], roots[p[3]]];
        let d: f64 = cand.iter().zip(reference).map(|(a, b)| (a - b).norm()).sum();
        if d < best.0 {
            best = (d, cand);
        }
    });
    best.1
}

fn permute(idx: &mut [usize; 4], k: usize, f: &mut dyn FnMut(&[usize; 4])) {
    if k == idx.len() {
        f(idx);
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permute(idx, k + 1, f);
        idx.swap(k, i);
    }
}

/// Column `i` (0 or 1) of the Appell solution built from the cyclically
/// ordered roots `xi`.
pub fn chi_column(xi: &[C64; 4], i: usize) -> Result<[C64; 2]> {
    let at = |k: usize| xi[(i + k) % 4];
    let a = at(1) - at(0);
    let b = at(2) - at(0);
    let cc = at(0) - at(3);
    let x = a / b;
    let y = a / (at(3) - at(0));
    let (f, g) = appell_fg(x, y)?;
    let pre = 1.0 / (a.sqrt() * (b * cc).powf(0.75));
    let col = [pre * (a * f + 2.0 * at(0) * g), pre * g];
    if !(col[0].is_finite() && col[1].is_finite()) {
        return Err(HurwitzError::RootCollision);
    }
    Ok(col)
}

/// The 2x2 solution with columns `chi_column(xi, 0)`, `chi_column(xi, 1)`.
pub fn chi_from_roots(xi: &[C64; 4]) -> Result<CMatrix> {
    let (c0, c1) = (chi_column(xi, 0)?, chi_column(xi, 1)?);
    Ok(CMatrix::from_rows(&[[c0[0], c1[0]], [c0[1], c1[1]]]))
}

/// The Appell solution at `(eps, s(t))`, with roots tracked to `reference`
/// when given and lexicographically ordered otherwise.
pub fn a3_chi(t: C64, eps: C64, reference: Option<&[C64; 4]>) -> Result<CMatrix> {
    let r = a3_roots(t, eps)?;
    let xi = match reference {
        Some(re) => track_roots(r, re),
        None => r,
    };
    chi_from_roots(&xi)
}

/// A verified solution: the root ordering that was used and the matrix.
#[derive(Debug, Clone)]
pub struct CheckedChi {
    pub roots: [C64; 4],
    pub chi: CMatrix,
    pub residual: f64,
}

/// Relative finite-difference residual of the kind-B system for the
/// solution built from the ordering `xi0` at `eps`.
pub fn chi_ode_residual(t: C64, eps: C64, xi0: &[C64; 4], h: f64) -> Result<f64> {
    let sys = a3_b_system(t)?;
    let c0 = chi_from_roots(xi0)?;
    let at = |e: C64| -> Result<CMatrix> { chi_from_roots(&track_roots(a3_roots(t, e)?, xi0)) };
    let cp = at(eps + h)?;
    let cm = at(eps - h)?;
    let cp2 = at(eps + 2.0 * h)?;
    let cm2 = at(eps - 2.0 * h)?;
    let d = (&(&cm2 - &cp2) + &(&cp - &cm).scale_re(8.0)).scale_re(1.0 / (12.0 * h));
    let res = &d - &(&sys.coefficient(eps) * &c0);
    Ok(res.max_abs() / c0.max_abs())
}

/// Builds the solution with the lexicographic root order, falling back to
/// the cyclic rotations of that order if the ODE residual exceeds `tol`.
pub fn a3_chi_checked(t: C64, eps: C64, tol: f64) -> Result<CheckedChi> {
    let base = a3_roots(t, eps)?;
    let mut worst: f64 = 0.0;
    for rot in 0..4 {
        let xi = [base[rot % 4], base[(rot + 1) % 4], base[(rot + 2) % 4], base[(rot + 3) % 4]];
        let res = match chi_ode_residual(t, eps, &xi, 1e-5) {
            Ok(r) => r,
            Err(_) => continue,
        };
        if res < tol {
            return Ok(CheckedChi { roots: xi, chi: chi_from_roots(&xi)?, residual: res });
        }
        worst = worst.max(res);
    }
    Err(HurwitzError::BranchInconsistency { residual: worst })
}

/// Third residue of the kind-B system and the solution at `eps`, both at the
/// invariant `s`, with roots tracked from `reference`. Varying `s` at fixed
/// `eps` traces the isomonodromic family.
pub fn a3_isomonodromic_pair(s: C64, eps: C64, t_guess: C64, reference: &[C64; 4]) -> Result<(CMatrix, CMatrix)> {
    let t = t_of_s(s, t_guess)?;
    let sys = a3_b_system(t)?;
    let chi = chi_from_roots(&track_roots(a3_roots(t, eps)?, reference))?;
    Ok((sys.residues[2].clone(), chi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_of_s_inverts_s_of_t() {
        for t in [C64::new(1.7, 0.0), C64::new(3.0, 0.4), C64::new(0.6, -0.2)] {
            let back = t_of_s(s_of_t(t), t + 0.05).unwrap();
            assert!((back - t).norm() < 1e-12);
        }
    }

    #[test]
    fn ds_dt_matches_a_difference_quotient() {
        let t = C64::new(2.2, 0.3);
        let fd = crate::numkit::central_diff5(s_of_t, t, 1e-4).unwrap();
        assert!((fd - ds_dt(t)).norm() < 1e-10);
    }

    #[test]
    fn excluded_parameters_are_domain_violations() {
        for t in [0.0, 1.0, -2.0, -0.5, -1.0] {
            assert!(matches!(a3_phi(C64::new(t, 0.0)), Err(HurwitzError::DomainViolation(_))));
        }
    }

    #[test]
    fn tracking_undoes_a_permutation() {
        let xi = [C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.0, -1.0)];
        let shuffled = [xi[2], xi[0], xi[3], xi[1]];
        assert_eq!(track_roots(shuffled, &xi), xi);
    }

    #[test]
    fn mu_hat_is_the_split_spectrum() {
        let m = a3_mu_hat();
        assert_eq!(m[0], -m[2]);
        assert_eq!(m[1], C64::new(0.0, 0.0));
    }
}
