//! Prepotentials and the tensors of a Frobenius manifold: WDVV, the
//! intersection form `g`, the third metric `eta~ = eta U^2`, Christoffel
//! symbols, curvature and the flat-pencil identities.

mod doc;
mod prepotential;

pub use doc::{PrepotentialDoc, ScalarRepr};
pub use prepotential::{Coef, Monomial, Prepotential, RadicalTerm};

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::numkit::{central_diff5, CMatrix, NumError};
use crate::C64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FrobeniusError {
    #[error("radical argument {value:?} lies on the principal-branch cut")]
    RadicalBranch { value: [f64; 2] },
    #[error("tri-hamiltonian structure needs even dimension, got {0}")]
    OddDimension(usize),
    #[error("metric is singular at the sample point")]
    Singular,
    #[error("invalid prepotential: {0}")]
    Invalid(String),
    #[error("document parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Num(#[from] NumError),
}

pub type Result<T> = std::result::Result<T, FrobeniusError>;

/// Dense rank-3 array, index order `[a][b][c]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3 {
    n: usize,
    data: Vec<C64>,
}

impl Tensor3 {
    pub fn zeros(n: usize) -> Self {
        Tensor3 { n, data: vec![C64::new(0.0, 0.0); n * n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> C64 {
        self.data[(a * self.n + b) * self.n + c]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, v: C64) {
        self.data[(a * self.n + b) * self.n + c] = v;
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Tensor3) -> f64 {
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    fn axpy(&mut self, k: C64, other: &Tensor3) {
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            *x += k * y;
        }
    }
}

/// Rank-4 array `R^{abc}_d`, index order `[a][b][c][d]`.
#[derive(Debug, Clone)]
pub struct Tensor4 {
    n: usize,
    data: Vec<C64>,
}

impl Tensor4 {
    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> C64 {
        self.data[((a * self.n + b) * self.n + c) * self.n + d]
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// All tensors of the Frobenius structure at one point.
#[derive(Debug, Clone)]
pub struct FrobeniusPoint {
    pub t: Vec<C64>,
    /// `c_{abc}`, third derivatives of F.
    pub c: Tensor3,
    /// `c^g_{ab}`, stored as `[g][a][b]`.
    pub c_up: Tensor3,
    /// Multiplication by the Euler field: `U[(b, m)] = U^b_m = E^g c^b_{gm}`.
    pub u: CMatrix,
    /// Covariant flat metric `eta_{ab}`.
    pub eta: CMatrix,
    /// Contravariant flat metric `eta^{ab}`.
    pub eta_inv: CMatrix,
    /// Intersection form `g^{ab} = eta^{am} U^b_m`.
    pub g: CMatrix,
    /// Third metric `eta~^{ab} = eta^{am} (U^2)^b_m`.
    pub eta_tilde: CMatrix,
    /// Grading spectrum `mu_a = (2-d)/2 - d_a`.
    pub mu_hat: Vec<f64>,
}

impl FrobeniusPoint {
    pub fn dim(&self) -> usize {
        self.t.len()
    }

    /// `c^{ab}_g = eta^{am} c^b_{mg}`.
    pub fn c_up_up(&self, a: usize, b: usize, g: usize) -> C64 {
        (0..self.dim()).map(|m| self.eta_inv[(a, m)] * self.c_up.get(b, m, g)).sum()
    }
}

pub fn evaluate_point(f: &Prepotential, t: &[C64]) -> Result<FrobeniusPoint> {
    let n = f.dim();
    let c = f.third_derivatives(t)?;
    let eta = f.eta_matrix();
    let eta_inv = eta.inverse()?;
    let mut c_up = Tensor3::zeros(n);
    for g in 0..n {
        for a in 0..n {
            for b in 0..n {
                let v: C64 = (0..n).map(|m| eta_inv[(g, m)] * c.get(m, a, b)).sum();
                c_up.set(g, a, b, v);
            }
        }
    }
    let deg = f.degrees_f64();
    let mut u = CMatrix::zeros(n, n);
    for b in 0..n {
        for m in 0..n {
            u[(b, m)] = (0..n).map(|g| deg[g] * t[g] * c_up.get(b, g, m)).sum();
        }
    }
    let g = &eta_inv * &u.transpose();
    let u2 = &u * &u;
    let eta_tilde = &eta_inv * &u2.transpose();
    let mu_hat = f.mu_rational().iter().map(|m| m.to_f64().unwrap()).collect();
    Ok(FrobeniusPoint { t: t.to_vec(), c, c_up, u, eta, eta_inv, g, eta_tilde, mu_hat })
}

/// Associativity residual of a point's structure constants.
pub fn wdvv_residual(p: &FrobeniusPoint) -> f64 {
    let n = p.dim();
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                for d in 0..n {
                    let r: C64 = (0..n)
                        .map(|m| p.c_up.get(m, a, b) * p.c.get(m, g, d) - p.c_up.get(m, b, g) * p.c.get(m, a, d))
                        .sum();
                    worst = worst.max(r.norm());
                }
            }
        }
    }
    worst
}

/// WDVV residual of raw structure constants `c_{abc}` with respect to a metric `eta_{ab}`.
pub fn wdvv_residual_tensor(c: &Tensor3, eta: &CMatrix) -> Result<f64> {
    let n = c.dim();
    let eta_inv = eta.inverse()?;
    let mut c_up = Tensor3::zeros(n);
    for g in 0..n {
        for a in 0..n {
            for b in 0..n {
                c_up.set(g, a, b, (0..n).map(|m| eta_inv[(g, m)] * c.get(m, a, b)).sum());
            }
        }
    }
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                for d in 0..n {
                    let r: C64 = (0..n)
                        .map(|m| c_up.get(m, a, b) * c.get(m, g, d) - c_up.get(m, b, g) * c.get(m, a, d))
                        .sum();
                    worst = worst.max(r.norm());
                }
            }
        }
    }
    Ok(worst)
}

/// Seeded real sample points in `[-1, 1]^n`, rejecting points where a
/// radical argument has real part below `0.1` or evaluation fails.
pub fn sample_points<R: rand::Rng>(f: &Prepotential, rng: &mut R, count: usize) -> Vec<Vec<C64>> {
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count && attempts < 1000 * count.max(1) {
        attempts += 1;
        let t: Vec<C64> = (0..f.dim()).map(|_| C64::new(rng.gen_range(-1.0..1.0), 0.0)).collect();
        if f.radical_arguments(&t).iter().all(|q| q.re > 0.1) && evaluate_point(f, &t).is_ok() {
            out.push(t);
        }
    }
    out
}

pub fn check_wdvv(f: &Prepotential, samples: &[Vec<C64>]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for t in samples {
        worst = worst.max(wdvv_residual(&evaluate_point(f, t)?));
    }
    Ok(worst)
}

/// `max |c_{1ab} - eta_{ab}|`.
pub fn check_unit(p: &FrobeniusPoint) -> f64 {
    let n = p.dim();
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            worst = worst.max((p.c.get(0, a, b) - p.eta[(a, b)]).norm());
        }
    }
    worst
}

/// Scaling residual of the third derivatives under `t -> lambda^{d} t`.
pub fn check_quasihomogeneity(f: &Prepotential, lambda: f64, t: &[C64]) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(FrobeniusError::Invalid("scaling factor must be positive".into()));
    }
    let deg = f.degrees_f64();
    let d = f.charge().to_f64().unwrap();
    let ts: Vec<C64> = t.iter().zip(&deg).map(|(x, da)| x * lambda.powf(*da)).collect();
    let c0 = f.third_derivatives(t)?;
    let c1 = f.third_derivatives(&ts)?;
    let n = f.dim();
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                let k = lambda.powf(3.0 - d - deg[a] - deg[b] - deg[g]);
                worst = worst.max((c1.get(a, b, g) - c0.get(a, b, g) * k).norm());
            }
        }
    }
    Ok(worst)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriHamiltonian {
    pub is_trihamiltonian: bool,
    /// Value of `mu_n`, the grading eigenvalue on the last flat coordinate.
    pub mu: Rational64,
    pub mu_hat: Vec<Rational64>,
}

/// Condition (C): the grading spectrum splits as `{-mu, +mu}` in equal halves, `mu != 0`.
pub fn check_trihamiltonian(f: &Prepotential) -> Result<TriHamiltonian> {
    let n = f.dim();
    if n % 2 == 1 {
        return Err(FrobeniusError::OddDimension(n));
    }
    let mu_hat = f.mu_rational();
    let mu = mu_hat[n - 1];
    let plus = mu_hat.iter().filter(|m| **m == mu).count();
    let minus = mu_hat.iter().filter(|m| **m == -mu).count();
    let ok = !mu.is_zero() && plus == n / 2 && minus == n / 2;
    Ok(TriHamiltonian { is_trihamiltonian: ok, mu, mu_hat })
}

/// Contravariant Christoffel symbols of the third metric,
/// `G~^{ab}_g = sum_n (1 - mu_b + mu_n) g^{bn} c^a_{ng}`.
pub fn christoffel_third(p: &FrobeniusPoint) -> Tensor3 {
    let n = p.dim();
    let mut out = Tensor3::zeros(n);
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                let v: C64 = (0..n)
                    .map(|m| (1.0 - p.mu_hat[b] + p.mu_hat[m]) * p.g[(b, m)] * p.c_up.get(a, m, g))
                    .sum();
                out.set(a, b, g, v);
            }
        }
    }
    out
}

/// Contravariant Christoffel symbols of the intersection form,
/// `G^{ab}_g = (1/2 - mu_b) c^{ab}_g`.
pub fn christoffel_intersection(p: &FrobeniusPoint) -> Tensor3 {
    let n = p.dim();
    let mut out = Tensor3::zeros(n);
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                out.set(a, b, g, (0.5 - p.mu_hat[b]) * p.c_up_up(a, b, g));
            }
        }
    }
    out
}

/// Which metric of the pencil a Christoffel check refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PencilMetric {
    Intersection,
    Third,
}

fn metric_of(p: &FrobeniusPoint, which: PencilMetric) -> &CMatrix {
    match which {
        PencilMetric::Intersection => &p.g,
        PencilMetric::Third => &p.eta_tilde,
    }
}

fn christoffel_of(p: &FrobeniusPoint, which: PencilMetric) -> Tensor3 {
    match which {
        PencilMetric::Intersection => christoffel_intersection(p),
        PencilMetric::Third => christoffel_third(p),
    }
}

/// Residuals of the two defining identities of contravariant Christoffel symbols:
/// `d_g G^{ab} = G^{ab}_g + G^{ba}_g` (finite differences, step `h`) and
/// `G^{an} G^{bg}_n = G^{bn} G^{ag}_n`.
pub fn check_christoffel_identities(
    f: &Prepotential,
    t: &[C64],
    which: PencilMetric,
    h: f64,
) -> Result<(f64, f64)> {
    let p = evaluate_point(f, t)?;
    let n = p.dim();
    let gam = christoffel_of(&p, which);
    let metric = metric_of(&p, which);
    let mut first: f64 = 0.0;
    for g in 0..n {
        let shifted = |dz: f64| -> Result<CMatrix> {
            let mut ts = t.to_vec();
            ts[g] += dz;
            Ok(metric_of(&evaluate_point(f, &ts)?, which).clone())
        };
        let mp2 = shifted(2.0 * h)?;
        let mp1 = shifted(h)?;
        let mm1 = shifted(-h)?;
        let mm2 = shifted(-2.0 * h)?;
        for a in 0..n {
            for b in 0..n {
                let d = (mm2[(a, b)] - 8.0 * mm1[(a, b)] + 8.0 * mp1[(a, b)] - mp2[(a, b)]) / (12.0 * h);
                first = first.max((d - gam.get(a, b, g) - gam.get(b, a, g)).norm());
            }
        }
    }
    let mut second: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                let l: C64 = (0..n).map(|m| metric[(a, m)] * gam.get(b, g, m)).sum();
                let r: C64 = (0..n).map(|m| metric[(b, m)] * gam.get(a, g, m)).sum();
                second = second.max((l - r).norm());
            }
        }
    }
    Ok((first, second))
}

/// Riemann tensor `R^{abc}_d` of a contravariant metric from its Christoffel field,
/// with `d Gamma` by fourth-order central differences of step `h` in each coordinate.
pub fn curvature_contravariant<G, M>(gamma: G, metric: M, t: &[C64], h: f64) -> Result<Tensor4>
where
    G: Fn(&[C64]) -> Result<Tensor3>,
    M: Fn(&[C64]) -> Result<CMatrix>,
{
    let n = t.len();
    let met = metric(t)?;
    if met.det()?.norm() < 1e-14 * met.max_abs().powi(n as i32).max(1e-300) {
        return Err(FrobeniusError::Singular);
    }
    let gam = gamma(t)?;
    // dgam[l] = d Gamma / d t^l
    let mut dgam = Vec::with_capacity(n);
    for l in 0..n {
        let at = |k: f64| -> Result<Tensor3> {
            let mut ts = t.to_vec();
            ts[l] += k * h;
            gamma(&ts)
        };
        let mut d = Tensor3::zeros(n);
        d.axpy(C64::new(1.0 / (12.0 * h), 0.0), &at(-2.0)?);
        d.axpy(C64::new(-8.0 / (12.0 * h), 0.0), &at(-1.0)?);
        d.axpy(C64::new(8.0 / (12.0 * h), 0.0), &at(1.0)?);
        d.axpy(C64::new(-1.0 / (12.0 * h), 0.0), &at(2.0)?);
        dgam.push(d);
    }
    let mut data = vec![C64::new(0.0, 0.0); n * n * n * n];
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                for d in 0..n {
                    let mut r = C64::new(0.0, 0.0);
                    for l in 0..n {
                        r += gam.get(a, b, l) * gam.get(l, g, d) - gam.get(a, g, l) * gam.get(l, b, d);
                        r += met[(a, l)] * (dgam[l].get(b, g, d) - dgam[d].get(b, g, l));
                    }
                    data[((a * n + b) * n + g) * n + d] = r;
                }
            }
        }
    }
    Ok(Tensor4 { n, data })
}

/// Curvature of the third metric of `f` at `t` using the closed-form Christoffels.
pub fn third_metric_curvature(f: &Prepotential, t: &[C64], h: f64) -> Result<Tensor4> {
    curvature_contravariant(
        |x| Ok(christoffel_third(&evaluate_point(f, x)?)),
        |x| Ok(evaluate_point(f, x)?.eta_tilde),
        t,
        h,
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlatPencilResiduals {
    /// `|d_1 eta~ - 2 g|`
    pub d1_eta_tilde: f64,
    /// `|d_1^2 eta~ - 2 eta|`
    pub d2_eta_tilde: f64,
    /// `|d_1 U - I|`
    pub d1_u: f64,
}

impl FlatPencilResiduals {
    pub fn max(&self) -> f64 {
        self.d1_eta_tilde.max(self.d2_eta_tilde).max(self.d1_u)
    }
}

pub fn check_flat_pencil(f: &Prepotential, t: &[C64]) -> Result<FlatPencilResiduals> {
    let h = 1e-2;
    let p0 = evaluate_point(f, t)?;
    let n = p0.dim();
    let shifted = |k: f64| -> Result<FrobeniusPoint> {
        let mut ts = t.to_vec();
        ts[0] += k * h;
        evaluate_point(f, &ts)
    };
    let (pm2, pm1, pp1, pp2) = (shifted(-2.0)?, shifted(-1.0)?, shifted(1.0)?, shifted(2.0)?);
    let d1 = |get: &dyn Fn(&FrobeniusPoint) -> &CMatrix, i: usize, j: usize| {
        (get(&pm2)[(i, j)] - 8.0 * get(&pm1)[(i, j)] + 8.0 * get(&pp1)[(i, j)] - get(&pp2)[(i, j)]) / (12.0 * h)
    };
    let mut r = FlatPencilResiduals { d1_eta_tilde: 0.0, d2_eta_tilde: 0.0, d1_u: 0.0 };
    for i in 0..n {
        for j in 0..n {
            let de = d1(&|p| &p.eta_tilde, i, j);
            r.d1_eta_tilde = r.d1_eta_tilde.max((de - 2.0 * p0.g[(i, j)]).norm());
            let dde = (pp1.eta_tilde[(i, j)] - 2.0 * p0.eta_tilde[(i, j)] + pm1.eta_tilde[(i, j)]) / (h * h);
            r.d2_eta_tilde = r.d2_eta_tilde.max((dde - 2.0 * p0.eta_inv[(i, j)]).norm());
            let du = d1(&|p| &p.u, i, j);
            let id = if i == j { 1.0 } else { 0.0 };
            r.d1_u = r.d1_u.max((du - id).norm());
        }
    }
    Ok(r)
}

/// `|eta~(t + e1 eps/2) - (eta~ + eps g + eps^2/4 eta)(t)|`, all contravariant.
pub fn pencil_shift_residual(f: &Prepotential, t: &[C64], eps: f64) -> Result<f64> {
    let p0 = evaluate_point(f, t)?;
    let mut ts = t.to_vec();
    ts[0] += eps / 2.0;
    let p1 = evaluate_point(f, &ts)?;
    let rhs = &(&p0.eta_tilde + &p0.g.scale_re(eps)) + &p0.eta_inv.scale_re(eps * eps / 4.0);
    Ok(p1.eta_tilde.max_abs_diff(&rhs))
}

/// `max |[mu^2 (e_a e_b)] e_g - e_a [mu^2 (e_b e_g)]|` over all components.
pub fn check_wwdvv(p: &FrobeniusPoint) -> f64 {
    let n = p.dim();
    let m2: Vec<f64> = p.mu_hat.iter().map(|m| m * m).collect();
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                for r in 0..n {
                    let lhs: C64 = (0..n).map(|v| p.c_up.get(v, a, b) * m2[v] * p.c_up.get(r, v, g)).sum();
                    let rhs: C64 = (0..n).map(|v| p.c_up.get(v, b, g) * m2[v] * p.c_up.get(r, a, v)).sum();
                    worst = worst.max((lhs - rhs).norm());
                }
            }
        }
    }
    worst
}

/// Derivative of a scalar function of `t^k` (helper for property tests).
pub fn partial<F: Fn(&[C64]) -> C64>(f: F, t: &[C64], k: usize, h: f64) -> Result<C64> {
    Ok(central_diff5(
        |z| {
            let mut ts = t.to_vec();
            ts[k] = z;
            f(&ts)
        },
        t[k],
        h,
    )?)
}
