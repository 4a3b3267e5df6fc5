use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use super::{FrobeniusError, Result, Tensor3};
use crate::numkit::CMatrix;
use crate::C64;

/// A scalar coefficient: exact rational or a complex float.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coef {
    Rational(Rational64),
    Complex(C64),
}

impl Coef {
    pub fn value(&self) -> C64 {
        match self {
            Coef::Rational(r) => C64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            Coef::Complex(z) => *z,
        }
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Coef::Rational(Rational64::new(n, d))
    }

    pub(crate) fn scaled(&self, k: f64) -> Coef {
        Coef::Complex(self.value() * k)
    }
}

/// `coef * prod_a (t^a)^{exps[a]}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Monomial {
    pub coef: Coef,
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn new(coef: Coef, exps: Vec<u32>) -> Self {
        Monomial { coef, exps }
    }

    /// Partial derivative with respect to the listed coordinates.
    pub fn deriv(&self, idx: &[usize], t: &[C64]) -> C64 {
        let mut factor = self.coef.value();
        let mut counts = vec![0u32; self.exps.len()];
        for &i in idx {
            counts[i] += 1;
        }
        for (a, (&e, &k)) in self.exps.iter().zip(&counts).enumerate() {
            if k > e {
                return C64::new(0.0, 0.0);
            }
            for j in 0..k {
                factor *= (e - j) as f64;
            }
            let rest = e - k;
            if rest > 0 {
                factor *= t[a].powi(rest as i32);
            }
        }
        factor
    }

    /// Weighted degree `sum exps[a] * degrees[a]`.
    pub fn degree(&self, degrees: &[Rational64]) -> Rational64 {
        self.exps.iter().zip(degrees).map(|(&e, d)| d * Rational64::from_integer(e as i64)).sum()
    }
}

/// `coef * Q(t)^p`, principal branch, with `Q` a polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct RadicalTerm {
    pub coef: Coef,
    pub q: Vec<Monomial>,
    pub p: Rational64,
}

impl RadicalTerm {
    fn q_deriv(&self, idx: &[usize], t: &[C64]) -> C64 {
        self.q.iter().map(|m| m.deriv(idx, t)).sum()
    }

    fn qpow(&self, q: C64, shift: i64) -> Result<C64> {
        if q.norm() == 0.0 || (q.im == 0.0 && q.re < 0.0) {
            return Err(FrobeniusError::RadicalBranch { value: [q.re, q.im] });
        }
        let p = self.p.to_f64().unwrap() - shift as f64;
        Ok(q.powf(p))
    }

    /// Derivative of order 0..=3 with respect to the listed coordinates.
    pub fn deriv(&self, idx: &[usize], t: &[C64]) -> Result<C64> {
        let p = self.p.to_f64().unwrap();
        let q = self.q_deriv(&[], t);
        let d = |ix: &[usize]| self.q_deriv(ix, t);
        let v = match *idx {
            [] => self.qpow(q, 0)?,
            [a] => p * self.qpow(q, 1)? * d(&[a]),
            [a, b] => {
                p * (p - 1.0) * self.qpow(q, 2)? * d(&[a]) * d(&[b])
                    + p * self.qpow(q, 1)? * d(&[a, b])
            }
            [a, b, c] => {
                p * (p - 1.0) * (p - 2.0) * self.qpow(q, 3)? * d(&[a]) * d(&[b]) * d(&[c])
                    + p * (p - 1.0)
                        * self.qpow(q, 2)?
                        * (d(&[a, b]) * d(&[c]) + d(&[a, c]) * d(&[b]) + d(&[b, c]) * d(&[a]))
                    + p * self.qpow(q, 1)? * d(&[a, b, c])
            }
            _ => unreachable!("derivatives above order three are not used"),
        };
        Ok(self.coef.value() * v)
    }
}

/// Prepotential `F(t)`: monomials plus radical terms, with declared grading.
#[derive(Debug, Clone, PartialEq)]
pub struct Prepotential {
    n: usize,
    charge: Rational64,
    degrees: Vec<Rational64>,
    eta: Vec<Vec<Rational64>>,
    monomials: Vec<Monomial>,
    radicals: Vec<RadicalTerm>,
}

impl Prepotential {
    /// Validates shapes, `d_1 = 1` and non-degeneracy of `eta`.
    pub fn new(
        charge: Rational64,
        degrees: Vec<Rational64>,
        eta: Vec<Vec<Rational64>>,
        monomials: Vec<Monomial>,
        radicals: Vec<RadicalTerm>,
    ) -> Result<Self> {
        let n = degrees.len();
        if n == 0 {
            return Err(FrobeniusError::Invalid("dimension must be positive".into()));
        }
        if degrees[0] != Rational64::from_integer(1) {
            return Err(FrobeniusError::Invalid("the unit coordinate must have degree 1".into()));
        }
        if eta.len() != n || eta.iter().any(|r| r.len() != n) {
            return Err(FrobeniusError::Invalid("eta must be n x n".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if eta[a][b] != eta[b][a] {
                    return Err(FrobeniusError::Invalid("eta must be symmetric".into()));
                }
            }
        }
        let all_terms = monomials.iter().chain(radicals.iter().flat_map(|r| r.q.iter()));
        for m in all_terms {
            if m.exps.len() != n {
                return Err(FrobeniusError::Invalid("exponent vector length differs from n".into()));
            }
        }
        let f = Prepotential { n, charge, degrees, eta, monomials, radicals };
        if f.eta_matrix().det().map(|d| d.norm() < 1e-14).unwrap_or(true) {
            return Err(FrobeniusError::Invalid("eta is degenerate".into()));
        }
        Ok(f)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn charge(&self) -> Rational64 {
        self.charge
    }

    pub fn degrees(&self) -> &[Rational64] {
        &self.degrees
    }

    pub fn eta_rational(&self) -> &[Vec<Rational64>] {
        &self.eta
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn radicals(&self) -> &[RadicalTerm] {
        &self.radicals
    }

    /// Same prepotential with different declared degrees (used by mismatch probes).
    pub fn with_degrees(&self, degrees: Vec<Rational64>) -> Result<Self> {
        Prepotential::new(self.charge, degrees, self.eta.clone(), self.monomials.clone(), self.radicals.clone())
    }

    /// Same prepotential with monomial `k`'s coefficient multiplied by `factor`.
    pub fn with_scaled_monomial(&self, k: usize, factor: f64) -> Self {
        let mut g = self.clone();
        g.monomials[k].coef = g.monomials[k].coef.scaled(factor);
        g
    }

    /// Same prepotential with monomial `k` removed.
    pub fn without_monomial(&self, k: usize) -> Self {
        let mut g = self.clone();
        g.monomials.remove(k);
        g
    }

    /// Adds an arbitrary polynomial (third derivatives are unaffected if it is quadratic).
    pub fn with_extra_monomials(&self, extra: Vec<Monomial>) -> Result<Self> {
        let mut m = self.monomials.clone();
        m.extend(extra);
        Prepotential::new(self.charge, self.degrees.clone(), self.eta.clone(), m, self.radicals.clone())
    }

    pub fn eta_matrix(&self) -> CMatrix {
        let rows: Vec<Vec<f64>> =
            self.eta.iter().map(|r| r.iter().map(|x| x.to_f64().unwrap()).collect()).collect();
        CMatrix::from_real_rows(&rows)
    }

    pub fn degrees_f64(&self) -> Vec<f64> {
        self.degrees.iter().map(|d| d.to_f64().unwrap()).collect()
    }

    /// `mu_a = (2 - d)/2 - d_a`, exact.
    pub fn mu_rational(&self) -> Vec<Rational64> {
        let two = Rational64::from_integer(2);
        self.degrees.iter().map(|d| (two - self.charge) / two - d).collect()
    }

    fn check_point(&self, t: &[C64]) -> Result<()> {
        if t.len() != self.n {
            return Err(FrobeniusError::Invalid(format!("expected {} coordinates, got {}", self.n, t.len())));
        }
        Ok(())
    }

    /// Any partial derivative of order at most three.
    pub fn deriv(&self, idx: &[usize], t: &[C64]) -> Result<C64> {
        self.check_point(t)?;
        let mut v: C64 = self.monomials.iter().map(|m| m.deriv(idx, t)).sum();
        for r in &self.radicals {
            v += r.deriv(idx, t)?;
        }
        Ok(v)
    }

    pub fn value(&self, t: &[C64]) -> Result<C64> {
        self.deriv(&[], t)
    }

    /// All third derivatives `c_{abc}`.
    pub fn third_derivatives(&self, t: &[C64]) -> Result<Tensor3> {
        self.check_point(t)?;
        let n = self.n;
        let mut c = Tensor3::zeros(n);
        for a in 0..n {
            for b in a..n {
                for g in b..n {
                    let v = self.deriv(&[a, b, g], t)?;
                    for (x, y, z) in [(a, b, g), (a, g, b), (b, a, g), (b, g, a), (g, a, b), (g, b, a)] {
                        c.set(x, y, z, v);
                    }
                }
            }
        }
        Ok(c)
    }

    /// Whether every term has weighted degree `3 - d` (monomials of degree <= 2 are exempt).
    /// Values of the radical arguments `Q_k(t)`.
    pub fn radical_arguments(&self, t: &[C64]) -> Vec<C64> {
        self.radicals.iter().map(|r| r.q_deriv(&[], t)).collect()
    }

    pub fn term_degree_mismatches(&self) -> Vec<String> {
        let target = Rational64::from_integer(3) - self.charge;
        let mut out = Vec::new();
        for m in &self.monomials {
            let total: u32 = m.exps.iter().sum();
            if total > 2 && m.degree(&self.degrees) != target {
                out.push(format!("monomial {:?} has degree {}", m.exps, m.degree(&self.degrees)));
            }
        }
        for r in &self.radicals {
            let qdeg: Vec<Rational64> = r.q.iter().map(|m| m.degree(&self.degrees)).collect();
            if qdeg.iter().any(|d| *d != qdeg[0]) || qdeg[0] * r.p != target {
                out.push("radical term is not homogeneous of degree 3 - d".into());
            }
        }
        out
    }
}

impl Default for Coef {
    fn default() -> Self {
        Coef::Rational(Rational64::zero())
    }
}
