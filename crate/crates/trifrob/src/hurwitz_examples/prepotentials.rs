//! Bundled prepotentials: Pavlyk's algebraic D4 solution, a trivial 2D cubic,
//! and a polynomial 4D solution whose grading spectrum does not split.

use num_rational::Rational64;
use rand::Rng;

use crate::frobenius::{Coef, Monomial, Prepotential, RadicalTerm};
use crate::C64;

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn mono(n: i64, d: i64, exps: [u32; 4]) -> Monomial {
    Monomial::new(Coef::ratio(n, d), exps.to_vec())
}

fn antidiag(n: usize) -> Vec<Vec<Rational64>> {
    (0..n).map(|i| (0..n).map(|j| r((i + j + 1 == n) as i64, 1)).collect()).collect()
}

/// Pavlyk's algebraic prepotential, degrees `(1, 1, 1/2, 1/2)`, charge `1/2`.
pub fn pavlyk_prepotential() -> Prepotential {
    let monomials = vec![
        mono(1, 2, [2, 0, 0, 1]),
        mono(1, 1, [1, 1, 1, 0]),
        mono(1, 6, [0, 2, 0, 1]),
        mono(-1, 108, [0, 1, 0, 3]),
        mono(1, 12, [0, 1, 2, 1]),
        mono(19, 256 * 81 * 5, [0, 0, 0, 5]),
        mono(7, 128 * 27, [0, 0, 2, 3]),
        mono(1, 3 * 256, [0, 0, 4, 1]),
    ];
    let radical = RadicalTerm {
        coef: Coef::ratio(1, 32 * 81 * 5),
        q: vec![mono(48, 1, [0, 1, 0, 0]), mono(3, 1, [0, 0, 2, 0]), mono(1, 1, [0, 0, 0, 2])],
        p: r(5, 2),
    };
    Prepotential::new(r(1, 2), vec![r(1, 1), r(1, 1), r(1, 2), r(1, 2)], antidiag(4), monomials, vec![radical])
        .expect("Pavlyk prepotential is well formed")
}

/// `F = t1^2 t2 / 2` in dimension 2 with degrees `(1, d2)`.
pub fn trivial_cubic(d2: Rational64) -> Prepotential {
    let charge = r(1, 1) - d2;
    Prepotential::new(charge, vec![r(1, 1), d2], antidiag(2), vec![Monomial::new(Coef::ratio(1, 2), vec![2, 1])], vec![])
        .expect("trivial cubic is well formed")
}

/// Polynomial 4D solution with degrees `(1, 4/5, 3/5, 2/5)`, charge `3/5`.
///
/// Its grading spectrum `(-3/10, -1/10, 1/10, 3/10)` is not of the form `{-mu, mu}`,
/// so it is a negative control for every tri-hamiltonian check.
pub fn nonsplit_prepotential() -> Prepotential {
    let monomials = vec![
        mono(1, 2, [2, 0, 0, 1]),
        mono(1, 1, [1, 1, 1, 0]),
        mono(1, 6, [0, 3, 0, 0]),
        mono(1, 4, [0, 2, 0, 2]),
        mono(1, 2, [0, 1, 2, 1]),
        mono(1, 12, [0, 0, 4, 0]),
        mono(1, 6, [0, 0, 2, 3]),
        mono(1, 120, [0, 0, 0, 6]),
    ];
    Prepotential::new(r(3, 5), vec![r(1, 1), r(4, 5), r(3, 5), r(2, 5)], antidiag(4), monomials, vec![])
        .expect("control prepotential is well formed")
}

/// Radical argument `48 t2 + 3 t3^2 + t4^2` of Pavlyk's prepotential.
pub fn pavlyk_radicand(t: &[C64]) -> C64 {
    48.0 * t[1] + 3.0 * t[2] * t[2] + t[3] * t[3]
}

/// Real sample points in `[-1, 1]^4` with positive radicand (rejection sampling).
pub fn pavlyk_sample_points<R: Rng>(rng: &mut R, count: usize) -> Vec<Vec<C64>> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let t: Vec<C64> = (0..4).map(|_| C64::new(rng.gen_range(-1.0..1.0), 0.0)).collect();
        if pavlyk_radicand(&t).re > 0.1 {
            out.push(t);
        }
    }
    out
}
