use super::{NumError, Result};
use crate::C64;

/// Horner evaluation; `coeffs` from highest degree down.
pub fn poly_eval(coeffs: &[C64], z: C64) -> C64 {
    coeffs.iter().fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn poly_deriv(coeffs: &[C64]) -> Vec<C64> {
    let n = coeffs.len() - 1;
    coeffs[..n].iter().enumerate().map(|(i, &c)| c * (n - i) as f64).collect()
}

/// Newton refinement that never accepts a step increasing |p|.
fn polish(coeffs: &[C64], z0: C64) -> C64 {
    let d = poly_deriv(coeffs);
    let mut z = z0;
    let mut pz = poly_eval(coeffs, z).norm();
    for _ in 0..8 {
        let dp = poly_eval(&d, z);
        if dp.norm() == 0.0 {
            break;
        }
        let cand = z - poly_eval(coeffs, z) / dp;
        let pc = poly_eval(coeffs, cand).norm();
        if !(pc < pz) {
            break;
        }
        z = cand;
        pz = pc;
    }
    z
}

fn quadratic(b: C64, c: C64) -> [C64; 2] {
    // z^2 + b z + c, cancellation-free
    let disc = (b * b - 4.0 * c).sqrt();
    let q = if (b.conj() * disc).re >= 0.0 { -(b + disc) * 0.5 } else { -(b - disc) * 0.5 };
    if q.norm() == 0.0 {
        [C64::new(0.0, 0.0); 2]
    } else {
        [q, c / q]
    }
}

/// Roots of `c3 z^3 + c2 z^2 + c1 z + c0` by Cardano with Newton polish.
pub fn cubic_roots(c3: C64, c2: C64, c1: C64, c0: C64) -> Result<[C64; 3]> {
    if c3.norm() == 0.0 {
        return Err(NumError::Degenerate("leading cubic coefficient is zero"));
    }
    let (a, b, c) = (c2 / c3, c1 / c3, c0 / c3);
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let disc = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    let u3a = -q / 2.0 + disc;
    let u3b = -q / 2.0 - disc;
    let u3 = if u3a.norm() >= u3b.norm() { u3a } else { u3b };
    let shift = -a / 3.0;
    let mut out = [C64::new(0.0, 0.0); 3];
    if u3.norm() == 0.0 {
        out = [shift; 3];
    } else {
        let u = u3.powf(1.0 / 3.0);
        let omega = C64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let mut uk = u;
        for o in out.iter_mut() {
            *o = uk - p / (3.0 * uk) + shift;
            uk *= omega;
        }
    }
    let coeffs = [C64::new(1.0, 0.0), a, b, c];
    Ok(out.map(|z| polish(&coeffs, z)))
}

/// Roots of `c4 z^4 + ... + c0` (Ferrari's method, then Newton polish).
pub fn quartic_roots(c4: C64, c3: C64, c2: C64, c1: C64, c0: C64) -> Result<[C64; 4]> {
    if c4.norm() == 0.0 {
        return Err(NumError::Degenerate("leading quartic coefficient is zero"));
    }
    let (a, b, c, d) = (c3 / c4, c2 / c4, c1 / c4, c0 / c4);
    let p = b - 3.0 * a * a / 8.0;
    let q = c - a * b / 2.0 + a * a * a / 8.0;
    let r = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;
    let one = C64::new(1.0, 0.0);
    // resolvent m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0; take the largest root
    let ms = cubic_roots(one, p, p * p / 4.0 - r, -q * q / 8.0)?;
    let m = ms.into_iter().fold(C64::new(0.0, 0.0), |acc, x| if x.norm() > acc.norm() { x } else { acc });
    let ys: [C64; 4] = if m.norm() <= 1e-300 {
        [C64::new(0.0, 0.0); 4]
    } else {
        let s = (2.0 * m).sqrt();
        let [y1, y2] = quadratic(-s, p / 2.0 + m + q / (2.0 * s));
        let [y3, y4] = quadratic(s, p / 2.0 + m - q / (2.0 * s));
        [y1, y2, y3, y4]
    };
    let coeffs = [one, a, b, c, d];
    Ok(ys.map(|y| polish(&coeffs, y - a / 4.0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn quartic_recovers_prescribed_roots() {
        let want = [c(1.0, 0.0), c(-2.0, 0.5), c(0.3, -1.1), c(4.0, 2.0)];
        // expand prod (z - r)
        let mut p = vec![c(1.0, 0.0)];
        for r in want {
            let mut q = vec![c(0.0, 0.0); p.len() + 1];
            for (k, a) in p.iter().enumerate() {
                q[k] += a;
                q[k + 1] -= a * r;
            }
            p = q;
        }
        let got = quartic_roots(p[0], p[1], p[2], p[3], p[4]).unwrap();
        for r in want {
            let d = got.iter().map(|g| (g - r).norm()).fold(f64::INFINITY, f64::min);
            assert!(d < 1e-12, "root {r} missing, nearest at {d:e}");
        }
    }

    #[test]
    fn biquadratic_with_vanishing_resolvent() {
        // z^4 - 1
        let z = c(0.0, 0.0);
        let got = quartic_roots(c(1.0, 0.0), z, z, z, c(-1.0, 0.0)).unwrap();
        for g in got {
            assert!((g.powi(4) - 1.0).norm() < 1e-13);
        }
    }

    #[test]
    fn cubic_triple_root() {
        let got = cubic_roots(c(1.0, 0.0), c(-3.0, 0.0), c(3.0, 0.0), c(-1.0, 0.0)).unwrap();
        for g in got {
            assert!((g - 1.0).norm() < 1e-5);
        }
    }

    #[test]
    fn zero_leading_coefficient_is_rejected() {
        let z = c(0.0, 0.0);
        assert!(quartic_roots(z, z, z, z, c(1.0, 0.0)).is_err());
    }
}
