use super::{NumError, Result};
use crate::C64;

/// Default finite-difference step: `1e-6 * max(1, |z|)`.
pub fn default_step(z: C64) -> f64 {
    1e-6 * z.norm().max(1.0)
}

fn checked(v: C64) -> Result<C64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(NumError::NonFinite(" in finite-difference sample".into()))
    }
}

/// `(f(z+h) - f(z-h)) / 2h` with a real step.
pub fn central_diff<F: Fn(C64) -> C64>(f: F, z: C64, h: f64) -> Result<C64> {
    if !(h > 0.0) {
        return Err(NumError::Degenerate("difference step must be positive"));
    }
    let hp = checked(f(z + h))?;
    let hm = checked(f(z - h))?;
    Ok((hp - hm) / (2.0 * h))
}

/// Fourth-order stencil `(f(z-2h) - 8f(z-h) + 8f(z+h) - f(z+2h)) / 12h`.
pub fn central_diff5<F: Fn(C64) -> C64>(f: F, z: C64, h: f64) -> Result<C64> {
    if !(h > 0.0) {
        return Err(NumError::Degenerate("difference step must be positive"));
    }
    let s = |k: f64| checked(f(z + k * h));
    Ok((s(-2.0)? - 8.0 * s(-1.0)? + 8.0 * s(1.0)? - s(2.0)?) / (12.0 * h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_point_is_fourth_order() {
        let z = C64::new(0.4, 0.2);
        let exact = z.exp();
        let e1 = (central_diff5(|w| w.exp(), z, 1e-2).unwrap() - exact).norm();
        let e2 = (central_diff5(|w| w.exp(), z, 5e-3).unwrap() - exact).norm();
        assert!(e1 / e2 > 12.0, "ratio {}", e1 / e2);
    }

    #[test]
    fn rejects_bad_step_and_nan() {
        assert!(central_diff(|w| w, C64::new(0.0, 0.0), 0.0).is_err());
        assert!(central_diff(|_| C64::new(f64::NAN, 0.0), C64::new(0.0, 0.0), 1e-3).is_err());
    }
}
