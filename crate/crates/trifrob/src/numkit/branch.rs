//! Continuous branches of multivalued powers.
//!
//! A principal-branch call per point jumps across cuts; here the branch is
//! chosen as the one closest to a supplied nearby value instead.

use crate::C64;
use std::f64::consts::PI;

/// The branch of `z^p` closest to `near`.
pub fn pow_near(z: C64, p: f64, near: C64) -> C64 {
    let principal = z.powf(p);
    if z.norm() == 0.0 {
        return principal;
    }
    let mut best = principal;
    let mut dist = (principal - near).norm();
    // Branches differ by exp(2 pi i p k); a handful of k suffices for |p| <= 4.
    for k in -8i32..=8 {
        if k == 0 {
            continue;
        }
        let cand = principal * C64::from_polar(1.0, 2.0 * PI * p * k as f64);
        let d = (cand - near).norm();
        if d < dist {
            dist = d;
            best = cand;
        }
    }
    best
}

/// The square root of `z` with the sign closest to `near`.
pub fn sqrt_near(z: C64, near: C64) -> C64 {
    let r = z.sqrt();
    if (r - near).norm() <= (-r - near).norm() {
        r
    } else {
        -r
    }
}

/// Tracks `z^p` continuously along a sequence of nearby arguments.
#[derive(Debug, Clone)]
pub struct PowTracker {
    p: f64,
    last: C64,
}

impl PowTracker {
    /// Anchored at `z0` on the principal branch.
    pub fn new(p: f64, z0: C64) -> Self {
        PowTracker { p, last: z0.powf(p) }
    }

    /// Anchored at an explicit starting value.
    pub fn with_value(p: f64, value: C64) -> Self {
        PowTracker { p, last: value }
    }

    pub fn eval(&mut self, z: C64) -> C64 {
        self.last = pow_near(z, self.p, self.last);
        self.last
    }

    pub fn value(&self) -> C64 {
        self.last
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tracker_is_continuous_around_the_origin() {
        // z^(1/4) once around the unit circle picks up exp(i pi / 2)
        let mut tr = PowTracker::new(0.25, C64::new(1.0, 0.0));
        for k in 1..=400 {
            tr.eval(C64::from_polar(1.0, 2.0 * PI * k as f64 / 400.0));
        }
        assert!((tr.value() - C64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn sqrt_near_picks_the_closer_sign() {
        assert!((sqrt_near(C64::new(4.0, 0.0), C64::new(-1.0, 0.0)) + 2.0).norm() < 1e-15);
    }
}
