//! Closed forms of the two Appell functions entering the A3 twisted periods.

use super::{HurwitzError, Result};
use crate::C64;

/// Below this `|x - y|` the closed form of `f` is replaced by its Taylor expansion.
pub const F_TAYLOR_SWITCH: f64 = 1e-4;

fn near_singular(x: C64, y: C64) -> Result<()> {
    if (x - 1.0).norm() < 1e-8 || (y - 1.0).norm() < 1e-8 {
        Err(HurwitzError::NearSingular { x, y })
    } else {
        Ok(())
    }
}

/// `g = F1(1/4; 3/4, 3/4; 1/2; x, y)`.
pub fn appell_g(x: C64, y: C64) -> Result<C64> {
    near_singular(x, y)?;
    let (sx, sy) = ((1.0 - x).sqrt(), (1.0 - y).sqrt());
    Ok(std::f64::consts::FRAC_1_SQRT_2 * (1.0 + 1.0 / (sx * sy)) * (1.0 / (sx + sy)).sqrt())
}

/// `f = F1(5/4; 3/4, 3/4; 3/2; x, y)`.
pub fn appell_f(x: C64, y: C64) -> Result<C64> {
    near_singular(x, y)?;
    let sx = (1.0 - x).sqrt();
    let a = (1.0 - y).sqrt();
    let r = (x - y).sqrt();
    if (x - y).norm() < F_TAYLOR_SWITCH {
        // expansion in r of (sqrt(a+r) - sqrt(a-r)) / (a r)
        let q = r * r / (a * a);
        return Ok((1.0 + q / 8.0 + 7.0 * q * q / 128.0) / (sx * a * a.sqrt()));
    }
    Ok(((a + r).sqrt() - (a - r).sqrt()) / (sx * a * r))
}

/// Both functions at once.
pub fn appell_fg(x: C64, y: C64) -> Result<(C64, C64)> {
    Ok((appell_f(x, y)?, appell_g(x, y)?))
}

/// Truncated double series `sum (a)_{m+n} (b1)_m (b2)_n / ((c)_{m+n} m! n!) x^m y^n`.
pub fn appell_f1_series(a: f64, b1: f64, b2: f64, c: f64, x: C64, y: C64, terms: usize) -> C64 {
    // row[m] holds the coefficient of x^m y^n for the current n
    let mut total = C64::new(0.0, 0.0);
    let mut yn = C64::new(1.0, 0.0);
    let mut head = 1.0; // (a)_n (b2)_n / ((c)_n n!)
    for n in 0..terms {
        let nf = n as f64;
        let mut coef = head;
        let mut xm = C64::new(1.0, 0.0);
        for m in 0..terms {
            let mf = m as f64;
            total += yn * xm * coef;
            coef *= (a + mf + nf) * (b1 + mf) / ((c + mf + nf) * (mf + 1.0));
            xm *= x;
        }
        head *= (a + nf) * (b2 + nf) / ((c + nf) * (nf + 1.0));
        yn *= y;
    }
    total
}
