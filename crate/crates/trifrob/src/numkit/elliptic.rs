use super::{NumError, Result};
use crate::C64;

/// Carlson's symmetric integral `R_F(x, y, z)` for complex arguments
/// (principal branch; at most one argument may vanish).
pub fn carlson_rf(x: C64, y: C64, z: C64) -> Result<C64> {
    let zero_count = [x, y, z].iter().filter(|w| w.norm() == 0.0).count();
    if zero_count > 1 {
        return Err(NumError::Degenerate("R_F with two vanishing arguments diverges"));
    }
    let (mut x, mut y, mut z) = (x, y, z);
    for _ in 0..200 {
        let a = (x + y + z) / 3.0;
        let dev = [(a - x).norm(), (a - y).norm(), (a - z).norm()].into_iter().fold(0.0, f64::max);
        if dev < 1e-3 * a.norm() {
            let xx = 1.0 - x / a;
            let yy = 1.0 - y / a;
            let zz = -xx - yy;
            let e2 = xx * yy - zz * zz;
            let e3 = xx * yy * zz;
            let series = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0;
            return Ok(series / a.sqrt());
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lam = sx * sy + sy * sz + sz * sx;
        x = (x + lam) / 4.0;
        y = (y + lam) / 4.0;
        z = (z + lam) / 4.0;
    }
    Err(NumError::NoConvergence { estimate: f64::NAN, tol: 1e-3 })
}
