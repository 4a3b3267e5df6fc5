// Integrates a two-dimensional prepotential from the frame of a constant
// Darboux-Egoroff solution and prints the flat coordinates and `F`.

use trifrob::lift4d::{constant_frame_2d, integrate_prepotential};
use trifrob::C64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = 0.3;
    let u0 = vec![C64::new(2.0, 0.1), C64::new(0.5, -0.2)];
    let x_ref = u0[0] - u0[1];
    let frame = |u: &[C64]| constant_frame_2d(m, u, x_ref);
    let mut last = u0.clone();
    for k in 1..=4 {
        let u = vec![u0[0] + 0.1 * k as f64, u0[1] - C64::new(0.0, 0.05 * k as f64)];
        let sample = integrate_prepotential(frame, &[u0.clone(), u.clone()], 0, 1e-12)?;
        println!("u = [{:.2}, {:.2}]  t = [{:.5}, {:.5}]  F = {:.6e}", u[0], u[1], sample.t[0], sample.t[1], sample.f);
        last = u;
    }
    // t^1 moves with the mean of the canonical coordinates
    let sample = integrate_prepotential(frame, &[u0.clone(), last.clone()], 0, 1e-12)?;
    let want = (last[0] + last[1] - u0[0] - u0[1]) / 2.0;
    if (sample.t[0] - want).norm() > 1e-10 {
        return Err("unexpected flat coordinate".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
