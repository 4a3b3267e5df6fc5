// Lifts the A3 solution to a four-point chart, verifies the linear system
// and reconstructs the structure constants.

use trifrob::frobenius::wdvv_residual_tensor;
use trifrob::lift4d::{antidiagonal_pattern, check_linear_system, gram, reconstruct, A3Lift};
use trifrob::C64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let v = [0.0, 1.0, 2.1, 3.3].map(|x| C64::new(x, 0.0));
    let lift = A3Lift::new(&v, 1, C64::new(2.0, 0.0))?;
    let p = lift.evaluate(&v)?;
    println!("s = {:.4}, eps = {:.4}, t = {:.4}", p.params.s, p.params.eps, p.t);

    let frame = |u: &[C64]| lift.evaluate(&[u[0], u[1], u[2], u[3]]).map(|q| q.psi_hat);
    let linear = check_linear_system(frame, &p.w, &v, 1e-5)?;
    let (kappa, off) = antidiagonal_pattern(&gram(&p.psi_hat));
    let rec = reconstruct(&p.psi_hat, 0)?;
    let wdvv = wdvv_residual_tensor(&rec.c, &rec.eta)?;
    println!("linear {linear:.2e}, kappa {kappa:.6}, off-pattern {off:.2e}, wdvv {wdvv:.2e}");
    if linear > 1e-6 || off > 1e-8 || wdvv > 1e-6 {
        return Err("lift checks failed".into());
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
