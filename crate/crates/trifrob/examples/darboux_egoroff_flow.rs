// Continues the reduced Darboux-Egoroff flow from the A3 solution at one
// parameter to another and compares with the closed form.

use trifrob::darboux_egoroff::{de_flow, sign_gauge_distance, v_from_state};
use trifrob::hurwitz_examples::a3;
use trifrob::numkit::CPath;
use trifrob::C64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (t0, t1) = (C64::new(2.0, 0.0), C64::new(2.6, 0.3));
    let start = a3::a3_abc(t0)?;
    let waypoints: Vec<C64> = (0..=16).map(|k| a3::s_of_t(t0 + (t1 - t0) * (k as f64 / 16.0))).collect();
    let end = de_flow(&start, &CPath::new(waypoints)?, 1e-12)?;
    let closed = a3::a3_abc(t1)?;
    let (diff, _) = sign_gauge_distance(&v_from_state(&end), &v_from_state(&closed));
    println!("s: {:.4} -> {:.4}", start.s, end.s);
    println!("casimir drift {:.2e}, distance to closed form {diff:.2e}", (end.casimir() - start.casimir()).norm());
    if diff > 1e-8 {
        return Err(format!("flow and closed form differ by {diff:e}").into());
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
