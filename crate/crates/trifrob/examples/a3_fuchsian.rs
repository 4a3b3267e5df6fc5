// The A3 kind-B Fuchsian system: its explicit Appell-type solution, the
// Wronskian along a loop-free path, and isomonodromy in `s`.

use trifrob::fuchsian::{isomonodromy_residual, wronskian_residual};
use trifrob::hurwitz_examples::a3;
use trifrob::numkit::{CPath, NumError};
use trifrob::C64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = C64::new(2.0, 0.2);
    let eps = C64::new(0.4, 0.9);
    let chi = a3::a3_chi_checked(t, eps, 1e-6)?;
    println!("ODE residual of the explicit solution: {:.2e}", chi.residual);

    let sys = a3::a3_b_system(t)?;
    let path = CPath::new(vec![eps, C64::new(-1.5, 1.2), C64::new(-2.0, -0.8)])?;
    let w = wronskian_residual(&sys, &path, &chi.chi, 1e-12)?;
    println!("Wronskian residual: {w:.2e}");

    let s = a3::s_of_t(t);
    let family = |z: C64| {
        a3::a3_isomonodromic_pair(z, eps, t, &chi.roots).map_err(|e| NumError::NonFinite(format!(": {e}")))
    };
    let iso = isomonodromy_residual(family, s, eps, 1e-5)?;
    println!("isomonodromy residual at s = {s:.4}: {iso:.2e}");
    if chi.residual > 1e-6 || w > 1e-7 || iso > 1e-6 {
        return Err("A3 Fuchsian checks failed".into());
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
