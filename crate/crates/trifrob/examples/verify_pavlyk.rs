// Checks WDVV, the unit, quasi-homogeneity and the flat pencil of the third
// metric for Pavlyk's prepotential at a few seeded points.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trifrob::frobenius;
use trifrob::hurwitz_examples::pavlyk_prepotential;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = pavlyk_prepotential();
    let th = frobenius::check_trihamiltonian(&f)?;
    println!("mu_hat = {:?}, tri-hamiltonian: {}", th.mu_hat, th.is_trihamiltonian);

    let points = frobenius::sample_points(&f, &mut ChaCha8Rng::seed_from_u64(1), 10);
    let wdvv = frobenius::check_wdvv(&f, &points)?;
    let mut pencil: f64 = 0.0;
    for t in &points {
        pencil = pencil.max(frobenius::check_flat_pencil(&f, t)?.max());
    }
    let curvature = frobenius::third_metric_curvature(&f, &points[0], 2e-4)?.max_abs();
    println!("wdvv {wdvv:.2e}  pencil {pencil:.2e}  curvature {curvature:.2e}");
    if wdvv > 1e-9 || pencil > 1e-6 || curvature > 1e-6 {
        return Err("Pavlyk checks failed".into());
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
