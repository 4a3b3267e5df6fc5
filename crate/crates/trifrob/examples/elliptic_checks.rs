// Genus-one checks on seeded four-point charts: the numerical metric
// against the lifted closed-form solution, and the period identities.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trifrob::cli::random_elliptic_charts;
use trifrob::hurwitz_examples::elliptic::{elliptic_period_data, elliptic_w_check};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for v in random_elliptic_charts(&mut ChaCha8Rng::seed_from_u64(42), 3) {
        let r = elliptic_w_check(&v, 1e-5)?;
        let sym = (r.ibar + elliptic_period_data(1.0 - r.s)?.ibar - 1.0).norm();
        println!(
            "s = {:.4}: W {:.1e}, period identity {:.1e}, J1 {:.1e}, symmetry {sym:.1e}",
            r.s, r.w_residual, r.period_identity, r.bar_j1
        );
        if r.max() > 1e-5 || sym > 1e-9 {
            return Err(format!("chart {v:?} failed").into());
        }
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
