// Extracts `y(s)` from both reduced A3 systems and evaluates the matching
// Painleve VI residuals on a uniform grid.

use trifrob::cli::a3_painleve_curve;
use trifrob::fuchsian::{pvi_residual, PainleveVariant};
use trifrob::hurwitz_examples::a3::A3_MU;
use trifrob::C64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let grid: Vec<C64> = (0..=400).map(|k| C64::new(1.4 + 1e-3 * k as f64, 0.0)).collect();
    let mu = C64::new(A3_MU, 0.0);
    for v in [PainleveVariant::PviMu, PainleveVariant::Okamoto] {
        let sample = a3_painleve_curve(&grid, v)?;
        let r = pvi_residual(&sample, mu, v)?;
        println!("{v:?}: y(1.6) = {:.6}, worst residual {r:.2e}", sample.y[200]);
        if r > 1e-4 {
            return Err(format!("{v:?} residual {r:e}").into());
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
