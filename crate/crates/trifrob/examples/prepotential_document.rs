// Round-trips a prepotential through the JSON document format and checks a
// user-built solution.

use num_rational::Rational64;
use trifrob::frobenius::{evaluate_point, wdvv_residual, Prepotential};
use trifrob::hurwitz_examples::pavlyk_prepotential;
use trifrob::C64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = pavlyk_prepotential().to_json();
    let f = Prepotential::from_json(&text)?;
    println!("document: {} bytes, {} monomials, {} radical term(s)", text.len(), f.monomials().len(), f.radicals().len());

    // the A3 polynomial prepotential, written by hand
    let a3 = r#"{
        "n": 3, "charge": "1/2", "degrees": ["1", "3/4", "1/2"],
        "eta": [["0", "0", "1"], ["0", "1", "0"], ["1", "0", "0"]],
        "monomials": [
            { "coef": "1/2", "exps": [2, 0, 1] },
            { "coef": "1/2", "exps": [1, 2, 0] },
            { "coef": "-1/16", "exps": [0, 2, 2] },
            { "coef": "1/960", "exps": [0, 0, 5] }
        ]
    }"#;
    let g = Prepotential::from_json(a3)?;
    assert_eq!(g.charge(), Rational64::new(1, 2));
    let t = [C64::new(0.2, 0.0), C64::new(-0.4, 0.1), C64::new(0.7, 0.3)];
    let r = wdvv_residual(&evaluate_point(&g, &t)?);
    println!("A3 polynomial: WDVV residual {r:.2e}");
    if r > 1e-12 {
        return Err("hand-written A3 prepotential fails WDVV".into());
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
