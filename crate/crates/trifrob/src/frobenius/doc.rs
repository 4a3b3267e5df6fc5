//! JSON document format for prepotentials.
//!
//! ```json
//! {
//!   "n": 2,
//!   "charge": "0",
//!   "degrees": ["1", "1"],
//!   "eta": [["0", "1"], ["1", "0"]],
//!   "monomials": [{ "coef": "1/2", "exps": [2, 1] }],
//!   "radicals": [{ "coef": [0.5, 0.0], "q": [{ "coef": "1", "exps": [0, 1] }], "p": "5/2" }]
//! }
//! ```
//!
//! Rationals are strings `"p/q"` (or integers); complex scalars are `[re, im]`.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::{Coef, FrobeniusError, Monomial, Prepotential, RadicalTerm, Result};
use crate::C64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Rational(String),
    Complex([f64; 2]),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonomialDoc {
    pub coef: ScalarRepr,
    pub exps: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadicalDoc {
    pub coef: ScalarRepr,
    pub q: Vec<MonomialDoc>,
    pub p: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrepotentialDoc {
    pub n: usize,
    pub charge: String,
    pub degrees: Vec<String>,
    pub eta: Vec<Vec<String>>,
    pub monomials: Vec<MonomialDoc>,
    #[serde(default)]
    pub radicals: Vec<RadicalDoc>,
}

fn parse_rational(s: &str) -> Result<Rational64> {
    s.trim().parse::<Rational64>().map_err(|e| FrobeniusError::Parse(format!("bad rational {s:?}: {e}")))
}

fn fmt_rational(r: &Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn coef_from(repr: &ScalarRepr) -> Result<Coef> {
    match repr {
        ScalarRepr::Rational(s) => Ok(Coef::Rational(parse_rational(s)?)),
        ScalarRepr::Complex([re, im]) => Ok(Coef::Complex(C64::new(*re, *im))),
    }
}

fn coef_to(c: &Coef) -> ScalarRepr {
    match c {
        Coef::Rational(r) => ScalarRepr::Rational(fmt_rational(r)),
        Coef::Complex(z) => ScalarRepr::Complex([z.re, z.im]),
    }
}

fn mono_from(m: &MonomialDoc) -> Result<Monomial> {
    Ok(Monomial::new(coef_from(&m.coef)?, m.exps.clone()))
}

fn mono_to(m: &Monomial) -> MonomialDoc {
    MonomialDoc { coef: coef_to(&m.coef), exps: m.exps.clone() }
}

impl PrepotentialDoc {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| FrobeniusError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialises")
    }

    pub fn to_prepotential(&self) -> Result<Prepotential> {
        if self.degrees.len() != self.n {
            return Err(FrobeniusError::Parse(format!("n = {} but {} degrees", self.n, self.degrees.len())));
        }
        let degrees = self.degrees.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        let eta = self
            .eta
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let monomials = self.monomials.iter().map(mono_from).collect::<Result<Vec<_>>>()?;
        let radicals = self
            .radicals
            .iter()
            .map(|r| {
                Ok(RadicalTerm {
                    coef: coef_from(&r.coef)?,
                    q: r.q.iter().map(mono_from).collect::<Result<Vec<_>>>()?,
                    p: parse_rational(&r.p)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Prepotential::new(parse_rational(&self.charge)?, degrees, eta, monomials, radicals)
    }

    pub fn from_prepotential(f: &Prepotential) -> Self {
        PrepotentialDoc {
            n: f.dim(),
            charge: fmt_rational(&f.charge()),
            degrees: f.degrees().iter().map(fmt_rational).collect(),
            eta: f.eta_rational().iter().map(|r| r.iter().map(fmt_rational).collect()).collect(),
            monomials: f.monomials().iter().map(mono_to).collect(),
            radicals: f
                .radicals()
                .iter()
                .map(|r| RadicalDoc {
                    coef: coef_to(&r.coef),
                    q: r.q.iter().map(mono_to).collect(),
                    p: fmt_rational(&r.p),
                })
                .collect(),
        }
    }
}

impl Prepotential {
    pub fn from_json(text: &str) -> Result<Self> {
        PrepotentialDoc::from_json(text)?.to_prepotential()
    }

    pub fn to_json(&self) -> String {
        PrepotentialDoc::from_prepotential(self).to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_doc_example_parses() {
        let text = r#"{
          "n": 2, "charge": "0", "degrees": ["1", "1"],
          "eta": [["0", "1"], ["1", "0"]],
          "monomials": [{ "coef": "1/2", "exps": [2, 1] }],
          "radicals": [{ "coef": [0.5, 0.0], "q": [{ "coef": "1", "exps": [0, 1] }], "p": "5/2" }]
        }"#;
        let f = Prepotential::from_json(text).unwrap();
        assert_eq!(f.dim(), 2);
        assert_eq!(f.radicals().len(), 1);
    }

    #[test]
    fn pavlyk_round_trips() {
        let f = crate::hurwitz_examples::pavlyk_prepotential();
        let g = Prepotential::from_json(&f.to_json()).unwrap();
        assert_eq!(PrepotentialDoc::from_prepotential(&f), PrepotentialDoc::from_prepotential(&g));
    }

    #[test]
    fn unknown_fields_and_bad_rationals_fail() {
        assert!(matches!(PrepotentialDoc::from_json(r#"{"n": 1, "bogus": 0}"#), Err(FrobeniusError::Parse(_))));
        let text = r#"{"n": 1, "charge": "x/2", "degrees": ["1"], "eta": [["1"]], "monomials": []}"#;
        assert!(matches!(Prepotential::from_json(text), Err(FrobeniusError::Parse(_))));
    }
}
