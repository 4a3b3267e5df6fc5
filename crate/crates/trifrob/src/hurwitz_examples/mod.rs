//! The worked examples: the A3 singularity, the genus-one Hurwitz spaces,
//! and bundled prepotentials.

pub mod a3;
pub mod appell;
pub mod elliptic;
mod prepotentials;

pub use prepotentials::{
    nonsplit_prepotential, pavlyk_prepotential, pavlyk_radicand, pavlyk_sample_points, trivial_cubic,
};

use thiserror::Error;

use crate::darboux_egoroff::DeError;
use crate::fuchsian::FuchsianError;
use crate::numkit::NumError;
use crate::C64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HurwitzError {
    #[error("parameter t = {0} is outside the admissible set")]
    DomainViolation(C64),
    #[error("Appell closed form evaluated within 1e-8 of a singular locus at x = {x}, y = {y}")]
    NearSingular { x: C64, y: C64 },
    #[error("roots of the superpotential collide")]
    RootCollision,
    #[error("no cyclic root ordering solves the system (best residual {residual:e})")]
    BranchInconsistency { residual: f64 },
    #[error("normalized branch point {0} lies too close to the cut [0, 1]")]
    ChartTooCloseToCut(C64),
    #[error("unknown example {0:?}; expected one of a3, elliptic3, elliptic4")]
    UnknownExample(String),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Fuchsian(#[from] FuchsianError),
    #[error(transparent)]
    DarbouxEgoroff(#[from] DeError),
}

pub type Result<T> = std::result::Result<T, HurwitzError>;

/// The named examples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Example {
    A3,
    Elliptic3,
    Elliptic4,
}

impl Example {
    pub const ALL: [Example; 3] = [Example::A3, Example::Elliptic3, Example::Elliptic4];

    pub fn name(self) -> &'static str {
        match self {
            Example::A3 => "a3",
            Example::Elliptic3 => "elliptic3",
            Example::Elliptic4 => "elliptic4",
        }
    }

    /// Reduced Darboux-Egoroff data at the invariant parameter `s`.
    /// For A3, `guess` seeds the inversion `t(s)`.
    pub fn state_at(self, s: C64, guess: C64) -> Result<DEStateWithT> {
        match self {
            Example::A3 => {
                let t = a3::t_of_s(s, guess)?;
                Ok(DEStateWithT { state: a3::a3_abc(t)?, t: Some(t) })
            }
            Example::Elliptic3 | Example::Elliptic4 => Ok(DEStateWithT { state: elliptic::elliptic_v(s)?, t: None }),
        }
    }
}

/// A state together with the A3 deformation parameter when applicable.
#[derive(Debug, Clone, Copy)]
pub struct DEStateWithT {
    pub state: crate::darboux_egoroff::DEState,
    pub t: Option<C64>,
}

impl std::str::FromStr for Example {
    type Err = HurwitzError;

    fn from_str(s: &str) -> Result<Self> {
        Example::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| HurwitzError::UnknownExample(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_names_round_trip() {
        for e in Example::ALL {
            assert_eq!(e.name().parse::<Example>().unwrap(), e);
        }
        assert!(matches!("b4".parse::<Example>(), Err(HurwitzError::UnknownExample(_))));
    }

    #[test]
    fn a3_state_carries_its_parameter() {
        let st = Example::A3.state_at(C64::new(1.5, 0.0), C64::new(2.0, 0.0)).unwrap();
        let t = st.t.unwrap();
        assert!((a3::s_of_t(t) - 1.5).norm() < 1e-11);
        assert!(Example::Elliptic4.state_at(C64::new(2.0, 0.5), C64::new(0.0, 0.0)).unwrap().t.is_none());
    }
}
