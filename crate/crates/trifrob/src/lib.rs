//! Numerical machinery for the correspondence between 3-dimensional
//! semisimple Frobenius manifolds (equivalently Painleve VI(mu)
//! transcendents) and 4-dimensional tri-hamiltonian Frobenius manifolds.
//!
//! The crate is organised bottom-up:
//!
//! * [`numkit`]: complex matrices, adaptive ODE flow along complex paths,
//!   finite differences, adaptive quadrature, quartic roots, Carlson `R_F`.
//! * [`frobenius`]: prepotentials, WDVV, intersection form, the third metric
//!   and its flat-pencil identities.
//! * [`darboux_egoroff`]: the reduced Darboux-Egoroff flow and its 3 -> 4 lift.
//! * [`fuchsian`]: twisted-period systems, 2x2 reductions, Painleve VI residuals.
//! * [`lift4d`]: assembly of the 4D transition matrix and reconstruction.
//! * [`hurwitz_examples`]: the A3 and genus-one examples, plus bundled prepotentials.
//! * [`cli`]: the command-line front end used by the `trifrob` binary.

pub mod cli;
pub mod darboux_egoroff;
pub mod frobenius;
pub mod fuchsian;
pub mod hurwitz_examples;
pub mod lift4d;
pub mod numkit;

pub use num_complex::Complex64 as C64;
