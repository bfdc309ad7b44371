//! Exact invariant cohomology, harmonic forms and geometric formality for
//! solvable Lie algebras and solvmanifolds.
//!
//! All arithmetic is over arbitrary precision rationals. Forms live in
//! [`exterior`], algebras and their Chevalley–Eilenberg complex in [`lie`],
//! metrics and harmonic theory in [`hodge`], lattice characters in
//! [`characters`] and finite group reductions in [`action`].

pub mod action;
pub mod catalog;
pub mod characters;
pub mod cli;
pub mod error;
pub mod exterior;
pub mod hodge;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod random;
pub mod scalar;

pub use error::{Error, Result};
