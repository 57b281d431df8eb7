//! Exact computations for level-1 vertex-model path spaces: skew Schur
//! functions, border strips, spectral decompositions of spin configurations,
//! and the character identities they satisfy.

pub mod characters;
pub mod cli;
pub mod error;
pub mod polyring;
pub mod schur;
pub mod shapes;
pub mod spectra;
pub mod tableaux;
pub mod twisted;
pub mod verify;

pub use error::{Error, Result};
