//! Exact ψ-extended umbral calculus with q-oscillator structure, plus
//! numeric checks of q-deformed su(2) and generalized Pauli matrices.

pub mod cli;
pub mod error;
pub mod gca;
pub mod kernel;
pub mod ops;
pub mod plane;
pub mod psi;
pub mod verify;

pub use error::{Error, Result};
