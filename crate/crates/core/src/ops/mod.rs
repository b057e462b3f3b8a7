//! ∂ψ-shift-invariant operators and the polynomial sequences they determine.

pub mod basic;
pub mod expansion;
pub mod laguerre;
pub mod matrix;
pub mod mutator;
pub mod pincherle;
pub mod series;
pub mod sheffer;

pub use basic::{basic_sequence, BasicSequence, Method};
pub use expansion::{dual_xhat, expand_operator, q_scaling_matrix, reconstruct};
pub use laguerre::{laguerre_order_s, q_laguerre_closed, q_laguerre_printed};
pub use matrix::OperatorMatrix;
pub use mutator::{qccr_check, qmutator_check, MutatorReport};
pub use pincherle::{pincherle_commutator, pincherle_series_matrix};
pub use series::{DeltaOperator, OperatorSeries};
pub use sheffer::{
    binomial_type_check, sheffer_binomial_check, sheffer_sequence, IdentityReport, ShefferSequence,
};
