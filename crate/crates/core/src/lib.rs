//! Exact construction of the exceptional Lie algebra g₂ inside su(7) and
//! brute-force verification of identities among its invariant tensors.
//!
//! Everything is computed in ℚ(√2,√3,√7) and its complex extension; no
//! comparison anywhere uses a tolerance. Start from [`model::Model::build`],
//! then run suites with [`verify::run_suite`] or evaluate invariants on the
//! Cartan slice with [`casimir::slice_value`].

pub mod casimir;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod model;
pub mod rational;
pub mod rep;
pub mod scalar;
pub mod tensors;
pub mod verify;
