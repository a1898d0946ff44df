//! Brute-force oracle for the closed-form two-photon detection
//! statistics: a truncated two-mode oscillator per momentum cell, tensor
//! powers of the profile vacuum, explicit mode operators with their
//! commutation relations, pair states built from momentum kernels, and
//! analyzer expectation values computed by direct matrix application —
//! plus a two-qubit miniature of the cyclic-vacuum construction.

pub mod average;
pub mod build;
pub mod error;
pub mod ops;
pub mod space;
pub mod state;
pub mod toy;

pub use average::oracle_epr_average;
pub use build::{
    analyzer, analyzer1, cell_identity1, cell_unit, lift, lower, lower1, number, number1,
    pl_component, raise,
};
pub use error::OracleError;
pub use ops::SparseOp;
pub use space::{OracleSpace, Pol, MAX_DIM};
pub use state::{pair_norm_sqr, pair_state, vacuum, vacuum_annihilation_residual, FockState};
pub use toy::{cyclic_vacuum_demo, CyclicReport};
