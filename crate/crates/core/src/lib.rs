//! Indirect controllability of a two-qubit system.
//!
//! A target qubit `S` is coupled to an accessor qubit `A`; only `A` is driven.
//! This crate computes dynamical Lie algebras of such systems numerically,
//! classifies them, checks the invariant-subspace obstruction to steering the
//! target, builds explicit steering unitaries, and samples reachable sets of
//! the target's Bloch vector.
//!
//! The crate is `no_std` (it needs `alloc`). File formats and the command-line
//! front end live in the companion `qubit-indirect-cli` crate.
//!
//! Conventions used everywhere:
//!
//! * tensor factors are ordered `S ⊗ A`;
//! * `σ̃_x, σ̃_y, σ̃_z` are the Pauli matrices with `σ̃_y = [[0, i], [-i, 0]]`,
//!   and `σ_j = (i/2) σ̃_j` is the skew-Hermitian basis of `su(2)` satisfying
//!   `[σ_x, σ_y] = σ_z`;
//! * a qubit state is `½(1 + x σ̃_x + y σ̃_y + z σ̃_z)`.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod classify;
mod error;
pub mod indirect;
pub mod lie;
pub mod model;
pub mod qalg;
pub mod random;
pub mod sampler;

pub use error::{Error, Result};
pub use lie::LieBasis;
pub use model::{Control, TwoQubitModel};
pub use qalg::{BlochPoint, ComplexMatrix, DensityMatrix};

/// Numerical thresholds shared by every decision the crate makes.
///
/// `eq` is the absolute tolerance for matrix equality and structural checks.
/// `rank` is the single knob behind every dimension and nonzero decision
/// (Lie closure, membership, rank of `K`, the `ω_S ≠ 0`-style case tests).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub eq: f64,
    pub rank: f64,
}

impl Tolerances {
    pub const DEFAULT_EQ: f64 = 1e-12;
    pub const DEFAULT_RANK: f64 = 1e-9;
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eq: Self::DEFAULT_EQ,
            rank: Self::DEFAULT_RANK,
        }
    }
}
