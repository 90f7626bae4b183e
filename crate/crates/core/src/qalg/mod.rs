//! Dense complex linear algebra for one and two qubits.

mod eigen;
mod expm;
mod matrix;
mod pauli;
pub mod real3;
mod state;

pub use eigen::{hermitian_eigen, normal_eigen, HermitianEigen};
pub use expm::{exp_series, mat_exp, unitary_log};
pub(crate) use expm::exp_skew;
pub use matrix::{anticommutator, commutator, tensor, ComplexMatrix};
pub(crate) use matrix::bracket;
pub use pauli::{pauli, sigma, sigma_from_vec, sigma_tilde, vec_from_su2, Axis};
pub use state::{bloch, bloch_inverse, partial_trace, BlochPoint, DensityMatrix, Subsystem};
pub(crate) use state::{bloch_of, state_from_bloch};

use num_complex::Complex64;

/// `1₂`
pub fn id2() -> ComplexMatrix {
    ComplexMatrix::identity(2)
}

/// `a ⊗ 1`
pub fn on_s(a: &ComplexMatrix) -> ComplexMatrix {
    tensor(a, &id2())
}

/// `1 ⊗ a`
pub fn on_a(a: &ComplexMatrix) -> ComplexMatrix {
    tensor(&id2(), a)
}

/// `i σ_a ⊗ σ_b`, the skew-Hermitian product of two `su(2)` basis elements.
pub fn i_sigma_sigma(a: Axis, b: Axis) -> ComplexMatrix {
    tensor(&sigma(a), &sigma(b)).scale(Complex64::new(0.0, 1.0))
}
