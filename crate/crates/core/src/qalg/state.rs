use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::eigen::hermitian_eigen;
use super::matrix::ComplexMatrix;
use super::pauli::{sigma_tilde, Axis};
use crate::{Error, Result};

/// Smallest eigenvalue tolerated in a density matrix.
pub const EIGEN_FLOOR: f64 = -1e-10;
/// Slack on `|p| ≤ 1` for Bloch vectors.
pub const BLOCH_SLACK: f64 = 1e-9;

/// Which factor of `S ⊗ A` to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    S,
    A,
}

/// Partial trace over the factor *not* kept.
pub fn partial_trace(rho: &ComplexMatrix, keep: Subsystem) -> Result<ComplexMatrix> {
    if rho.dim() != 4 {
        return Err(Error::WrongDimension {
            expected: 4,
            found: rho.dim(),
        });
    }
    // row index = 2·s + a
    Ok(match keep {
        Subsystem::S => ComplexMatrix::from_fn(2, |i, j| rho[(2 * i, 2 * j)] + rho[(2 * i + 1, 2 * j + 1)]),
        Subsystem::A => ComplexMatrix::from_fn(2, |i, j| rho[(i, j)] + rho[(i + 2, j + 2)]),
    })
}

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    pub fn new(m: ComplexMatrix, tol: f64) -> Result<Self> {
        if m.as_slice().iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("density matrix"));
        }
        if !m.is_hermitian(tol) {
            return Err(Error::NotDensityMatrix("not Hermitian"));
        }
        if (m.trace() - Complex64::new(1.0, 0.0)).norm() > tol {
            return Err(Error::NotDensityMatrix("trace is not 1"));
        }
        let eig = hermitian_eigen(&m);
        if eig.values[0] < EIGEN_FLOOR {
            return Err(Error::NotDensityMatrix("negative eigenvalue"));
        }
        Ok(DensityMatrix(m))
    }

    /// `½·1` on a qubit.
    pub fn maximally_mixed() -> Self {
        DensityMatrix(ComplexMatrix::identity(2).scale_re(0.5))
    }

    /// `E₁ = diag(1, 0)`.
    pub fn ground() -> Self {
        let mut m = ComplexMatrix::zeros(2);
        m[(0, 0)] = Complex64::new(1.0, 0.0);
        DensityMatrix(m)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// Eigenvalues, ascending.
    pub fn spectrum(&self) -> alloc::vec::Vec<f64> {
        hermitian_eigen(&self.0).values
    }

    /// `Tr ρ²`
    pub fn purity(&self) -> f64 {
        self.0.inner_re(&self.0)
    }

    /// `ρ ⊗ σ`
    pub fn tensor(&self, other: &DensityMatrix) -> DensityMatrix {
        DensityMatrix(super::tensor(&self.0, &other.0))
    }

    pub fn evolve(&self, u: &ComplexMatrix) -> DensityMatrix {
        DensityMatrix(self.0.conjugate_by(u))
    }

    pub fn partial_trace(&self, keep: Subsystem) -> Result<DensityMatrix> {
        partial_trace(&self.0, keep).map(DensityMatrix)
    }
}

/// Bloch coordinates `(x, y, z)` of `½(1 + x σ̃_x + y σ̃_y + z σ̃_z)`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct BlochPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochPoint {
    pub const ORIGIN: BlochPoint = BlochPoint { x: 0.0, y: 0.0, z: 0.0 };

    /// Validated constructor; rejects points outside the closed unit ball.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let p = BlochPoint { x, y, z };
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite("Bloch vector"));
        }
        let norm = p.norm();
        if norm > 1.0 + BLOCH_SLACK {
            return Err(Error::OutsideBlochBall { norm });
        }
        Ok(p)
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

/// Bloch vector of a qubit state: `x = Tr(ρ σ̃_x)` and so on.
pub fn bloch(rho: &DensityMatrix) -> Result<BlochPoint> {
    if rho.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: rho.dim(),
        });
    }
    Ok(bloch_of(rho.matrix()))
}

/// Bloch coordinates of any 2×2 matrix, without validation.
pub(crate) fn bloch_of(m: &ComplexMatrix) -> BlochPoint {
    // Re Tr(ρ σ̃) = ⟨σ̃, ρ⟩ since σ̃ is Hermitian
    let c = |axis| sigma_tilde(axis).inner_re(m);
    BlochPoint {
        x: c(Axis::X),
        y: c(Axis::Y),
        z: c(Axis::Z),
    }
}

pub fn bloch_inverse(p: BlochPoint) -> Result<DensityMatrix> {
    let norm = p.norm();
    if !norm.is_finite() {
        return Err(Error::NonFinite("Bloch vector"));
    }
    if norm > 1.0 + BLOCH_SLACK {
        return Err(Error::OutsideBlochBall { norm });
    }
    Ok(DensityMatrix(state_from_bloch(p)))
}

pub(crate) fn state_from_bloch(p: BlochPoint) -> ComplexMatrix {
    // ½ [[1 + z, x + i y], [x − i y, 1 − z]] with σ̃_y = [[0, i], [−i, 0]]
    let h = 0.5;
    let entries = [
        Complex64::new(h * (1.0 + p.z), 0.0),
        Complex64::new(h * p.x, h * p.y),
        Complex64::new(h * p.x, -h * p.y),
        Complex64::new(h * (1.0 - p.z), 0.0),
    ];
    ComplexMatrix::from_fn(2, |r, c| entries[2 * r + c])
}
