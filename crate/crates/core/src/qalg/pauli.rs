use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::real3::Vec3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }
}

const HALF_I: Complex64 = Complex64::new(0.0, 0.5);

/// Pauli matrix `σ̃_axis` when `tilde` is set, otherwise `σ_axis = (i/2) σ̃_axis`.
///
/// Note the sign convention `σ̃_y = [[0, i], [-i, 0]]`, which makes
/// `[σ_x, σ_y] = σ_z` hold for the skew-Hermitian basis.
pub fn pauli(axis: Axis, tilde: bool) -> ComplexMatrix {
    let o = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let entries = match axis {
        Axis::X => [o, one, one, o],
        Axis::Y => [o, i, -i, o],
        Axis::Z => [one, o, o, -one],
    };
    let t = ComplexMatrix::from_fn(2, |r, c| entries[2 * r + c]);
    if tilde {
        t
    } else {
        t.scale(HALF_I)
    }
}

#[inline]
pub fn sigma(axis: Axis) -> ComplexMatrix {
    pauli(axis, false)
}

#[inline]
pub fn sigma_tilde(axis: Axis) -> ComplexMatrix {
    pauli(axis, true)
}

/// `σ_a = a_x σ_x + a_y σ_y + a_z σ_z`, the element of `su(2)` matching `a`.
pub fn sigma_from_vec(a: Vec3) -> ComplexMatrix {
    // (i/2) [[a_z, a_x + i a_y], [a_x − i a_y, −a_z]]
    let [x, y, z] = a;
    let m = [
        Complex64::new(z, 0.0),
        Complex64::new(x, y),
        Complex64::new(x, -y),
        Complex64::new(-z, 0.0),
    ];
    ComplexMatrix::from_fn(2, |r, c| m[2 * r + c] * HALF_I)
}

/// Inverse of [`sigma_from_vec`] on `su(2)`; the identity part of `m` is ignored.
pub fn vec_from_su2(m: &ComplexMatrix) -> Vec3 {
    // σ_j have Re Tr(σ_j† σ_k) = δ_jk / 2
    let coord = |axis| 2.0 * sigma(axis).inner_re(m);
    [coord(Axis::X), coord(Axis::Y), coord(Axis::Z)]
}
