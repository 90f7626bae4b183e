use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense square complex matrix, row-major.
///
/// Arithmetic operators panic on a size mismatch, the same way slice indexing
/// does. The fallible entry points (`commutator`, `try_mul`, ...) return
/// [`Error::DimensionMismatch`] instead.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn diagonal(entries: &[Complex64]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &z) in entries.iter().enumerate() {
            m[(i, i)] = z;
        }
        m
    }

    /// Builds a matrix from row-major entries; the length must be a perfect square.
    pub fn from_vec(data: Vec<Complex64>) -> Result<Self> {
        let dim = (data.len() as f64).sqrt().round() as usize;
        if dim * dim != data.len() {
            return Err(Error::NotSquare { len: data.len() });
        }
        Ok(ComplexMatrix { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        ComplexMatrix { dim, data }
    }

    /// `|u⟩⟨v|`
    pub fn outer(u: &[Complex64], v: &[Complex64]) -> Self {
        assert_eq!(u.len(), v.len(), "outer product of vectors of different length");
        Self::from_fn(u.len(), |i, j| u[i] * v[j].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, z: Complex64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&a| a * z).collect(),
        }
    }

    pub fn scale_re(&self, x: f64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&a| a * x).collect(),
        }
    }

    /// `self += x * other`
    pub fn axpy(&mut self, x: f64, other: &ComplexMatrix) {
        assert_eq!(self.dim, other.dim, "axpy on matrices of different size");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b * x;
        }
    }

    /// Real Frobenius inner product `Re Tr(A†B)`.
    pub fn inner_re(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "inner product of matrices of different size");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.re * b.re + a.im * b.im)
            .sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    /// Frobenius distance to `other`.
    pub fn distance(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "distance between matrices of different size");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Entrywise comparison with absolute tolerance `tol`.
    pub fn approx_eq(&self, other: &ComplexMatrix, tol: f64) -> bool {
        self.dim == other.dim
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| (a - b).norm() <= tol)
    }

    /// `‖A − A†‖_F`
    pub fn hermitian_residual(&self) -> f64 {
        self.distance(&self.adjoint())
    }

    /// `‖A + A†‖_F`
    pub fn skew_hermitian_residual(&self) -> f64 {
        (self + &self.adjoint()).frobenius_norm()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_residual() <= tol
    }

    pub fn is_skew_hermitian(&self, tol: f64) -> bool {
        self.skew_hermitian_residual() <= tol
    }

    /// `‖A†A − 1‖_F`
    pub fn unitarity_residual(&self) -> f64 {
        (&self.adjoint() * self).distance(&Self::identity(self.dim))
    }

    pub fn try_mul(&self, rhs: &ComplexMatrix) -> Result<Self> {
        check_same(self, rhs)?;
        Ok(self * rhs)
    }

    pub fn determinant(&self) -> Complex64 {
        // Gaussian elimination with partial pivoting; only used on 2x2 and 4x4.
        let n = self.dim;
        let mut a = self.data.clone();
        let mut det = ONE;
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&r, &s| a[r * n + col].norm().total_cmp(&a[s * n + col].norm()))
                .unwrap_or(col);
            if a[pivot * n + col].is_zero() {
                return ZERO;
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det *= p;
            for r in col + 1..n {
                let factor = a[r * n + col] / p;
                for k in col..n {
                    let v = a[col * n + k];
                    a[r * n + k] -= factor * v;
                }
            }
        }
        det
    }

    pub fn mat_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.dim, v.len(), "matrix-vector size mismatch");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// `U A U†`
    pub fn conjugate_by(&self, u: &ComplexMatrix) -> Self {
        &(u * self) * &u.adjoint()
    }
}

fn check_same(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<()> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            left: a.dim,
            right: b.dim,
        });
    }
    Ok(())
}

/// Kronecker product `a ⊗ b`, first factor outermost.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (m, n) = (a.dim, b.dim);
    ComplexMatrix::from_fn(m * n, |i, j| a[(i / n, j / n)] * b[(i % n, j % n)])
}

/// `[a, b] = ab − ba`
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_same(a, b)?;
    Ok(bracket(a, b))
}

/// `{a, b} = ab + ba`
pub fn anticommutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_same(a, b)?;
    Ok(&(a * b) + &(b * a))
}

/// Infallible commutator for internal use where sizes are known to agree.
#[inline]
pub(crate) fn bracket(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    &(a * b) - &(b * a)
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            f.write_str("  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            f.write_str("\n")?;
        }
        f.write_str("]")
    }
}

impl<'a> Mul<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix product of different sizes");
        let n = self.dim;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                let row = &rhs.data[k * n..(k + 1) * n];
                for (o, &b) in out[i * n..(i + 1) * n].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        ComplexMatrix { dim: n, data: out }
    }
}

impl Mul for ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        &self * &rhs
    }
}

impl Mul<Complex64> for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, z: Complex64) -> ComplexMatrix {
        self.scale(z)
    }
}

impl Mul<f64> for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, x: f64) -> ComplexMatrix {
        self.scale_re(x)
    }
}

impl Mul<f64> for ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(mut self, x: f64) -> ComplexMatrix {
        self.data.iter_mut().for_each(|a| *a *= x);
        self
    }
}

impl Mul<Complex64> for ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(mut self, z: Complex64) -> ComplexMatrix {
        self.data.iter_mut().for_each(|a| *a *= z);
        self
    }
}

macro_rules! elementwise {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign:ident, $op:tt) => {
        impl<'a> $tr<&'a ComplexMatrix> for &'a ComplexMatrix {
            type Output = ComplexMatrix;

            fn $method(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
                assert_eq!(self.dim, rhs.dim, "elementwise op on matrices of different size");
                ComplexMatrix {
                    dim: self.dim,
                    data: self.data.iter().zip(&rhs.data).map(|(a, b)| a $op b).collect(),
                }
            }
        }

        impl $tr for ComplexMatrix {
            type Output = ComplexMatrix;

            fn $method(mut self, rhs: ComplexMatrix) -> ComplexMatrix {
                self.$assign(&rhs);
                self
            }
        }

        impl<'a> $assign_tr<&'a ComplexMatrix> for ComplexMatrix {
            fn $assign(&mut self, rhs: &'a ComplexMatrix) {
                assert_eq!(self.dim, rhs.dim, "elementwise op on matrices of different size");
                for (a, b) in self.data.iter_mut().zip(&rhs.data) {
                    *a = *a $op b;
                }
            }
        }
    };
}

elementwise!(Add, add, AddAssign, add_assign, +);
elementwise!(Sub, sub, SubAssign, sub_assign, -);

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.scale_re(-1.0)
    }
}

impl Neg for ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self * -1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn kronecker_of_identities_is_identity() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(tensor(&i2, &i2), ComplexMatrix::identity(4));
    }

    #[test]
    fn kronecker_puts_first_factor_outermost() {
        let a = ComplexMatrix::from_vec(vec![c(1., 0.), c(2., 0.), c(3., 0.), c(4., 0.)]).unwrap();
        let b = ComplexMatrix::identity(2);
        let ab = tensor(&a, &b);
        assert_eq!(ab[(0, 2)], c(2., 0.));
        assert_eq!(ab[(1, 3)], c(2., 0.));
        assert_eq!(ab[(0, 1)], c(0., 0.));
        assert_eq!(ab[(3, 1)], c(3., 0.));
    }

    #[test]
    fn commutator_rejects_mismatched_sizes() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(4);
        assert_eq!(
            commutator(&a, &b),
            Err(Error::DimensionMismatch { left: 2, right: 4 })
        );
        assert!(anticommutator(&a, &b).is_err());
    }

    #[test]
    fn self_commutator_vanishes() {
        let a = ComplexMatrix::from_fn(4, |i, j| c(i as f64 - 0.3 * j as f64, (i * j) as f64));
        assert_eq!(commutator(&a, &a).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn from_vec_rejects_non_square_length() {
        assert_eq!(
            ComplexMatrix::from_vec(vec![ZERO; 5]),
            Err(Error::NotSquare { len: 5 })
        );
    }

    #[test]
    fn determinant_of_permutation() {
        let mut p = ComplexMatrix::zeros(4);
        p[(0, 0)] = ONE;
        p[(1, 2)] = ONE;
        p[(2, 1)] = ONE;
        p[(3, 3)] = ONE;
        assert!((p.determinant() - c(-1.0, 0.0)).norm() < 1e-15);
    }
}
