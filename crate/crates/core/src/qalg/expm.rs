use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::eigen::{hermitian_eigen, normal_eigen};
use super::matrix::ComplexMatrix;
use crate::{Error, Result};

const SKEW_TOL: f64 = 1e-12;
const SERIES_TERMS: usize = 30;

/// Matrix exponential.
///
/// With `skew_hermitian` set, `a` must be skew-Hermitian; the result is then
/// built from the eigendecomposition of the Hermitian matrix `i·a` and is
/// unitary to rounding. Otherwise a scaled Taylor series is squared back up.
pub fn mat_exp(a: &ComplexMatrix, skew_hermitian: bool) -> Result<ComplexMatrix> {
    if skew_hermitian {
        let residual = a.skew_hermitian_residual();
        if residual > SKEW_TOL * a.frobenius_norm().max(1.0) {
            return Err(Error::NotSkewHermitian { residual });
        }
        Ok(exp_skew(a))
    } else {
        if a.as_slice().iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("matrix"));
        }
        Ok(exp_series(a))
    }
}

/// `e^a` for skew-Hermitian `a` without the input check.
pub(crate) fn exp_skew(a: &ComplexMatrix) -> ComplexMatrix {
    // a = −i H with H = i a Hermitian, so e^a = V e^{−iΛ} V†
    let h = a.scale(Complex64::new(0.0, 1.0));
    let eig = hermitian_eigen(&h);
    let phases: Vec<Complex64> = eig
        .values
        .iter()
        .map(|&l| Complex64::new(0.0, -l).exp())
        .collect();
    let v = &eig.vectors;
    &(v * &ComplexMatrix::diagonal(&phases)) * &v.adjoint()
}

/// Scaling and squaring around a truncated Taylor series.
pub fn exp_series(a: &ComplexMatrix) -> ComplexMatrix {
    let norm = a.frobenius_norm();
    let mut squarings = 0u32;
    let mut scaled_norm = norm;
    while scaled_norm > 0.5 {
        scaled_norm *= 0.5;
        squarings += 1;
    }
    let b = a.scale_re(0.5f64.powi(squarings as i32));
    let n = a.dim();
    let mut result = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..=SERIES_TERMS {
        term = (&term * &b).scale_re(1.0 / k as f64);
        result += &term;
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

/// Principal logarithm of a unitary matrix (eigenphases in `(−π, π]`).
pub fn unitary_log(u: &ComplexMatrix) -> Result<ComplexMatrix> {
    let (values, vecs) = normal_eigen(u).ok_or(Error::NoConvergence("unitary eigendecomposition"))?;
    let logs: Vec<Complex64> = values.iter().map(|z| Complex64::new(0.0, z.arg())).collect();
    Ok(&(&vecs * &ComplexMatrix::diagonal(&logs)) * &vecs.adjoint())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::pauli::{sigma, Axis};

    #[test]
    fn exp_zero_is_identity() {
        let z = ComplexMatrix::zeros(4);
        assert!(mat_exp(&z, true).unwrap().approx_eq(&ComplexMatrix::identity(4), 1e-15));
        assert!(mat_exp(&z, false).unwrap().approx_eq(&ComplexMatrix::identity(4), 1e-15));
    }

    #[test]
    fn exp_sigma_z() {
        let t = 0.83;
        let e = mat_exp(&sigma(Axis::Z).scale_re(t), true).unwrap();
        let expected = ComplexMatrix::diagonal(&[
            Complex64::new(0.0, t / 2.0).exp(),
            Complex64::new(0.0, -t / 2.0).exp(),
        ]);
        assert!(e.approx_eq(&expected, 1e-15));
    }

    #[test]
    fn rejects_hermitian_input_when_flagged() {
        let h = ComplexMatrix::identity(2);
        assert!(matches!(mat_exp(&h, true), Err(Error::NotSkewHermitian { .. })));
    }

    #[test]
    fn log_inverts_exp() {
        let a = &sigma(Axis::X).scale_re(1.3) + &sigma(Axis::Z).scale_re(-0.4);
        let u = exp_skew(&a);
        let back = unitary_log(&u).unwrap();
        assert!(back.approx_eq(&a, 1e-12));
    }
}
