//! Eigendecompositions of small Hermitian and normal matrices.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::matrix::ComplexMatrix;

/// Eigenpairs with eigenvalues ascending; column `k` of `vectors` pairs with `values[k]`.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

const MAX_SWEEPS: usize = 64;

/// Cyclic complex Jacobi. Only the Hermitian part of `a` is used.
pub fn hermitian_eigen(a: &ComplexMatrix) -> HermitianEigen {
    let n = a.dim();
    let mut m = ComplexMatrix::from_fn(n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
    let mut v = ComplexMatrix::identity(n);
    let scale = m.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[(i, j)].norm_sqr())
            .sum();
        if off.sqrt() <= 1e-17 * scale || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let values = order.iter().map(|&i| m[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |r, c| v[(r, order[c])]);
    HermitianEigen { values, vectors }
}

fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let e = apq / mag;
    let tau = (m[(q, q)].re - m[(p, p)].re) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // J = [[c, s e], [−s ē, c]] on the (p, q) plane; m ← J† m J, v ← v J
    let n = m.dim();
    let se = e * s;
    let se_bar = e.conj() * s;
    for k in 0..n {
        let (kp, kq) = (m[(k, p)], m[(k, q)]);
        m[(k, p)] = kp * c - kq * se_bar;
        m[(k, q)] = kp * se + kq * c;
        let (vp, vq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vp * c - vq * se_bar;
        v[(k, q)] = vp * se + vq * c;
    }
    for k in 0..n {
        let (pk, qk) = (m[(p, k)], m[(q, k)]);
        m[(p, k)] = pk * c - qk * se;
        m[(q, k)] = pk * se_bar + qk * c;
    }
    let (pp, qq) = (m[(p, p)].re, m[(q, q)].re);
    m[(p, p)] = Complex64::new(pp, 0.0);
    m[(q, q)] = Complex64::new(qq, 0.0);
    m[(p, q)] = Complex64::new(0.0, 0.0);
    m[(q, p)] = Complex64::new(0.0, 0.0);
}

/// Unitary eigenbasis of a normal matrix, with eigenvalues `v_k† W v_k`.
///
/// Diagonalizes a generic real combination of the Hermitian and
/// anti-Hermitian parts, which share the eigenvectors of `W`, and keeps the
/// first combination whose eigenvectors actually diagonalize `W`.
pub fn normal_eigen(w: &ComplexMatrix) -> Option<(Vec<Complex64>, ComplexMatrix)> {
    let n = w.dim();
    let wd = w.adjoint();
    let herm = (w + &wd).scale_re(0.5);
    let anti = (w - &wd).scale(Complex64::new(0.0, -0.5));
    let scale = w.frobenius_norm().max(1.0);
    for phi in [0.618_033_988_7, 1.3, -0.37, 2.9, 0.1] {
        let h = &herm + &anti.scale_re(phi);
        let eig = hermitian_eigen(&h);
        let vecs = eig.vectors;
        let d = &(&vecs.adjoint() * w) * &vecs;
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| d[(i, j)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-12 * scale {
            let values = (0..n).map(|i| d[(i, i)]).collect();
            return Some((values, vecs));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reconstruct(e: &HermitianEigen) -> ComplexMatrix {
        let d = ComplexMatrix::diagonal(
            &e.values.iter().map(|&x| Complex64::new(x, 0.0)).collect::<Vec<_>>(),
        );
        &(&e.vectors * &d) * &e.vectors.adjoint()
    }

    #[test]
    fn diagonalizes_complex_hermitian() {
        let a = ComplexMatrix::from_fn(4, |i, j| {
            let x = (i * 4 + j) as f64;
            let z = Complex64::new((x * 0.7).sin(), (x * 1.3).cos());
            if i == j {
                Complex64::new(z.re, 0.0)
            } else {
                z
            }
        });
        let h = ComplexMatrix::from_fn(4, |i, j| {
            if i <= j {
                a[(i, j)]
            } else {
                a[(j, i)].conj()
            }
        });
        let e = hermitian_eigen(&h);
        assert!(e.vectors.unitarity_residual() < 1e-13);
        assert!(reconstruct(&e).approx_eq(&h, 1e-13));
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn degenerate_spectrum() {
        let e = hermitian_eigen(&ComplexMatrix::identity(4));
        assert!(e.values.iter().all(|&x| (x - 1.0).abs() < 1e-15));
    }

    #[test]
    fn normal_eigen_of_permutation() {
        // 3-cycle on a 4-dim space: eigenvalues 1, 1, ω, ω²
        let mut p = ComplexMatrix::zeros(4);
        p[(1, 0)] = Complex64::new(1.0, 0.0);
        p[(2, 1)] = Complex64::new(1.0, 0.0);
        p[(0, 2)] = Complex64::new(1.0, 0.0);
        p[(3, 3)] = Complex64::new(1.0, 0.0);
        let (vals, vecs) = normal_eigen(&p).unwrap();
        let d = ComplexMatrix::diagonal(&vals);
        assert!((&(&vecs * &d) * &vecs.adjoint()).approx_eq(&p, 1e-12));
    }
}
