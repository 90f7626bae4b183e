//! Small real 3-vector and 3×3 matrix helpers.
//!
//! `K` matrices, Bloch vectors and `SO(3)` rotations are all this size.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::eigen::hermitian_eigen;
use super::matrix::ComplexMatrix;
use super::pauli::sigma_from_vec;

pub type Vec3 = [f64; 3];
pub type Mat3 = [[f64; 3]; 3];

pub const IDENTITY3: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

#[inline]
pub fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

#[inline]
pub fn scale(a: Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

#[inline]
pub fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Component of `a` perpendicular to the unit vector `u`.
#[inline]
pub fn reject(a: Vec3, u: Vec3) -> Vec3 {
    sub(a, scale(u, dot(a, u)))
}

/// `a / |a|`, or `None` when `|a| <= tol`.
pub fn unit(a: Vec3, tol: f64) -> Option<Vec3> {
    let n = norm(a);
    (n > tol).then(|| scale(a, 1.0 / n))
}

/// A unit vector orthogonal to the unit vector `u`.
pub fn any_orthogonal(u: Vec3) -> Vec3 {
    // cross with the basis axis least aligned with u
    let k = (0..3)
        .min_by(|&i, &j| u[i].abs().total_cmp(&u[j].abs()))
        .unwrap_or(0);
    let mut e = [0.0; 3];
    e[k] = 1.0;
    let v = cross(u, e);
    scale(v, 1.0 / norm(v))
}

pub fn mat_vec(m: &Mat3, v: Vec3) -> Vec3 {
    [dot(m[0], v), dot(m[1], v), dot(m[2], v)]
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn transpose(m: &Mat3) -> Mat3 {
    let mut t = [[0.0; 3]; 3];
    for (i, row) in m.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            t[j][i] = x;
        }
    }
    t
}

pub fn det(m: &Mat3) -> f64 {
    dot(m[0], cross(m[1], m[2]))
}

pub fn frobenius(m: &Mat3) -> f64 {
    m.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
}

/// Singular values in descending order, with the leading right singular vector.
///
/// Computed from the Hermitian dilation `[[0, M], [Mᵀ, 0]]`, whose spectrum is
/// `±σ_i`; this keeps the absolute accuracy at `ε·σ_max` instead of squaring
/// the condition number as `MᵀM` would.
pub fn svd_values(m: &Mat3) -> ([f64; 3], Vec3) {
    let dilation = ComplexMatrix::from_fn(6, |i, j| match (i < 3, j < 3) {
        (true, false) => Complex64::new(m[i][j - 3], 0.0),
        (false, true) => Complex64::new(m[j][i - 3], 0.0),
        _ => Complex64::new(0.0, 0.0),
    });
    let eig = hermitian_eigen(&dilation);
    // ascending: the top three are σ_3 ≤ σ_2 ≤ σ_1 up to rounding
    let mut sv = [eig.values[5], eig.values[4], eig.values[3]];
    for s in &mut sv {
        *s = s.max(0.0);
    }
    let top = eig.vectors.column(5);
    let mut v = [top[3].re, top[4].re, top[5].re];
    // the eigenvector can carry an arbitrary phase; the real part survives
    // unless the phase is close to ±i, in which case take the imaginary part
    if norm(v) < 1e-6 {
        v = [top[3].im, top[4].im, top[5].im];
    }
    let v = unit(v, 0.0).unwrap_or([1.0, 0.0, 0.0]);
    (sv, v)
}

/// Numerical rank: count of singular values above `rel_tol · σ_max`.
pub fn rank(m: &Mat3, rel_tol: f64) -> usize {
    let (sv, _) = svd_values(m);
    if sv[0] == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * sv[0]).count()
}

/// Rotation matrix whose rows are the given right-handed orthonormal frame.
pub fn frame_rows(r1: Vec3, r2: Vec3, r3: Vec3) -> Mat3 {
    [r1, r2, r3]
}

/// Rotation by `angle` about the unit vector `axis` (right-hand rule).
pub fn rotation(axis: Vec3, angle: f64) -> Mat3 {
    let [x, y, z] = axis;
    let (s, c) = angle.sin_cos();
    let t = 1.0 - c;
    [
        [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
        [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
        [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
    ]
}

/// The `SU(2)` element `U` with `U σ_v U† = σ_{R v}` for every `v`.
///
/// `R` must be a proper rotation. `U` is fixed up to the unavoidable sign.
pub fn su2_from_rotation(r: &Mat3) -> ComplexMatrix {
    // Unit quaternion (w, q) of R, then U = e^{θ σ_n} = w·1 + 2 σ_q.
    let tr = r[0][0] + r[1][1] + r[2][2];
    let (w, q) = if tr > 0.0 {
        let s = (tr + 1.0).sqrt() * 2.0;
        (
            0.25 * s,
            [(r[2][1] - r[1][2]) / s, (r[0][2] - r[2][0]) / s, (r[1][0] - r[0][1]) / s],
        )
    } else if r[0][0] > r[1][1] && r[0][0] > r[2][2] {
        let s = (1.0 + r[0][0] - r[1][1] - r[2][2]).sqrt() * 2.0;
        (
            (r[2][1] - r[1][2]) / s,
            [0.25 * s, (r[0][1] + r[1][0]) / s, (r[0][2] + r[2][0]) / s],
        )
    } else if r[1][1] > r[2][2] {
        let s = (1.0 + r[1][1] - r[0][0] - r[2][2]).sqrt() * 2.0;
        (
            (r[0][2] - r[2][0]) / s,
            [(r[0][1] + r[1][0]) / s, 0.25 * s, (r[1][2] + r[2][1]) / s],
        )
    } else {
        let s = (1.0 + r[2][2] - r[0][0] - r[1][1]).sqrt() * 2.0;
        (
            (r[1][0] - r[0][1]) / s,
            [(r[0][2] + r[2][0]) / s, (r[1][2] + r[2][1]) / s, 0.25 * s],
        )
    };
    let mut u = sigma_from_vec(q).scale_re(2.0);
    u[(0, 0)] += w;
    u[(1, 1)] += w;
    u
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&IDENTITY3, 1e-9), 3);
        let k = [[1.0, 0.0, 0.0], [2.0, 0.0, 0.0], [0.0, 0.0, 0.0]];
        assert_eq!(rank(&k, 1e-9), 1);
        assert_eq!(rank(&[[0.0; 3]; 3], 1e-9), 0);
        let k2 = [[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 9.0]];
        assert_eq!(rank(&k2, 1e-9), 2);
    }

    #[test]
    fn singular_values_of_diagonal() {
        let m = [[3.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 2.0]];
        let (sv, v) = svd_values(&m);
        for (got, want) in sv.iter().zip([3.0, 2.0, 1.0]) {
            assert!((got - want).abs() < 1e-13);
        }
        assert!((v[0].abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn su2_conjugation_matches_rotation() {
        let axis = unit([0.3, -0.5, 0.8], 0.0).unwrap();
        let r = rotation(axis, 1.1);
        let u = su2_from_rotation(&r);
        assert!(u.unitarity_residual() < 1e-13);
        for v in [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.2, 0.4, -0.9]] {
            let lhs = sigma_from_vec(v).conjugate_by(&u);
            let rhs = sigma_from_vec(mat_vec(&r, v));
            assert!(lhs.approx_eq(&rhs, 1e-13));
        }
    }

    #[test]
    fn su2_from_half_turn() {
        // trace −1 exercises the non-trace branches
        let r = rotation([0.0, 1.0, 0.0], core::f64::consts::PI);
        let u = su2_from_rotation(&r);
        let v = [0.6, 0.0, 0.8];
        let lhs = sigma_from_vec(v).conjugate_by(&u);
        assert!(lhs.approx_eq(&sigma_from_vec(mat_vec(&r, v)), 1e-13));
    }
}
