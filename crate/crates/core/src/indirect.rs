//! Steering the target through the accessor.
//!
//! [`gennegat_test`] is the Lie-algebraic obstruction; the remaining
//! functions build explicit unitaries that realize a requested change of
//! the target's reduced state.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::lie::{self, LieBasis};
use crate::qalg::real3::{self, Vec3};
use crate::qalg::{
    bloch, exp_skew, hermitian_eigen, i_sigma_sigma, normal_eigen, on_a, on_s, partial_trace, sigma, tensor,
    Axis, ComplexMatrix, DensityMatrix, Subsystem,
};
use crate::{Error, Result, Tolerances};

/// One-sided verdict: `uic_excluded` proves the target cannot be steered
/// freely from this initial pair; `false` is inconclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GennegatVerdict {
    pub v_dim: usize,
    pub trace_image_dim: usize,
    pub uic_excluded: bool,
}

fn require_qubit(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: rho.dim(),
        });
    }
    Ok(())
}

/// Smallest `L`-invariant space `V` through `i ρ_S ⊗ ρ_A`, and the dimension
/// of its image under `Tr_A`. An image smaller than `u(2)` excludes unitary
/// indirect controllability.
pub fn gennegat_test(
    l: &LieBasis,
    rho_s: &DensityMatrix,
    rho_a: &DensityMatrix,
    tol: &Tolerances,
) -> Result<GennegatVerdict> {
    require_qubit(rho_s)?;
    require_qubit(rho_a)?;
    if bloch(rho_s)?.norm() <= tol.rank {
        return Err(Error::MaximallyMixed);
    }
    if l.matrix_dim() != 4 && !l.is_empty() {
        return Err(Error::WrongDimension {
            expected: 4,
            found: l.matrix_dim(),
        });
    }
    let seed = rho_s.tensor(rho_a).into_matrix().scale(Complex64::new(0.0, 1.0));
    let v = lie::invariant_space(l, &seed, tol.rank);
    let image = lie::trace_a_image(&v, tol.rank)?;
    Ok(GennegatVerdict {
        v_dim: v.len(),
        trace_image_dim: image.len(),
        uic_excluded: image.len() < 4,
    })
}

/// Tolerance on `‖X†X − 1‖` and `|det X − 1|` for `SU(2)` inputs.
pub const SU2_TOL: f64 = 1e-10;

fn check_su2(x: &ComplexMatrix) -> Result<()> {
    if x.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: x.dim(),
        });
    }
    let residual = x
        .unitarity_residual()
        .max((x.determinant() - Complex64::new(1.0, 0.0)).norm());
    if residual.is_nan() || residual > SU2_TOL {
        return Err(Error::NotSpecialUnitary { residual });
    }
    Ok(())
}

/// Angles `(t₂, t, t₁)` with `X = e^{t₂σ_z} e^{tσ_x} e^{t₁σ_z}`.
pub fn euler_su2(x: &ComplexMatrix) -> Result<(f64, f64, f64)> {
    check_su2(x)?;
    // X = [[a, b], [−b̄, ā]] with a = cos(t/2) e^{i(t₁+t₂)/2}, b = i sin(t/2) e^{i(t₂−t₁)/2}
    let a = x[(0, 0)];
    let b = x[(0, 1)];
    let t = 2.0 * b.norm().atan2(a.norm());
    let gimbal = 1e-12;
    let (sum, diff) = if b.norm() < gimbal {
        (2.0 * a.arg(), 2.0 * a.arg())
    } else if a.norm() < gimbal {
        let d = 2.0 * (b * Complex64::new(0.0, -1.0)).arg();
        (d, d)
    } else {
        (2.0 * a.arg(), 2.0 * (b * Complex64::new(0.0, -1.0)).arg())
    };
    // in the gimbal cases only one combination is fixed; put it all on t₂
    let (t2, t1) = if b.norm() < gimbal || a.norm() < gimbal {
        (sum, 0.0)
    } else {
        ((sum + diff) / 2.0, (sum - diff) / 2.0)
    };
    Ok((t2, t, t1))
}

/// `e^{t₂σ_z} e^{tσ_x} e^{t₁σ_z}`
pub fn euler_compose(t2: f64, t: f64, t1: f64) -> ComplexMatrix {
    let z = |a: f64| exp_skew(&sigma(Axis::Z).scale_re(a));
    &(&z(t2) * &exp_skew(&sigma(Axis::X).scale_re(t))) * &z(t1)
}

/// Generators whose exponentials, multiplied left to right, give the
/// steering unitary of [`pure_uic_steer`]:
/// `t₂ σ_z⊗1`, `−2θ · iσ_x⊗σ_z`, `t₁ σ_z⊗1`.
pub fn pure_uic_generators(x: &ComplexMatrix) -> Result<[ComplexMatrix; 3]> {
    let (t2, theta, t1) = euler_su2(x)?;
    Ok([
        on_s(&sigma(Axis::Z)).scale_re(t2),
        i_sigma_sigma(Axis::X, Axis::Z).scale_re(-2.0 * theta),
        on_s(&sigma(Axis::Z)).scale_re(t1),
    ])
}

/// `T` with `Tr_A(T (ρ_S ⊗ E₁) T†) = X ρ_S X†`, built only from directions of
/// the Ising-model algebra. The accessor must start in `E₁ = diag(1, 0)`;
/// see [`accessor_to_ground`] for other pure states.
pub fn pure_uic_steer(rho_s: &DensityMatrix, x: &ComplexMatrix) -> Result<ComplexMatrix> {
    require_qubit(rho_s)?;
    let [g2, g, g1] = pure_uic_generators(x)?;
    Ok(&(&exp_skew(&g2) * &exp_skew(&g)) * &exp_skew(&g1))
}

/// `P ∈ SU(2)` with `P ψ P† = E₁` for a pure qubit state `ψ`.
pub fn accessor_to_ground(psi: &DensityMatrix, tol: &Tolerances) -> Result<ComplexMatrix> {
    require_qubit(psi)?;
    let p = bloch(psi)?;
    let u = real3::unit(p.to_array(), 0.0).ok_or(Error::NotPure { largest_eigenvalue: 0.5 })?;
    if (p.norm() - 1.0).abs() > tol.rank {
        return Err(Error::NotPure {
            largest_eigenvalue: 0.5 * (1.0 + p.norm()),
        });
    }
    Ok(real3::su2_from_rotation(&frame_with_third_row(u)))
}

fn frame_with_third_row(u: Vec3) -> real3::Mat3 {
    let e2 = real3::any_orthogonal(u);
    [real3::cross(e2, u), e2, u]
}

/// The operator exchanging the two tensor factors.
pub fn swap_op() -> ComplexMatrix {
    let mut s = ComplexMatrix::zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            s[(2 * i + j, 2 * j + i)] = Complex64::new(1.0, 0.0);
        }
    }
    s
}

/// Unit state vector of a pure density matrix.
fn pure_vector(psi: &DensityMatrix, tol: &Tolerances) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    require_qubit(psi)?;
    let eig = hermitian_eigen(psi.matrix());
    let largest = eig.values[1];
    if (largest - 1.0).abs() > tol.rank {
        return Err(Error::NotPure {
            largest_eigenvalue: largest,
        });
    }
    Ok((eig.vectors.column(1), eig.vectors.column(0)))
}

/// Unitary sending `ρ_S ⊗ ψ` to a state whose target marginal is `½·1`.
///
/// The product basis `|u_j⟩⊗|ψ⟩, |u_j⟩⊗|ψ⊥⟩`, with `|u_j⟩` the eigenvectors of
/// `ρ_S`, is mapped onto the Bell basis with the `|ψ⟩` half going to
/// `(|00⟩+|11⟩)/√2` and `(|01⟩−|10⟩)/√2`.
pub fn fic_mix(rho_s: &DensityMatrix, psi_a: &DensityMatrix, tol: &Tolerances) -> Result<ComplexMatrix> {
    require_qubit(rho_s)?;
    let (psi, psi_perp) = pure_vector(psi_a, tol)?;
    let eig = hermitian_eigen(rho_s.matrix());
    let u = [eig.vectors.column(0), eig.vectors.column(1)];
    let kron = |a: &[Complex64], b: &[Complex64]| -> Vec<Complex64> {
        a.iter().flat_map(|&x| b.iter().map(move |&y| x * y)).collect()
    };
    let inputs = [
        kron(&u[0], &psi),
        kron(&u[1], &psi),
        kron(&u[0], &psi_perp),
        kron(&u[1], &psi_perp),
    ];
    let h = core::f64::consts::FRAC_1_SQRT_2;
    let bell: [[f64; 4]; 4] = [
        [h, 0.0, 0.0, h],
        [0.0, h, -h, 0.0],
        [h, 0.0, 0.0, -h],
        [0.0, h, h, 0.0],
    ];
    let mut m = ComplexMatrix::zeros(4);
    for (out, inp) in bell.iter().zip(&inputs) {
        let out: Vec<Complex64> = out.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        m += &ComplexMatrix::outer(&out, inp);
    }
    Ok(m)
}

/// Result of [`fic_reach`].
#[derive(Clone, Debug)]
pub struct FicReach {
    pub unitary: ComplexMatrix,
    /// Position on the path from `SWAP` (`0`) to the mixing unitary (`1`).
    pub theta: f64,
    /// `‖Tr_A(U ρ_S⊗ψ U†) − target‖_F`
    pub residual: f64,
}

const BISECTION_STEPS: usize = 200;
/// Contract on the reached state.
pub const FIC_TOL: f64 = 1e-8;

/// Unitary steering the target from `ρ_S` to `target` with a pure accessor.
///
/// Walks `U(θ) = W^θ · SWAP` with `W = U_mix · SWAP†`, which runs from
/// handing the target the accessor's pure state (`θ = 0`) to the maximally
/// mixed marginal (`θ = 1`). `θ` is bisected on the Bloch radius of the
/// marginal, and a final rotation on the target aligns the eigenvectors.
pub fn fic_reach(
    rho_s: &DensityMatrix,
    psi_a: &DensityMatrix,
    target: &DensityMatrix,
    tol: &Tolerances,
) -> Result<FicReach> {
    require_qubit(target)?;
    let swap = swap_op();
    let mix = fic_mix(rho_s, psi_a, tol)?;
    let w = &mix * &swap;
    let (values, vecs) = normal_eigen(&w).ok_or(Error::NoConvergence("eigendecomposition of the path"))?;
    let phases: Vec<f64> = values.iter().map(|z| z.arg()).collect();
    let initial = rho_s.tensor(psi_a).into_matrix();

    let path = |theta: f64| -> ComplexMatrix {
        let d: Vec<Complex64> = phases.iter().map(|&p| Complex64::new(0.0, p * theta).exp()).collect();
        &(&(&vecs * &ComplexMatrix::diagonal(&d)) * &vecs.adjoint()) * &swap
    };
    let marginal = |u: &ComplexMatrix| partial_trace(&initial.conjugate_by(u), Subsystem::S);
    let radius = |theta: f64| -> Result<f64> { Ok(crate::qalg::bloch_of(&marginal(&path(theta))?).norm()) };

    let goal = bloch(target)?.norm();
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let (f_lo, f_hi) = (radius(lo)? - goal, radius(hi)? - goal);
    if f_lo < -tol.eq || f_hi > tol.eq {
        return Err(Error::NoConvergence("bisection could not bracket the target radius"));
    }
    let mut theta = if f_lo.abs() <= f_hi.abs() { lo } else { hi };
    let mut best = f_lo.abs().min(f_hi.abs());
    for _ in 0..BISECTION_STEPS {
        if best <= 1e-14 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f = radius(mid)? - goal;
        if f.abs() < best {
            best = f.abs();
            theta = mid;
        }
        if f > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON {
            break;
        }
    }

    let u_theta = path(theta);
    let reached = marginal(&u_theta)?;
    let unitary = if reached.distance(target.matrix()) <= 1e-12 {
        u_theta
    } else {
        // V = Σ |t_i⟩⟨r_i| over matching eigenvalue order
        let r = hermitian_eigen(&reached).vectors;
        let t = hermitian_eigen(target.matrix()).vectors;
        let v = &t * &r.adjoint();
        &tensor(&v, &ComplexMatrix::identity(2)) * &u_theta
    };
    let residual = marginal(&unitary)?.distance(target.matrix());
    if residual > FIC_TOL {
        return Err(Error::VerificationFailed { residual });
    }
    Ok(FicReach {
        unitary,
        theta,
        residual,
    })
}

/// Convenience: `1 ⊗ P` for the accessor preparation step.
pub fn on_accessor(p: &ComplexMatrix) -> ComplexMatrix {
    on_a(p)
}
