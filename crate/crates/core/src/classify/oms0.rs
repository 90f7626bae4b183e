//! Single control axis with `ω_S = 0`.
//!
//! Complete controllability holds iff `det K ≠ 0` (C1) and the accessor-side
//! drift has a part off the control axis (C2). The accessor-side drift
//! comes from two sources: the constant term `C`, and the interaction's
//! response to the control, `K Kᵀ n`, obtained by contracting the
//! interaction with `1 ⊗ σ_n` on the accessor and feeding the resulting
//! target direction `Kᵀ n` back through `K`.

use crate::lie::{self, LieBasis};
use crate::model::{Control, TwoQubitModel};
use crate::qalg::real3::{self, Mat3, Vec3};
use crate::qalg::{i_sigma_sigma, on_a, on_s, sigma, tensor, Axis, ComplexMatrix};
use crate::{Error, Result, Tolerances};

use super::near_threshold;

/// Threshold on the squared perpendicular components.
pub const C2_THRESHOLD: f64 = 1e-12;

/// Frame in which the control is `1 ⊗ σ_z`, the perpendicular part of `C` is
/// `ω_A σ_y`, and `K` has rows `(α, γ, 0)`, `(0, β, 0)`, `(x, y, z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalForm {
    pub alpha: f64,
    pub gamma: f64,
    pub beta: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub omega_a: f64,
    /// Component of `C` along the control axis.
    pub c_parallel: f64,
    /// Rotation applied to the target's axes.
    pub r_s: Mat3,
    /// Rotation applied to the accessor's axes.
    pub r_a: Mat3,
}

impl NormalForm {
    pub fn k(&self) -> Mat3 {
        [
            [self.alpha, self.gamma, 0.0],
            [0.0, self.beta, 0.0],
            [self.x, self.y, self.z],
        ]
    }

    /// `W = U(R_S) ⊗ U(R_A)`; conjugation by `W` maps the model's operators
    /// to the normal frame.
    pub fn frame_unitary(&self) -> ComplexMatrix {
        tensor(
            &real3::su2_from_rotation(&self.r_s),
            &real3::su2_from_rotation(&self.r_a),
        )
    }

    pub fn to_normal_frame(&self, m: &ComplexMatrix) -> ComplexMatrix {
        m.conjugate_by(&self.frame_unitary())
    }

    /// The model written in the normal frame.
    pub fn model(&self) -> Result<TwoQubitModel> {
        TwoQubitModel::new(
            0.0,
            self.k(),
            [0.0, self.omega_a, self.c_parallel],
            Control::Axis([0.0, 0.0, 1.0]),
        )
    }

    /// `det` of the normal-form `K`, equal to `αβz`.
    pub fn det(&self) -> f64 {
        self.alpha * self.beta * self.z
    }

    /// `ω_A² + x² + y²`
    pub fn perpendicular_magnitude(&self) -> f64 {
        self.omega_a * self.omega_a + self.x * self.x + self.y * self.y
    }
}

/// Orthonormal frame with third row `n` and second row along `hint` if possible.
fn frame_with_axis(n: Vec3, hint: Vec3, tol: f64) -> Mat3 {
    let e2 = real3::unit(real3::reject(hint, n), tol).unwrap_or_else(|| real3::any_orthogonal(n));
    let e1 = real3::cross(e2, n);
    [e1, e2, n]
}

/// Coordinate change of the proof: rotate the accessor so the control is
/// `σ_z` and `C⊥ ∝ σ_y`, then rotate the target so `b ∝ e_y` and `a ⊥ e_z`.
pub fn normal_form(m: &TwoQubitModel, tol: &Tolerances) -> Result<NormalForm> {
    let n = match m.control() {
        Control::Axis(n) => n,
        Control::Full => return Err(Error::WrongControl { expected: "single-axis" }),
    };
    let c = m.c();
    let c_parallel = real3::dot(c, n);
    let r_a = frame_with_axis(n, c, tol.eq);
    let omega_a = real3::norm(real3::reject(c, n));

    // rows of R_A K are the target vectors paired with the new accessor axes
    let ka = real3::mat_mul(&r_a, m.k());
    let (a, b) = (ka[0], ka[1]);
    let r_s = match real3::unit(b, tol.eq) {
        Some(s2) => {
            let s1 = real3::unit(real3::reject(a, s2), tol.eq).unwrap_or_else(|| real3::any_orthogonal(s2));
            [s1, s2, real3::cross(s1, s2)]
        }
        None => match real3::unit(a, tol.eq) {
            Some(s1) => {
                let s2 = real3::any_orthogonal(s1);
                [s1, s2, real3::cross(s1, s2)]
            }
            None => real3::IDENTITY3,
        },
    };
    let kn = real3::mat_mul(&ka, &real3::transpose(&r_s));
    Ok(NormalForm {
        alpha: kn[0][0],
        gamma: kn[0][1],
        beta: kn[1][1],
        x: kn[2][0],
        y: kn[2][1],
        z: kn[2][2],
        omega_a,
        c_parallel,
        r_s,
        r_a,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Oms0Report {
    pub c1: bool,
    pub c2: bool,
    /// `c1 && c2`
    pub cc: bool,
    pub det_k: f64,
    /// `‖(K Kᵀ n)⊥‖² + ‖C⊥‖²`, the squared parts off the control axis.
    pub c2_magnitude: f64,
    pub normal_form: NormalForm,
    /// C1 evaluated as `αβz ≠ 0` in the normal frame.
    pub c1_normal_form: bool,
    /// C2 evaluated as `ω_A² + x² + y² ≠ 0` in the normal frame.
    pub c2_normal_form: bool,
    /// The two evaluations agree (C2 is only compared when C1 holds).
    pub forms_agree: bool,
    pub marginal: bool,
}

/// Complete-controllability test for a single control axis and `ω_S = 0`.
pub fn oms0_check(m: &TwoQubitModel, tol: &Tolerances) -> Result<Oms0Report> {
    let n = match m.control() {
        Control::Axis(n) => n,
        Control::Full => return Err(Error::WrongControl { expected: "single-axis" }),
    };
    if m.omega_s().abs() > tol.rank {
        return Err(Error::NonzeroOmegaS { omega_s: m.omega_s() });
    }
    let k = m.k();
    let det_k = real3::det(k);
    let c1 = det_k.abs() > tol.rank;

    let target_dir = real3::mat_vec(&real3::transpose(k), n);
    let p1 = real3::reject(real3::mat_vec(k, target_dir), n);
    let p2 = real3::reject(m.c(), n);
    let c2_magnitude = real3::dot(p1, p1) + real3::dot(p2, p2);
    let c2 = c2_magnitude > C2_THRESHOLD;

    let nf = normal_form(m, tol)?;
    let c1_normal_form = nf.det().abs() > tol.rank;
    let c2_normal_form = nf.perpendicular_magnitude() > C2_THRESHOLD;
    let forms_agree = c1 == c1_normal_form && (!c1 || c2 == c2_normal_form);
    let marginal = near_threshold(det_k, tol.rank)
        || near_threshold(c2_magnitude, C2_THRESHOLD)
        || near_threshold(m.omega_s(), tol.rank);
    Ok(Oms0Report {
        c1,
        c2,
        cc: c1 && c2,
        det_k,
        c2_magnitude,
        normal_form: nf,
        c1_normal_form,
        c2_normal_form,
        forms_agree,
        marginal,
    })
}

/// The 7-dimensional subalgebra containing the generators when C2 fails:
/// `span{1⊗σ_z, σ_z⊗1, iσ_y⊗σ_x, iσ_x⊗σ_y, iσ_y⊗σ_y, iσ_x⊗σ_x, iσ_z⊗σ_z}`.
pub fn l_prime_basis() -> LieBasis {
    let m = [
        on_a(&sigma(Axis::Z)),
        on_s(&sigma(Axis::Z)),
        i_sigma_sigma(Axis::Y, Axis::X),
        i_sigma_sigma(Axis::X, Axis::Y),
        i_sigma_sigma(Axis::Y, Axis::Y),
        i_sigma_sigma(Axis::X, Axis::X),
        i_sigma_sigma(Axis::Z, Axis::Z),
    ];
    lie::orthonormalize(&m, Tolerances::DEFAULT_RANK).expect("fixed skew-Hermitian basis")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{draw_rng, oms_model, rotation, OmsDraw};

    fn normal(alpha: f64, gamma: f64, beta: f64, xyz: Vec3, omega_a: f64) -> TwoQubitModel {
        let k = [[alpha, gamma, 0.0], [0.0, beta, 0.0], xyz];
        TwoQubitModel::new(0.0, k, [0.0, omega_a, 0.3], Control::Axis([0.0, 0.0, 1.0])).unwrap()
    }

    fn dim(m: &TwoQubitModel) -> usize {
        lie::closure(&m.generator_set(), 1e-9).len()
    }

    #[test]
    fn controllable_normal_form() {
        let m = normal(1.0, 0.0, 1.0, [0.0, 0.0, 1.0], 1.0);
        let r = oms0_check(&m, &Tolerances::default()).unwrap();
        assert!(r.c1 && r.c2 && r.cc && r.forms_agree);
        assert_eq!(dim(&m), 15);
    }

    #[test]
    fn no_perpendicular_part() {
        let m = normal(1.0, 0.0, 1.0, [0.0, 0.0, 1.0], 0.0);
        let r = oms0_check(&m, &Tolerances::default()).unwrap();
        assert!(r.c1 && !r.c2 && !r.cc);
        let l = lie::closure(&m.generator_set(), 1e-9);
        assert!(l.is_subspace_of(&l_prime_basis(), 1e-9));
        assert!(l_prime_basis().closure_defect() < 1e-12);
    }

    #[test]
    fn singular_k() {
        let m = normal(1.0, 0.2, 1.0, [0.5, 0.3, 0.0], 1.0);
        let r = oms0_check(&m, &Tolerances::default()).unwrap();
        assert!(!r.c1 && !r.cc);
        assert!(dim(&m) < 15);
    }

    #[test]
    fn wrong_preconditions() {
        let tol = Tolerances::default();
        assert!(matches!(oms0_check(&TwoQubitModel::ising(), &tol), Err(Error::WrongControl { .. })));
        let m = TwoQubitModel::new(1.0, real3::IDENTITY3, [0.0; 3], Control::Axis([1.0, 0.0, 0.0])).unwrap();
        assert!(matches!(oms0_check(&m, &tol), Err(Error::NonzeroOmegaS { .. })));
    }

    #[test]
    fn normal_form_recovers_rotated_parameters() {
        let tol = Tolerances::default();
        let mut rng = draw_rng(21, 0);
        let base = normal(0.7, -0.3, 0.9, [0.2, -0.4, 0.6], 0.5);
        let m = base.rotated(&rotation(&mut rng), &rotation(&mut rng));
        let nf = normal_form(&m, &tol).unwrap();
        // α, β, ω_A are fixed up to sign; the invariants are exact
        assert!((nf.det().abs() - 0.7 * 0.9 * 0.6).abs() < 1e-12);
        assert!((nf.omega_a - 0.5).abs() < 1e-12);
        assert!((nf.perpendicular_magnitude() - (0.25 + 0.04 + 0.16)).abs() < 1e-12);
        let back = nf.model().unwrap();
        for (g, h) in m.generator_set().iter().zip(back.generator_set()) {
            // C∥ is kept, so the drifts agree exactly after the frame change
            assert!(nf.to_normal_frame(g).approx_eq(&h, 1e-12));
        }
    }

    #[test]
    fn random_draws_match_closure() {
        let tol = Tolerances::default();
        for (i, kind) in [OmsDraw::Generic, OmsDraw::NoPerpendicular, OmsDraw::Singular]
            .into_iter()
            .enumerate()
        {
            let mut rng = draw_rng(22, i as u64);
            for _ in 0..10 {
                let m = oms_model(&mut rng, kind);
                let r = oms0_check(&m, &tol).unwrap();
                assert!(r.forms_agree);
                assert_eq!(r.cc, dim(&m) == 15, "{kind:?}");
            }
        }
    }
}
