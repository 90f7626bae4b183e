//! The two-qubit model: target `S` coupled to a driven accessor `A`.
//!
//! With `K` the 3×3 coupling matrix whose rows `a, b, c` pair with the
//! accessor axes `x, y, z`,
//!
//! ```text
//! iH_S = ω_S σ_z ⊗ 1
//! iH_I = i σ_a ⊗ σ_x + i σ_b ⊗ σ_y + i σ_c ⊗ σ_z
//! iH_A = 1 ⊗ σ_C
//! ```
//!
//! and the controls act as `1 ⊗ su(2)` or along a single axis `1 ⊗ σ_n`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::qalg::real3::{self, Mat3, Vec3};
use crate::qalg::{on_a, on_s, sigma, sigma_from_vec, tensor, Axis, ComplexMatrix};
use crate::{Error, Result, Tolerances};

/// Control Lie algebra acting on the accessor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Control {
    /// `1 ⊗ su(2)`
    Full,
    /// `span{1 ⊗ σ_n}` for a unit axis `n`.
    Axis(Vec3),
}

impl Control {
    /// Single-axis control along `n`, normalized.
    pub fn axis(n: Vec3) -> Result<Self> {
        if n.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("control axis"));
        }
        real3::unit(n, 0.0).map(Control::Axis).ok_or(Error::ZeroControlAxis)
    }

    pub fn dim(&self) -> usize {
        match self {
            Control::Full => 3,
            Control::Axis(_) => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoQubitModel {
    omega_s: f64,
    k: Mat3,
    c: Vec3,
    control: Control,
}

/// Hermitian Hamiltonian parts and the skew-Hermitian control directions.
#[derive(Clone, Debug)]
pub struct Hamiltonians {
    pub h_s: ComplexMatrix,
    pub h_i: ComplexMatrix,
    pub h_a: ComplexMatrix,
    /// `1 ⊗ σ_x, 1 ⊗ σ_y, 1 ⊗ σ_z` or `1 ⊗ σ_n`.
    pub controls: Vec<ComplexMatrix>,
}

/// Column split `K = (D F)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DfSplit {
    pub d: [[f64; 2]; 3],
    pub f: Vec3,
    pub rank_k: usize,
}

impl DfSplit {
    pub fn d_is_zero(&self, tol: f64) -> bool {
        self.d.iter().flatten().all(|x| x.abs() <= tol)
    }

    pub fn f_is_zero(&self, tol: f64) -> bool {
        self.f.iter().all(|x| x.abs() <= tol)
    }
}

const MINUS_I: Complex64 = Complex64::new(0.0, -1.0);

impl TwoQubitModel {
    /// Rejects a vanishing or non-finite `K`; single-axis controls are normalized.
    pub fn new(omega_s: f64, k: Mat3, c: Vec3, control: Control) -> Result<Self> {
        if !omega_s.is_finite() {
            return Err(Error::NonFinite("omega_S"));
        }
        if k.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("K"));
        }
        if c.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("C"));
        }
        if k.iter().flatten().all(|&x| x == 0.0) {
            return Err(Error::ZeroInteraction);
        }
        let control = match control {
            Control::Full => Control::Full,
            Control::Axis(n) => Control::axis(n)?,
        };
        Ok(TwoQubitModel {
            omega_s,
            k,
            c,
            control,
        })
    }

    /// Two qubits with an Ising coupling `i σ_y ⊗ σ_y`, `ω_S = 1`, full control.
    pub fn ising() -> Self {
        let k = [[0.0; 3], [0.0, 1.0, 0.0], [0.0; 3]];
        TwoQubitModel {
            omega_s: 1.0,
            k,
            c: [0.0; 3],
            control: Control::Full,
        }
    }

    pub fn omega_s(&self) -> f64 {
        self.omega_s
    }

    pub fn k(&self) -> &Mat3 {
        &self.k
    }

    pub fn c(&self) -> Vec3 {
        self.c
    }

    pub fn control(&self) -> Control {
        self.control
    }

    /// `iH_I`
    pub fn interaction(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(4);
        for (row, axis) in self.k.iter().zip(Axis::ALL) {
            m += &tensor(&sigma_from_vec(*row), &sigma(axis));
        }
        m.scale(Complex64::new(0.0, 1.0))
    }

    /// `i(H_S + H_I + H_A)`
    pub fn drift(&self) -> ComplexMatrix {
        let mut m = on_s(&sigma(Axis::Z)).scale_re(self.omega_s);
        m += &self.interaction();
        m += &on_a(&sigma_from_vec(self.c));
        m
    }

    pub fn control_directions(&self) -> Vec<ComplexMatrix> {
        match self.control {
            Control::Full => Axis::ALL.iter().map(|&a| on_a(&sigma(a))).collect(),
            Control::Axis(n) => vec![on_a(&sigma_from_vec(n))],
        }
    }

    pub fn hamiltonians(&self) -> Hamiltonians {
        Hamiltonians {
            h_s: on_s(&sigma(Axis::Z)).scale(MINUS_I * self.omega_s),
            h_i: self.interaction().scale(MINUS_I),
            h_a: on_a(&sigma_from_vec(self.c)).scale(MINUS_I),
            controls: self.control_directions(),
        }
    }

    /// Drift first, then the control directions.
    pub fn generator_set(&self) -> Vec<ComplexMatrix> {
        let mut g = vec![self.drift()];
        g.extend(self.control_directions());
        g
    }

    pub fn df_split(&self, tol: &Tolerances) -> DfSplit {
        DfSplit {
            d: self.k.map(|row| [row[0], row[1]]),
            f: self.k.map(|row| row[2]),
            rank_k: real3::rank(&self.k, tol.rank),
        }
    }

    /// Same physics in rotated frames: `K → R_A K R_Sᵀ`, `C → R_A C`, `n → R_A n`.
    ///
    /// The drift of the result is `W · drift · W†` with `W = U(R_S) ⊗ U(R_A)`
    /// whenever `R_S` fixes the z axis or `ω_S = 0`.
    pub fn rotated(&self, r_s: &Mat3, r_a: &Mat3) -> Self {
        let k = real3::mat_mul(&real3::mat_mul(r_a, &self.k), &real3::transpose(r_s));
        let control = match self.control {
            Control::Full => Control::Full,
            Control::Axis(n) => Control::Axis(real3::mat_vec(r_a, n)),
        };
        TwoQubitModel {
            omega_s: self.omega_s,
            k,
            c: real3::mat_vec(r_a, self.c),
            control,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::{i_sigma_sigma, real3::su2_from_rotation};

    #[test]
    fn ising_generators() {
        let g = TwoQubitModel::ising().generator_set();
        let drift = &on_s(&sigma(Axis::Z)) + &i_sigma_sigma(Axis::Y, Axis::Y);
        assert!(g[0].approx_eq(&drift, 1e-15));
        assert_eq!(g.len(), 4);
        assert!(g[1].approx_eq(&on_a(&sigma(Axis::X)), 0.0));
    }

    #[test]
    fn zero_k_rejected() {
        let r = TwoQubitModel::new(1.0, [[0.0; 3]; 3], [0.0; 3], Control::Full);
        assert_eq!(r, Err(Error::ZeroInteraction));
        let r = TwoQubitModel::new(0.0, real3::IDENTITY3, [0.0; 3], Control::Axis([0.0; 3]));
        assert_eq!(r, Err(Error::ZeroControlAxis));
    }

    #[test]
    fn zero_c_gives_zero_h_a() {
        let h = TwoQubitModel::ising().hamiltonians();
        assert_eq!(h.h_a, ComplexMatrix::zeros(4));
        assert!(h.h_s.is_hermitian(0.0) && h.h_i.is_hermitian(1e-15));
    }

    #[test]
    fn generators_are_traceless_skew() {
        let m = TwoQubitModel::new(
            0.7,
            [[0.1, -0.4, 0.3], [0.9, 0.2, -0.5], [0.0, 0.6, 0.8]],
            [0.3, 0.1, -0.2],
            Control::Axis([1.0, 1.0, 0.0]),
        )
        .unwrap();
        for g in m.generator_set() {
            assert!(g.is_skew_hermitian(1e-15));
            assert!(g.trace().norm() < 1e-15);
        }
        if let Control::Axis(n) = m.control() {
            assert!((real3::norm(n) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn df_split_examples() {
        let tol = Tolerances::default();
        let s = TwoQubitModel::ising().df_split(&tol);
        assert_eq!(s.d, [[0.0, 0.0], [0.0, 1.0], [0.0, 0.0]]);
        assert_eq!(s.f, [0.0; 3]);
        assert_eq!(s.rank_k, 1);
        let id = TwoQubitModel::new(0.0, real3::IDENTITY3, [0.0; 3], Control::Full).unwrap();
        assert_eq!(id.df_split(&tol).rank_k, 3);
    }

    #[test]
    fn rotating_s_side_conjugates_interaction() {
        let m = TwoQubitModel::new(
            0.0,
            [[0.1, -0.4, 0.3], [0.9, 0.2, -0.5], [0.0, 0.6, 0.8]],
            [0.0; 3],
            Control::Full,
        )
        .unwrap();
        let axis = real3::unit([0.2, 0.7, -0.3], 0.0).unwrap();
        let r = real3::rotation(axis, 2.1);
        let rotated = m.rotated(&r, &real3::IDENTITY3);
        let u = tensor(&su2_from_rotation(&r), &ComplexMatrix::identity(2));
        assert!(rotated.interaction().approx_eq(&m.interaction().conjugate_by(&u), 1e-14));
    }
}
