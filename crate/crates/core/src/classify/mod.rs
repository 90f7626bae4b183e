//! Classification of the dynamical Lie algebra.
//!
//! With full accessor control the algebra is one of six cases decided by
//! `ω_S`, the column blocks `D`, `F` of `K`, and `rank K`. With a single
//! control axis and `ω_S = 0`, complete controllability is decided by
//! [`oms0_check`].

use alloc::vec::Vec;
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

use crate::lie::{self, LieBasis};
use crate::model::{Control, TwoQubitModel};
use crate::qalg::real3::{self, Vec3};
use crate::qalg::{i_sigma_sigma, on_a, on_s, sigma, sigma_from_vec, tensor, Axis, ComplexMatrix};
use crate::{Error, Result, Tolerances};

mod identities;
mod oms0;

pub use identities::{
    appendix_b_suite, gamma_suite, l_double_prime, verify_identities, GammaSet, IdentityReport,
    IdentityResidual, SuiteSummary,
};
pub use oms0::{l_prime_basis, normal_form, oms0_check, NormalForm, Oms0Report};

/// A quantity within this factor of the rank tolerance makes a verdict marginal.
pub const MARGINAL_FACTOR: f64 = 1e3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    C1a,
    C1b,
    C1c,
    C2a,
    C2b,
    C2c,
}

impl CaseTag {
    pub const ALL: [CaseTag; 6] = [
        CaseTag::C1a,
        CaseTag::C1b,
        CaseTag::C1c,
        CaseTag::C2a,
        CaseTag::C2b,
        CaseTag::C2c,
    ];

    pub fn predicted_dim(self) -> usize {
        match self {
            CaseTag::C1a | CaseTag::C2c => 15,
            CaseTag::C1b | CaseTag::C2b => 10,
            CaseTag::C1c => 7,
            CaseTag::C2a => 6,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::C1a => "1a",
            CaseTag::C1b => "1b",
            CaseTag::C1c => "1c",
            CaseTag::C2a => "2a",
            CaseTag::C2b => "2b",
            CaseTag::C2c => "2c",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CaseLabel {
    pub tag: CaseTag,
    pub predicted_dim: usize,
    /// Some deciding quantity was within [`MARGINAL_FACTOR`] of the tolerance.
    pub marginal: bool,
}

pub(crate) fn near_threshold(value: f64, tol: f64) -> bool {
    let v = value.abs();
    v > tol / MARGINAL_FACTOR && v < tol * MARGINAL_FACTOR
}

fn require_full(m: &TwoQubitModel) -> Result<()> {
    match m.control() {
        Control::Full => Ok(()),
        Control::Axis(_) => Err(Error::WrongControl { expected: "full" }),
    }
}

/// Case of the classification for a full-control model.
pub fn predict_case(m: &TwoQubitModel, tol: &Tolerances) -> Result<CaseLabel> {
    require_full(m)?;
    let split = m.df_split(tol);
    let d_norm = split.d.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let f_norm = real3::norm(split.f);
    let omega = m.omega_s();
    let mut marginal = near_threshold(omega, tol.rank);
    let tag = if omega.abs() > tol.rank {
        marginal |= near_threshold(d_norm, tol.rank) || near_threshold(f_norm, tol.rank);
        match (d_norm > tol.rank, f_norm > tol.rank) {
            (true, true) => CaseTag::C1a,
            (true, false) => CaseTag::C1b,
            (false, true) => CaseTag::C1c,
            (false, false) => return Err(Error::Degenerate("K is below the rank tolerance")),
        }
    } else {
        let (sv, _) = real3::svd_values(m.k());
        if sv[0] > 0.0 {
            marginal |= sv[1..].iter().any(|&s| near_threshold(s / sv[0], tol.rank));
        }
        match split.rank_k {
            1 => CaseTag::C2a,
            2 => CaseTag::C2b,
            3 => CaseTag::C2c,
            _ => return Err(Error::Degenerate("K is below the rank tolerance")),
        }
    };
    Ok(CaseLabel {
        tag,
        predicted_dim: tag.predicted_dim(),
        marginal,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CrossValidation {
    pub predicted: CaseLabel,
    pub computed_dim: usize,
    pub agree: bool,
}

/// Compares the predicted case dimension with a numerical closure.
pub fn cross_validate(m: &TwoQubitModel, tol: &Tolerances) -> Result<CrossValidation> {
    let predicted = predict_case(m, tol)?;
    let computed_dim = lie::closure(&m.generator_set(), tol.rank).len();
    Ok(CrossValidation {
        predicted,
        computed_dim,
        agree: computed_dim == predicted.predicted_dim,
    })
}

/// Strong unitary indirect controllability, which for two qubits with full
/// accessor control holds exactly when the closure is all of `su(4)`.
pub fn strong_uic(m: &TwoQubitModel, tol: &Tolerances) -> Result<bool> {
    require_full(m)?;
    Ok(lie::closure(&m.generator_set(), tol.rank).len() == 15)
}

/// Direction `v` with `K = u vᵀ` in the rank-one case, as a unit vector.
///
/// The algebra is then `span{i σ_v ⊗ su(2), 1 ⊗ su(2)}`. The sign of `v` is
/// not canonical.
pub fn rank_one_direction(m: &TwoQubitModel, tol: &Tolerances) -> Option<Vec3> {
    (m.df_split(tol).rank_k == 1).then(|| real3::svd_values(m.k()).1)
}

fn normalized(mats: &[ComplexMatrix]) -> LieBasis {
    lie::orthonormalize(mats, Tolerances::DEFAULT_RANK).expect("fixed skew-Hermitian basis")
}

/// `span{σ_z ⊗ 1, 1 ⊗ su(2), i(σ_x, σ_y) ⊗ su(2)}`, dimension 10.
pub fn l1b_basis() -> LieBasis {
    let mut m: Vec<ComplexMatrix> = Vec::new();
    m.push(on_s(&sigma(Axis::Z)));
    m.extend(Axis::ALL.map(|a| on_a(&sigma(a))));
    for s in [Axis::X, Axis::Y] {
        m.extend(Axis::ALL.map(|a| i_sigma_sigma(s, a)));
    }
    normalized(&m)
}

/// `span{i σ_z ⊗ su(2), σ_z ⊗ 1, 1 ⊗ su(2)}`, dimension 7.
pub fn l1c_basis() -> LieBasis {
    let mut m: Vec<ComplexMatrix> = Axis::ALL.map(|a| i_sigma_sigma(Axis::Z, a)).to_vec();
    m.push(on_s(&sigma(Axis::Z)));
    m.extend(Axis::ALL.map(|a| on_a(&sigma(a))));
    normalized(&m)
}

/// `span{i σ_v ⊗ su(2), 1 ⊗ su(2)}`, dimension 6 for `v ≠ 0`.
pub fn l2a_basis(v: Vec3) -> LieBasis {
    let sv = sigma_from_vec(v).scale(num_complex::Complex64::new(0.0, 1.0));
    let mut m: Vec<ComplexMatrix> = Axis::ALL.map(|a| tensor(&sv, &sigma(a))).to_vec();
    m.extend(Axis::ALL.map(|a| on_a(&sigma(a))));
    normalized(&m)
}
