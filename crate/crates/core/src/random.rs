//! Random draws used by the property suites and the sampler.
//!
//! Everything takes an explicit `Rng`; reproducibility comes from seeding
//! `ChaCha8Rng` per draw (see [`draw_rng`]).

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::CaseTag;
use crate::model::{Control, TwoQubitModel};
use crate::qalg::real3::{self, Mat3, Vec3};
use crate::qalg::{state_from_bloch, BlochPoint, ComplexMatrix, DensityMatrix};

/// Deterministic generator for draw `index` under `seed`.
pub fn draw_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn uniform<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    if lo == hi {
        lo
    } else {
        rng.gen_range(lo..hi)
    }
}

/// Entry uniform in `[−1, 1)` bounded away from zero by `floor` in magnitude.
pub fn nonzero<R: Rng + ?Sized>(rng: &mut R, floor: f64) -> f64 {
    loop {
        let x = uniform(rng, -1.0, 1.0);
        if x.abs() > floor {
            return x;
        }
    }
}

pub fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    // Box–Muller
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (core::f64::consts::TAU * u2).cos()
}

pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R) -> Vec3 {
    loop {
        let v = [gaussian(rng), gaussian(rng), gaussian(rng)];
        if let Some(u) = real3::unit(v, 1e-6) {
            return u;
        }
    }
}

pub fn cube_vector<R: Rng + ?Sized>(rng: &mut R) -> Vec3 {
    [uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)]
}

pub fn cube_matrix<R: Rng + ?Sized>(rng: &mut R) -> Mat3 {
    [cube_vector(rng), cube_vector(rng), cube_vector(rng)]
}

/// Haar-random rotation from a uniform unit quaternion.
pub fn rotation<R: Rng + ?Sized>(rng: &mut R) -> Mat3 {
    let q = loop {
        let q = [gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)];
        let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-6 {
            break q.map(|x| x / n);
        }
    };
    let [w, x, y, z] = q;
    [
        [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - z * w), 2.0 * (x * z + y * w)],
        [2.0 * (x * y + z * w), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - x * w)],
        [2.0 * (x * z - y * w), 2.0 * (y * z + x * w), 1.0 - 2.0 * (x * x + y * y)],
    ]
}

/// Haar-random element of `SU(2)`.
pub fn su2<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    let q = loop {
        let q = [gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)];
        let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-6 {
            break q.map(|x| x / n);
        }
    };
    let a = Complex64::new(q[0], q[1]);
    let b = Complex64::new(q[2], q[3]);
    let e = [a, b, -b.conj(), a.conj()];
    ComplexMatrix::from_fn(2, |r, c| e[2 * r + c])
}

/// Haar-random `4×4` unitary of the form `F ⊗ G`.
pub fn local_unitary<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    crate::qalg::tensor(&su2(rng), &su2(rng))
}

/// Point uniform in the Bloch ball.
pub fn bloch_point<R: Rng + ?Sized>(rng: &mut R) -> BlochPoint {
    let r = rng.gen::<f64>().cbrt();
    let [x, y, z] = real3::scale(unit_vector(rng), r);
    BlochPoint { x, y, z }
}

/// Random qubit state with Bloch radius at least `min_radius`.
pub fn state<R: Rng + ?Sized>(rng: &mut R, min_radius: f64) -> DensityMatrix {
    loop {
        let p = bloch_point(rng);
        if p.norm() >= min_radius {
            return density(p);
        }
    }
}

pub fn pure_state<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let [x, y, z] = unit_vector(rng);
    density(BlochPoint { x, y, z })
}

fn density(p: BlochPoint) -> DensityMatrix {
    DensityMatrix::new(state_from_bloch(p), 1e-9).expect("Bloch ball point is a valid state")
}

const FLOOR: f64 = 1e-3;

/// Random full-control model satisfying the hypotheses of `case`.
///
/// Structural zeros are exact, and nonzero blocks are kept away from zero so
/// the draw is never near a case boundary.
pub fn case_model<R: Rng + ?Sized>(rng: &mut R, case: CaseTag) -> TwoQubitModel {
    let c = cube_vector(rng);
    loop {
        let (omega, k) = match case {
            CaseTag::C1a | CaseTag::C1b | CaseTag::C1c => {
                let omega = nonzero(rng, FLOOR);
                let mut k = cube_matrix(rng);
                if case == CaseTag::C1b {
                    k.iter_mut().for_each(|r| r[2] = 0.0);
                }
                if case == CaseTag::C1c {
                    k.iter_mut().for_each(|r| {
                        r[0] = 0.0;
                        r[1] = 0.0;
                    });
                }
                (omega, k)
            }
            CaseTag::C2a => {
                let u = cube_vector(rng);
                let v = cube_vector(rng);
                (0.0, u.map(|ui| v.map(|vj| ui * vj)))
            }
            CaseTag::C2b => {
                let p: [[f64; 2]; 3] = [0; 3].map(|_| [uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)]);
                let q = [cube_vector(rng), cube_vector(rng)];
                let mut k = [[0.0; 3]; 3];
                for i in 0..3 {
                    for j in 0..3 {
                        k[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
                    }
                }
                (0.0, k)
            }
            CaseTag::C2c => (0.0, cube_matrix(rng)),
        };
        if well_conditioned(&k, case) {
            return TwoQubitModel::new(omega, k, c, Control::Full).expect("nonzero K");
        }
    }
}

fn well_conditioned(k: &Mat3, case: CaseTag) -> bool {
    let (sv, _) = real3::svd_values(k);
    let needed = match case {
        CaseTag::C2a => 1,
        CaseTag::C2b => 2,
        CaseTag::C2c => 3,
        _ => {
            let d = k.iter().map(|r| r[0] * r[0] + r[1] * r[1]).sum::<f64>().sqrt();
            let f = k.iter().map(|r| r[2] * r[2]).sum::<f64>().sqrt();
            return match case {
                CaseTag::C1a => d > FLOOR && f > FLOOR,
                CaseTag::C1b => d > FLOOR,
                _ => f > FLOOR,
            };
        }
    };
    sv[needed - 1] > FLOOR * sv[0].max(1.0) && sv[0] > FLOOR
}

/// Kind of single-axis draw produced by [`oms_model`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmsDraw {
    /// Unconstrained entries.
    Generic,
    /// Normal-form parameters with `x = y = ω_A = 0`.
    NoPerpendicular,
    /// Normal-form parameters with `z = 0`.
    Singular,
}

/// Random single-axis model with `ω_S = 0`, built in normal-form
/// coordinates for the constrained kinds and then rotated at random on
/// both qubits.
pub fn oms_model<R: Rng + ?Sized>(rng: &mut R, kind: OmsDraw) -> TwoQubitModel {
    if kind == OmsDraw::Generic {
        let n = unit_vector(rng);
        return TwoQubitModel::new(0.0, cube_matrix(rng), cube_vector(rng), Control::Axis(n))
            .expect("K drawn nonzero");
    }
    let alpha = nonzero(rng, FLOOR);
    let gamma = uniform(rng, -1.0, 1.0);
    let beta = nonzero(rng, FLOOR);
    let (mut x, mut y) = (nonzero(rng, FLOOR), nonzero(rng, FLOOR));
    let mut z = nonzero(rng, FLOOR);
    let mut omega_a = nonzero(rng, FLOOR);
    match kind {
        OmsDraw::NoPerpendicular => {
            x = 0.0;
            y = 0.0;
            omega_a = 0.0;
        }
        _ => z = 0.0,
    }
    let k = [[alpha, gamma, 0.0], [0.0, beta, 0.0], [x, y, z]];
    let c = [0.0, omega_a, uniform(rng, -1.0, 1.0)];
    let normal = TwoQubitModel::new(0.0, k, c, Control::Axis([0.0, 0.0, 1.0])).expect("K nonzero");
    normal.rotated(&rotation(rng), &rotation(rng))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotations_are_proper() {
        let mut rng = draw_rng(1, 0);
        for _ in 0..20 {
            let r = rotation(&mut rng);
            assert!((real3::det(&r) - 1.0).abs() < 1e-12);
            let rrt = real3::mat_mul(&r, &real3::transpose(&r));
            for (i, row) in rrt.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((v - want).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn su2_draws_are_special_unitary() {
        let mut rng = draw_rng(2, 0);
        for _ in 0..20 {
            let u = su2(&mut rng);
            assert!(u.unitarity_residual() < 1e-13);
            assert!((u.determinant() - Complex64::new(1.0, 0.0)).norm() < 1e-13);
        }
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: f64 = draw_rng(9, 3).gen();
        let b: f64 = draw_rng(9, 3).gen();
        let c: f64 = draw_rng(9, 4).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn case_models_have_requested_rank() {
        let tol = crate::Tolerances::default();
        let mut rng = draw_rng(3, 0);
        for (case, rank) in [(CaseTag::C2a, 1), (CaseTag::C2b, 2), (CaseTag::C2c, 3)] {
            for _ in 0..20 {
                assert_eq!(case_model(&mut rng, case).df_split(&tol).rank_k, rank);
            }
        }
    }
}
