//! Reachable target states for the Ising model with full accessor control.
//!
//! A reachable unitary is parametrized by nine angles
//! `[t₁, t₃, t₄, a₁, a₂, s₁, s₂, s₃, s₄]`. Six of them enter the middle
//! factor
//!
//! ```text
//! Y = e^{t₃ iσ_x⊗σ_z} e^{t₄ σ_z⊗1} e^{a₁ 1⊗σ_x} e^{a₂ iσ_x⊗σ_x} e^{s₁ σ_z⊗1} e^{s₂ iσ_x⊗σ_z}
//! ```
//!
//! which is evaluated in closed form through the half-angles
//! `α = (−t₃/4, t₄/2, a₁/2, −a₂/4, s₁/2, −s₂/4)`. The remaining three rotate
//! the initial product state (`s₃`, `s₄`) and the reduced output (`t₁`)
//! about `z`.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::qalg::{
    bloch_of, exp_skew, i_sigma_sigma, on_a, on_s, partial_trace, sigma, sigma_tilde, state_from_bloch, tensor,
    Axis, BlochPoint, ComplexMatrix, Subsystem,
};
use crate::random::{draw_rng, uniform};
use crate::{Error, Result};

/// Residual allowed between the closed form and the exponential product.
pub const PRODUCT_TOL: f64 = 1e-12;
/// Number of points per figure.
pub const DEFAULT_N: usize = 729;
/// Default interval for every angle.
pub const DEFAULT_RANGE: (f64, f64) = (0.0, 4.0 * core::f64::consts::PI);

/// Position of each angle in [`SampleConfig::angle_ranges`] and in the
/// nine-angle arrays used here.
pub const ANGLE_NAMES: [&str; 9] = ["t1", "t3", "t4", "a1", "a2", "s1", "s2", "s3", "s4"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleMode {
    /// Every angle i.i.d. uniform on its range.
    Random,
    /// The six `Y` angles on a `3⁶` grid of cell midpoints (point `i` uses
    /// cell `i mod 729`); the three outer angles stay random.
    Grid,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleConfig {
    pub s_x: f64,
    pub s_z: f64,
    pub a_z: f64,
    pub n: usize,
    pub seed: u64,
    pub angle_ranges: [(f64, f64); 9],
    pub mode: SampleMode,
    /// Also build `Y` as a product of exponentials and fail on disagreement.
    pub verify_product: bool,
}

impl SampleConfig {
    pub fn new(s_x: f64, s_z: f64, a_z: f64) -> Self {
        SampleConfig {
            s_x,
            s_z,
            a_z,
            n: DEFAULT_N,
            seed: 0,
            angle_ranges: [DEFAULT_RANGE; 9],
            mode: SampleMode::Random,
            verify_product: false,
        }
    }

    /// Initial states of the four reference figures.
    pub fn figure(index: u8) -> Option<Self> {
        let (s_x, s_z, a_z) = match index {
            1 => (0.0, 0.5, 1.0),
            2 => (0.0, 0.5, 0.0),
            3 => (0.5, 0.0, 1.0),
            4 => (0.5, 0.0, 0.0),
            _ => return None,
        };
        Some(Self::new(s_x, s_z, a_z))
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.s_x, self.s_z, self.a_z].iter().all(|v| v.is_finite());
        if !finite {
            return Err(Error::NonFinite("initial state"));
        }
        if self.s_x * self.s_x + self.s_z * self.s_z > 1.0 + 1e-12 {
            return Err(Error::InvalidConfig("s_x² + s_z² exceeds 1"));
        }
        if self.a_z.abs() > 1.0 + 1e-12 {
            return Err(Error::InvalidConfig("|a_z| exceeds 1"));
        }
        if self.n == 0 {
            return Err(Error::InvalidConfig("n must be at least 1"));
        }
        for &(lo, hi) in &self.angle_ranges {
            if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
                return Err(Error::InvalidConfig("angle range must be finite with lo <= hi"));
            }
        }
        Ok(())
    }

    /// `(ρ_S, ρ_A)` as matrices.
    pub fn initial_states(&self) -> (ComplexMatrix, ComplexMatrix) {
        (
            state_from_bloch(BlochPoint {
                x: self.s_x,
                y: 0.0,
                z: self.s_z,
            }),
            state_from_bloch(BlochPoint {
                x: 0.0,
                y: 0.0,
                z: self.a_z,
            }),
        )
    }
}

/// Half-angles `α` from the six `Y` angles `[t₃, t₄, a₁, a₂, s₁, s₂]`.
pub fn alphas_from_angles(y: [f64; 6]) -> [f64; 6] {
    [-y[0] / 4.0, y[1] / 2.0, y[2] / 2.0, -y[3] / 4.0, y[4] / 2.0, -y[5] / 4.0]
}

/// Inverse of [`alphas_from_angles`].
pub fn angles_from_alphas(a: [f64; 6]) -> [f64; 6] {
    [-4.0 * a[0], 2.0 * a[1], 2.0 * a[2], -4.0 * a[3], 2.0 * a[4], -4.0 * a[5]]
}

/// Closed-form `Y = C₀⊗1 + C_x⊗σ̃_x + C_y⊗σ̃_y + C_z⊗σ̃_z`.
pub fn y_closed_form(alphas: [f64; 6]) -> ComplexMatrix {
    let [a1, a2, a3, a4, a5, a6] = alphas;
    let (s3, c3) = a3.sin_cos();
    let (s4, c4) = a4.sin_cos();
    let (sp25, cp25) = (a2 + a5).sin_cos();
    let (sm25, cm25) = (a2 - a5).sin_cos();
    let (sp16, cp16) = (a1 + a6).sin_cos();
    let (sm16, cm16) = (a1 - a6).sin_cos();

    let one = ComplexMatrix::identity(2);
    let [px, py, pz] = Axis::ALL.map(sigma_tilde);
    let re = |x: f64| Complex64::new(x, 0.0);
    let im = |x: f64| Complex64::new(0.0, x);
    let comb = |k: [Complex64; 4]| -> ComplexMatrix {
        let mut m = one.scale(k[0]);
        m += &px.scale(k[1]);
        m += &py.scale(k[2]);
        m += &pz.scale(k[3]);
        m
    };

    let c0 = comb([
        re(c3 * c4 * cp25 * cp16),
        re(-s3 * s4 * cm25 * cp16),
        re(-s3 * s4 * sm25 * cm16),
        im(c3 * c4 * sp25 * cm16),
    ]);
    let cx = comb([
        im(s3 * c4 * cp25 * cm16),
        im(c3 * s4 * cm25 * cm16),
        im(c3 * s4 * sm25 * cp16),
        re(-s3 * c4 * sp25 * cp16),
    ]);
    let cy = comb([
        im(c3 * s4 * cm25 * sm16),
        im(s3 * c4 * cp25 * sm16),
        im(-s3 * c4 * sp25 * sp16),
        re(c3 * s4 * sm25 * sp16),
    ]);
    let cz = comb([
        im(-s3 * s4 * cm25 * sp16),
        im(c3 * c4 * cp25 * sp16),
        im(-c3 * c4 * sp25 * sm16),
        re(-s3 * s4 * sm25 * sm16),
    ]);

    let mut y = tensor(&c0, &one);
    y += &tensor(&cx, &px);
    y += &tensor(&cy, &py);
    y += &tensor(&cz, &pz);
    y
}

/// Generators of the six factors of `Y`, in product order, for the angles
/// `[t₃, t₄, a₁, a₂, s₁, s₂]`.
pub fn y_generators(y: [f64; 6]) -> [ComplexMatrix; 6] {
    let xz = i_sigma_sigma(Axis::X, Axis::Z);
    let zs = on_s(&sigma(Axis::Z));
    [
        xz.scale_re(y[0]),
        zs.scale_re(y[1]),
        on_a(&sigma(Axis::X)).scale_re(y[2]),
        i_sigma_sigma(Axis::X, Axis::X).scale_re(y[3]),
        zs.scale_re(y[4]),
        xz.scale_re(y[5]),
    ]
}

/// `Y` as the product of six matrix exponentials.
pub fn y_product(y: [f64; 6]) -> ComplexMatrix {
    y_generators(y)
        .iter()
        .fold(ComplexMatrix::identity(4), |acc, g| &acc * &exp_skew(g))
}

fn z_rotation(angle: f64) -> ComplexMatrix {
    exp_skew(&sigma(Axis::Z).scale_re(angle))
}

/// Bloch vector of `e^{t₁σ_z} Tr_A(Ω) e^{−t₁σ_z}` with
/// `Ω = Y (e^{s₃σ_z}ρ_S e^{−s₃σ_z} ⊗ e^{s₄σ_z}ρ_A e^{−s₄σ_z}) Y†`.
///
/// `outer = (t₁, s₃, s₄)`.
pub fn reachable_point(
    rho_s: &ComplexMatrix,
    rho_a: &ComplexMatrix,
    y: &ComplexMatrix,
    outer: (f64, f64, f64),
) -> BlochPoint {
    let (t1, s3, s4) = outer;
    let initial = tensor(
        &rho_s.conjugate_by(&z_rotation(s3)),
        &rho_a.conjugate_by(&z_rotation(s4)),
    );
    let omega = initial.conjugate_by(y);
    let reduced = partial_trace(&omega, Subsystem::S).expect("4x4 operand");
    bloch_of(&reduced.conjugate_by(&z_rotation(t1)))
}

fn grid_level(range: (f64, f64), level: usize) -> f64 {
    range.0 + (level as f64 + 0.5) * (range.1 - range.0) / 3.0
}

/// The nine angles of point `index`.
pub fn point_angles(cfg: &SampleConfig, index: usize) -> [f64; 9] {
    let mut rng = draw_rng(cfg.seed, index as u64);
    let mut angles = [0.0; 9];
    for (a, &(lo, hi)) in angles.iter_mut().zip(&cfg.angle_ranges) {
        *a = uniform(&mut rng, lo, hi);
    }
    if cfg.mode == SampleMode::Grid {
        let mut cell = index % 729;
        for (a, &range) in angles[1..7].iter_mut().zip(&cfg.angle_ranges[1..7]) {
            *a = grid_level(range, cell % 3);
            cell /= 3;
        }
    }
    angles
}

/// Evaluates one point from its nine angles.
pub fn evaluate(cfg: &SampleConfig, angles: [f64; 9]) -> Result<BlochPoint> {
    let (rho_s, rho_a) = cfg.initial_states();
    let y_angles = [angles[1], angles[2], angles[3], angles[4], angles[5], angles[6]];
    let y = y_closed_form(alphas_from_angles(y_angles));
    if cfg.verify_product {
        let residual = y.distance(&y_product(y_angles));
        if residual.is_nan() || residual >= PRODUCT_TOL {
            return Err(Error::VerificationFailed { residual });
        }
    }
    Ok(reachable_point(&rho_s, &rho_a, &y, (angles[0], angles[7], angles[8])))
}

/// `cfg.n` reachable points, in index order.
pub fn sample(cfg: &SampleConfig) -> Result<Vec<BlochPoint>> {
    cfg.validate()?;
    (0..cfg.n).map(|i| evaluate(cfg, point_angles(cfg, i))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::draw_rng;
    use rand::Rng;

    fn random_alphas(seed: u64) -> [f64; 6] {
        let mut rng = draw_rng(seed, 0);
        [0; 6].map(|_| rng.gen_range(-4.0..4.0))
    }

    #[test]
    fn zero_angles_give_identity() {
        assert!(y_closed_form([0.0; 6]).approx_eq(&ComplexMatrix::identity(4), 0.0));
    }

    #[test]
    fn single_factor_form() {
        let a = 0.37;
        let y = y_closed_form([a, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let xz = tensor(&sigma_tilde(Axis::X), &sigma_tilde(Axis::Z));
        let mut want = ComplexMatrix::identity(4).scale_re(a.cos());
        want += &xz.scale(Complex64::new(0.0, a.sin()));
        assert!(y.approx_eq(&want, 1e-15));
    }

    #[test]
    fn closed_form_matches_product() {
        for seed in 0..50 {
            let a = random_alphas(seed);
            let y = y_closed_form(a);
            assert!(y.unitarity_residual() < 1e-13);
            assert!(y.distance(&y_product(angles_from_alphas(a))) < 1e-12, "seed {seed}");
        }
    }

    #[test]
    fn angle_maps_are_inverse() {
        let a = random_alphas(99);
        let back = alphas_from_angles(angles_from_alphas(a));
        for (x, y) in a.iter().zip(back) {
            assert!((x - y).abs() < 1e-15);
        }
    }

    #[test]
    fn zero_angles_return_initial_state() {
        let cfg = SampleConfig::new(0.3, -0.4, 0.7);
        let p = evaluate(&cfg, [0.0; 9]).unwrap();
        assert!((p.x - 0.3).abs() < 1e-15 && p.y.abs() < 1e-15 && (p.z + 0.4).abs() < 1e-15);
    }

    #[test]
    fn figure_invariants() {
        let fig2 = sample(&SampleConfig::figure(2).unwrap()).unwrap();
        assert!(fig2.iter().all(|p| p.x.abs() < 1e-10 && p.y.abs() < 1e-10));
        let fig4 = sample(&SampleConfig::figure(4).unwrap()).unwrap();
        assert!(fig4.iter().all(|p| p.z.abs() < 1e-10));
        for f in [1, 3] {
            let pts = sample(&SampleConfig::figure(f).unwrap()).unwrap();
            assert!(pts.iter().all(|p| p.norm() <= 1.0 + 1e-9));
            assert!(pts.iter().any(|p| p.norm() > 0.5 + 1e-6));
        }
    }

    #[test]
    fn deterministic_and_grid() {
        let mut cfg = SampleConfig::figure(1).unwrap();
        cfg.n = 20;
        cfg.seed = 5;
        cfg.verify_product = true;
        assert_eq!(sample(&cfg).unwrap(), sample(&cfg).unwrap());
        cfg.mode = SampleMode::Grid;
        let a0 = point_angles(&cfg, 0);
        let a729 = point_angles(&cfg, 729);
        assert_eq!(a0[1..7], a729[1..7]);
        assert!((a0[1] - DEFAULT_RANGE.1 / 6.0).abs() < 1e-15);
        assert_eq!(sample(&cfg).unwrap().len(), 20);
    }

    #[test]
    fn t1_sweeps_a_circle() {
        let cfg = SampleConfig::figure(3).unwrap();
        let mut angles = point_angles(&cfg, 3);
        let p0 = evaluate(&cfg, angles).unwrap();
        for t1 in [0.4, 1.3, 2.9] {
            angles[0] = t1;
            let p = evaluate(&cfg, angles).unwrap();
            assert!((p.z - p0.z).abs() < 1e-13);
            assert!((p.x.hypot(p.y) - p0.x.hypot(p0.y)).abs() < 1e-13);
        }
    }

    #[test]
    fn rejects_invalid_config() {
        let mut cfg = SampleConfig::new(0.9, 0.9, 0.0);
        assert!(cfg.validate().is_err());
        cfg = SampleConfig::new(0.0, 0.0, 0.0);
        cfg.n = 0;
        assert!(cfg.validate().is_err());
        cfg.n = 1;
        cfg.angle_ranges[2] = (1.0, 0.0);
        assert!(cfg.validate().is_err());
    }
}
