//! Matrix identities behind the single-axis controllability proof.
//!
//! Everything is evaluated numerically in the normal frame and reported as
//! Frobenius residuals `‖lhs − rhs‖`.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::lie::{self, LieBasis};
use crate::qalg::{bracket, i_sigma_sigma, on_a, on_s, sigma, sigma_from_vec, tensor, Axis, ComplexMatrix};
use crate::random::{draw_rng, nonzero, uniform, unit_vector};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdentityResidual {
    pub name: &'static str,
    pub residual: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct IdentityReport {
    pub entries: Vec<IdentityResidual>,
}

impl IdentityReport {
    fn check(&mut self, name: &'static str, lhs: &ComplexMatrix, rhs: &ComplexMatrix) {
        self.entries.push(IdentityResidual {
            name,
            residual: lhs.distance(rhs),
        });
    }

    pub fn max_residual(&self) -> f64 {
        self.entries.iter().map(|e| e.residual).fold(0.0, f64::max)
    }

    pub fn worst(&self) -> Option<IdentityResidual> {
        self.entries
            .iter()
            .copied()
            .max_by(|a, b| a.residual.total_cmp(&b.residual))
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.entries.iter().find(|e| e.name == name).map(|e| e.residual)
    }
}

/// The two commuting `su(2)` triples `Γ^±` built from `α` and `ω_A`.
#[derive(Clone, Debug)]
pub struct GammaSet {
    pub plus: [ComplexMatrix; 3],
    pub minus: [ComplexMatrix; 3],
    /// `k = α² + 4ω_A²`
    pub k: f64,
}

impl GammaSet {
    pub fn new(alpha: f64, omega_a: f64) -> Result<Self> {
        let k = alpha * alpha + 4.0 * omega_a * omega_a;
        if alpha == 0.0 || !k.is_finite() {
            return Err(Error::Degenerate("alpha must be nonzero"));
        }
        Ok(Self::build(alpha, omega_a, k))
    }

    /// Needs only `k > 0`.
    fn build(alpha: f64, omega_a: f64, k: f64) -> Self {
        let r = k.sqrt();
        let build = |sign: f64| {
            let g = sign / r;
            let x = &i_sigma_sigma(Axis::Y, Axis::X)
                + &(&i_sigma_sigma(Axis::X, Axis::Y).scale_re(alpha) - &on_a(&sigma(Axis::X)).scale_re(omega_a))
                    .scale_re(g);
            let y = (&on_a(&sigma(Axis::Z))
                + &(&on_s(&sigma(Axis::Z)).scale_re(alpha)
                    - &i_sigma_sigma(Axis::Y, Axis::Z).scale_re(4.0 * omega_a))
                    .scale_re(g))
                .scale_re(-0.5);
            let z = &i_sigma_sigma(Axis::Y, Axis::Y)
                - &(&i_sigma_sigma(Axis::X, Axis::X).scale_re(alpha) + &on_a(&sigma(Axis::Y)).scale_re(omega_a))
                    .scale_re(g);
            [x, y, z]
        };
        GammaSet {
            plus: build(1.0),
            minus: build(-1.0),
            k,
        }
    }
}

/// `L₁ = 1 ⊗ σ_z` and `L₂ = iασ_x⊗σ_x + iγσ_y⊗σ_x + iβσ_y⊗σ_y + ω_A 1⊗σ_y`.
fn l1_l2(alpha: f64, gamma: f64, beta: f64, omega_a: f64) -> (ComplexMatrix, ComplexMatrix) {
    let l1 = on_a(&sigma(Axis::Z));
    let mut l2 = i_sigma_sigma(Axis::X, Axis::X).scale_re(alpha);
    l2.axpy(gamma, &i_sigma_sigma(Axis::Y, Axis::X));
    l2.axpy(beta, &i_sigma_sigma(Axis::Y, Axis::Y));
    l2.axpy(omega_a, &on_a(&sigma(Axis::Y)));
    (l1, l2)
}

/// Lie algebra generated by `L₁` and `L₂`.
pub fn l_double_prime(alpha: f64, gamma: f64, beta: f64, omega_a: f64, tol: f64) -> LieBasis {
    let (l1, l2) = l1_l2(alpha, gamma, beta, omega_a);
    lie::closure(&[l1, l2], tol)
}

/// Bracket tables of `Γ^±`, their mutual commutation, the expansions of
/// `L₁`, `L₂` in the `Γ` basis, and the double bracket `[[L₁, L₂], L₂]`.
pub fn gamma_suite(alpha: f64, gamma: f64, beta: f64, omega_a: f64) -> Result<IdentityReport> {
    let g = GammaSet::new(alpha, omega_a)?;
    let r = g.k.sqrt();
    let mut rep = IdentityReport::default();
    let [xp, yp, zp] = &g.plus;
    let [xm, ym, zm] = &g.minus;

    rep.check("[G+x, G+y] = G+z", &bracket(xp, yp), zp);
    rep.check("[G+y, G+z] = G+x", &bracket(yp, zp), xp);
    rep.check("[G+z, G+x] = G+y", &bracket(zp, xp), yp);
    rep.check("[G-x, G-y] = G-z", &bracket(xm, ym), zm);
    rep.check("[G-y, G-z] = G-x", &bracket(ym, zm), xm);
    rep.check("[G-z, G-x] = G-y", &bracket(zm, xm), ym);

    const CROSS: [&str; 9] = [
        "[G+x, G-x] = 0",
        "[G+x, G-y] = 0",
        "[G+x, G-z] = 0",
        "[G+y, G-x] = 0",
        "[G+y, G-y] = 0",
        "[G+y, G-z] = 0",
        "[G+z, G-x] = 0",
        "[G+z, G-y] = 0",
        "[G+z, G-z] = 0",
    ];
    let zero = ComplexMatrix::zeros(4);
    for (i, p) in g.plus.iter().enumerate() {
        for (j, m) in g.minus.iter().enumerate() {
            rep.check(CROSS[3 * i + j], &bracket(p, m), &zero);
        }
    }

    let (l1, l2) = l1_l2(alpha, gamma, beta, omega_a);
    rep.check("L1 = -(G+y + G-y)", &l1, &-(yp + ym));
    let mut l2_rhs = (xp + xm).scale_re(gamma);
    l2_rhs.axpy(r, &(zm - zp));
    l2_rhs.axpy(beta, &(zp + zm));
    rep.check("L2 = (g(G+x + G-x) + r(G-z - G+z) + b(G+z + G-z)) / 2", &l2, &l2_rhs.scale_re(0.5));

    let lhs = bracket(&bracket(&l1, &l2), &l2);
    let mut rhs = yp.scale_re(gamma * gamma + (beta - r) * (beta - r));
    rhs.axpy(gamma * gamma + (beta + r) * (beta + r), ym);
    rep.check("[[L1, L2], L2] = ((g^2 + (b - r)^2) G+y + (g^2 + (b + r)^2) G-y) / 4", &lhs, &rhs.scale_re(0.25));
    Ok(rep)
}

/// Brackets from the controllability argument for the four-dimensional
/// `L''` branch, plus the two brackets that finish the generic branch.
///
/// `(x, y, z)` must be a unit vector and `α² + ω_A² > 0`.
///
/// Three of the step-two brackets equal the listed direction only modulo
/// directions already generated (`A`, `P`, `Z`); the residuals below are
/// for the exact identities including those terms.
pub fn appendix_b_suite(x: f64, y: f64, z: f64, alpha: f64, omega_a: f64) -> Result<IdentityReport> {
    let norm = (x * x + y * y + z * z).sqrt();
    if norm.is_nan() || (norm - 1.0).abs() > 1e-9 {
        return Err(Error::Degenerate("(x, y, z) must be a unit vector"));
    }
    let k = alpha * alpha + 4.0 * omega_a * omega_a;
    if k == 0.0 || !k.is_finite() {
        return Err(Error::Degenerate("alpha and omega_A both vanish"));
    }
    let r = k.sqrt();
    let (c, s) = (alpha / r, 2.0 * omega_a / r);
    let i = Complex64::new(0.0, 1.0);
    let sc = sigma_from_vec([x, y, z]);
    let one = ComplexMatrix::identity(2);
    let [sx, sy, sz] = Axis::ALL.map(sigma);
    let isc = |b: &ComplexMatrix| tensor(&sc, b).scale(i);
    let ii = i_sigma_sigma;

    let mut gz = ii(Axis::Y, Axis::Y);
    gz.axpy(c, &ii(Axis::X, Axis::X));
    gz.axpy(s / 2.0, &on_a(&sy));
    let zz = on_a(&sz);
    let mut a = on_s(&sz).scale_re(c);
    a.axpy(-2.0 * s, &ii(Axis::Y, Axis::Z));
    let p = isc(&sz);

    let mut rep = IdentityReport::default();

    let q1 = bracket(&p, &a);
    let mut q1_rhs = (&ii(Axis::X, Axis::Z).scale_re(y) - &ii(Axis::Y, Axis::Z).scale_re(x)).scale_re(c);
    q1_rhs.axpy(s / 2.0, &(&on_s(&sx).scale_re(z) - &on_s(&sz).scale_re(x)));
    rep.check("Q1 = [P, A]", &q1, &q1_rhs);

    let q2 = bracket(&p, &gz).scale_re(4.0);
    let mut q2_rhs = on_a(&sx).scale_re(-y);
    q2_rhs.axpy(c * x, &on_a(&sy));
    q2_rhs.axpy(-2.0 * s, &isc(&sx));
    rep.check("Q2 = 4[P, G-z]", &q2, &q2_rhs);

    let r1 = tensor(&sc, &one).scale_re(c);
    let mut r2 = ii(Axis::Z, Axis::Z).scale_re(c * c * z);
    r2.axpy(s * s * y, &ii(Axis::Y, Axis::Z));
    r2.axpy(-s * c / 2.0, &(&on_s(&sz).scale_re(y) + &on_s(&sy).scale_re(z)));
    let mut r3 = on_a(&sy).scale_re(c * c * y / 4.0);
    r3.axpy(-s * c / 2.0 * y, &ii(Axis::X, Axis::X));
    r3.axpy(c * x / 4.0, &on_a(&sx));
    r3.axpy(s / 2.0, &(&ii(Axis::Z, Axis::Y).scale_re(z) + &ii(Axis::X, Axis::Y).scale_re(x)));
    let mut r4 = isc(&sy).scale_re(y);
    r4.axpy(c * x, &isc(&sx));
    r4.axpy(s / 2.0, &on_a(&sy));
    let mut r5 = on_a(&sy).scale_re(y);
    r5.axpy(c * x, &on_a(&sx));
    r5.axpy(2.0 * s, &isc(&sy));
    let mut r6 = ii(Axis::X, Axis::Z).scale_re(-c * c * x);
    r6.axpy(-y, &ii(Axis::Y, Axis::Z));
    r6.axpy(s * c / 2.0, &(&on_s(&sz).scale_re(y) - &on_s(&sy).scale_re(z)));

    let mut q1p = r1.scale_re(-z / 4.0);
    q1p.axpy(0.25, &a);
    q1p.axpy(s * y / 2.0, &p);
    rep.check("[Q1, P] = -(z/4) R1 + A/4 + (s y/2) P", &bracket(&q1, &p), &q1p);
    rep.check("[Q1, A] = R2 - P", &bracket(&q1, &a), &(&r2 - &p));
    rep.check("[Q1, G-z] = R3", &bracket(&q1, &gz), &r3);
    rep.check("[Q2, P] = R4", &bracket(&q2, &p), &r4);
    rep.check("[Q2, Z] = R5", &bracket(&q2, &zz), &r5);
    let mut q2g = r6.clone();
    q2g.axpy(-s * s, &p);
    q2g.axpy(-s * y, &zz);
    rep.check("[Q2, G-z] = R6 - s^2 P - s y Z", &bracket(&q2, &gz), &q2g);

    let mut s1 = isc(&sx).scale_re(y);
    s1.axpy(-c * x, &isc(&sy));
    s1.axpy(s / 2.0, &on_a(&sx));
    rep.check("S1 = [R4, Z]", &bracket(&r4, &zz), &s1);

    let mut comb = s1.scale_re(2.0 * s * c * x * y);
    comb.axpy(-2.0 * s * y * y, &r4);
    comb.axpy(c * c * x * x * y + y * y * y, &r5);
    let mut comb_rhs = on_a(&sy).scale_re(y * y * (y * y + c * c * x * x - s * s));
    comb_rhs.axpy(c * x * y * (c * c * x * x + y * y + s * s), &on_a(&sx));
    rep.check("2scxy S1 - 2sy^2 R4 + (c^2x^2y + y^3) R5 = local", &comb, &comb_rhs);

    // on the axis x = y = 0 the extra local term comes straight from [P, Q2]
    let p_axis = ii(Axis::Z, Axis::Z);
    let q2_axis = bracket(&p_axis, &gz).scale_re(4.0);
    rep.check("[P, Q2] = -(s/2) 1 x sy  at x = y = 0", &bracket(&p_axis, &q2_axis), &on_a(&sy).scale_re(-s / 2.0));

    // the generic branch, with the triples built from (α, ω_A)
    let g = GammaSet::build(alpha, omega_a, k);
    let t = isc(&sz);
    let zsum = &g.plus[2] + &g.minus[2];
    rep.check("[G+z + G-z, T] = (y/2) 1 x sx", &bracket(&zsum, &t), &on_a(&sx).scale_re(y / 2.0));

    let t0 = tensor(&sigma_from_vec([x, 0.0, z]), &sz).scale(i);
    let mut inner = bracket(&g.plus[2], &t0).scale_re(8.0 * omega_a);
    inner.axpy(alpha * x, &(&g.plus[2] - &g.minus[2]));
    let lhs = bracket(&inner, &t0).scale_re(1.0 / r);
    let rhs = on_a(&sy).scale_re(x * x / 2.0 + 2.0 * omega_a * omega_a * z * z / k);
    rep.check("[8w[G+z, T] + ax(G+z - G-z), T]/r = (x^2/2 + 2w^2z^2/k) 1 x sy  at y = 0", &lhs, &rhs);
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuiteSummary {
    pub draws: usize,
    pub gamma_max: f64,
    pub appendix_b_max: f64,
    pub worst_gamma: Option<IdentityResidual>,
    pub worst_appendix_b: Option<IdentityResidual>,
}

impl SuiteSummary {
    pub fn max_residual(&self) -> f64 {
        self.gamma_max.max(self.appendix_b_max)
    }
}

/// Both suites over `draws` random admissible parameter sets.
///
/// Draw `i` uses its own stream of `seed`; `α` is kept away from zero.
pub fn verify_identities(draws: usize, seed: u64) -> SuiteSummary {
    let mut summary = SuiteSummary {
        draws,
        gamma_max: 0.0,
        appendix_b_max: 0.0,
        worst_gamma: None,
        worst_appendix_b: None,
    };
    for i in 0..draws {
        let mut rng = draw_rng(seed, i as u64);
        let alpha = nonzero(&mut rng, 1e-3);
        let gamma = uniform(&mut rng, -1.0, 1.0);
        let beta = uniform(&mut rng, -1.0, 1.0);
        let omega_a = uniform(&mut rng, -1.0, 1.0);
        let [x, y, z] = unit_vector(&mut rng);
        let g = gamma_suite(alpha, gamma, beta, omega_a).expect("alpha is nonzero");
        let b = appendix_b_suite(x, y, z, alpha, omega_a).expect("admissible draw");
        if g.max_residual() >= summary.gamma_max {
            summary.gamma_max = g.max_residual();
            summary.worst_gamma = g.worst();
        }
        if b.max_residual() >= summary.appendix_b_max {
            summary.appendix_b_max = b.max_residual();
            summary.worst_appendix_b = b.worst();
        }
    }
    summary
}
