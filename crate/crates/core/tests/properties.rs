use num_complex::Complex64;
use proptest::prelude::*;

use qubit_indirect::classify::l1b_basis;
use qubit_indirect::indirect::{euler_compose, euler_su2, fic_reach, pure_uic_generators, pure_uic_steer};
use qubit_indirect::lie;
use qubit_indirect::qalg::real3::{self, IDENTITY3};
use qubit_indirect::qalg::{
    anticommutator, bloch, bloch_inverse, commutator, mat_exp, partial_trace, sigma, tensor, Axis, Subsystem,
};
use qubit_indirect::random::{case_model, draw_rng, pure_state, rotation, state, su2};
use qubit_indirect::sampler::{evaluate, sample, y_closed_form, SampleConfig};
use qubit_indirect::{BlochPoint, ComplexMatrix, DensityMatrix, Tolerances};

fn matrix(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim * dim).prop_map(|v| {
        ComplexMatrix::from_vec(v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect()).unwrap()
    })
}

fn skew(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    matrix(dim).prop_map(|m| (&m - &m.adjoint()).scale_re(0.5))
}

fn ball_point() -> impl Strategy<Value = BlochPoint> {
    (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0).prop_filter_map("inside ball", |(x, y, z)| {
        (x * x + y * y + z * z <= 1.0).then_some(BlochPoint { x, y, z })
    })
}

fn tol() -> Tolerances {
    Tolerances::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mixed_product_bracket(a in matrix(2), b in matrix(2), c in matrix(2), d in matrix(2)) {
        let lhs = commutator(&tensor(&a, &b), &tensor(&c, &d)).unwrap();
        let mut rhs = tensor(&commutator(&a, &c).unwrap(), &anticommutator(&b, &d).unwrap()).scale_re(0.5);
        rhs.axpy(0.5, &tensor(&anticommutator(&a, &c).unwrap(), &commutator(&b, &d).unwrap()));
        prop_assert!(lhs.distance(&rhs) < 1e-12);
    }

    #[test]
    fn partial_trace_is_linear(r1 in matrix(4), r2 in matrix(4), a in -2.0f64..2.0, b in -2.0f64..2.0) {
        let mut mix = r1.scale_re(a);
        mix.axpy(b, &r2);
        for keep in [Subsystem::S, Subsystem::A] {
            let lhs = partial_trace(&mix, keep).unwrap();
            let mut rhs = partial_trace(&r1, keep).unwrap().scale_re(a);
            rhs.axpy(b, &partial_trace(&r2, keep).unwrap());
            prop_assert!(lhs.distance(&rhs) < 1e-13);
        }
    }

    #[test]
    fn exponential_inverse(a in skew(4), s in 0.1f64..5.0) {
        let a = a.scale_re(s);
        let e = mat_exp(&a, true).unwrap();
        let f = mat_exp(&-&a, true).unwrap();
        prop_assert!((&e * &f).distance(&ComplexMatrix::identity(4)) < 1e-12);
    }

    #[test]
    fn bloch_round_trip(p in ball_point()) {
        let q = bloch(&bloch_inverse(p).unwrap()).unwrap();
        prop_assert!((p.x - q.x).abs() < 1e-15 && (p.y - q.y).abs() < 1e-15 && (p.z - q.z).abs() < 1e-15);
    }

    #[test]
    fn closure_is_bracket_closed_and_span_invariant(seed in any::<u64>(), case in 0usize..6, scale in 0.2f64..5.0) {
        let mut rng = draw_rng(seed, 0);
        let m = case_model(&mut rng, qubit_indirect::classify::CaseTag::ALL[case]);
        let gens = m.generator_set();
        let l = lie::closure(&gens, 1e-9);
        prop_assert!(l.len() <= 15);
        for e in &l {
            for f in &l {
                prop_assert!(l.contains(&commutator(e, f).unwrap(), 1e-9));
            }
        }
        let mut other: Vec<_> = gens.iter().rev().cloned().collect();
        other[0] = other[0].scale_re(-scale);
        prop_assert!(l.same_span(&lie::closure(&other, 1e-9), 1e-9));
    }

    #[test]
    fn invariant_space_property(seed in any::<u64>()) {
        let mut rng = draw_rng(seed, 1);
        let l = l1b_basis();
        let (rs, ra) = (state(&mut rng, 0.1), state(&mut rng, 0.0));
        let s = rs.tensor(&ra).into_matrix().scale(Complex64::new(0.0, 1.0));
        let v = lie::invariant_space(&l, &s, 1e-9);
        prop_assert!(v.contains(&s, 1e-9));
        for e in &l {
            for w in &v {
                prop_assert!(v.contains(&commutator(e, w).unwrap(), 1e-9));
            }
        }
    }

    #[test]
    fn interaction_covariance(seed in any::<u64>()) {
        let mut rng = draw_rng(seed, 2);
        let m = case_model(&mut rng, qubit_indirect::classify::CaseTag::C2c);
        let r = rotation(&mut rng);
        let w = tensor(&real3::su2_from_rotation(&r), &ComplexMatrix::identity(2));
        let rotated = m.rotated(&r, &IDENTITY3);
        prop_assert!(rotated.interaction().distance(&m.interaction().conjugate_by(&w)) < 1e-12);
        for g in m.generator_set() {
            prop_assert!(g.skew_hermitian_residual() < 1e-14 && g.trace().norm() < 1e-14);
        }
    }

    #[test]
    fn euler_reconstruction(seed in any::<u64>()) {
        let x = su2(&mut draw_rng(seed, 3));
        let (t2, t, t1) = euler_su2(&x).unwrap();
        prop_assert!(euler_compose(t2, t, t1).distance(&x) < 1e-10);
    }

    #[test]
    fn steering_preserves_spectrum(seed in any::<u64>()) {
        let mut rng = draw_rng(seed, 4);
        let (x, rho) = (su2(&mut rng), state(&mut rng, 0.0));
        let t = pure_uic_steer(&rho, &x).unwrap();
        let out = rho.tensor(&DensityMatrix::ground()).evolve(&t).partial_trace(Subsystem::S).unwrap();
        for (a, b) in out.spectrum().iter().zip(rho.spectrum()) {
            prop_assert!((a - b).abs() < 1e-10);
        }
        prop_assert!(out.matrix().distance(rho.evolve(&x).matrix()) < 1e-10);
        let l1b = l1b_basis();
        for g in pure_uic_generators(&x).unwrap() {
            prop_assert!(l1b.contains(&g, 1e-9));
        }
    }

    #[test]
    fn reach_gives_valid_state(seed in any::<u64>()) {
        let mut rng = draw_rng(seed, 5);
        let (rho, psi, target) = (state(&mut rng, 0.0), pure_state(&mut rng), state(&mut rng, 0.0));
        let r = fic_reach(&rho, &psi, &target, &tol()).unwrap();
        let out = rho.tensor(&psi).evolve(&r.unitary).partial_trace(Subsystem::S).unwrap();
        prop_assert!(DensityMatrix::new(out.matrix().clone(), 1e-9).is_ok());
        for (a, b) in out.spectrum().iter().zip(target.spectrum()) {
            prop_assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn y_is_unitary(a in prop::array::uniform6(-10.0f64..10.0)) {
        prop_assert!(y_closed_form(a).unitarity_residual() < 1e-12);
    }

    #[test]
    fn outer_angle_sweeps_circle(seed in any::<u64>(), t1 in 0.0f64..12.6, fig in 1u8..=4) {
        let cfg = SampleConfig::figure(fig).unwrap();
        let mut angles = [0.0; 9];
        let mut rng = draw_rng(seed, 6);
        for a in angles.iter_mut() {
            *a = qubit_indirect::random::uniform(&mut rng, 0.0, 12.0);
        }
        let p = evaluate(&cfg, angles).unwrap();
        angles[0] = t1;
        let q = evaluate(&cfg, angles).unwrap();
        prop_assert!((p.z - q.z).abs() < 1e-12);
        prop_assert!((p.x.hypot(p.y) - q.x.hypot(q.y)).abs() < 1e-12);
    }

    #[test]
    fn confinement_for_every_seed(seed in any::<u64>()) {
        for fig in [2u8, 4] {
            let mut cfg = SampleConfig::figure(fig).unwrap();
            cfg.seed = seed;
            cfg.n = 50;
            for p in sample(&cfg).unwrap() {
                prop_assert!(p.norm() <= 1.0 + 1e-9);
                if fig == 2 {
                    prop_assert!(p.x.abs() < 1e-10 && p.y.abs() < 1e-10);
                } else {
                    prop_assert!(p.z.abs() < 1e-10);
                }
            }
        }
    }
}

#[test]
fn su2_anticommutators() {
    for (j, a) in Axis::ALL.into_iter().enumerate() {
        for (k, b) in Axis::ALL.into_iter().enumerate() {
            let ac = anticommutator(&sigma(a), &sigma(b)).unwrap();
            let want = if j == k { ComplexMatrix::identity(2).scale_re(-0.5) } else { ComplexMatrix::zeros(2) };
            assert!(ac.distance(&want) < 1e-15);
        }
    }
}
