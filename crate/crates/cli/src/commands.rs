use serde::Serialize;

use qubit_indirect::classify::{self, IdentityResidual};
use qubit_indirect::indirect::{self, GennegatVerdict};
use qubit_indirect::qalg::Subsystem;
use qubit_indirect::random::{draw_rng, pure_state, state, su2};
use qubit_indirect::{lie, sampler, BlochPoint, ComplexMatrix, Control, DensityMatrix, Tolerances};

use crate::config::{ConfigFile, Overrides};
use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TolerancesOut {
    pub rank: f64,
    pub eq: f64,
}

impl From<Tolerances> for TolerancesOut {
    fn from(t: Tolerances) -> Self {
        TolerancesOut { rank: t.rank, eq: t.eq }
    }
}

/// Entries as `[re, im]` pairs, row by row.
pub type MatrixOut = Vec<Vec<[f64; 2]>>;

pub fn matrix_out(m: &ComplexMatrix) -> MatrixOut {
    (0..m.dim())
        .map(|r| (0..m.dim()).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect())
        .collect()
}

#[derive(Debug, Serialize)]
pub struct CaseOut {
    pub case: &'static str,
    pub predicted_dim: usize,
    pub computed_dim: usize,
    pub agree: bool,
    pub marginal: bool,
    pub tolerances: TolerancesOut,
}

#[derive(Debug, Serialize)]
pub struct NormalFormOut {
    pub alpha: f64,
    pub gamma: f64,
    pub beta: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub omega_a: f64,
}

#[derive(Debug, Serialize)]
pub struct Oms0Out {
    pub c1: bool,
    pub c2: bool,
    pub cc: bool,
    pub det_k: f64,
    pub c2_magnitude: f64,
    pub computed_dim: usize,
    pub agree: bool,
    pub forms_agree: bool,
    pub marginal: bool,
    pub normal_form: NormalFormOut,
    pub tolerances: TolerancesOut,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum ClassifyOut {
    Case(CaseOut),
    SingleAxis(Oms0Out),
}

pub fn classify(cfg: &ConfigFile, o: &Overrides) -> CliResult<ClassifyOut> {
    let tol = cfg.tolerances(o)?;
    let m = cfg.model()?;
    let value = match m.control() {
        Control::Full => {
            let cv = classify::cross_validate(&m, &tol)?;
            ClassifyOut::Case(CaseOut {
                case: cv.predicted.tag.as_str(),
                predicted_dim: cv.predicted.predicted_dim,
                computed_dim: cv.computed_dim,
                agree: cv.agree,
                marginal: cv.predicted.marginal,
                tolerances: tol.into(),
            })
        }
        Control::Axis(_) => {
            let r = classify::oms0_check(&m, &tol)?;
            let computed_dim = lie::closure(&m.generator_set(), tol.rank).len();
            let nf = &r.normal_form;
            ClassifyOut::SingleAxis(Oms0Out {
                c1: r.c1,
                c2: r.c2,
                cc: r.cc,
                det_k: r.det_k,
                c2_magnitude: r.c2_magnitude,
                computed_dim,
                agree: r.cc == (computed_dim == 15),
                forms_agree: r.forms_agree,
                marginal: r.marginal,
                normal_form: NormalFormOut {
                    alpha: nf.alpha,
                    gamma: nf.gamma,
                    beta: nf.beta,
                    x: nf.x,
                    y: nf.y,
                    z: nf.z,
                    omega_a: nf.omega_a,
                },
                tolerances: tol.into(),
            })
        }
    };
    Ok(value)
}

#[derive(Debug, Serialize)]
pub struct ClosureOut {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<MatrixOut>>,
    pub tolerances: TolerancesOut,
}

pub fn closure(cfg: &ConfigFile, o: &Overrides, with_basis: bool) -> CliResult<ClosureOut> {
    let tol = cfg.tolerances(o)?;
    let l = lie::closure(&cfg.model()?.generator_set(), tol.rank);
    Ok(ClosureOut {
        dim: l.len(),
        basis: with_basis.then(|| l.iter().map(matrix_out).collect()),
        tolerances: tol.into(),
    })
}

#[derive(Debug, Serialize)]
pub struct NegatOut {
    pub algebra_dim: usize,
    pub v_dim: usize,
    pub trace_image_dim: usize,
    pub uic_excluded: bool,
    pub tolerances: TolerancesOut,
}

pub fn negat(cfg: &ConfigFile, o: &Overrides) -> CliResult<NegatOut> {
    let tol = cfg.tolerances(o)?;
    let m = cfg.model()?;
    let rho_s = ConfigFile::state("rho_S", cfg.rho_s)?;
    let rho_a = ConfigFile::state("rho_A", cfg.rho_a)?;
    let l = lie::closure(&m.generator_set(), tol.rank);
    let GennegatVerdict {
        v_dim,
        trace_image_dim,
        uic_excluded,
    } = indirect::gennegat_test(&l, &rho_s, &rho_a, &tol)?;
    Ok(NegatOut {
        algebra_dim: l.len(),
        v_dim,
        trace_image_dim,
        uic_excluded,
        tolerances: tol.into(),
    })
}

#[derive(Debug, Serialize)]
pub struct EulerOut {
    pub t2: f64,
    pub t: f64,
    pub t1: f64,
}

#[derive(Debug, Serialize)]
pub struct SteerOut {
    /// `1` when a single `(X, ρ_S)` pair came from the file.
    pub draws: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub max_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler: Option<EulerOut>,
    /// Steering unitary, including the accessor preparation `1 ⊗ P`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unitary: Option<MatrixOut>,
    pub tolerances: TolerancesOut,
}

fn marginal(initial: &DensityMatrix, u: &ComplexMatrix) -> CliResult<DensityMatrix> {
    Ok(initial.evolve(u).partial_trace(Subsystem::S)?)
}

pub fn steer(cfg: &ConfigFile, o: &Overrides) -> CliResult<SteerOut> {
    let tol = cfg.tolerances(o)?;
    if let Some(x) = cfg.x_matrix() {
        let rho_s = ConfigFile::state("rho_S", cfg.rho_s)?;
        let rho_a = match cfg.rho_a {
            Some(_) => ConfigFile::state("rho_A", cfg.rho_a)?,
            None => DensityMatrix::ground(),
        };
        let p = indirect::accessor_to_ground(&rho_a, &tol)?;
        let t = &indirect::pure_uic_steer(&rho_s, &x)? * &indirect::on_accessor(&p);
        let out = marginal(&rho_s.tensor(&rho_a), &t)?;
        let (t2, th, t1) = indirect::euler_su2(&x)?;
        return Ok(SteerOut {
            draws: 1,
            seed: None,
            max_residual: out.matrix().distance(rho_s.evolve(&x).matrix()),
            euler: Some(EulerOut { t2, t: th, t1 }),
            unitary: Some(matrix_out(&t)),
            tolerances: tol.into(),
        });
    }
    let (draws, seed) = (cfg.draws(o, 500), cfg.seed(o));
    let mut worst: f64 = 0.0;
    for i in 0..draws {
        let mut rng = draw_rng(seed, i as u64);
        let (x, rho) = (su2(&mut rng), state(&mut rng, 0.0));
        let t = indirect::pure_uic_steer(&rho, &x)?;
        let out = marginal(&rho.tensor(&DensityMatrix::ground()), &t)?;
        worst = worst.max(out.matrix().distance(rho.evolve(&x).matrix()));
    }
    Ok(SteerOut {
        draws,
        seed: Some(seed),
        max_residual: worst,
        euler: None,
        unitary: None,
        tolerances: tol.into(),
    })
}

#[derive(Debug, Serialize)]
pub struct FicOut {
    pub draws: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Largest `‖Tr_A(U ρ_S⊗ψ U†) − target‖_F`.
    pub max_residual: f64,
    pub max_eigenvalue_error: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unitary: Option<MatrixOut>,
    pub tolerances: TolerancesOut,
}

fn eigenvalue_error(a: &DensityMatrix, b: &DensityMatrix) -> f64 {
    a.spectrum()
        .iter()
        .zip(b.spectrum())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn fic(cfg: &ConfigFile, o: &Overrides) -> CliResult<FicOut> {
    let tol = cfg.tolerances(o)?;
    let run = |rho: &DensityMatrix, psi: &DensityMatrix, target: &DensityMatrix| -> CliResult<_> {
        let r = indirect::fic_reach(rho, psi, target, &tol)?;
        let out = marginal(&rho.tensor(psi), &r.unitary)?;
        let err = eigenvalue_error(&out, target);
        Ok((r, out.matrix().distance(target.matrix()), err))
    };
    if cfg.target.is_some() {
        let rho = ConfigFile::state("rho_S", cfg.rho_s)?;
        let psi = ConfigFile::state("psi_A", cfg.psi_a)?;
        let target = ConfigFile::state("target", cfg.target)?;
        let (r, residual, err) = run(&rho, &psi, &target)?;
        return Ok(FicOut {
            draws: 1,
            seed: None,
            max_residual: residual,
            max_eigenvalue_error: err,
            theta: Some(r.theta),
            unitary: Some(matrix_out(&r.unitary)),
            tolerances: tol.into(),
        });
    }
    let (draws, seed) = (cfg.draws(o, 100), cfg.seed(o));
    let (mut worst, mut worst_eig): (f64, f64) = (0.0, 0.0);
    for i in 0..draws {
        let mut rng = draw_rng(seed, i as u64);
        let (rho, psi, target) = (state(&mut rng, 0.0), pure_state(&mut rng), state(&mut rng, 0.0));
        let (_, residual, err) = run(&rho, &psi, &target)?;
        worst = worst.max(residual);
        worst_eig = worst_eig.max(err);
    }
    Ok(FicOut {
        draws,
        seed: Some(seed),
        max_residual: worst,
        max_eigenvalue_error: worst_eig,
        theta: None,
        unitary: None,
        tolerances: tol.into(),
    })
}

pub fn sample(cfg: &ConfigFile, o: &Overrides) -> CliResult<(u64, Vec<BlochPoint>)> {
    let sc = cfg.sample_config(o)?;
    Ok((sc.seed, sampler::sample(&sc)?))
}

#[derive(Debug, Serialize)]
pub struct WorstOut {
    pub name: &'static str,
    pub residual: f64,
}

impl From<IdentityResidual> for WorstOut {
    fn from(r: IdentityResidual) -> Self {
        WorstOut {
            name: r.name,
            residual: r.residual,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyOut {
    pub draws: usize,
    pub seed: u64,
    pub gamma_max: f64,
    pub appendix_b_max: f64,
    pub max_residual: f64,
    pub pass: bool,
    pub worst_gamma: Option<WorstOut>,
    pub worst_appendix_b: Option<WorstOut>,
    pub tolerances: TolerancesOut,
}

/// Threshold for the `pass` flag of `verify`.
pub const IDENTITY_TOL: f64 = 1e-12;

pub fn verify(cfg: &ConfigFile, o: &Overrides) -> CliResult<VerifyOut> {
    let tol = cfg.tolerances(o)?;
    let (draws, seed) = (cfg.draws(o, 1000), cfg.seed(o));
    if draws == 0 {
        return Err(CliError::Config("draws must be at least 1".into()));
    }
    let s = classify::verify_identities(draws, seed);
    Ok(VerifyOut {
        draws,
        seed,
        gamma_max: s.gamma_max,
        appendix_b_max: s.appendix_b_max,
        max_residual: s.max_residual(),
        pass: s.max_residual() < IDENTITY_TOL,
        worst_gamma: s.worst_gamma.map(Into::into),
        worst_appendix_b: s.worst_appendix_b.map(Into::into),
        tolerances: tol.into(),
    })
}
