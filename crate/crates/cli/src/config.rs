//! The JSON run configuration.
//!
//! One flat object. Model-driven commands need `omega_S`, `K` and `control`;
//! every other field is optional and only read by the commands that use it.

use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;

use qubit_indirect::sampler::{SampleConfig, SampleMode};
use qubit_indirect::{qalg, BlochPoint, ComplexMatrix, Control, DensityMatrix, Tolerances, TwoQubitModel};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(rename = "omega_S")]
    pub omega_s: Option<f64>,
    #[serde(rename = "K")]
    pub k: Option<[[f64; 3]; 3]>,
    /// Accessor drift vector; zero if absent.
    #[serde(rename = "C")]
    pub c: Option<[f64; 3]>,
    pub control: Option<ControlSpec>,
    /// Bloch vector of the target's initial state.
    #[serde(rename = "rho_S")]
    pub rho_s: Option<[f64; 3]>,
    /// Bloch vector of the accessor's initial state.
    #[serde(rename = "rho_A")]
    pub rho_a: Option<[f64; 3]>,
    /// Bloch vector of a pure accessor state.
    #[serde(rename = "psi_A")]
    pub psi_a: Option<[f64; 3]>,
    /// Bloch vector of the requested target state.
    pub target: Option<[f64; 3]>,
    /// `SU(2)` element as rows of `[re, im]` pairs.
    #[serde(rename = "X")]
    pub x: Option<[[[f64; 2]; 2]; 2]>,
    pub seed: Option<u64>,
    pub draws: Option<usize>,
    pub tolerances: Option<TolerancesSpec>,
    pub sample: Option<SampleSpec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum ControlSpec {
    Full {},
    Axis { n: [f64; 3] },
}

#[derive(Clone, Copy, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TolerancesSpec {
    pub rank: Option<f64>,
    pub eq: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeSpec {
    Random,
    Grid,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleSpec {
    /// Preset initial states 1 to 4; explicit `s_x`, `s_z`, `a_z` override it.
    pub figure: Option<u8>,
    pub s_x: Option<f64>,
    pub s_z: Option<f64>,
    pub a_z: Option<f64>,
    pub n: Option<usize>,
    pub mode: Option<ModeSpec>,
    /// Nine `[lo, hi]` intervals in the order t1, t3, t4, a1, a2, s1, s2, s3, s4.
    pub angle_ranges: Option<[[f64; 2]; 9]>,
    pub verify_product: Option<bool>,
}

/// Flag values that take precedence over the file.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub draws: Option<usize>,
    pub tol_rank: Option<f64>,
    pub tol_eq: Option<f64>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(CliError::config)
    }

    pub fn tolerances(&self, o: &Overrides) -> CliResult<Tolerances> {
        let spec = self.tolerances.unwrap_or_default();
        let t = Tolerances {
            rank: o.tol_rank.or(spec.rank).unwrap_or(Tolerances::DEFAULT_RANK),
            eq: o.tol_eq.or(spec.eq).unwrap_or(Tolerances::DEFAULT_EQ),
        };
        for (name, v) in [("rank", t.rank), ("eq", t.eq)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(CliError::Config(format!("tolerance {name} must be positive and finite")));
            }
        }
        Ok(t)
    }

    pub fn seed(&self, o: &Overrides) -> u64 {
        o.seed.or(self.seed).unwrap_or(0)
    }

    pub fn draws(&self, o: &Overrides, default: usize) -> usize {
        o.draws.or(self.draws).unwrap_or(default)
    }

    pub fn model(&self) -> CliResult<TwoQubitModel> {
        let missing = |f: &str| CliError::Config(format!("model field \"{f}\" is required"));
        let omega_s = self.omega_s.ok_or_else(|| missing("omega_S"))?;
        let k = self.k.ok_or_else(|| missing("K"))?;
        let control = match self.control.ok_or_else(|| missing("control"))? {
            ControlSpec::Full {} => Control::Full,
            ControlSpec::Axis { n } => Control::axis(n).map_err(CliError::config)?,
        };
        TwoQubitModel::new(omega_s, k, self.c.unwrap_or([0.0; 3]), control).map_err(CliError::config)
    }

    pub fn state(field: &str, v: Option<[f64; 3]>) -> CliResult<DensityMatrix> {
        let [x, y, z] = v.ok_or_else(|| CliError::Config(format!("field \"{field}\" is required")))?;
        BlochPoint::new(x, y, z)
            .and_then(qalg::bloch_inverse)
            .map_err(|e| CliError::Config(format!("{field}: {e}")))
    }

    pub fn x_matrix(&self) -> Option<ComplexMatrix> {
        self.x.map(|rows| ComplexMatrix::from_fn(2, |r, c| Complex64::new(rows[r][c][0], rows[r][c][1])))
    }

    pub fn sample_config(&self, o: &Overrides) -> CliResult<SampleConfig> {
        let spec = self.sample.clone().unwrap_or_default();
        let mut cfg = match spec.figure {
            Some(f) => SampleConfig::figure(f)
                .ok_or_else(|| CliError::Config(format!("figure must be 1 to 4, got {f}")))?,
            None => SampleConfig::new(0.0, 0.0, 0.0),
        };
        if spec.figure.is_none() && (spec.s_x.is_none() || spec.s_z.is_none() || spec.a_z.is_none()) {
            return Err(CliError::Config("sample needs \"figure\" or all of s_x, s_z, a_z".into()));
        }
        cfg.s_x = spec.s_x.unwrap_or(cfg.s_x);
        cfg.s_z = spec.s_z.unwrap_or(cfg.s_z);
        cfg.a_z = spec.a_z.unwrap_or(cfg.a_z);
        cfg.n = o.draws.or(spec.n).unwrap_or(cfg.n);
        cfg.seed = self.seed(o);
        cfg.mode = match spec.mode.unwrap_or(ModeSpec::Random) {
            ModeSpec::Random => SampleMode::Random,
            ModeSpec::Grid => SampleMode::Grid,
        };
        if let Some(r) = spec.angle_ranges {
            cfg.angle_ranges = r.map(|[lo, hi]| (lo, hi));
        }
        cfg.verify_product = spec.verify_product.unwrap_or(false);
        cfg.validate().map_err(CliError::config)?;
        Ok(cfg)
    }
}
