// SPDX-License-Identifier: Apache-2.0

//! TOML experiment configuration.
//!
//! ```toml
//! temperature = 1.0
//! seed = 7                      # only used by random system states
//!
//! [system]
//! gaps = [1.0]                  # level spacings; a qubit with ω = 1
//! state = { kind = "plus" }     # plus | basis | matrix | random
//!
//! [bath]
//! model = "skrzypczyk"          # skrzypczyk | custom | none
//! N = 4
//! omega = 1.0                   # defaults to the first system gap
//!
//! [weight]
//! kind = "gaussian"             # gaussian | time-state | energy-eigenstate
//! sigma_over_omega = 1.0        # or `sigma`, in energy units
//!
//! [sweep]
//! parameter = "N"               # N | sigma_over_omega
//! range = { from = 1, to = 14, steps = 14, spacing = "linear" }
//!
//! [output]
//! path = "n-sweep.csv"
//! format = "csv"
//! ```
//!
//! Unknown keys are rejected. Parse errors carry the line and column reported
//! by the TOML parser; semantic errors name the offending key.

use std::path::PathBuf;

use ergobound::oracle::{random_state, RandomKind, RandomSpec};
use ergobound::{custom_bath, skrzypczyk_bath, BathSpec, DensityOperator, DiagonalHamiltonian, WeightModel};
use num_complex::Complex64;
use serde::Deserialize;
use thiserror::Error;

/// Default bound on `dim(S) · 2^N` for a single sweep point.
pub const DEFAULT_MAX_JOINT_SIZE: usize = 1 << 21;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("{0}")]
    Parse(String),
    #[error("invalid `{key}`: {reason}")]
    Invalid { key: String, reason: String },
}

fn invalid(key: &str, reason: impl ToString) -> ConfigError {
    ConfigError::Invalid {
        key: key.to_string(),
        reason: reason.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub temperature: f64,
    #[serde(default)]
    pub seed: Option<u64>,
    pub system: SystemConfig,
    pub bath: BathConfig,
    pub weight: WeightConfig,
    #[serde(default)]
    pub sweep: Option<SweepConfig>,
    #[serde(default)]
    pub output: Option<OutputConfig>,
    #[serde(default)]
    pub limits: Option<LimitsConfig>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemConfig {
    pub gaps: Vec<f64>,
    pub state: StateConfig,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum StateConfig {
    /// Uniform superposition of all levels.
    Plus,
    /// Computational basis state `|k⟩`.
    Basis { index: usize },
    /// Explicit entries, row-major; `im` defaults to zero.
    Matrix {
        re: Vec<Vec<f64>>,
        #[serde(default)]
        im: Option<Vec<Vec<f64>>>,
    },
    /// Seeded random state, pure (Haar) or mixed (Ginibre).
    Random {
        #[serde(default)]
        mixed: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case", deny_unknown_fields)]
pub enum BathConfig {
    Skrzypczyk {
        #[serde(rename = "N", alias = "n")]
        n: usize,
        #[serde(default)]
        omega: Option<f64>,
    },
    Custom {
        gaps: Vec<f64>,
    },
    None,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum WeightConfig {
    Gaussian {
        #[serde(default)]
        sigma: Option<f64>,
        #[serde(default)]
        sigma_over_omega: Option<f64>,
    },
    #[serde(alias = "time")]
    TimeState {
        #[serde(default)]
        t: f64,
    },
    #[serde(alias = "energy")]
    EnergyEigenstate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum SweepParameter {
    N,
    #[serde(rename = "sigma_over_omega")]
    SigmaOverOmega,
}

impl SweepParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweepParameter::N => "N",
            SweepParameter::SigmaOverOmega => "sigma_over_omega",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "N" => Some(SweepParameter::N),
            "sigma_over_omega" => Some(SweepParameter::SigmaOverOmega),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub parameter: SweepParameter,
    #[serde(default)]
    pub values: Option<Vec<f64>>,
    #[serde(default)]
    pub range: Option<RangeConfig>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RangeConfig {
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    #[serde(default)]
    pub spacing: Spacing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default)]
    pub path: Option<PathBuf>,
    #[serde(default)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LimitsConfig {
    pub max_joint_size: usize,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))
    }

    /// Validates the configuration and builds the numeric objects.
    /// `seed_override` takes precedence over the `seed` key.
    pub fn resolve(&self, seed_override: Option<u64>) -> Result<Experiment, ConfigError> {
        let temperature = self.temperature;
        if !(temperature.is_finite() && temperature > 0.0) {
            return Err(invalid("temperature", "must be a positive number"));
        }
        if self.system.gaps.is_empty() {
            return Err(invalid("system.gaps", "need at least one gap"));
        }
        let h_s = DiagonalHamiltonian::from_gaps(&self.system.gaps)
            .map_err(|e| invalid("system.gaps", e))?;
        let omega = self.system.gaps[0];
        let seed = seed_override.or(self.seed).unwrap_or(0);
        let rho = resolve_state(&self.system.state, h_s.dim(), seed)?;

        let bath = match &self.bath {
            BathConfig::Skrzypczyk { n, omega: bath_omega } => {
                let bath_omega = bath_omega.unwrap_or(omega);
                if !(bath_omega.is_finite() && bath_omega > 0.0) {
                    return Err(invalid("bath.omega", "must be a positive number"));
                }
                BathSource::Ladder {
                    n: *n,
                    omega: bath_omega,
                }
            }
            BathConfig::Custom { gaps } => {
                custom_bath(temperature, gaps.clone()).map_err(|e| invalid("bath.gaps", e))?;
                BathSource::Custom(gaps.clone())
            }
            BathConfig::None => BathSource::Custom(Vec::new()),
        };

        let weight = match self.weight {
            WeightConfig::Gaussian {
                sigma,
                sigma_over_omega,
            } => match (sigma, sigma_over_omega) {
                (Some(_), Some(_)) => {
                    return Err(invalid("weight", "give either `sigma` or `sigma_over_omega`"))
                }
                (Some(s), None) => WeightSource::Gaussian { sigma: Some(s) },
                (None, Some(r)) => WeightSource::Gaussian {
                    sigma: Some(r * omega),
                },
                (None, None) => WeightSource::Gaussian { sigma: None },
            },
            WeightConfig::TimeState { t } => WeightSource::Fixed(WeightModel::TimeState { t }),
            WeightConfig::EnergyEigenstate => WeightSource::Fixed(WeightModel::EnergyEigenstate),
        };
        if let WeightSource::Gaussian { sigma: Some(s) } = weight {
            WeightModel::gaussian(s).map_err(|e| invalid("weight.sigma", e))?;
        }
        if let WeightSource::Fixed(w) = weight {
            w.validate().map_err(|e| invalid("weight.t", e))?;
        }

        let sweep = self.sweep.as_ref().map(resolve_sweep).transpose()?;
        if let Some(sweep) = &sweep {
            match sweep.parameter {
                SweepParameter::SigmaOverOmega => {
                    if !matches!(weight, WeightSource::Gaussian { .. }) {
                        return Err(invalid(
                            "sweep.parameter",
                            "sigma_over_omega sweeps need a gaussian weight",
                        ));
                    }
                    if sweep.values.iter().any(|v| *v <= 0.0) {
                        return Err(invalid("sweep.values", "sigma_over_omega must be positive"));
                    }
                }
                SweepParameter::N => {
                    if !matches!(bath, BathSource::Ladder { .. }) {
                        return Err(invalid("sweep.parameter", "N sweeps need the skrzypczyk bath"));
                    }
                    if let Some(v) = sweep.values.iter().find(|v| **v < 0.0 || v.fract() != 0.0) {
                        return Err(invalid(
                            "sweep.values",
                            format!("N = {v} is not a non-negative integer"),
                        ));
                    }
                }
            }
        }
        let gaussian_needs_sigma = matches!(weight, WeightSource::Gaussian { sigma: None })
            && sweep
                .as_ref()
                .is_none_or(|s| s.parameter != SweepParameter::SigmaOverOmega);
        if gaussian_needs_sigma {
            return Err(invalid("weight", "gaussian weight needs `sigma` or `sigma_over_omega`"));
        }

        let max_joint_size = match &self.limits {
            Some(l) if l.max_joint_size == 0 => {
                return Err(invalid("limits.max_joint_size", "must be positive"))
            }
            Some(l) => l.max_joint_size,
            None => DEFAULT_MAX_JOINT_SIZE,
        };

        Ok(Experiment {
            h_s,
            rho,
            omega,
            temperature,
            bath,
            weight,
            sweep,
            max_joint_size,
        })
    }
}

fn resolve_state(state: &StateConfig, dim: usize, seed: u64) -> Result<DensityOperator, ConfigError> {
    let key = "system.state";
    match state {
        StateConfig::Plus => DensityOperator::plus(dim).map_err(|e| invalid(key, e)),
        StateConfig::Basis { index } => DensityOperator::basis(dim, *index).map_err(|e| invalid(key, e)),
        StateConfig::Random { mixed } => random_state(RandomSpec {
            seed,
            dim,
            kind: if *mixed {
                RandomKind::MixedTraceNormalized
            } else {
                RandomKind::PureHaar
            },
        })
        .map_err(|e| invalid(key, e)),
        StateConfig::Matrix { re, im } => {
            let check_shape = |rows: &Vec<Vec<f64>>, part: &str| {
                if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                    Err(invalid(
                        &format!("{key}.{part}"),
                        format!("expected a {dim}x{dim} matrix"),
                    ))
                } else {
                    Ok(())
                }
            };
            check_shape(re, "re")?;
            if let Some(im) = im {
                check_shape(im, "im")?;
            }
            let m = nalgebra::DMatrix::from_fn(dim, dim, |i, j| {
                Complex64::new(re[i][j], im.as_ref().map_or(0.0, |im| im[i][j]))
            });
            DensityOperator::new(m).map_err(|e| invalid(key, e))
        }
    }
}

fn resolve_sweep(sweep: &SweepConfig) -> Result<Sweep, ConfigError> {
    let values = match (&sweep.values, &sweep.range) {
        (Some(_), Some(_)) => return Err(invalid("sweep", "give either `values` or `range`")),
        (None, None) => return Err(invalid("sweep", "need `values` or `range`")),
        (Some(v), None) => v.clone(),
        (None, Some(r)) => expand_range(r)?,
    };
    if values.is_empty() {
        return Err(invalid("sweep.values", "must not be empty"));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(invalid("sweep.values", "must be finite"));
    }
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid("sweep.values", "must be strictly increasing"));
    }
    Ok(Sweep {
        parameter: sweep.parameter,
        values,
    })
}

fn expand_range(r: &RangeConfig) -> Result<Vec<f64>, ConfigError> {
    if r.steps == 0 {
        return Err(invalid("sweep.range.steps", "must be positive"));
    }
    if !(r.from.is_finite() && r.to.is_finite()) {
        return Err(invalid("sweep.range", "bounds must be finite"));
    }
    if r.steps == 1 {
        return Ok(vec![r.from]);
    }
    let last = (r.steps - 1) as f64;
    let values = match r.spacing {
        Spacing::Linear => (0..r.steps)
            .map(|i| {
                if i + 1 == r.steps {
                    r.to
                } else {
                    r.from + (r.to - r.from) * i as f64 / last
                }
            })
            .collect(),
        Spacing::Log => {
            if !(r.from > 0.0 && r.to > 0.0) {
                return Err(invalid("sweep.range", "log spacing needs positive bounds"));
            }
            let (a, b) = (r.from.ln(), r.to.ln());
            (0..r.steps)
                .map(|i| {
                    if i == 0 {
                        r.from
                    } else if i + 1 == r.steps {
                        r.to
                    } else {
                        (a + (b - a) * i as f64 / last).exp()
                    }
                })
                .collect()
        }
    };
    Ok(values)
}

/// Where the bath of a point comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum BathSource {
    /// Ladder bath with `n` qubits tuned to `omega`; `n = 0` means no bath.
    Ladder { n: usize, omega: f64 },
    /// Fixed gaps; empty means no bath.
    Custom(Vec<f64>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightSource {
    /// `sigma` is `None` only when a sweep supplies it.
    Gaussian { sigma: Option<f64> },
    Fixed(WeightModel),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub parameter: SweepParameter,
    pub values: Vec<f64>,
}

/// A validated configuration.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub h_s: DiagonalHamiltonian,
    pub rho: DensityOperator,
    /// Reference gap: the first system gap.
    pub omega: f64,
    pub temperature: f64,
    pub bath: BathSource,
    pub weight: WeightSource,
    pub sweep: Option<Sweep>,
    pub max_joint_size: usize,
}

/// Bath and weight of one evaluation point.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub bath: BathSpec,
    pub weight: WeightModel,
}

impl Experiment {
    /// Bath and weight at the base configuration, or with `parameter` set
    /// to `value`.
    pub fn point(&self, parameter: Option<(SweepParameter, f64)>) -> Result<Point, ConfigError> {
        let mut bath_source = self.bath.clone();
        let mut weight_source = self.weight;
        match parameter {
            Some((SweepParameter::N, v)) => {
                if let BathSource::Ladder { omega, .. } = bath_source {
                    bath_source = BathSource::Ladder {
                        n: v as usize,
                        omega,
                    };
                }
            }
            Some((SweepParameter::SigmaOverOmega, v)) => {
                weight_source = WeightSource::Gaussian {
                    sigma: Some(v * self.omega),
                };
            }
            None => {}
        }
        let bath = match bath_source {
            BathSource::Ladder { n: 0, .. } => BathSpec::none(self.temperature),
            BathSource::Ladder { n, omega } => skrzypczyk_bath(n, self.temperature, omega),
            BathSource::Custom(gaps) if gaps.is_empty() => BathSpec::none(self.temperature),
            BathSource::Custom(gaps) => custom_bath(self.temperature, gaps),
        }
        .map_err(|e| invalid("bath", e))?;
        let weight = match weight_source {
            WeightSource::Gaussian { sigma: Some(s) } => {
                WeightModel::gaussian(s).map_err(|e| invalid("weight.sigma", e))?
            }
            WeightSource::Gaussian { sigma: None } => {
                return Err(invalid("weight", "gaussian weight needs a sigma"))
            }
            WeightSource::Fixed(w) => w,
        };
        Ok(Point { bath, weight })
    }

    /// `dim(S) · 2^{qubits}`, saturating.
    pub fn joint_size(&self, point: &Point) -> u128 {
        (self.h_s.dim() as u128).saturating_mul(1u128.checked_shl(point.bath.len() as u32).unwrap_or(u128::MAX))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BASE: &str = r#"
temperature = 1.0

[system]
gaps = [1.0]
state = { kind = "plus" }

[bath]
model = "skrzypczyk"
N = 1

[weight]
kind = "gaussian"
sigma_over_omega = 1.0
"#;

    fn with(extra: &str) -> String {
        format!("{BASE}\n{extra}")
    }

    #[test]
    fn base_config_resolves() {
        let exp = ExperimentConfig::from_toml(BASE).unwrap().resolve(None).unwrap();
        assert_eq!(exp.h_s.energies(), &[0.0, 1.0]);
        assert_eq!(exp.omega, 1.0);
        let p = exp.point(None).unwrap();
        assert_eq!(p.bath.len(), 1);
        assert_eq!(p.weight, WeightModel::Gaussian { sigma: 1.0 });
        assert!(exp.sweep.is_none());
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = ExperimentConfig::from_toml("temperature = \n[system]").unwrap_err();
        let ConfigError::Parse(msg) = err else { panic!() };
        assert!(msg.contains("line 1"), "{msg}");
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = BASE.replace("N = 1", "N = 1\ncolour = \"red\"");
        assert!(matches!(
            ExperimentConfig::from_toml(&text),
            Err(ConfigError::Parse(_))
        ));
    }

    #[test]
    fn ranges() {
        let cfg = ExperimentConfig::from_toml(&with(
            "[sweep]\nparameter = \"sigma_over_omega\"\nrange = { from = 0.1, to = 10.0, steps = 5, spacing = \"log\" }",
        ))
        .unwrap();
        let sweep = cfg.resolve(None).unwrap().sweep.unwrap();
        assert_eq!(sweep.values.len(), 5);
        assert_eq!(sweep.values[0], 0.1);
        assert_eq!(sweep.values[4], 10.0);
        assert!((sweep.values[2] - 1.0).abs() < 1e-12);

        let cfg = ExperimentConfig::from_toml(&with(
            "[sweep]\nparameter = \"N\"\nrange = { from = 1, to = 14, steps = 14 }",
        ))
        .unwrap();
        let sweep = cfg.resolve(None).unwrap().sweep.unwrap();
        assert_eq!(sweep.values, (1..=14).map(f64::from).collect::<Vec<_>>());
    }

    #[test]
    fn sweep_validation() {
        for bad in [
            "[sweep]\nparameter = \"N\"\nvalues = []",
            "[sweep]\nparameter = \"N\"\nvalues = [3, 2]",
            "[sweep]\nparameter = \"N\"\nvalues = [1.5]",
            "[sweep]\nparameter = \"N\"\nvalues = [1]\nrange = { from = 1, to = 2, steps = 2 }",
            "[sweep]\nparameter = \"sigma_over_omega\"\nvalues = [0.0, 1.0]",
            "[sweep]\nparameter = \"N\"\nrange = { from = 1, to = 2, steps = 0 }",
            "[sweep]\nparameter = \"sigma_over_omega\"\nrange = { from = -1, to = 2, steps = 3, spacing = \"log\" }",
        ] {
            let cfg = ExperimentConfig::from_toml(&with(bad)).unwrap();
            assert!(
                matches!(cfg.resolve(None), Err(ConfigError::Invalid { .. })),
                "accepted {bad}"
            );
        }
    }

    #[test]
    fn state_kinds() {
        let text = BASE.replace(
            "state = { kind = \"plus\" }",
            "state = { kind = \"matrix\", re = [[0.5, 0.25], [0.25, 0.5]], im = [[0.0, 0.1], [-0.1, 0.0]] }",
        );
        let exp = ExperimentConfig::from_toml(&text).unwrap().resolve(None).unwrap();
        assert_eq!(exp.rho.matrix()[(0, 1)], Complex64::new(0.25, 0.1));

        let text = BASE.replace("state = { kind = \"plus\" }", "state = { kind = \"basis\", index = 1 }");
        let exp = ExperimentConfig::from_toml(&text).unwrap().resolve(None).unwrap();
        assert_eq!(exp.rho.populations(), vec![0.0, 1.0]);

        let text = BASE.replace("state = { kind = \"plus\" }", "state = { kind = \"basis\", index = 2 }");
        assert!(ExperimentConfig::from_toml(&text).unwrap().resolve(None).is_err());

        let text = BASE.replace(
            "state = { kind = \"plus\" }",
            "state = { kind = \"matrix\", re = [[1.0, 0.0]] }",
        );
        assert!(ExperimentConfig::from_toml(&text).unwrap().resolve(None).is_err());

        let text = BASE.replace("state = { kind = \"plus\" }", "state = { kind = \"random\", mixed = true }");
        let cfg = ExperimentConfig::from_toml(&text).unwrap();
        let a = cfg.resolve(Some(3)).unwrap().rho;
        let b = cfg.resolve(Some(3)).unwrap().rho;
        let c = cfg.resolve(Some(4)).unwrap().rho;
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn weight_and_bath_variants() {
        let text = BASE.replace(
            "kind = \"gaussian\"\nsigma_over_omega = 1.0",
            "kind = \"time-state\"\nt = 0.3",
        );
        let exp = ExperimentConfig::from_toml(&text).unwrap().resolve(None).unwrap();
        assert_eq!(exp.point(None).unwrap().weight, WeightModel::TimeState { t: 0.3 });

        let text = BASE.replace("kind = \"gaussian\"\nsigma_over_omega = 1.0", "kind = \"energy\"");
        let exp = ExperimentConfig::from_toml(&text).unwrap().resolve(None).unwrap();
        assert_eq!(exp.point(None).unwrap().weight, WeightModel::EnergyEigenstate);

        let text = BASE.replace("model = \"skrzypczyk\"\nN = 1", "model = \"custom\"\ngaps = [0.5, 2.0]");
        let exp = ExperimentConfig::from_toml(&text).unwrap().resolve(None).unwrap();
        assert_eq!(exp.point(None).unwrap().bath.gaps(), &[0.5, 2.0]);

        let text = BASE.replace("model = \"skrzypczyk\"\nN = 1", "model = \"none\"");
        let exp = ExperimentConfig::from_toml(&text).unwrap().resolve(None).unwrap();
        assert!(exp.point(None).unwrap().bath.is_empty());

        let text = BASE.replace("model = \"skrzypczyk\"\nN = 1", "model = \"custom\"\ngaps = []");
        assert!(ExperimentConfig::from_toml(&text).unwrap().resolve(None).is_err());

        let text = BASE.replace("sigma_over_omega = 1.0", "");
        assert!(ExperimentConfig::from_toml(&text).unwrap().resolve(None).is_err());
    }

    #[test]
    fn n_zero_means_no_bath() {
        let exp = ExperimentConfig::from_toml(&with("[sweep]\nparameter = \"N\"\nvalues = [0, 2]"))
            .unwrap()
            .resolve(None)
            .unwrap();
        assert!(exp.point(Some((SweepParameter::N, 0.0))).unwrap().bath.is_empty());
        assert_eq!(exp.point(Some((SweepParameter::N, 2.0))).unwrap().bath.len(), 2);
    }
}
