//! JSON run configuration: parsing, validation, and construction of the
//! solver objects it describes.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use deepwater::model::{make_bathymetry, make_initial, Bathymetry, PhysicalParams, WaveState};
use deepwater::spectral::Grid;
use deepwater::stepping::{default_dt_max, StepConfig, DEFAULT_CFL_SIGMA};

use crate::CliError;

/// Full description of one simulation run.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub grid: GridConfig,
    pub params: ParamsConfig,
    pub bathymetry: BathymetryConfig,
    pub initial: InitialConfig,
    pub time: TimeConfig,
    #[serde(default)]
    pub output: OutputConfig,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub half_length: f64,
    pub n_points: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ParamsConfig {
    pub epsilon: f64,
    pub mu: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BathymetryConfig {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct InitialConfig {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum DtMode {
    Fixed,
    Cfl,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TimeConfig {
    pub t_final: f64,
    pub dt_mode: DtMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dt_fixed: Option<f64>,
    /// Defaults to 0.5.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cfl_sigma: Option<f64>,
    /// Defaults to the grid's dispersive stability cap.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dt_max: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default)]
    pub snapshot_times: Vec<f64>,
    #[serde(default = "default_out_dir")]
    pub out_dir: String,
}

fn default_out_dir() -> String {
    "out".to_string()
}

impl Default for OutputConfig {
    fn default() -> Self {
        OutputConfig {
            snapshot_times: Vec::new(),
            out_dir: default_out_dir(),
        }
    }
}

/// Everything a run needs, built from a validated [`RunConfig`].
pub struct BuiltRun {
    pub grid: Arc<Grid>,
    pub params: PhysicalParams,
    pub bathymetry: Bathymetry,
    pub initial: WaveState,
    pub step: StepConfig,
}

fn invalid(field: &str, reason: impl std::fmt::Display) -> CliError {
    CliError::Validation {
        field: field.to_string(),
        reason: reason.to_string(),
    }
}

impl RunConfig {
    /// Reads and fully validates a configuration file.
    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)?;
        let config: RunConfig = serde_json::from_str(&text)?;
        config.validate()?;
        Ok(config)
    }

    /// Field-by-field validation; reported paths name the offending field.
    pub fn validate(&self) -> Result<(), CliError> {
        Grid::new(self.grid.half_length, self.grid.n_points)
            .map_err(|e| invalid("grid", e))?;
        PhysicalParams::new(self.params.epsilon, self.params.mu, self.params.beta).map_err(
            |e| {
                let field = match () {
                    _ if !(0.0..=1.0).contains(&self.params.epsilon) => "params.epsilon",
                    _ if self.params.mu.is_nan() || self.params.mu <= 0.0 => "params.mu",
                    _ => "params.beta",
                };
                invalid(field, e)
            },
        )?;

        const BATHYMETRY_KINDS: [&str; 5] =
            ["flat", "bump_cos", "ripple", "smoothed_step", "cos_alpha"];
        if !BATHYMETRY_KINDS.contains(&self.bathymetry.kind.as_str()) {
            return Err(invalid(
                "bathymetry.kind",
                format!(
                    "unknown kind `{}` (expected one of {:?})",
                    self.bathymetry.kind, BATHYMETRY_KINDS
                ),
            ));
        }
        if self.bathymetry.kind == "cos_alpha" && self.bathymetry.alpha.is_none() {
            return Err(invalid("bathymetry.alpha", "required for kind `cos_alpha`"));
        }

        const INITIAL_KINDS: [&str; 4] = ["sech_pulse", "gaussian", "sech_squared", "kdv_pair"];
        if !INITIAL_KINDS.contains(&self.initial.kind.as_str()) {
            return Err(invalid(
                "initial.kind",
                format!(
                    "unknown kind `{}` (expected one of {:?})",
                    self.initial.kind, INITIAL_KINDS
                ),
            ));
        }
        if self.initial.kind == "kdv_pair" && self.initial.alpha.is_none() {
            return Err(invalid("initial.alpha", "required for kind `kdv_pair`"));
        }

        if !(self.time.t_final >= 0.0 && self.time.t_final.is_finite()) {
            return Err(invalid("time.t_final", "must be nonnegative and finite"));
        }
        match self.time.dt_mode {
            DtMode::Fixed => match self.time.dt_fixed {
                Some(dt) if dt > 0.0 && dt.is_finite() => {}
                Some(_) => return Err(invalid("time.dt_fixed", "must be positive")),
                None => return Err(invalid("time.dt_fixed", "required when dt_mode = fixed")),
            },
            DtMode::Cfl => {
                if let Some(s) = self.time.cfl_sigma {
                    if !(s > 0.0 && s < 1.0) {
                        return Err(invalid("time.cfl_sigma", "must lie strictly in (0, 1)"));
                    }
                }
                if let Some(m) = self.time.dt_max {
                    if !(m > 0.0 && m.is_finite()) {
                        return Err(invalid("time.dt_max", "must be positive"));
                    }
                }
            }
        }

        let t_final = self.time.t_final;
        if self
            .output
            .snapshot_times
            .iter()
            .any(|&t| !(0.0..=t_final).contains(&t))
        {
            return Err(invalid(
                "output.snapshot_times",
                format!("every time must lie within [0, {t_final}]"),
            ));
        }
        if self.output.snapshot_times.windows(2).any(|w| w[0] > w[1]) {
            return Err(invalid("output.snapshot_times", "must be sorted"));
        }
        Ok(())
    }

    /// Builds the solver objects. Assumes [`validate`](Self::validate) passed.
    pub fn build(&self) -> Result<BuiltRun, CliError> {
        let grid =
            Grid::new(self.grid.half_length, self.grid.n_points).map_err(|e| invalid("grid", e))?;
        let params = PhysicalParams::new(self.params.epsilon, self.params.mu, self.params.beta)
            .map_err(|e| invalid("params", e))?;
        let bathymetry = make_bathymetry(
            &self.bathymetry.kind,
            &grid,
            &params,
            self.bathymetry.alpha,
        )
        .map_err(|e| invalid("bathymetry", e))?;
        let initial = make_initial(&self.initial.kind, &grid, self.initial.alpha)
            .map_err(|e| invalid("initial", e))?;
        let step = match self.time.dt_mode {
            DtMode::Fixed => StepConfig::fixed(self.time.dt_fixed.unwrap())
                .map_err(|e| invalid("time.dt_fixed", e))?,
            DtMode::Cfl => {
                let sigma = self.time.cfl_sigma.unwrap_or(DEFAULT_CFL_SIGMA);
                let dt_max = match self.time.dt_max {
                    Some(m) => m,
                    None => default_dt_max(&grid, params.mu())
                        .map_err(|e| invalid("time.dt_max", e))?,
                };
                StepConfig::cfl(sigma, dt_max).map_err(|e| invalid("time", e))?
            }
        };
        Ok(BuiltRun {
            grid,
            params,
            bathymetry,
            initial,
            step,
        })
    }
}
