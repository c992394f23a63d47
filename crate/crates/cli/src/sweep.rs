// SPDX-License-Identifier: Apache-2.0

//! Sweep evaluation. Points are independent and run on a rayon pool; rows
//! come back in sweep order.

use std::time::Instant;

use ergobound::{bound_report, BoundReport};
use rayon::prelude::*;

use crate::config::{ConfigError, Experiment, SweepParameter};

/// Result of evaluating one point.
#[derive(Debug, Clone, PartialEq)]
pub enum PointOutcome {
    Report(BoundReport),
    /// The joint spectrum exceeds the configured limit; nothing was computed.
    SizeCap { size: u128, cap: usize },
    Failed(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    /// Swept parameter, or `None` for a single-point report.
    pub parameter: Option<SweepParameter>,
    pub value: Option<f64>,
    pub outcome: PointOutcome,
    pub wall_time_ms: Option<f64>,
}

impl SweepRow {
    pub fn report(&self) -> Option<&BoundReport> {
        match &self.outcome {
            PointOutcome::Report(r) => Some(r),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Worker threads; `None` uses rayon's default.
    pub threads: Option<usize>,
    /// Record per-point wall time. Off by default so output is reproducible.
    pub timing: bool,
}

fn evaluate(exp: &Experiment, parameter: Option<(SweepParameter, f64)>, timing: bool) -> SweepRow {
    let start = Instant::now();
    let outcome = match exp.point(parameter) {
        Err(e) => PointOutcome::Failed(e.to_string()),
        Ok(point) => {
            let size = exp.joint_size(&point);
            if size > exp.max_joint_size as u128 {
                PointOutcome::SizeCap {
                    size,
                    cap: exp.max_joint_size,
                }
            } else {
                match bound_report(&exp.rho, &exp.h_s, &point.weight, &point.bath) {
                    Ok(r) => PointOutcome::Report(r),
                    Err(ergobound::Error::SizeCap { size, cap }) => PointOutcome::SizeCap { size, cap },
                    Err(e) => PointOutcome::Failed(e.to_string()),
                }
            }
        }
    };
    SweepRow {
        parameter: parameter.map(|p| p.0),
        value: parameter.map(|p| p.1),
        outcome,
        wall_time_ms: timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    }
}

/// The base configuration as a single row.
pub fn run_report(exp: &Experiment, timing: bool) -> SweepRow {
    evaluate(exp, None, timing)
}

/// One row per sweep value, in order.
pub fn run_sweep(exp: &Experiment, options: RunOptions) -> Result<Vec<SweepRow>, ConfigError> {
    let sweep = exp.sweep.as_ref().ok_or_else(|| ConfigError::Invalid {
        key: "sweep".into(),
        reason: "the configuration has no [sweep] section".into(),
    })?;
    let points: Vec<(SweepParameter, f64)> =
        sweep.values.iter().map(|&v| (sweep.parameter, v)).collect();
    let run = || -> Vec<SweepRow> {
        points
            .par_iter()
            .map(|&p| evaluate(exp, Some(p), options.timing))
            .collect()
    };
    match options.threads {
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| ConfigError::Invalid {
                    key: "threads".into(),
                    reason: e.to_string(),
                })?;
            Ok(pool.install(run))
        }
        None => Ok(run()),
    }
}
