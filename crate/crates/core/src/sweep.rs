//! Replicated experiments: one report per replication plus a summary.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::generate::{generate, ExperimentConfig};
use crate::indices::{report_with, SkewDirection};
use crate::par::{map_indexed, Execution};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub rep_index: usize,
    pub n: usize,
    pub mean: f64,
    pub gini: f64,
    pub g_right: f64,
    pub g_left: f64,
    pub sag: f64,
    pub sag_minus_gini: f64,
    pub skew_direction: SkewDirection,
}

type StatColumn = (&'static str, fn(&SweepRow) -> f64);

/// Quantile levels reported for every statistic.
pub const QUANTILES: [f64; 5] = [0.05, 0.25, 0.5, 0.75, 0.95];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatSummary {
    pub statistic: String,
    pub mean: f64,
    pub q05: f64,
    pub q25: f64,
    pub median: f64,
    pub q75: f64,
    pub q95: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub config: ExperimentConfig,
    /// Ordered by `rep_index`.
    pub rows: Vec<SweepRow>,
    pub summary: Vec<StatSummary>,
}

impl SweepTable {
    pub fn summary_for(&self, statistic: &str) -> Option<&StatSummary> {
        self.summary.iter().find(|s| s.statistic == statistic)
    }
}

pub fn sensitivity_sweep(config: &ExperimentConfig) -> Result<SweepTable> {
    sensitivity_sweep_with(config, Execution::default())
}

/// Runs every replication (in parallel when `exec` allows) and summarizes.
///
/// Each replication is reduced sequentially so the table does not depend
/// on the execution strategy.
pub fn sensitivity_sweep_with(config: &ExperimentConfig, exec: Execution) -> Result<SweepTable> {
    config.validate()?;
    let rows = map_indexed(
        config.replications,
        |rep| -> Result<SweepRow> {
            let d = generate(config, rep)?;
            let r = report_with(&d, Execution::Sequential);
            Ok(SweepRow {
                rep_index: rep,
                n: r.n,
                mean: d.mean(),
                gini: r.gini,
                g_right: r.g_right,
                g_left: r.g_left,
                sag: r.sag,
                sag_minus_gini: r.sag - r.gini,
                skew_direction: r.skew_direction,
            })
        },
        exec,
    )
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let columns: [StatColumn; 6] = [
        ("gini", |r| r.gini),
        ("g_right", |r| r.g_right),
        ("g_left", |r| r.g_left),
        ("sag", |r| r.sag),
        ("sag_minus_gini", |r| r.sag_minus_gini),
        ("g_right_minus_g_left", |r| r.g_right - r.g_left),
    ];
    let summary = columns
        .iter()
        .map(|(name, get)| summarize(name, rows.iter().map(get).collect()))
        .collect();
    Ok(SweepTable {
        config: *config,
        rows,
        summary,
    })
}

fn summarize(name: &str, mut xs: Vec<f64>) -> StatSummary {
    xs.sort_unstable_by(f64::total_cmp);
    let mean = crate::sum::compensated_sum(xs.iter().copied()) / xs.len() as f64;
    let [q05, q25, median, q75, q95] = QUANTILES.map(|level| quantile_sorted(&xs, level));
    StatSummary {
        statistic: name.to_string(),
        mean,
        q05,
        q25,
        median,
        q75,
        q95,
    }
}

/// Linear interpolation between order statistics (Hyndman-Fan type 7).
pub fn quantile_sorted(sorted: &[f64], level: f64) -> f64 {
    match sorted.len() {
        0 => f64::NAN,
        1 => sorted[0],
        len => {
            let h = (len - 1) as f64 * level.clamp(0.0, 1.0);
            let lo = h.floor() as usize;
            let hi = (lo + 1).min(len - 1);
            sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
        }
    }
}
