//! The Gini coefficient, the tail-weighted Ginis `G_R` / `G_L`, and the
//! skewness-adjusted Gini.
//!
//! All four are weighted sums over the gap vector. The classic prefactor
//! `2n / n^2` is computed as `2 / n`.

use serde::{Deserialize, Serialize};

use crate::dataset::Dataset;
use crate::error::Result;
use crate::lorenz::{Direction, GapVector, LorenzCurve};
use crate::par::Execution;
use crate::sum::chunked_sum;

/// `|g_right - g_left|` at or below this counts as no asymmetry.
pub const SKEW_TOLERANCE: f64 = 1e-9;

impl GapVector {
    pub fn gini(&self) -> f64 {
        self.gini_with(Execution::default())
    }

    pub fn g_right(&self) -> f64 {
        self.weighted_with(Direction::Right, Execution::default())
    }

    pub fn g_left(&self) -> f64 {
        self.weighted_with(Direction::Left, Execution::default())
    }

    /// `G + |G_R - G_L| / 2`, which equals `max(G_R, G_L)`.
    pub fn sag(&self) -> f64 {
        self.indices_with(Execution::default()).sag
    }

    pub fn gini_with(&self, exec: Execution) -> f64 {
        let gaps = self.as_slice();
        2.0 / self.n() as f64 * chunked_sum(gaps.len(), |k| gaps[k], exec)
    }

    /// `(2/n) * sum_i d_i * w_i` with the weights of `direction`.
    pub fn weighted_with(&self, direction: Direction, exec: Execution) -> f64 {
        let gaps = self.as_slice();
        let n = self.n();
        let term = |k: usize| gaps[k] * direction.weight(k + 1, n);
        2.0 / n as f64 * chunked_sum(gaps.len(), term, exec)
    }

    pub fn indices_with(&self, exec: Execution) -> Indices {
        Indices::from_parts(
            self.gini_with(exec),
            self.weighted_with(Direction::Right, exec),
            self.weighted_with(Direction::Left, exec),
        )
    }

    pub fn indices(&self) -> Indices {
        self.indices_with(Execution::default())
    }
}

pub fn gini(g: &GapVector) -> f64 {
    g.gini()
}

pub fn g_right(g: &GapVector) -> f64 {
    g.g_right()
}

pub fn g_left(g: &GapVector) -> f64 {
    g.g_left()
}

pub fn sag(g: &GapVector) -> f64 {
    g.sag()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SkewDirection {
    Symmetric,
    /// Long upper tail: `G_R > G_L`.
    Right,
    /// Long lower tail: `G_L > G_R`.
    Left,
}

impl SkewDirection {
    pub fn classify(g_right: f64, g_left: f64) -> Self {
        let diff = g_right - g_left;
        if diff > SKEW_TOLERANCE {
            SkewDirection::Right
        } else if diff < -SKEW_TOLERANCE {
            SkewDirection::Left
        } else {
            SkewDirection::Symmetric
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SkewDirection::Symmetric => "symmetric",
            SkewDirection::Right => "right",
            SkewDirection::Left => "left",
        }
    }
}

impl std::fmt::Display for SkewDirection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The four indices together with the skew classification.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Indices {
    pub gini: f64,
    pub g_right: f64,
    pub g_left: f64,
    pub sag: f64,
    pub skew_direction: SkewDirection,
}

impl Indices {
    fn from_parts(gini: f64, g_right: f64, g_left: f64) -> Self {
        Self {
            gini,
            g_right,
            g_left,
            sag: gini + (g_right - g_left).abs() / 2.0,
            skew_direction: SkewDirection::classify(g_right, g_left),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub n: usize,
    /// Mean observation; `None` when computed from Lorenz points alone.
    pub mean: Option<f64>,
    pub gini: f64,
    pub g_right: f64,
    pub g_left: f64,
    pub sag: f64,
    pub skew_direction: SkewDirection,
    /// False when the Lorenz increments shrink somewhere. Only possible for
    /// curves supplied as points; treat it as a warning.
    pub convex: bool,
}

impl InequalityReport {
    fn assemble(lc: &LorenzCurve, mean: Option<f64>, exec: Execution) -> Self {
        let ix = lc.gaps().indices_with(exec);
        Self {
            n: lc.n(),
            mean,
            gini: ix.gini,
            g_right: ix.g_right,
            g_left: ix.g_left,
            sag: ix.sag,
            skew_direction: ix.skew_direction,
            convex: lc.is_convex(),
        }
    }

    pub fn indices(&self) -> Indices {
        Indices {
            gini: self.gini,
            g_right: self.g_right,
            g_left: self.g_left,
            sag: self.sag,
            skew_direction: self.skew_direction,
        }
    }
}

/// Lorenz curve, gaps and all four indices for a dataset.
pub fn report(d: &Dataset) -> InequalityReport {
    report_with(d, Execution::default())
}

pub fn report_with(d: &Dataset, exec: Execution) -> InequalityReport {
    InequalityReport::assemble(&LorenzCurve::from_dataset(d), Some(d.mean()), exec)
}

/// Indices straight from `(p, q)` points on the uniform grid, without sorting.
pub fn metrics_from_lorenz(points: &[(f64, f64)]) -> Result<InequalityReport> {
    let lc = LorenzCurve::from_points(points)?;
    Ok(InequalityReport::assemble(&lc, None, Execution::default()))
}
