//! Lorenz curves, the gap vector between curve and diagonal, and the
//! tail weights applied to it.

use serde::{Deserialize, Serialize};

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

/// Tolerance on the population grid of user-supplied Lorenz points.
pub const GRID_TOLERANCE: f64 = 1e-9;
/// Tolerance on the final resource share of user-supplied Lorenz points.
pub const ENDPOINT_TOLERANCE: f64 = 1e-9;
/// Slack allowed when checking that the increments of `q` never shrink.
const CONVEXITY_SLACK: f64 = 1e-12;

/// Points `(p_i, q_i)`, `i = 1..=n`, of a Lorenz curve on the uniform grid `p_i = i/n`.
///
/// The origin is implicit. `p_n` and `q_n` are exactly 1.
#[derive(Debug, Clone, PartialEq)]
pub struct LorenzCurve {
    p: Vec<f64>,
    q: Vec<f64>,
    convex: bool,
}

impl LorenzCurve {
    /// Sorts the observations ascending and accumulates their shares.
    pub fn from_dataset(d: &Dataset) -> Self {
        let n = d.len();
        let total = d.total();
        let mut running = NeumaierSum::new();
        let mut q: Vec<f64> = d
            .sorted()
            .iter()
            .map(|&x| {
                running += x;
                running.sum() / total
            })
            .collect();
        q[n - 1] = 1.0;
        // Increments are x_(i) / total and the data are sorted.
        Self {
            p: uniform_grid(n),
            q,
            convex: true,
        }
    }

    /// Takes Lorenz points as given, without sorting.
    ///
    /// A leading `(0, 0)` point is accepted and dropped. The population shares
    /// must sit on the uniform grid `i/n` and the last resource share must be 1.
    pub fn from_points(points: &[(f64, f64)]) -> Result<Self> {
        let points = match points.first() {
            Some(&(p, q)) if p == 0.0 && q == 0.0 => &points[1..],
            _ => points,
        };
        let n = points.len();
        if n < 2 {
            return Err(Error::EmptyOrSingleton { n });
        }
        for (index, &(p, q)) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::NonFiniteValue { index, value: p });
            }
            if !q.is_finite() {
                return Err(Error::NonFiniteValue { index, value: q });
            }
        }
        let p = uniform_grid(n);
        for (index, (&(found, _), &expected)) in points.iter().zip(&p).enumerate() {
            if (found - expected).abs() > GRID_TOLERANCE {
                return Err(Error::UnequalSpacing {
                    index,
                    found,
                    expected,
                });
            }
        }
        let last = points[n - 1].1;
        if (last - 1.0).abs() > ENDPOINT_TOLERANCE {
            return Err(Error::BadEndpoint { last });
        }
        let mut q: Vec<f64> = points.iter().map(|&(_, q)| q).collect();
        q[n - 1] = 1.0;
        let convex = increments_non_decreasing(&q);
        Ok(Self { p, q, convex })
    }

    pub fn n(&self) -> usize {
        self.p.len()
    }

    /// Cumulative population shares `i/n`.
    pub fn p(&self) -> &[f64] {
        &self.p
    }

    /// Cumulative resource shares.
    pub fn q(&self) -> &[f64] {
        &self.q
    }

    /// Whether successive increments of `q` are non-decreasing.
    pub fn is_convex(&self) -> bool {
        self.convex
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.p.iter().copied().zip(self.q.iter().copied())
    }

    /// Distances `p_i - q_i` at the interior grid points.
    pub fn gaps(&self) -> GapVector {
        let n = self.n();
        GapVector {
            gaps: self.p[..n - 1]
                .iter()
                .zip(&self.q[..n - 1])
                .map(|(p, q)| p - q)
                .collect(),
            n,
        }
    }
}

pub fn lorenz_curve(d: &Dataset) -> LorenzCurve {
    LorenzCurve::from_dataset(d)
}

pub fn gap_vector(lc: &LorenzCurve) -> GapVector {
    lc.gaps()
}

fn uniform_grid(n: usize) -> Vec<f64> {
    let nf = n as f64;
    let mut p: Vec<f64> = (1..=n).map(|i| i as f64 / nf).collect();
    p[n - 1] = 1.0;
    p
}

fn increments_non_decreasing(q: &[f64]) -> bool {
    let mut prev_q = 0.0;
    let mut prev_step = f64::NEG_INFINITY;
    for &qi in q {
        let step = qi - prev_q;
        if step < prev_step - CONVEXITY_SLACK {
            return false;
        }
        prev_step = step;
        prev_q = qi;
    }
    true
}

/// The `n - 1` interior distances `d_i = p_i - q_i` between diagonal and Lorenz curve.
#[derive(Debug, Clone, PartialEq)]
pub struct GapVector {
    gaps: Vec<f64>,
    n: usize,
}

impl GapVector {
    /// Builds a gap vector directly; `gaps.len()` must be `n - 1`.
    pub fn new(gaps: Vec<f64>) -> Result<Self> {
        let n = gaps.len() + 1;
        if n < 2 {
            return Err(Error::EmptyOrSingleton { n: gaps.len() });
        }
        if let Some((index, &value)) = gaps.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFiniteValue { index, value });
        }
        Ok(Self { gaps, n })
    }

    /// Population count the gaps were taken from.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.gaps
    }

    /// True if `d_i = d_{n-i}` for every `i` within `tol`.
    pub fn is_palindrome(&self, tol: f64) -> bool {
        self.gaps
            .iter()
            .zip(self.gaps.iter().rev())
            .all(|(a, b)| (a - b).abs() <= tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Weights grow with population share: `2i/n`.
    Right,
    /// Weights shrink with population share: `(2n - 2i)/n`.
    Left,
}

impl Direction {
    /// Weight attached to the `i`-th gap (1-based) in a population of `n`.
    #[inline]
    pub fn weight(self, i: usize, n: usize) -> f64 {
        let numer = match self {
            Direction::Right => 2 * i,
            Direction::Left => 2 * (n - i),
        };
        numer as f64 / n as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
    direction: Direction,
}

impl WeightVector {
    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }
}

/// The `n - 1` weights for gaps `i = 1..n-1`, each in `(0, 2)` with mean 1.
pub fn make_weights(n: usize, direction: Direction) -> Result<WeightVector> {
    if n < 2 {
        return Err(Error::InvalidN { n });
    }
    Ok(WeightVector {
        weights: (1..n).map(|i| direction.weight(i, n)).collect(),
        direction,
    })
}
