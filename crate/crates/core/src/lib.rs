//! Inequality indices built on the Lorenz curve: the Gini coefficient, the
//! upper-tail and lower-tail weighted Ginis `G_R` and `G_L`, and the
//! skewness-adjusted Gini `SAG = G + |G_R - G_L| / 2`.
//!
//! ```
//! use skewgini::{build_dataset, report, SkewDirection};
//!
//! let d = build_dataset(&[0.0, 0.0, 3.0]).unwrap();
//! let r = report(&d);
//! assert!((r.gini - 2.0 / 3.0).abs() < 1e-12);
//! assert!((r.sag - 20.0 / 27.0).abs() < 1e-12);
//! assert_eq!(r.skew_direction, SkewDirection::Right);
//! ```
//!
//! The `parallel` feature (on by default) spreads large summations and
//! Monte-Carlo replications over rayon. Results are bit-identical with the
//! feature disabled.

pub mod dataset;
pub mod error;
pub mod generate;
pub mod indices;
pub mod lorenz;
pub mod oracle;
pub mod par;
pub mod sum;
pub mod sweep;

pub use dataset::{build_dataset, Dataset};
pub use error::{Error, Result};
pub use generate::{generate, sample_skewness, ExperimentConfig, Family};
pub use indices::{
    g_left, g_right, gini, metrics_from_lorenz, report, report_with, sag, Indices,
    InequalityReport, SkewDirection,
};
pub use lorenz::{
    gap_vector, lorenz_curve, make_weights, Direction, GapVector, LorenzCurve, WeightVector,
};
pub use oracle::{apply_transfer, pairwise_gini, rational_report, RationalReport, TransferSpec};
pub use par::Execution;
pub use sweep::{sensitivity_sweep, sensitivity_sweep_with, StatSummary, SweepRow, SweepTable};
