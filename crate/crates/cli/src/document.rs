//! The serialized report: JSON, flat CSV, and a plain-text summary.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use skewgini::{Dataset, Indices, InequalityReport, LorenzCurve};

pub const SCHEMA_VERSION: &str = "1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputSummary {
    pub n: usize,
    /// Absent when the input was a Lorenz curve rather than observations.
    pub mean: Option<f64>,
    pub min: Option<f64>,
    pub max: Option<f64>,
    pub total: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LorenzArrays {
    pub p: Vec<f64>,
    pub q: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool_version: String,
    pub timestamp: String,
    pub input_digest: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub input: InputSummary,
    pub indices: Indices,
    pub lorenz: LorenzArrays,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

pub const NON_CONVEX_WARNING: &str =
    "Lorenz points are not convex: resource-share increments shrink somewhere";

impl ReportDocument {
    pub fn from_dataset(d: &Dataset, report: &InequalityReport) -> Self {
        let lc = LorenzCurve::from_dataset(d);
        Self::assemble(
            InputSummary {
                n: d.len(),
                mean: Some(d.mean()),
                min: Some(d.min()),
                max: Some(d.max()),
                total: Some(d.total()),
            },
            report,
            &lc,
        )
    }

    pub fn from_lorenz(lc: &LorenzCurve, report: &InequalityReport) -> Self {
        Self::assemble(
            InputSummary {
                n: lc.n(),
                mean: None,
                min: None,
                max: None,
                total: None,
            },
            report,
            lc,
        )
    }

    fn assemble(input: InputSummary, report: &InequalityReport, lc: &LorenzCurve) -> Self {
        let mut warnings = Vec::new();
        if !report.convex {
            warnings.push(NON_CONVEX_WARNING.to_string());
        }
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            input,
            indices: report.indices(),
            lorenz: LorenzArrays {
                p: lc.p().to_vec(),
                q: lc.q().to_vec(),
            },
            warnings,
            provenance: None,
        }
    }

    pub fn with_provenance(mut self, input_bytes: &[u8]) -> Self {
        self.provenance = Some(Provenance {
            tool_version: TOOL_VERSION.to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            input_digest: digest(input_bytes),
        });
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// `key,value` rows, a blank line, then `p,q` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("key,value\n");
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(out, "{k},{v}");
        };
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        kv("schema_version", self.schema_version.clone());
        kv("n", self.input.n.to_string());
        kv("mean", opt(self.input.mean));
        kv("min", opt(self.input.min));
        kv("max", opt(self.input.max));
        kv("total", opt(self.input.total));
        kv("gini", self.indices.gini.to_string());
        kv("g_right", self.indices.g_right.to_string());
        kv("g_left", self.indices.g_left.to_string());
        kv("sag", self.indices.sag.to_string());
        kv("skew_direction", self.indices.skew_direction.to_string());
        for w in &self.warnings {
            kv("warning", format!("\"{w}\""));
        }
        if let Some(p) = &self.provenance {
            kv("tool_version", p.tool_version.clone());
            kv("timestamp", p.timestamp.clone());
            kv("input_digest", p.input_digest.clone());
        }
        out.push_str("\np,q\n");
        for (p, q) in self.lorenz.p.iter().zip(&self.lorenz.q) {
            let _ = writeln!(out, "{p},{q}");
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let six = |v: Option<f64>| v.map(|x| format!("{x:.6}")).unwrap_or_else(|| "-".into());
        let _ = writeln!(out, "n               {}", self.input.n);
        let _ = writeln!(out, "mean            {}", six(self.input.mean));
        let _ = writeln!(out, "min             {}", six(self.input.min));
        let _ = writeln!(out, "max             {}", six(self.input.max));
        let _ = writeln!(out, "total           {}", six(self.input.total));
        let _ = writeln!(out, "gini            {:.6}", self.indices.gini);
        let _ = writeln!(out, "g_right         {:.6}", self.indices.g_right);
        let _ = writeln!(out, "g_left          {:.6}", self.indices.g_left);
        let _ = writeln!(out, "sag             {:.6}", self.indices.sag);
        let _ = writeln!(out, "skew_direction  {}", self.indices.skew_direction);
        for w in &self.warnings {
            let _ = writeln!(out, "warning         {w}");
        }
        out.push_str("(values rounded to 6 decimals; the JSON output is authoritative)\n");
        out
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}
