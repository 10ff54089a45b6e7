//! Serialization of sweep tables.

use std::fmt::Write as _;

use serde::Serialize;
use skewgini::SweepTable;

use crate::document::SCHEMA_VERSION;

#[derive(Serialize)]
struct SimulationDocument<'a> {
    schema_version: &'a str,
    #[serde(flatten)]
    table: &'a SweepTable,
}

pub fn to_json(table: &SweepTable) -> String {
    let doc = SimulationDocument {
        schema_version: SCHEMA_VERSION,
        table,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("sweep table serializes");
    s.push('\n');
    s
}

/// One row per replication, a blank line, then the summary block.
pub fn to_csv(table: &SweepTable) -> String {
    let mut out =
        String::from("rep_index,n,mean,gini,g_right,g_left,sag,sag_minus_gini,skew_direction\n");
    for r in &table.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.rep_index,
            r.n,
            r.mean,
            r.gini,
            r.g_right,
            r.g_left,
            r.sag,
            r.sag_minus_gini,
            r.skew_direction
        );
    }
    out.push_str("\nstatistic,mean,q05,q25,median,q75,q95\n");
    for s in &table.summary {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            s.statistic, s.mean, s.q05, s.q25, s.median, s.q75, s.q95
        );
    }
    out
}
