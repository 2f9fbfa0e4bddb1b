//! JSON documents printed by the commands.
//!
//! `solve` prints
//!
//! ```json
//! {"n": 3, "edges": [{"u": 0, "v": 1, "w": 1}, ...], "sums": [1, 2, 1],
//!  "branch_trace": ["deg1/even-B"], "valid": true}
//! ```
//!
//! with an extra `branch_stats` object when asked for. `verify` prints
//! `{"conflicts": [[u, v], ...], "valid": bool}` and `oracle` prints
//! `{"kmax": k, "min_k": k_or_null}`.

use std::collections::BTreeMap;

use onetwothree::graph::{Edge, Graph};
use onetwothree::solver::SolveReport;
use onetwothree::weighting::EdgeWeighting;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedEdge {
    pub u: usize,
    pub v: usize,
    pub w: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveDocument {
    pub n: usize,
    pub edges: Vec<WeightedEdge>,
    pub sums: Vec<i64>,
    pub branch_trace: Vec<String>,
    pub valid: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch_stats: Option<BTreeMap<String, usize>>,
}

impl SolveDocument {
    pub fn new(g: &Graph, report: &SolveReport, valid: bool) -> SolveDocument {
        SolveDocument {
            n: g.n(),
            edges: g
                .edges()
                .iter()
                .map(|&e| WeightedEdge { u: e.lo(), v: e.hi(), w: report.weighting.get(e).unwrap_or(0) })
                .collect(),
            sums: report.sums.clone(),
            branch_trace: report.branch_trace.iter().map(|b| b.as_str().to_string()).collect(),
            valid,
            branch_stats: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub conflicts: Vec<[usize; 2]>,
    pub valid: bool,
}

impl VerifyDocument {
    pub fn new(conflicts: &[Edge]) -> VerifyDocument {
        VerifyDocument {
            conflicts: conflicts.iter().map(|e| [e.lo(), e.hi()]).collect(),
            valid: conflicts.is_empty(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDocument {
    pub kmax: u32,
    pub min_k: Option<u32>,
}

#[derive(Deserialize)]
struct EdgesOnly {
    edges: Vec<WeightedEdge>,
}

/// Reads the `edges` array of a weighting document; other fields are
/// ignored.
pub fn parse_weighting(text: &str) -> Result<EdgeWeighting, serde_json::Error> {
    let doc: EdgesOnly = serde_json::from_str(text)?;
    Ok(doc.edges.into_iter().map(|e| (Edge::new(e.u, e.v), e.w)).collect())
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize") + "\n"
}
