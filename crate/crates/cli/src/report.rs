//! JSON report types. Field names are part of the command-line contract.

use hamdisc::{Direction, Digraph, OrientedWalk};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    Smd,
    Lsd,
    Oriented,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Flow,
    Lsd,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub vertices: Vec<usize>,
    /// One `f`/`b` per step.
    pub directions: String,
    pub closed: bool,
}

impl Witness {
    pub fn from_walk(w: &OrientedWalk) -> Self {
        Self {
            vertices: w.vertices().to_vec(),
            directions: w.direction_string(),
            closed: w.is_closed(),
        }
    }

    /// Rebuilds and validates the walk against `d`.
    pub fn to_walk(&self, d: &Digraph) -> Result<OrientedWalk, CliError> {
        let dirs = self
            .directions
            .chars()
            .map(|c| Direction::from_char(c).ok_or_else(|| CliError::SelfCheck(format!("bad direction `{c}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        OrientedWalk::new(d, self.vertices.clone(), self.closed, dirs).map_err(|e| CliError::SelfCheck(e.to_string()))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    pub min_degree: usize,
    pub s_star: i64,
    pub ore: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partite_sizes: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hp_majority: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hc_majority: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strong: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor_cost: Option<usize>,
    /// Shortest distance from the first strong component to the last.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance_c1_cl: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultReport {
    pub instance: String,
    pub class: Class,
    pub n: usize,
    pub m: usize,
    pub sigma_hp: Option<usize>,
    pub sigma_hc: Option<usize>,
    pub witness: Option<Witness>,
    pub certificates: Certificates,
    pub method: Option<Method>,
    pub timing_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub instance: String,
    /// `holds`, `holds-with-equality`, `fails`, `not-applicable`, or `skipped`.
    pub verdict: String,
    pub sigma: Option<usize>,
    pub bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stronger_bound_holds: Option<bool>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub target: String,
    pub entries: Vec<CheckEntry>,
    pub holds: usize,
    pub fails: usize,
    pub not_applicable: usize,
    pub skipped: usize,
}

impl BatchReport {
    pub fn new(target: String, mut entries: Vec<CheckEntry>) -> Self {
        entries.sort_by(|a, b| a.instance.cmp(&b.instance));
        let count = |f: &dyn Fn(&str) -> bool| entries.iter().filter(|e| f(&e.verdict)).count();
        Self {
            holds: count(&|v| v.starts_with("holds")),
            fails: count(&|v| v == "fails"),
            not_applicable: count(&|v| v == "not-applicable"),
            skipped: count(&|v| v == "skipped"),
            target,
            entries,
        }
    }
}
