//! Necessary structural conditions on (3,10,41) and (3,10,40) graphs as
//! executable predicates, and a report aggregating them.
//!
//! A passing report means the graph is not excluded by any implemented
//! condition. It never certifies a graph as critical.

mod params;
mod predicates;
mod report;

use serde::{Deserialize, Serialize};

pub use params::{
    ConnectivityRule, LayerWindow, PartitionWindow, ProfileKind, ProfileParseError, TargetParams,
    Window,
};
pub use predicates::{
    connectivity_clauses_ok, degree6_census_ok, degree_sum_pair_ok, layer_size_ok,
    neighborhood_degree6_cap_ok, neighborhood_partition, partition_constraints_ok,
    partition_profile_ok, residual_degree8_ok, smallest_cut_is_neighborhood,
    union_neighborhood_ok, ConnectivityOutcome, CutMode, PartitionProfile, DEFAULT_CUT_BUDGET,
    MAX_CUT_BUDGET,
};
pub use report::{
    full_report, full_report_with, ClauseId, CriticalityReport, ReportClause, ReportOptions,
    REPORT_SCHEMA_VERSION,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    BudgetExceeded,
}

/// Result of one predicate. `witness` lists the vertices that exhibit a
/// failure; it is empty on pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseOutcome {
    pub verdict: Verdict,
    pub detail: String,
    pub witness: Vec<usize>,
}

impl ClauseOutcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        Self { verdict: Verdict::Pass, detail: detail.into(), witness: Vec::new() }
    }

    pub fn fail(detail: impl Into<String>, witness: Vec<usize>) -> Self {
        Self { verdict: Verdict::Fail, detail: detail.into(), witness }
    }

    pub fn not_applicable(detail: impl Into<String>) -> Self {
        Self { verdict: Verdict::NotApplicable, detail: detail.into(), witness: Vec::new() }
    }

    pub fn budget_exceeded(detail: impl Into<String>) -> Self {
        Self { verdict: Verdict::BudgetExceeded, detail: detail.into(), witness: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}
