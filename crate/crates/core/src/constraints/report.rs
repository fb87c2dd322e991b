use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::predicates::{diameter_of, DEFAULT_CUT_BUDGET};
use super::{
    connectivity_clauses_ok, degree6_census_ok, degree_sum_pair_ok, layer_size_ok,
    neighborhood_degree6_cap_ok, neighborhood_partition, partition_constraints_ok,
    smallest_cut_is_neighborhood, union_neighborhood_ok, ClauseOutcome, CutMode, TargetParams,
    Verdict,
};
use crate::enumerate::diam2_deg6_sequences;
use crate::graph::{Diameter, Graph};
use crate::invariants::is_ramsey_graph;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClauseId {
    Order,
    RamseyCore,
    DegreeWindow,
    EdgeWindow,
    DiameterWindow,
    MaxDegreeCount,
    NeighborDegreeSum,
    UnionNeighborhood,
    Degree6Census,
    NeighborhoodPartition,
    Diam2DegreeSequence,
    LayerSizes,
    ConnectivityLowerBound,
    ConnectivityEqualsMinDegree,
    SmallestCutNeighborhood,
    NeighborhoodDegree6Cap,
}

impl ClauseId {
    pub const ALL: [ClauseId; 16] = [
        ClauseId::Order,
        ClauseId::RamseyCore,
        ClauseId::DegreeWindow,
        ClauseId::EdgeWindow,
        ClauseId::DiameterWindow,
        ClauseId::MaxDegreeCount,
        ClauseId::NeighborDegreeSum,
        ClauseId::UnionNeighborhood,
        ClauseId::Degree6Census,
        ClauseId::NeighborhoodPartition,
        ClauseId::Diam2DegreeSequence,
        ClauseId::LayerSizes,
        ClauseId::ConnectivityLowerBound,
        ClauseId::ConnectivityEqualsMinDegree,
        ClauseId::SmallestCutNeighborhood,
        ClauseId::NeighborhoodDegree6Cap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClauseId::Order => "order",
            ClauseId::RamseyCore => "ramsey-core",
            ClauseId::DegreeWindow => "degree-window",
            ClauseId::EdgeWindow => "edge-window",
            ClauseId::DiameterWindow => "diameter-window",
            ClauseId::MaxDegreeCount => "max-degree-count",
            ClauseId::NeighborDegreeSum => "neighbor-degree-sum",
            ClauseId::UnionNeighborhood => "union-neighborhood",
            ClauseId::Degree6Census => "degree6-census",
            ClauseId::NeighborhoodPartition => "neighborhood-partition",
            ClauseId::Diam2DegreeSequence => "diam2-degree-sequence",
            ClauseId::LayerSizes => "layer-sizes",
            ClauseId::ConnectivityLowerBound => "connectivity-lower-bound",
            ClauseId::ConnectivityEqualsMinDegree => "connectivity-equals-min-degree",
            ClauseId::SmallestCutNeighborhood => "smallest-cut-neighborhood",
            ClauseId::NeighborhoodDegree6Cap => "neighborhood-degree6-cap",
        }
    }

    /// The condition the clause checks, stated for the target family.
    pub fn citation(self) -> &'static str {
        match self {
            ClauseId::Order => "graph has the target order",
            ClauseId::RamseyCore => "no clique of the clique bound and no independent set of the independence bound",
            ClauseId::DegreeWindow => "every degree lies in the target degree window; a vertex of degree t or more forces an independent t-set",
            ClauseId::EdgeWindow => "edge count lies between the known minimum and maximum edge counts",
            ClauseId::DiameterWindow => "diameter is 2 or 3",
            ClauseId::MaxDegreeCount => "at least 16 vertices of degree 9",
            ClauseId::NeighborDegreeSum => "no vertex has two neighbors whose degrees sum to at most the threshold",
            ClauseId::UnionNeighborhood => "|N(v1) u N(v2)| >= 11 for two neighbors of a common vertex (stated without proof; unverified)",
            ClauseId::Degree6Census => "at most 6 vertices of degree 6; with diameter 2, at most 2 and they must be adjacent",
            ClauseId::NeighborhoodPartition => "with diameter 2, around a degree-6 vertex v: H20(v) and H2i(v), i >= 4, are empty, 20 <= |H21(v)| <= 24, 20 to 24 residual vertices of residual degree 8, 44 to 48 edges between N(v) and the residual",
            ClauseId::Diam2DegreeSequence => "with diameter 2 and a degree-6 vertex, the degree counts are one of the 21 admissible sequences",
            ClauseId::LayerSizes => "around a degree-4 vertex v: 19 <= |layer 2| <= 24 and 11 <= |layer 3| <= 17",
            ClauseId::ConnectivityLowerBound => "vertex connectivity is at least 6",
            ClauseId::ConnectivityEqualsMinDegree => "vertex connectivity equals minimum degree",
            ClauseId::SmallestCutNeighborhood => "with diameter 2, some minimum vertex cut is N(v) for a vertex v",
            ClauseId::NeighborhoodDegree6Cap => "with diameter 2, each N(v) contains at most 2 vertices of degree 6",
        }
    }

    /// Clauses evaluated even when the order does not match the profile.
    fn order_independent(self) -> bool {
        matches!(self, ClauseId::Order | ClauseId::RamseyCore)
    }
}

impl fmt::Display for ClauseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClauseId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClauseId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown clause {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportClause {
    pub id: ClauseId,
    pub citation: String,
    #[serde(flatten)]
    pub outcome: ClauseOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub schema_version: u32,
    pub profile: String,
    pub extrapolated: bool,
    pub params: TargetParams,
    pub order: usize,
    pub edge_count: usize,
    pub clauses: Vec<ReportClause>,
    /// No clause failed. Budget-exceeded and not-applicable clauses do not fail.
    pub overall_pass: bool,
    pub scope: String,
}

impl CriticalityReport {
    pub fn clause(&self, id: ClauseId) -> Option<&ReportClause> {
        self.clauses.iter().find(|c| c.id == id)
    }

    pub fn verdict(&self, id: ClauseId) -> Option<Verdict> {
        self.clause(id).map(|c| c.outcome.verdict)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportClause> {
        self.clauses.iter().filter(|c| c.outcome.failed())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportOptions {
    pub disabled: BTreeSet<ClauseId>,
    pub cut_mode: CutMode,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self { disabled: BTreeSet::new(), cut_mode: CutMode::Witness }
    }
}

impl ReportOptions {
    pub fn exhaustive(budget: Option<u64>) -> Self {
        Self {
            cut_mode: CutMode::Exhaustive { budget: budget.unwrap_or(DEFAULT_CUT_BUDGET) },
            ..Self::default()
        }
    }
}

pub fn full_report(g: &Graph, params: &TargetParams) -> CriticalityReport {
    full_report_with(g, params, &ReportOptions::default())
}

pub fn full_report_with(g: &Graph, params: &TargetParams, options: &ReportOptions) -> CriticalityReport {
    let order_matches = g.order() == params.order;
    let ctx = Context { g, params, diameter: diameter_of(g) };
    let mut connectivity = None;
    let mut clauses = Vec::new();
    for id in ClauseId::ALL {
        if options.disabled.contains(&id) {
            continue;
        }
        let outcome = if !order_matches && !id.order_independent() {
            ClauseOutcome::not_applicable(format!(
                "order {} differs from profile order {}",
                g.order(),
                params.order
            ))
        } else {
            match id {
                ClauseId::ConnectivityLowerBound => {
                    connectivity.get_or_insert_with(|| connectivity_clauses_ok(g, params)).lower_bound.clone()
                }
                ClauseId::ConnectivityEqualsMinDegree => connectivity
                    .get_or_insert_with(|| connectivity_clauses_ok(g, params))
                    .equals_min_degree
                    .clone(),
                _ => ctx.evaluate(id, options),
            }
        };
        clauses.push(ReportClause { id, citation: id.citation().to_string(), outcome });
    }
    let overall_pass = clauses.iter().all(|c| !c.outcome.failed());
    CriticalityReport {
        schema_version: REPORT_SCHEMA_VERSION,
        profile: params.name(),
        extrapolated: params.extrapolated,
        params: params.clone(),
        order: g.order(),
        edge_count: g.edge_count(),
        clauses,
        overall_pass,
        scope: "necessary conditions only: passing means not excluded, not certified".to_string(),
    }
}

struct Context<'a> {
    g: &'a Graph,
    params: &'a TargetParams,
    diameter: Option<Diameter>,
}

impl Context<'_> {
    fn diameter2(&self) -> bool {
        self.diameter.is_some_and(|d| d.is(2))
    }

    fn evaluate(&self, id: ClauseId, options: &ReportOptions) -> ClauseOutcome {
        let (g, p) = (self.g, self.params);
        match id {
            ClauseId::Order => {
                if g.order() == p.order {
                    ClauseOutcome::pass(format!("order {}", g.order()))
                } else {
                    ClauseOutcome::fail(format!("order {} differs from {}", g.order(), p.order), Vec::new())
                }
            }
            ClauseId::RamseyCore => self.ramsey_core(),
            ClauseId::DegreeWindow => self.degree_window(),
            ClauseId::EdgeWindow => match p.edge_window {
                None => ClauseOutcome::not_applicable("profile sets no edge window"),
                Some(w) if w.contains(g.edge_count()) => {
                    ClauseOutcome::pass(format!("{} edges within {w}", g.edge_count()))
                }
                Some(w) => ClauseOutcome::fail(format!("{} edges outside {w}", g.edge_count()), Vec::new()),
            },
            ClauseId::DiameterWindow => self.diameter_window(),
            ClauseId::MaxDegreeCount => self.max_degree_count(),
            ClauseId::NeighborDegreeSum => match p.neighbor_degree_sum_threshold {
                None => ClauseOutcome::not_applicable("profile sets no degree-sum threshold"),
                Some(t) => degree_sum_pair_ok(g, t),
            },
            ClauseId::UnionNeighborhood => match p.union_neighborhood_bound {
                None => ClauseOutcome::not_applicable("profile sets no union bound"),
                Some(b) => union_neighborhood_ok(g, b),
            },
            ClauseId::Degree6Census => degree6_census_ok(g, p),
            ClauseId::NeighborhoodPartition => self.partition(),
            ClauseId::Diam2DegreeSequence => self.diam2_sequence(),
            ClauseId::LayerSizes => self.layers(),
            ClauseId::ConnectivityLowerBound | ClauseId::ConnectivityEqualsMinDegree => {
                unreachable!("handled by the caller")
            }
            ClauseId::SmallestCutNeighborhood => {
                if !p.smallest_cut_rule {
                    ClauseOutcome::not_applicable("profile does not check minimum cuts")
                } else if !self.diameter2() {
                    ClauseOutcome::not_applicable("diameter is not 2")
                } else {
                    smallest_cut_is_neighborhood(g, options.cut_mode)
                }
            }
            ClauseId::NeighborhoodDegree6Cap => neighborhood_degree6_cap_ok(g, p),
        }
    }

    fn ramsey_core(&self) -> ClauseOutcome {
        let (s, t) = (self.params.clique_bound, self.params.independence_bound);
        let check = is_ramsey_graph(self.g, s, t);
        if let Some(clique) = check.clique {
            ClauseOutcome::fail(format!("clique of size {s}"), clique)
        } else if let Some(set) = check.independent_set {
            ClauseOutcome::fail(format!("independent set of size {t}"), set)
        } else {
            ClauseOutcome::pass(format!("no {s}-clique and no independent {t}-set"))
        }
    }

    fn degree_window(&self) -> ClauseOutcome {
        let Some(w) = self.params.degree_window else {
            return ClauseOutcome::not_applicable("profile sets no degree window");
        };
        match self.g.vertices().find(|&v| !w.contains(self.g.degree(v))) {
            Some(v) => ClauseOutcome::fail(
                format!("vertex {v} has degree {}, outside {w}", self.g.degree(v)),
                vec![v],
            ),
            None => ClauseOutcome::pass(format!(
                "degrees within [{}, {}]",
                self.g.min_degree(),
                self.g.max_degree()
            )),
        }
    }

    fn diameter_window(&self) -> ClauseOutcome {
        let Some(w) = self.params.diameter_window else {
            return ClauseOutcome::not_applicable("profile sets no diameter window");
        };
        let Some(d) = self.diameter else {
            return ClauseOutcome::not_applicable("diameter undefined on the empty graph");
        };
        match d {
            Diameter::Finite(x) if w.contains(x) => ClauseOutcome::pass(format!("diameter {x}")),
            Diameter::Finite(x) if x < w.min => {
                ClauseOutcome::fail(format!("diameter {x} below {w}"), Vec::new())
            }
            _ => {
                let limit = w.max.unwrap_or(usize::MAX);
                for u in self.g.vertices() {
                    let dist = self.g.distances(u).expect("vertex in range");
                    if let Some(far) = dist.iter().position(|x| x.is_none_or(|x| x > limit)) {
                        return ClauseOutcome::fail(
                            format!("diameter {d} outside {w}; vertices {u}, {far} are at distance {}", dist[far].map_or("infinity".to_string(), |x| x.to_string())),
                            vec![u, far],
                        );
                    }
                }
                unreachable!("diameter exceeds the window, so some pair is far apart")
            }
        }
    }

    fn max_degree_count(&self) -> ClauseOutcome {
        let (Some(min), Some(w)) = (self.params.min_max_degree_count, self.params.degree_window) else {
            return ClauseOutcome::not_applicable("profile sets no maximum-degree count");
        };
        let Some(top) = w.max else {
            return ClauseOutcome::not_applicable("degree window is unbounded");
        };
        let hits: Vec<usize> = self.g.vertices().filter(|&v| self.g.degree(v) == top).collect();
        if hits.len() >= min {
            ClauseOutcome::pass(format!("{} vertices of degree {top}", hits.len()))
        } else {
            ClauseOutcome::fail(format!("{} vertices of degree {top}, need {min}", hits.len()), hits)
        }
    }

    fn partition(&self) -> ClauseOutcome {
        let Some(win) = self.params.partition else {
            return ClauseOutcome::not_applicable("profile sets no partition windows");
        };
        if !self.diameter2() {
            return ClauseOutcome::not_applicable("diameter is not 2");
        }
        let bases: Vec<usize> = self.g.vertices().filter(|&v| self.g.degree(v) == win.base_degree).collect();
        if bases.is_empty() {
            return ClauseOutcome::not_applicable(format!("no vertex of degree {}", win.base_degree));
        }
        let mut details = Vec::new();
        for v in bases {
            let profile = neighborhood_partition(self.g, v).expect("vertex in range");
            let out = partition_constraints_ok(&profile, self.g, self.params);
            if out.failed() {
                return out;
            }
            details.push(out.detail);
        }
        ClauseOutcome::pass(details.join(" | "))
    }

    fn diam2_sequence(&self) -> ClauseOutcome {
        let g = self.g;
        if !self.params.diam2_sequence_rule {
            return ClauseOutcome::not_applicable("profile has no degree-sequence rule");
        }
        if !self.diameter2() {
            return ClauseOutcome::not_applicable("diameter is not 2");
        }
        let six: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 6).collect();
        if six.is_empty() {
            return ClauseOutcome::not_applicable("no vertex of degree 6");
        }
        if let Some(v) = g.vertices().find(|&v| !(6..=9).contains(&g.degree(v))) {
            return ClauseOutcome::fail(format!("vertex {v} has degree {}, outside [6, 9]", g.degree(v)), vec![v]);
        }
        if self.params.strict {
            for &v in &six {
                if let Some(&u) = six.iter().find(|&&u| u != v && !g.has_edge(u, v)) {
                    return ClauseOutcome::fail(
                        format!("strict: degree-6 vertex {u} lies in the residual of degree-6 vertex {v}"),
                        vec![v, u],
                    );
                }
            }
        }
        let count = |d: usize| g.vertices().filter(|&v| g.degree(v) == d).count();
        let counts = [count(9), count(8), count(7), six.len()];
        let admissible = diam2_deg6_sequences(self.params.strict);
        if admissible.iter().any(|c| c.counts() == counts) {
            ClauseOutcome::pass(format!("degree counts {counts:?} admissible"))
        } else {
            ClauseOutcome::fail(format!("degree counts {counts:?} not among the 21 admissible sequences"), six)
        }
    }

    fn layers(&self) -> ClauseOutcome {
        let Some(win) = self.params.layers else {
            return ClauseOutcome::not_applicable("profile sets no layer windows");
        };
        let bases: Vec<usize> = self.g.vertices().filter(|&v| self.g.degree(v) == win.base_degree).collect();
        if bases.is_empty() {
            return ClauseOutcome::not_applicable(format!("no vertex of degree {}", win.base_degree));
        }
        let mut details = Vec::new();
        for v in bases {
            let out = layer_size_ok(self.g, v, self.params);
            if out.failed() {
                return out;
            }
            details.push(out.detail);
        }
        ClauseOutcome::pass(details.join(" | "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{circulant, cycle};

    #[test]
    fn custom_profile_on_c5() {
        let r = full_report(&cycle(5), &TargetParams::custom(3, 3, 5));
        assert!(r.extrapolated);
        assert_eq!(r.verdict(ClauseId::RamseyCore), Some(Verdict::Pass));
        assert_eq!(r.verdict(ClauseId::NeighborhoodPartition), Some(Verdict::NotApplicable));
        assert!(r.overall_pass);
    }

    #[test]
    fn custom_profile_on_circulant13() {
        let g = circulant(13, &[1, 5]).unwrap();
        let r = full_report(&g, &TargetParams::custom(3, 5, 13));
        assert_eq!(r.verdict(ClauseId::RamseyCore), Some(Verdict::Pass));
    }

    #[test]
    fn order_mismatch() {
        let r = full_report(&cycle(5), &TargetParams::gamma41());
        assert_eq!(r.verdict(ClauseId::Order), Some(Verdict::Fail));
        assert_eq!(r.verdict(ClauseId::DegreeWindow), Some(Verdict::NotApplicable));
        assert!(!r.overall_pass);
    }

    #[test]
    fn isolated_vertex_fails_degree_window() {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for v in 1..41 {
            edges.push((v, if v == 40 { 1 } else { v + 1 }));
        }
        let g = Graph::from_edges(41, edges).unwrap();
        let r = full_report(&g, &TargetParams::gamma41());
        let c = r.clause(ClauseId::DegreeWindow).unwrap();
        assert_eq!(c.outcome.verdict, Verdict::Fail);
        assert_eq!(c.outcome.witness, vec![0]);
    }

    #[test]
    fn ids_round_trip() {
        for id in ClauseId::ALL {
            assert_eq!(id.name().parse::<ClauseId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{}\"", id.name()));
        }
    }

    #[test]
    fn disabled_clauses_are_omitted() {
        let mut opts = ReportOptions::default();
        opts.disabled.insert(ClauseId::RamseyCore);
        let r = full_report_with(&cycle(5), &TargetParams::custom(3, 3, 5), &opts);
        assert!(r.clause(ClauseId::RamseyCore).is_none());
        assert_eq!(r.clauses.len(), ClauseId::ALL.len() - 1);
    }
}
