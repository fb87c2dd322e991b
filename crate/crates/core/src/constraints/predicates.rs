use serde::{Deserialize, Serialize};

use super::{ClauseOutcome, TargetParams};
use crate::error::GraphError;
use crate::graph::{Diameter, Graph, VertexSet};
use crate::invariants::{minimum_vertex_cut, vertex_connectivity};

/// Largest number of candidate cuts exhaustive mode will examine.
pub const MAX_CUT_BUDGET: u64 = 10_000_000;
pub const DEFAULT_CUT_BUDGET: u64 = MAX_CUT_BUDGET;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutMode {
    /// Some `N(v)` is a minimum vertex cut.
    Witness,
    /// Every minimum vertex cut is some `N(v)`; gives up past `budget` subsets.
    Exhaustive { budget: u64 },
}

fn has_diameter2(g: &Graph) -> bool {
    g.order() > 0 && g.diameter().is_ok_and(|d| d.is(2))
}

fn pair_label(v: usize, v1: usize, v2: usize) -> String {
    format!("vertex {v} with neighbors {v1}, {v2}")
}

/// Fails when some vertex has two neighbors whose degrees sum to at most
/// `threshold`. Witness `[v, v1, v2]`.
pub fn degree_sum_pair_ok(g: &Graph, threshold: usize) -> ClauseOutcome {
    for v in g.vertices() {
        let mut nbrs: Vec<usize> = g.row(v).to_vec();
        if nbrs.len() < 2 {
            continue;
        }
        nbrs.sort_by_key(|&u| (g.degree(u), u));
        let (v1, v2) = (nbrs[0], nbrs[1]);
        let sum = g.degree(v1) + g.degree(v2);
        if sum <= threshold {
            return ClauseOutcome::fail(
                format!("{}: degree sum {sum} <= {threshold}", pair_label(v, v1, v2)),
                vec![v, v1, v2],
            );
        }
    }
    ClauseOutcome::pass(format!("every neighbor pair has degree sum > {threshold}"))
}

/// Fails when two neighbors of a common vertex have `|N(v1) ∪ N(v2)| < bound`.
/// Witness `[v, v1, v2]`.
pub fn union_neighborhood_ok(g: &Graph, bound: usize) -> ClauseOutcome {
    for v in g.vertices() {
        let nbrs = g.row(v).to_vec();
        for (i, &v1) in nbrs.iter().enumerate() {
            for &v2 in &nbrs[i + 1..] {
                let size = g.degree(v1) + g.degree(v2) - g.row(v1).intersection_len(g.row(v2));
                if size < bound {
                    return ClauseOutcome::fail(
                        format!("{}: |N(v1) u N(v2)| = {size} < {bound}", pair_label(v, v1, v2)),
                        vec![v, v1, v2],
                    );
                }
            }
        }
    }
    ClauseOutcome::pass(format!("every neighbor pair covers at least {bound} vertices"))
}

/// Caps the number of degree-6 vertices; with diameter 2 and the pair rule
/// enabled, at most two may exist and two must be adjacent.
pub fn degree6_census_ok(g: &Graph, params: &TargetParams) -> ClauseOutcome {
    let Some(cap) = params.max_degree6_count else {
        return ClauseOutcome::not_applicable("profile sets no degree-6 cap");
    };
    let six: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 6).collect();
    if six.len() > cap {
        return ClauseOutcome::fail(
            format!("{} vertices of degree 6, at most {cap} allowed", six.len()),
            six,
        );
    }
    if params.diam2_degree6_pair_rule && has_diameter2(g) {
        if six.len() > 2 {
            return ClauseOutcome::fail(
                format!("diameter 2 with {} vertices of degree 6, at most 2 allowed", six.len()),
                six,
            );
        }
        if let [u, w] = six[..] {
            if !g.has_edge(u, w) {
                return ClauseOutcome::fail(
                    format!("diameter 2 with non-adjacent degree-6 vertices {u}, {w}"),
                    vec![u, w],
                );
            }
        }
    }
    ClauseOutcome::pass(format!("{} vertices of degree 6", six.len()))
}

/// Sizes of the classes `H_2i(v)`: residual vertices with exactly `i`
/// neighbors in `N(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionProfile {
    pub base_vertex: usize,
    /// `counts[i] = |H_2i(v)|`.
    pub counts: Vec<usize>,
    /// Edges between `N(v)` and the residual, `sum i * counts[i]`.
    pub boundary_edges: usize,
}

impl PartitionProfile {
    pub fn from_counts(base_vertex: usize, counts: Vec<usize>) -> Self {
        let boundary_edges = counts.iter().enumerate().map(|(i, c)| i * c).sum();
        Self { base_vertex, counts, boundary_edges }
    }

    pub fn count(&self, i: usize) -> usize {
        self.counts.get(i).copied().unwrap_or(0)
    }

    pub fn residual_order(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `(i, counts[i])` for the non-empty classes.
    pub fn nonzero(&self) -> Vec<(usize, usize)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }
}

pub fn neighborhood_partition(g: &Graph, v: usize) -> Result<PartitionProfile, GraphError> {
    let nbrs = g.neighborhood(v)?;
    let closed = g.closed_neighborhood(v)?;
    let mut counts = vec![0; g.max_degree() + 1];
    for u in g.vertices().filter(|&u| !closed.contains(u)) {
        counts[g.row(u).intersection_len(&nbrs)] += 1;
    }
    let profile = PartitionProfile::from_counts(v, counts);
    debug_assert_eq!(
        Some(profile.boundary_edges),
        g.edges_between(&nbrs, &VertexSet::full(g.order()).difference(&closed)).ok()
    );
    Ok(profile)
}

/// The profile-only part of the partition clause: class sizes and boundary
/// edges within the profile's windows.
pub fn partition_profile_ok(profile: &PartitionProfile, params: &TargetParams) -> ClauseOutcome {
    let Some(win) = params.partition else {
        return ClauseOutcome::not_applicable("profile sets no partition windows");
    };
    let witness = vec![profile.base_vertex];
    let expected = params.order.saturating_sub(1 + win.base_degree);
    let mut problems = Vec::new();
    if profile.residual_order() != expected {
        problems.push(format!("classes cover {} vertices, expected {expected}", profile.residual_order()));
    }
    let weighted: usize = profile.counts.iter().enumerate().map(|(i, c)| i * c).sum();
    if weighted != profile.boundary_edges {
        problems.push(format!("boundary edges {} disagree with class sizes ({weighted})", profile.boundary_edges));
    }
    if profile.count(0) > 0 {
        problems.push(format!("{} residual vertices at distance > 2", profile.count(0)));
    }
    let high: usize = profile.counts.iter().skip(4).sum();
    if high > 0 {
        problems.push(format!("{high} residual vertices with 4 or more neighbors in N(v)"));
    }
    if !win.h21.contains(profile.count(1)) {
        problems.push(format!("|H21| = {} outside {}", profile.count(1), win.h21));
    }
    if !win.boundary_edges.contains(profile.boundary_edges) {
        problems.push(format!("boundary edges {} outside {}", profile.boundary_edges, win.boundary_edges));
    }
    if problems.is_empty() {
        ClauseOutcome::pass(format!(
            "vertex {}: classes {:?}, boundary edges {}",
            profile.base_vertex,
            profile.nonzero(),
            profile.boundary_edges
        ))
    } else {
        ClauseOutcome::fail(format!("vertex {}: {}", profile.base_vertex, problems.join("; ")), witness)
    }
}

/// Counts residual vertices of `v` that have degree 8 inside the residual.
pub fn residual_degree8_ok(g: &Graph, v: usize, params: &TargetParams) -> ClauseOutcome {
    let Some(win) = params.partition else {
        return ClauseOutcome::not_applicable("profile sets no partition windows");
    };
    let residual = match g.residual(v) {
        Ok(r) => r,
        Err(e) => return ClauseOutcome::not_applicable(e.to_string()),
    };
    let count = residual.graph.vertices().filter(|&u| residual.graph.degree(u) == 8).count();
    if win.residual_degree8.contains(count) {
        ClauseOutcome::pass(format!("vertex {v}: {count} residual vertices of residual degree 8"))
    } else {
        ClauseOutcome::fail(
            format!("vertex {v}: {count} residual vertices of residual degree 8, outside {}", win.residual_degree8),
            vec![v],
        )
    }
}

/// Applies to a base vertex of degree 6 in a diameter-2 graph of the
/// profile's order. Checks that `profile` is the graph's partition at that
/// vertex, then the profile windows and the residual degree-8 count.
pub fn partition_constraints_ok(profile: &PartitionProfile, g: &Graph, params: &TargetParams) -> ClauseOutcome {
    let Some(win) = params.partition else {
        return ClauseOutcome::not_applicable("profile sets no partition windows");
    };
    let v = profile.base_vertex;
    if g.order() != params.order {
        return ClauseOutcome::not_applicable(format!("order {} differs from {}", g.order(), params.order));
    }
    if g.check_vertex(v).is_err() || g.degree(v) != win.base_degree {
        return ClauseOutcome::not_applicable(format!("vertex {v} does not have degree {}", win.base_degree));
    }
    if !has_diameter2(g) {
        return ClauseOutcome::not_applicable("diameter is not 2");
    }
    match neighborhood_partition(g, v) {
        Ok(actual) if actual.nonzero() == profile.nonzero() => {}
        Ok(actual) => {
            return ClauseOutcome::fail(
                format!("vertex {v}: supplied classes {:?} differ from graph {:?}", profile.nonzero(), actual.nonzero()),
                vec![v],
            )
        }
        Err(e) => return ClauseOutcome::not_applicable(e.to_string()),
    }
    let shape = partition_profile_ok(profile, params);
    if shape.failed() {
        return shape;
    }
    let deg8 = residual_degree8_ok(g, v, params);
    if deg8.failed() {
        return deg8;
    }
    ClauseOutcome::pass(format!("{}; {}", shape.detail, deg8.detail))
}

/// Distance layers 2 and 3 around a vertex of the profile's base degree.
pub fn layer_size_ok(g: &Graph, v: usize, params: &TargetParams) -> ClauseOutcome {
    let Some(win) = params.layers else {
        return ClauseOutcome::not_applicable("profile sets no layer windows");
    };
    if g.order() != params.order {
        return ClauseOutcome::not_applicable(format!("order {} differs from {}", g.order(), params.order));
    }
    let layers = match g.distance_layers(v) {
        Ok(l) => l,
        Err(e) => return ClauseOutcome::not_applicable(e.to_string()),
    };
    if g.degree(v) != win.base_degree {
        return ClauseOutcome::not_applicable(format!("vertex {v} does not have degree {}", win.base_degree));
    }
    let (l2, l3) = (layers.layer(2), layers.layer(3));
    let mut problems = Vec::new();
    if !win.layer2.contains(l2) {
        problems.push(format!("layer 2 has {l2} vertices, outside {}", win.layer2));
    }
    if !win.layer3.contains(l3) {
        problems.push(format!("layer 3 has {l3} vertices, outside {}", win.layer3));
    }
    if problems.is_empty() {
        ClauseOutcome::pass(format!("vertex {v}: layers {:?}", layers.layer_sizes))
    } else {
        ClauseOutcome::fail(format!("vertex {v}: {}", problems.join("; ")), vec![v])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityOutcome {
    pub connectivity: Option<usize>,
    pub lower_bound: ClauseOutcome,
    pub equals_min_degree: ClauseOutcome,
}

/// A set whose removal disconnects `g` or leaves at most one vertex.
fn smallest_separator(g: &Graph) -> Vec<usize> {
    match minimum_vertex_cut(g) {
        Some(cut) => cut.to_vec(),
        None => g.vertices().skip(1).collect(),
    }
}

/// `kappa >= min_connectivity` and `kappa = delta`. Failure witnesses are
/// separating sets of size `kappa`.
pub fn connectivity_clauses_ok(g: &Graph, params: &TargetParams) -> ConnectivityOutcome {
    let na = |why: String| ConnectivityOutcome {
        connectivity: None,
        lower_bound: ClauseOutcome::not_applicable(why.clone()),
        equals_min_degree: ClauseOutcome::not_applicable(why),
    };
    let Some(rule) = params.connectivity else {
        return na("profile sets no connectivity rule".to_string());
    };
    if rule.requires_diameter2 && !has_diameter2(g) {
        return na("diameter is not 2".to_string());
    }
    let kappa = match vertex_connectivity(g) {
        Ok(k) => k,
        Err(e) => return na(e.to_string()),
    };
    let delta = g.min_degree();
    let lower_bound = if kappa >= rule.min_connectivity {
        ClauseOutcome::pass(format!("connectivity {kappa} >= {}", rule.min_connectivity))
    } else {
        ClauseOutcome::fail(
            format!("connectivity {kappa} < {}", rule.min_connectivity),
            smallest_separator(g),
        )
    };
    let equals_min_degree = if !rule.equals_min_degree {
        ClauseOutcome::not_applicable("profile does not require connectivity = minimum degree")
    } else if kappa == delta {
        ClauseOutcome::pass(format!("connectivity {kappa} = minimum degree"))
    } else {
        ClauseOutcome::fail(
            format!("connectivity {kappa} < minimum degree {delta}"),
            smallest_separator(g),
        )
    };
    ConnectivityOutcome { connectivity: Some(kappa), lower_bound, equals_min_degree }
}

fn binomial_capped(n: usize, k: usize, cap: u64) -> Option<u64> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > cap as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Whether minimum vertex cuts are vertex neighborhoods. Applies to any graph
/// that has a vertex cut; the diameter precondition is left to the caller.
pub fn smallest_cut_is_neighborhood(g: &Graph, mode: CutMode) -> ClauseOutcome {
    let n = g.order();
    let kappa = match vertex_connectivity(g) {
        Ok(k) => k,
        Err(e) => return ClauseOutcome::not_applicable(e.to_string()),
    };
    if kappa + 1 >= n && g.edge_count() == n * (n - 1) / 2 {
        return ClauseOutcome::not_applicable("complete graph has no vertex cut");
    }
    let hoods: Vec<(usize, VertexSet)> = g
        .vertices()
        .filter(|&v| g.degree(v) == kappa)
        .map(|v| (v, g.row(v).clone()))
        .collect();
    match mode {
        CutMode::Witness => {
            for (v, hood) in &hoods {
                if !g.is_connected_without(hood) {
                    return ClauseOutcome {
                        verdict: super::Verdict::Pass,
                        detail: format!("N({v}) is a minimum vertex cut of size {kappa}"),
                        witness: vec![*v],
                    };
                }
            }
            ClauseOutcome::fail(
                format!("no vertex neighborhood is a minimum vertex cut of size {kappa}"),
                smallest_separator(g),
            )
        }
        CutMode::Exhaustive { budget } => {
            let budget = budget.min(MAX_CUT_BUDGET);
            let Some(total) = binomial_capped(n, kappa, budget) else {
                return ClauseOutcome::budget_exceeded(format!(
                    "C({n}, {kappa}) candidate cuts exceed budget {budget}"
                ));
            };
            let mut first_hood = None;
            for combo in Combinations::new(n, kappa) {
                let set = VertexSet::from_vertices(n, combo.iter().copied()).expect("indices below n");
                if g.is_connected_without(&set) {
                    continue;
                }
                match hoods.iter().find(|(_, h)| *h == set) {
                    Some((v, _)) => {
                        first_hood.get_or_insert(*v);
                    }
                    None => {
                        return ClauseOutcome::fail(
                            format!("minimum vertex cut {combo:?} is not a vertex neighborhood"),
                            combo,
                        )
                    }
                }
            }
            ClauseOutcome {
                verdict: super::Verdict::Pass,
                detail: format!("all minimum vertex cuts among {total} candidates are neighborhoods"),
                witness: first_hood.into_iter().collect(),
            }
        }
    }
}

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self { n, current: (k <= n).then(|| (0..k).collect()) }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let cur = self.current.as_mut().expect("checked above");
        match (0..k).rev().find(|&i| cur[i] < self.n - k + i) {
            Some(i) => {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// With diameter 2, no `N(v)` holds more than `cap` degree-6 vertices.
/// Witness `[v, ...degree-6 neighbors]`.
pub fn neighborhood_degree6_cap_ok(g: &Graph, params: &TargetParams) -> ClauseOutcome {
    let Some(cap) = params.neighborhood_degree6_cap else {
        return ClauseOutcome::not_applicable("profile sets no neighborhood degree-6 cap");
    };
    if !has_diameter2(g) {
        return ClauseOutcome::not_applicable("diameter is not 2");
    }
    for v in g.vertices() {
        let six: Vec<usize> = g.row(v).iter().filter(|&u| g.degree(u) == 6).collect();
        if six.len() > cap {
            let mut witness = vec![v];
            witness.extend(&six);
            return ClauseOutcome::fail(
                format!("N({v}) holds {} vertices of degree 6, at most {cap} allowed", six.len()),
                witness,
            );
        }
    }
    ClauseOutcome::pass(format!("every neighborhood holds at most {cap} vertices of degree 6"))
}

pub(crate) fn diameter_of(g: &Graph) -> Option<Diameter> {
    g.diameter().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::Verdict;
    use crate::generators::{circulant, complete_bipartite, cycle, petersen, star};

    #[test]
    fn degree_sums() {
        let c5 = cycle(5);
        let out = degree_sum_pair_ok(&c5, 12);
        assert!(out.failed());
        assert_eq!(out.witness.len(), 3);
        assert!(degree_sum_pair_ok(&c5, 3).passed());
        assert!(degree_sum_pair_ok(&petersen(), 6).failed());
    }

    #[test]
    fn unions() {
        assert!(union_neighborhood_ok(&cycle(5), 11).failed());
        assert!(union_neighborhood_ok(&cycle(5), 3).passed());
        assert!(union_neighborhood_ok(&Graph::empty(7).unwrap(), 100).passed());
    }

    #[test]
    fn census() {
        let g = circulant(41, &[1, 2, 3]).unwrap();
        let out = degree6_census_ok(&g, &TargetParams::gamma41());
        assert!(out.failed());
        assert_eq!(out.witness.len(), 41);
        assert!(degree6_census_ok(&petersen(), &TargetParams::gamma41()).passed());

        let k26 = complete_bipartite(2, 6);
        assert_eq!(k26.diameter().unwrap(), Diameter::Finite(2));
        let out = degree6_census_ok(&k26, &TargetParams::gamma41());
        assert!(out.failed());
        assert_eq!(out.witness, vec![0, 1]);
        assert_eq!(
            degree6_census_ok(&k26, &TargetParams::custom(3, 3, 8)).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn partitions() {
        let p = neighborhood_partition(&petersen(), 0).unwrap();
        assert_eq!(p.nonzero(), vec![(1, 6)]);
        assert_eq!(p.boundary_edges, 6);
        let c = neighborhood_partition(&cycle(5), 2).unwrap();
        assert_eq!(c.nonzero(), vec![(1, 2)]);
        assert_eq!(c.boundary_edges, 2);
        let k23 = complete_bipartite(2, 3);
        let k = neighborhood_partition(&k23, 0).unwrap();
        assert_eq!(k.nonzero(), vec![(3, 1)]);
        assert!(neighborhood_partition(&k23, 5).is_err());
    }

    #[test]
    fn bare_profiles() {
        let params = TargetParams::gamma41();
        let ok = PartitionProfile::from_counts(0, vec![0, 20, 14, 0]);
        assert_eq!(ok.boundary_edges, 48);
        assert!(partition_profile_ok(&ok, &params).passed());
        let ok = PartitionProfile::from_counts(0, vec![0, 24, 6, 4]);
        assert_eq!(ok.boundary_edges, 48);
        assert!(partition_profile_ok(&ok, &params).passed());
        let bad = PartitionProfile::from_counts(0, vec![1, 20, 13, 0]);
        assert!(partition_profile_ok(&bad, &params).failed());
        let too_many = PartitionProfile::from_counts(0, vec![0, 20, 13, 1]);
        assert!(partition_profile_ok(&too_many, &params).failed());
    }

    #[test]
    fn partition_clause_applicability() {
        let g = petersen();
        let p = neighborhood_partition(&g, 0).unwrap();
        assert_eq!(partition_constraints_ok(&p, &g, &TargetParams::gamma41()).verdict, Verdict::NotApplicable);
    }

    /// Vertex 0 with 4 neighbors, 19 vertices at distance 2 and `far` more
    /// hanging off vertex 5 at distance 3.
    fn broom(layer2: usize, layer3: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (1..=4).map(|i| (0, i)).collect();
        for j in 0..layer2 {
            edges.push((1 + j % 4, 5 + j));
        }
        for j in 0..layer3 {
            edges.push((5, 5 + layer2 + j));
        }
        Graph::from_edges(5 + layer2 + layer3, edges).unwrap()
    }

    #[test]
    fn layers() {
        let params = TargetParams::omega40();
        let g = broom(19, 16);
        assert_eq!(g.distance_layers(0).unwrap().layer_sizes, vec![1, 4, 19, 16]);
        assert!(layer_size_ok(&g, 0, &params).passed());
        let out = layer_size_ok(&broom(25, 10), 0, &params);
        assert!(out.failed());
        assert!(out.detail.contains("layer 2") && out.detail.contains("layer 3"));
        assert!(layer_size_ok(&broom(18, 17), 0, &params).failed());
        assert_eq!(layer_size_ok(&g, 1, &params).verdict, Verdict::NotApplicable);
        assert_eq!(layer_size_ok(&g, 0, &TargetParams::gamma41()).verdict, Verdict::NotApplicable);
    }

    #[test]
    fn connectivity() {
        let params = TargetParams::gamma41();
        let out = connectivity_clauses_ok(&cycle(5), &params);
        assert_eq!(out.connectivity, Some(2));
        assert!(out.lower_bound.failed());
        assert_eq!(out.lower_bound.witness.len(), 2);
        assert!(out.equals_min_degree.passed());

        let g = circulant(41, &[1, 2, 3, 4]).unwrap();
        let out = connectivity_clauses_ok(&g, &params);
        assert_eq!(out.connectivity, Some(8));
        assert!(out.lower_bound.passed() && out.equals_min_degree.passed());

        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let out = connectivity_clauses_ok(&split, &params);
        assert_eq!(out.connectivity, Some(0));
        assert!(out.lower_bound.failed() && out.equals_min_degree.failed());
        assert!(out.lower_bound.witness.is_empty());
    }

    #[test]
    fn smallest_cuts() {
        let s = smallest_cut_is_neighborhood(&star(3), CutMode::Witness);
        assert!(s.passed());
        assert_ne!(s.witness, vec![0]);
        let ex = CutMode::Exhaustive { budget: 1000 };
        assert!(smallest_cut_is_neighborhood(&cycle(4), ex).passed());
        let c6 = smallest_cut_is_neighborhood(&cycle(6), ex);
        assert!(c6.failed());
        assert_eq!(c6.witness.len(), 2);
        assert!(smallest_cut_is_neighborhood(&cycle(6), CutMode::Witness).passed());
        let tight = CutMode::Exhaustive { budget: 10 };
        assert_eq!(smallest_cut_is_neighborhood(&cycle(6), tight).verdict, Verdict::BudgetExceeded);
    }

    #[test]
    fn combinations_count() {
        assert_eq!(Combinations::new(6, 2).count(), 15);
        assert_eq!(Combinations::new(5, 0).count(), 1);
        assert_eq!(Combinations::new(3, 4).count(), 0);
        assert_eq!(binomial_capped(41, 9, u64::MAX), Some(350_343_565));
        assert_eq!(binomial_capped(41, 9, MAX_CUT_BUDGET), None);
    }

    #[test]
    fn neighborhood_cap() {
        let k26 = complete_bipartite(2, 6);
        let out = neighborhood_degree6_cap_ok(&k26, &TargetParams::omega40());
        assert!(out.passed());
        let k36 = complete_bipartite(3, 6);
        let out = neighborhood_degree6_cap_ok(&k36, &TargetParams::omega40());
        assert!(out.failed());
        assert_eq!(out.witness.len(), 4);
    }
}
