//! Exact graph invariants: cliques, independence number, connectivity, and
//! the Ramsey-graph predicate built from them.

mod clique;
mod connectivity;
mod independence;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{Diameter, Graph};

pub use clique::{clique_number, find_triangle, has_clique, is_triangle_free};
pub use connectivity::{
    edge_connectivity, local_vertex_connectivity, minimum_vertex_cut, vertex_connectivity,
};
pub use independence::{has_independent_set, independence_number, maximum_independent_set};

/// Published Ramsey values and minimum edge counts the structural conditions rely on.
pub struct RamseyConstants;

impl RamseyConstants {
    pub const R_3_3: usize = 6;
    pub const R_3_8: usize = 28;
    pub const R_3_9: usize = 36;
    /// e(3,9,34).
    pub const MIN_EDGES_3_9_34: usize = 129;
    /// Lower bound on e(3,10,40).
    pub const MIN_EDGES_3_10_40: usize = 161;
    /// Lower bound on e(3,10,41).
    pub const MIN_EDGES_3_10_41: usize = 172;
    /// Upper bound on |E| of a (3,10,41) graph.
    pub const MAX_EDGES_3_10_41: usize = 184;

    pub fn ramsey(s: usize, t: usize) -> Option<usize> {
        match (s.min(t), s.max(t)) {
            (3, 3) => Some(Self::R_3_3),
            (3, 8) => Some(Self::R_3_8),
            (3, 9) => Some(Self::R_3_9),
            _ => None,
        }
    }

    /// Lower bound on e(k,l,n), when one is used.
    pub fn min_edges(k: usize, l: usize, n: usize) -> Option<usize> {
        match (k, l, n) {
            (3, 9, 34) => Some(Self::MIN_EDGES_3_9_34),
            (3, 10, 40) => Some(Self::MIN_EDGES_3_10_40),
            (3, 10, 41) => Some(Self::MIN_EDGES_3_10_41),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSummary {
    pub order: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub independence_number: usize,
    pub vertex_connectivity: usize,
    pub edge_connectivity: usize,
    pub edge_count: usize,
    pub diameter: Diameter,
    pub is_regular: bool,
}

impl InvariantSummary {
    /// Needs at least two vertices (connectivity is undefined below that).
    pub fn of(g: &Graph) -> Result<Self, GraphError> {
        Ok(Self {
            order: g.order(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            independence_number: independence_number(g),
            vertex_connectivity: vertex_connectivity(g)?,
            edge_connectivity: edge_connectivity(g)?,
            edge_count: g.edge_count(),
            diameter: g.diameter()?,
            is_regular: g.is_regular(),
        })
    }
}

/// Outcome of the (s,t) Ramsey-graph test. Both witnesses are searched for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyCheck {
    pub clique_bound: usize,
    pub independence_bound: usize,
    pub clique: Option<Vec<usize>>,
    pub independent_set: Option<Vec<usize>>,
}

impl RamseyCheck {
    pub fn is_ramsey(&self) -> bool {
        self.clique.is_none() && self.independent_set.is_none()
    }
}

/// Whether `g` has neither an `s`-clique nor an independent `t`-set.
pub fn is_ramsey_graph(g: &Graph, s: usize, t: usize) -> RamseyCheck {
    RamseyCheck {
        clique_bound: s,
        independence_bound: t,
        clique: has_clique(g, s),
        independent_set: has_independent_set(g, t),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct R39Verification {
    pub holds: bool,
    pub failures: Vec<String>,
}

/// Checks the defining properties of the (3,9,35) graph: 35 vertices,
/// 8-regular, triangle-free, independence number exactly 8.
pub fn verify_r39_critical(g: &Graph) -> R39Verification {
    let mut failures = Vec::new();
    if g.order() != 35 {
        failures.push(format!("order is {}, expected 35", g.order()));
    }
    if !(g.is_regular() && g.max_degree() == 8) {
        failures.push(format!(
            "degrees range over [{}, {}], expected 8-regular",
            g.min_degree(),
            g.max_degree()
        ));
    }
    if let Some(t) = find_triangle(g) {
        failures.push(format!("triangle {t:?}"));
    }
    if let Some(set) = has_independent_set(g, 9) {
        failures.push(format!("independent 9-set {set:?}"));
    } else if has_independent_set(g, 8).is_none() {
        failures.push("independence number below 8".to_string());
    }
    R39Verification {
        holds: failures.is_empty(),
        failures,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MantelCheck {
    pub holds: bool,
    pub triangle_free: bool,
    pub edge_count: usize,
    pub bound: usize,
    pub note: Option<String>,
}

/// A triangle-free graph on n vertices has at most floor(n^2/4) edges.
/// Graphs with a triangle pass vacuously.
pub fn mantel_check(g: &Graph) -> MantelCheck {
    let n = g.order();
    let bound = n * n / 4;
    let triangle_free = is_triangle_free(g);
    let edge_count = g.edge_count();
    let note = if !triangle_free {
        Some("graph has a triangle; bound not applicable".to_string())
    } else if edge_count == bound {
        Some("bound is tight".to_string())
    } else {
        None
    };
    MantelCheck {
        holds: !triangle_free || edge_count <= bound,
        triangle_free,
        edge_count,
        bound,
        note,
    }
}
