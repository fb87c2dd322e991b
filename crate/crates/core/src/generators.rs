//! Fixture graphs: circulants, cycles, the Petersen graph and a few small families.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

/// `i ~ j` iff `(i - j) mod n` or `(j - i) mod n` is one of `offsets`.
/// Offsets must lie in `[1, n/2]`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph, GraphError> {
    if offsets.is_empty() {
        return Err(GraphError::NoOffsets);
    }
    let max = n / 2;
    if let Some(&bad) = offsets.iter().find(|&&o| o == 0 || o > max) {
        return Err(GraphError::InvalidOffset { offset: bad, order: n, max });
    }
    let edges = (0..n).flat_map(|i| offsets.iter().map(move |&o| (i, (i + o) % n)));
    Graph::from_edges(n, edges)
}

/// Panics for `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    circulant(n, &[1]).expect("valid cycle offsets")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Graph::from_edges(n, edges).expect("valid complete graph")
}

/// Parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
    Graph::from_edges(a + b, edges).expect("valid bipartite graph")
}

/// Center 0 with `leaves` pendant vertices.
pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

/// Outer 5-cycle `0..5`, spokes `i - (i+5)`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid Petersen graph")
}

/// Visits all vertex pairs in random order and keeps each edge that closes no
/// triangle. The result is a maximal triangle-free graph.
pub fn random_triangle_free<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph, GraphError> {
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut rows = vec![VertexSet::new(n); n];
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if rows[u].is_disjoint(&rows[v]) {
            rows[u].insert(v);
            rows[v].insert(u);
        }
    }
    Ok(Graph::from_rows(rows))
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}
