//! Immutable simple undirected graphs over dense bit rows.
//!
//! Vertices are `0..order()`. Every derived graph (induced subgraph, residual)
//! is a fresh value that carries the map back to the parent's vertex names.

mod vertex_set;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GraphError;

pub use vertex_set::{Iter as VertexIter, VertexSet};

pub const MAX_VERTICES: usize = 1024;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    rows: Vec<VertexSet>,
    edge_count: usize,
}

/// An induced subgraph together with the original name of each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `original[i]` is the parent-graph vertex that became vertex `i`.
    pub original: Vec<usize>,
}

/// Eccentricity-based diameter; disconnected graphs report `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }

    pub fn is(self, d: usize) -> bool {
        self == Diameter::Finite(d)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => serializer.serialize_u64(*d as u64),
            Diameter::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for Diameter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Finite(usize),
            Marker(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Finite(d) => Ok(Diameter::Finite(d)),
            Raw::Marker(s) if s == "infinite" => Ok(Diameter::Infinite),
            Raw::Marker(s) => Err(serde::de::Error::custom(format!("bad diameter {s:?}"))),
        }
    }
}

/// BFS layer sizes around a source vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerProfile {
    pub source: usize,
    /// `layer_sizes[i]` counts vertices at distance exactly `i`.
    pub layer_sizes: Vec<usize>,
    pub unreachable_count: usize,
}

impl LayerProfile {
    pub fn layer(&self, i: usize) -> usize {
        self.layer_sizes.get(i).copied().unwrap_or(0)
    }

    pub fn eccentricity(&self) -> Diameter {
        if self.unreachable_count > 0 {
            Diameter::Infinite
        } else {
            Diameter::Finite(self.layer_sizes.len() - 1)
        }
    }
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(order));
        }
        Ok(Self {
            order,
            rows: vec![VertexSet::new(order); order],
            edge_count: 0,
        })
    }

    /// Builds a graph from an edge list; duplicate and reversed pairs collapse.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(order)?;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: x, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        g.edge_count = g.rows.iter().map(VertexSet::len).sum::<usize>() / 2;
        Ok(g)
    }

    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Self {
        let edge_count = rows.iter().map(VertexSet::len).sum::<usize>() / 2;
        Self {
            order: rows.len(),
            rows,
            edge_count,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.order })
        }
    }

    /// Panics on an invalid index; use [`Graph::neighborhood`] for checked access.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(VertexSet::len).collect()
    }

    /// 0 for the graph on no vertices.
    pub fn min_degree(&self) -> usize {
        self.rows.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// Neighbor row of `v` without copying. Panics on an invalid index.
    #[inline]
    pub fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.rows[v].clone())
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        let mut set = self.neighborhood(v)?;
        set.insert(v);
        Ok(set)
    }

    pub fn induced(&self, keep: &VertexSet) -> Induced {
        let original = keep.to_vec();
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in original.iter().enumerate() {
            index[v] = i;
        }
        let rows = original
            .iter()
            .map(|&v| {
                let mut row = VertexSet::new(original.len());
                for w in self.rows[v].intersection(keep).iter() {
                    row.insert(index[w]);
                }
                row
            })
            .collect();
        Induced {
            graph: Self::from_rows(rows),
            original,
        }
    }

    /// The subgraph induced on the vertices outside the closed neighborhood of `v`.
    pub fn residual(&self, v: usize) -> Result<Induced, GraphError> {
        let closed = self.closed_neighborhood(v)?;
        Ok(self.induced(&VertexSet::full(self.order).difference(&closed)))
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.order);
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut r = full.difference(row);
                r.remove(v);
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Distances from `source`; `None` marks unreachable vertices.
    pub fn distances(&self, source: usize) -> Result<Vec<Option<usize>>, GraphError> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.order];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.rows[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn distance_layers(&self, source: usize) -> Result<LayerProfile, GraphError> {
        let dist = self.distances(source)?;
        let mut layer_sizes = Vec::new();
        let mut unreachable_count = 0;
        for d in dist {
            match d {
                Some(d) => {
                    if layer_sizes.len() <= d {
                        layer_sizes.resize(d + 1, 0);
                    }
                    layer_sizes[d] += 1;
                }
                None => unreachable_count += 1,
            }
        }
        Ok(LayerProfile {
            source,
            layer_sizes,
            unreachable_count,
        })
    }

    pub fn diameter(&self) -> Result<Diameter, GraphError> {
        if self.order == 0 {
            return Err(GraphError::TooFewVertices("diameter", 1));
        }
        let mut best = 0;
        for v in self.vertices() {
            match self.distance_layers(v)?.eccentricity() {
                Diameter::Infinite => return Ok(Diameter::Infinite),
                Diameter::Finite(e) => best = best.max(e),
            }
        }
        Ok(Diameter::Finite(best))
    }

    /// Whether the vertices outside `removed` induce a connected graph.
    /// Zero or one remaining vertex counts as connected.
    pub fn is_connected_without(&self, removed: &VertexSet) -> bool {
        let alive = VertexSet::full(self.order).difference(removed);
        let Some(start) = alive.first() else {
            return true;
        };
        let mut seen = VertexSet::new(self.order);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for w in self.rows[u].intersection(&alive).difference(&seen).iter() {
                seen.insert(w);
                stack.push(w);
            }
        }
        seen.len() == alive.len()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&VertexSet::new(self.order))
    }

    /// Number of edges with one end in `a` and the other in `b`.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> Result<usize, GraphError> {
        for set in [a, b] {
            if set.universe() != self.order {
                if let Some(bad) = set.iter().find(|&v| v >= self.order) {
                    return Err(GraphError::VertexOutOfRange { vertex: bad, order: self.order });
                }
            }
        }
        let a = self.rebase(a);
        let b = self.rebase(b);
        if let Some(shared) = a.intersection(&b).first() {
            return Err(GraphError::OverlappingSets(shared));
        }
        Ok(a.iter().map(|u| self.rows[u].intersection_len(&b)).sum())
    }

    fn rebase(&self, set: &VertexSet) -> VertexSet {
        if set.universe() == self.order {
            set.clone()
        } else {
            let mut out = VertexSet::new(self.order);
            for v in set.iter() {
                out.insert(v);
            }
            out
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
