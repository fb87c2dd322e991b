//! Vertex and edge connectivity through unit-capacity max flow (Menger).

use std::collections::VecDeque;

use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        Self {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    /// Arc `from -> to` with capacity `forward`; its twin carries `backward`.
    fn add_arc(&mut self, from: usize, to: usize, forward: u32, backward: u32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(forward);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(backward);
    }

    /// Augments one unit at a time until `limit` or no path remains.
    fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let mut flow = 0;
        let mut parent_arc = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            parent_arc.fill(usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &arc in &self.adj[u] {
                    let w = self.head[arc];
                    if self.cap[arc] > 0 && w != source && parent_arc[w] == usize::MAX {
                        parent_arc[w] = arc;
                        if w == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut node = sink;
            while node != source {
                let arc = parent_arc[node];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                node = self.head[arc ^ 1];
            }
            flow += 1;
        }
        flow
    }

    fn reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for &arc in &self.adj[u] {
                let w = self.head[arc];
                if self.cap[arc] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}

/// Split network: `v_in = 2v`, `v_out = 2v + 1`, unit arc `v_in -> v_out` for
/// every vertex except the terminals.
fn split_network(g: &Graph, s: usize, t: usize) -> FlowNetwork {
    let n = g.order();
    let big = n as u32;
    let mut net = FlowNetwork::new(2 * n);
    for v in g.vertices() {
        let c = if v == s || v == t { big } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, c, 0);
    }
    for (u, w) in g.edges() {
        net.add_arc(2 * u + 1, 2 * w, big, 0);
        net.add_arc(2 * w + 1, 2 * u, big, 0);
    }
    net
}

/// Minimum number of vertices separating non-adjacent `s` and `t`.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize) -> u32 {
    split_network(g, s, t).max_flow(2 * s + 1, 2 * t, u32::MAX)
}

/// Pairs `(i, j)` with `i < j`, `i` among the first `bound + 1` vertices.
/// Some vertex of index at most kappa survives any minimum cut, and so does
/// every vertex of larger index on the far side, so these pairs suffice.
fn connectivity_search(g: &Graph) -> Option<(u32, usize, usize)> {
    let n = g.order();
    let mut best: Option<(u32, usize, usize)> = None;
    let mut i = 0;
    while i < n && best.is_none_or(|(k, _, _)| i as u32 <= k) {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let limit = best.map_or(u32::MAX, |(k, _, _)| k);
            let flow = split_network(g, i, j).max_flow(2 * i + 1, 2 * j, limit);
            if flow < limit {
                best = Some((flow, i, j));
            }
        }
        i += 1;
    }
    best
}

pub fn vertex_connectivity(g: &Graph) -> Result<usize, GraphError> {
    let n = g.order();
    if n < 2 {
        return Err(GraphError::TooFewVertices("vertex connectivity", 2));
    }
    Ok(match connectivity_search(g) {
        Some((k, _, _)) => k as usize,
        None => n - 1,
    })
}

/// A smallest separating vertex set, or `None` for complete graphs (and
/// graphs on fewer than two vertices), which have none.
pub fn minimum_vertex_cut(g: &Graph) -> Option<VertexSet> {
    let (_, s, t) = connectivity_search(g)?;
    let mut net = split_network(g, s, t);
    net.max_flow(2 * s + 1, 2 * t, u32::MAX);
    let seen = net.reachable(2 * s + 1);
    let mut cut = VertexSet::new(g.order());
    for v in g.vertices() {
        if seen[2 * v] && !seen[2 * v + 1] {
            cut.insert(v);
        }
    }
    Some(cut)
}

pub fn edge_connectivity(g: &Graph) -> Result<usize, GraphError> {
    let n = g.order();
    if n < 2 {
        return Err(GraphError::TooFewVertices("edge connectivity", 2));
    }
    let mut best = u32::MAX;
    for t in 1..n {
        let mut net = FlowNetwork::new(n);
        for (u, w) in g.edges() {
            net.add_arc(u, w, 1, 1);
        }
        best = best.min(net.max_flow(0, t, best));
        if best == 0 {
            break;
        }
    }
    Ok(best as usize)
}
