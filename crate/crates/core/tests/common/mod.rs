//! Brute-force reference computations shared by the integration tests. They
//! work on adjacency bitmasks and avoid the library's algorithms entirely.

#![allow(dead_code)]

use critgraph::Graph;
use rand::Rng;

pub fn masks(g: &Graph) -> Vec<u64> {
    assert!(g.order() <= 64);
    g.vertices()
        .map(|v| g.row(v).iter().fold(0u64, |m, u| m | 1 << u))
        .collect()
}

fn independent(adj: &[u64], set: u64) -> bool {
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & set != 0 {
            return false;
        }
    }
    true
}

/// Largest independent set by scanning all subsets. `n <= 24`.
pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 24);
    let adj = masks(g);
    (0u64..1 << n)
        .filter(|&s| independent(&adj, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_clique_number(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 24);
    let adj = masks(g);
    (0u64..1 << n)
        .filter(|&s| {
            (0..n)
                .filter(|v| s >> v & 1 == 1)
                .all(|v| (s & !(1 << v)) & !adj[v] == 0)
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Whether the vertices outside `removed` induce a connected graph (zero or
/// one remaining vertex counts as connected).
pub fn connected_without(adj: &[u64], n: usize, removed: u64) -> bool {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let alive = full & !removed;
    if alive.count_ones() <= 1 {
        return true;
    }
    let mut seen = 1u64 << alive.trailing_zeros();
    loop {
        let mut next = seen;
        let mut rest = seen;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= adj[v] & alive;
        }
        if next == seen {
            return seen == alive;
        }
        seen = next;
    }
}

/// Smallest vertex set whose removal disconnects the graph or leaves at most
/// one vertex. `n <= 20`.
pub fn brute_kappa(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20);
    let adj = masks(g);
    (0u64..1 << n)
        .filter(|&s| {
            n - s.count_ones() as usize <= 1 || !connected_without(&adj, n, s)
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .expect("removing all vertices qualifies")
}

/// Fewest edges crossing a non-trivial bipartition. `n <= 20`.
pub fn brute_edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    assert!((2..=20).contains(&n));
    let adj = masks(g);
    let full = (1u64 << n) - 1;
    (1u64..1 << (n - 1))
        .map(|side| {
            let side = side << 1;
            let other = full & !side;
            (0..n)
                .filter(|v| side >> v & 1 == 1)
                .map(|v| (adj[v] & other).count_ones() as usize)
                .sum::<usize>()
        })
        .chain(std::iter::once(
            (0..n).map(|v| adj[v].count_ones() as usize).min().unwrap(),
        ))
        .min()
        .unwrap()
}

/// All-pairs distances by Floyd-Warshall.
pub fn floyd(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for v in 0..n {
        d[v][v] = Some(0);
        for u in g.row(v).iter() {
            d[v][u] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|x| a + b < x) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// `None` when disconnected.
pub fn brute_diameter(g: &Graph) -> Option<usize> {
    let d = floyd(g);
    let mut best = 0;
    for row in &d {
        for x in row {
            best = best.max((*x)?);
        }
    }
    Some(best)
}

pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Pair index of `(u, v)`, `u < v`, in the upper triangle of an `n`-vertex graph.
fn pair_bit(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if code >> pair_bit(n, u, v) & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn code_of(n: usize, adj: &[u64], perm: &[usize]) -> u64 {
    let mut code = 0;
    for u in 0..n {
        for v in u + 1..n {
            if adj[perm[u]] >> perm[v] & 1 == 1 {
                code |= 1 << pair_bit(n, u, v);
            }
        }
    }
    code
}

fn adjacency(n: usize, code: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            if code >> pair_bit(n, u, v) & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    adj
}

/// Smallest code over labelings that list vertices by non-decreasing degree.
/// Isomorphic graphs have the same set of such labelings up to relabeling, so
/// the minimum is an isomorphism invariant that separates classes.
fn canonical(n: usize, code: u64) -> u64 {
    let adj = adjacency(n, code);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| adj[v].count_ones());
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match blocks.last_mut() {
            Some(b) if adj[b[0]].count_ones() == adj[v].count_ones() => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    search(&adj, n, &blocks, 0, &mut vec![false; n], &mut perm, &mut best);
    best
}

fn search(
    adj: &[u64],
    n: usize,
    blocks: &[Vec<usize>],
    block: usize,
    used: &mut Vec<bool>,
    perm: &mut Vec<usize>,
    best: &mut u64,
) {
    if perm.len() == n {
        *best = (*best).min(code_of(n, adj, perm));
        return;
    }
    let members = &blocks[block];
    let placed = members.iter().filter(|&&v| used[v]).count();
    let next = if placed + 1 == members.len() { block + 1 } else { block };
    for &v in members {
        if used[v] {
            continue;
        }
        used[v] = true;
        perm.push(v);
        search(adj, n, blocks, next, used, perm, best);
        perm.pop();
        used[v] = false;
    }
}

/// Isomorphism class representatives for 0..=7 vertices: all labeled graphs up
/// to 6 vertices, then one-vertex extensions of the 6-vertex classes.
pub fn class_levels() -> Vec<Vec<u64>> {
    let mut levels: Vec<Vec<u64>> = Vec::new();
    for n in 0..=7usize {
        let candidates: Vec<u64> = if n <= 6 {
            (0u64..1 << (n * n.saturating_sub(1) / 2)).collect()
        } else {
            levels[n - 1].iter().flat_map(|&code| extend(n - 1, code)).collect()
        };
        let mut reps: Vec<u64> = candidates.into_iter().map(|c| canonical(n, c)).collect();
        reps.sort_unstable();
        reps.dedup();
        levels.push(reps);
    }
    levels
}

/// Every graph on `n + 1` vertices obtained by joining a new last vertex to
/// some subset of the `n`-vertex graph `code`.
pub fn extend(n: usize, code: u64) -> impl Iterator<Item = u64> {
    let m = n + 1;
    let mut base = 0u64;
    for u in 0..n {
        for v in u + 1..n {
            if code >> pair_bit(n, u, v) & 1 == 1 {
                base |= 1 << pair_bit(m, u, v);
            }
        }
    }
    (0u64..1 << n).map(move |nbrs| {
        let mut c = base;
        for u in 0..n {
            if nbrs >> u & 1 == 1 {
                c |= 1 << pair_bit(m, u, n);
            }
        }
        c
    })
}

/// Graphs covering every isomorphism class on at most 8 vertices: the class
/// representatives up to 7 vertices plus all extensions of the 7-vertex
/// classes, which are not deduplicated.
pub fn exhaustive_corpus(levels: &[Vec<u64>]) -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    for (n, reps) in levels.iter().enumerate() {
        out.extend(reps.iter().map(|&c| graph_from_code(n, c)));
    }
    out.extend(
        levels[7]
            .iter()
            .flat_map(|&c| extend(7, c))
            .map(|c| graph_from_code(8, c)),
    );
    out
}
