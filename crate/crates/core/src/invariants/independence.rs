//! Exact independence number by branch and bound.
//!
//! Each node of the search holds a candidate set `P` of vertices that may still
//! join the current independent set. Isolated and pendant vertices of `G[P]`
//! are taken greedily (some maximum independent set always contains them).
//! Otherwise the search branches on a maximum-degree vertex of `G[P]`, lowest
//! index first: take it and drop its closed neighborhood, or drop it alone.
//! A greedy partition of `P` into cliques bounds what `P` can still add,
//! since an independent set meets each clique at most once.

use crate::graph::{Graph, VertexSet};

pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// A maximum independent set, sorted. Identical input gives an identical set.
pub fn maximum_independent_set(g: &Graph) -> Vec<usize> {
    let mut search = Search::new(g, 0, None);
    search.run();
    search.into_best()
}

/// An independent set of size `t`, stopping at the first one found.
pub fn has_independent_set(g: &Graph, t: usize) -> Option<Vec<usize>> {
    if t == 0 {
        return Some(Vec::new());
    }
    if t > g.order() {
        return None;
    }
    let mut search = Search::new(g, t - 1, Some(t));
    search.run();
    let found = search.into_best();
    (found.len() >= t).then(|| {
        let mut set = found;
        set.truncate(t);
        set
    })
}

struct Search<'g> {
    g: &'g Graph,
    /// Sizes at or below this are not worth exploring.
    floor: usize,
    best: Vec<usize>,
    target: Option<usize>,
    done: bool,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, floor: usize, target: Option<usize>) -> Self {
        Self {
            g,
            floor,
            best: Vec::new(),
            target,
            done: false,
        }
    }

    fn run(&mut self) {
        let mut current = Vec::new();
        self.expand(VertexSet::full(self.g.order()), &mut current);
    }

    fn into_best(self) -> Vec<usize> {
        let mut best = self.best;
        best.sort_unstable();
        best
    }

    fn record(&mut self, current: &[usize]) {
        if current.len() > self.floor {
            self.floor = current.len();
            self.best = current.to_vec();
            if self.target.is_some_and(|t| current.len() >= t) {
                self.done = true;
            }
        }
    }

    fn expand(&mut self, mut cand: VertexSet, current: &mut Vec<usize>) {
        if self.done {
            return;
        }
        let depth = current.len();

        // Forced moves: isolated and pendant vertices of G[cand].
        loop {
            let mut changed = false;
            let mut pick = None;
            for v in cand.iter() {
                match self.g.row(v).intersection_len(&cand) {
                    0 => {
                        pick = Some(v);
                        break;
                    }
                    1 if pick.is_none() => pick = Some(v),
                    _ => {}
                }
            }
            if let Some(v) = pick {
                current.push(v);
                cand = cand.difference(self.g.row(v));
                cand.remove(v);
                changed = true;
            }
            if !changed {
                break;
            }
        }

        if cand.is_empty() {
            self.record(current);
            current.truncate(depth);
            return;
        }
        if current.len() + clique_cover_bound(self.g, &cand) <= self.floor {
            current.truncate(depth);
            return;
        }

        let pivot = cand
            .iter()
            .map(|v| (self.g.row(v).intersection_len(&cand), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, v)| v)
            .expect("candidate set is non-empty");

        current.push(pivot);
        let mut taken = cand.difference(self.g.row(pivot));
        taken.remove(pivot);
        self.expand(taken, current);
        current.pop();

        cand.remove(pivot);
        self.expand(cand, current);
        current.truncate(depth);
    }
}

/// Number of cliques in a greedy clique partition of `cand`.
pub(crate) fn clique_cover_bound(g: &Graph, cand: &VertexSet) -> usize {
    let mut rest = cand.clone();
    let mut cliques = 0;
    while let Some(u) = rest.first() {
        rest.remove(u);
        let mut pool = rest.intersection(g.row(u));
        while let Some(w) = pool.first() {
            rest.remove(w);
            pool = pool.intersection(g.row(w));
        }
        cliques += 1;
    }
    cliques
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{circulant, complete, cycle, path, petersen, star};

    fn is_independent(g: &Graph, set: &[usize]) -> bool {
        set.iter().all(|&a| set.iter().all(|&b| a == b || !g.has_edge(a, b)))
    }

    #[test]
    fn fixture_values() {
        assert_eq!(independence_number(&cycle(5)), 2);
        assert_eq!(independence_number(&petersen()), 4);
        assert_eq!(independence_number(&Graph::empty(7).unwrap()), 7);
        assert_eq!(independence_number(&complete(6)), 1);
        assert_eq!(independence_number(&star(4)), 4);
        assert_eq!(independence_number(&path(7)), 4);
        assert_eq!(independence_number(&circulant(13, &[1, 5]).unwrap()), 4);
        assert_eq!(independence_number(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn witnesses_are_independent() {
        let g = petersen();
        let set = maximum_independent_set(&g);
        assert_eq!(set.len(), 4);
        assert!(is_independent(&g, &set));
        let w = has_independent_set(&g, 3).unwrap();
        assert_eq!(w.len(), 3);
        assert!(is_independent(&g, &w));
        assert_eq!(has_independent_set(&g, 5), None);
    }

    #[test]
    fn threshold_edges() {
        let g = cycle(5);
        assert_eq!(has_independent_set(&g, 0), Some(vec![]));
        assert_eq!(has_independent_set(&g, 6), None);
        assert!(has_independent_set(&g, 2).is_some());
    }

    #[test]
    fn deterministic_witness() {
        let g = circulant(17, &[1, 2, 4, 8]).unwrap();
        assert_eq!(maximum_independent_set(&g), maximum_independent_set(&g.clone()));
        assert_eq!(has_independent_set(&g, 3), has_independent_set(&g, 3));
    }

    #[test]
    fn clique_cover_bound_is_an_upper_bound() {
        let g = petersen();
        let all = VertexSet::full(10);
        assert!(clique_cover_bound(&g, &all) >= 4);
        assert_eq!(clique_cover_bound(&complete(5), &VertexSet::full(5)), 1);
    }
}
