use crate::graph::{Graph, VertexSet};

/// First clique of size `s` found in index order, or `None`.
///
/// Triangles go through a dedicated row-intersection scan; other sizes use a
/// forward-extension search over common-neighbor candidate sets.
pub fn has_clique(g: &Graph, s: usize) -> Option<Vec<usize>> {
    let n = g.order();
    match s {
        0 => Some(Vec::new()),
        1 => (n > 0).then(|| vec![0]),
        2 => g.edges().next().map(|(u, v)| vec![u, v]),
        3 => find_triangle(g).map(|[a, b, c]| vec![a, b, c]),
        _ => {
            let mut clique = Vec::with_capacity(s);
            extend(g, &VertexSet::full(n), &mut clique, s).then_some(clique)
        }
    }
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

/// Lexicographically first triangle `a < b < c`.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for a in g.vertices() {
        for b in g.row(a).iter().filter(|&b| b > a) {
            let common = g.row(a).intersection(g.row(b));
            if let Some(c) = common.iter().find(|&c| c > b) {
                return Some([a, b, c]);
            }
        }
    }
    None
}

fn extend(g: &Graph, cand: &VertexSet, clique: &mut Vec<usize>, s: usize) -> bool {
    if clique.len() == s {
        return true;
    }
    if clique.len() + cand.len() < s {
        return false;
    }
    let mut rest = cand.clone();
    for v in cand.iter() {
        rest.remove(v);
        if clique.len() + 1 + rest.len() < s {
            break;
        }
        clique.push(v);
        if extend(g, &rest.intersection(g.row(v)), clique, s) {
            return true;
        }
        clique.pop();
    }
    false
}

/// Size of a largest clique, by exhaustive forward search with size pruning.
pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        let mut rest = cand;
        while let Some(v) = rest.first() {
            if size + rest.len() <= *best {
                return;
            }
            rest.remove(v);
            grow(g, rest.intersection(g.row(v)), size + 1, best);
        }
    }
    let mut best = 0;
    grow(g, VertexSet::full(g.order()), 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{circulant, complete, cycle, petersen};

    #[test]
    fn triangle_cases() {
        assert_eq!(has_clique(&complete(3), 3), Some(vec![0, 1, 2]));
        assert_eq!(has_clique(&cycle(5), 3), None);
        assert_eq!(has_clique(&circulant(13, &[1, 5]).unwrap(), 3), None);
        assert!(is_triangle_free(&petersen()));
    }

    #[test]
    fn small_sizes() {
        let e = Graph::empty(3).unwrap();
        assert_eq!(has_clique(&e, 1), Some(vec![0]));
        assert_eq!(has_clique(&e, 2), None);
        assert_eq!(has_clique(&Graph::empty(0).unwrap(), 1), None);
        assert_eq!(has_clique(&cycle(5), 2), Some(vec![0, 1]));
    }

    #[test]
    fn larger_cliques() {
        let k5 = complete(5);
        assert_eq!(has_clique(&k5, 5), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(has_clique(&k5, 6), None);
        assert_eq!(clique_number(&k5), 5);
        assert_eq!(clique_number(&petersen()), 2);
        // C_9(1,2,3) contains K4 on any 4 consecutive vertices.
        let g = circulant(9, &[1, 2, 3]).unwrap();
        assert_eq!(has_clique(&g, 4), Some(vec![0, 1, 2, 3]));
        assert_eq!(clique_number(&g), 4);
    }
}
