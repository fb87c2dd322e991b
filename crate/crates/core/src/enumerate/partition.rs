use serde::{Deserialize, Serialize};

/// Sizes of the residual classes with 1, 2 and 3 common neighbors with a
/// degree-6 base vertex, plus the edges they send into `N(v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionTriple {
    pub h21: usize,
    pub h22: usize,
    pub h23: usize,
    pub boundary_edges: usize,
}

const RESIDUAL_ORDER: usize = 34;
const MAX_BOUNDARY_EDGES: usize = 48;

/// All triples with `h21` in 20..=24, summing to 34, and at most 48 boundary
/// edges. Since `h21 + 2 h22 + 3 h23 = 68 - h21 + h23`, the edge cap is
/// `h23 <= h21 - 20`. Ordered by `h21`, then `h23`.
pub fn partition_triples() -> Vec<PartitionTriple> {
    let mut rows = Vec::new();
    for h21 in 20..=24 {
        for h23 in 0..=h21 - 20 {
            let h22 = RESIDUAL_ORDER - h21 - h23;
            let boundary_edges = 2 * RESIDUAL_ORDER - h21 + h23;
            debug_assert_eq!(boundary_edges, h21 + 2 * h22 + 3 * h23);
            debug_assert!(boundary_edges <= MAX_BOUNDARY_EDGES);
            rows.push(PartitionTriple {
                h21,
                h22,
                h23,
                boundary_edges,
            });
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_rows() {
        let rows = partition_triples();
        assert_eq!(rows.len(), 15);
        assert_eq!(
            rows[0],
            PartitionTriple { h21: 20, h22: 14, h23: 0, boundary_edges: 48 }
        );
        assert_eq!(
            rows[14],
            PartitionTriple { h21: 24, h22: 6, h23: 4, boundary_edges: 48 }
        );
        assert!(rows.contains(&PartitionTriple { h21: 23, h22: 8, h23: 3, boundary_edges: 48 }));
        assert!(!rows.iter().any(|r| (r.h21, r.h22, r.h23) == (20, 13, 1)));
        let edges: Vec<_> = rows.iter().map(|r| r.boundary_edges).collect();
        assert_eq!(edges.iter().min(), Some(&44));
        assert_eq!(edges.iter().max(), Some(&48));
    }
}
