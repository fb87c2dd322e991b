//! Degree-count contributions of the closed neighborhood `N[v]` and of the
//! residual graph around a degree-6 vertex `v` in a diameter-2 (3,10,41) graph.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::degseq::solve_counts;
use super::DegreeSequenceClass;
use crate::error::EnumerateError;

pub const BOUNDARY_EDGES: RangeInclusive<usize> = 44..=48;
pub const RESIDUAL_DEGREE_SUMS: RangeInclusive<usize> = 302..=306;
/// Possible edge counts of the residual (3,9,34) graph.
pub const RESIDUAL_EDGES: RangeInclusive<usize> = 129..=131;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    ClosedNeighborhood,
    Residual,
}

/// Counts of degree 9, 8, 7, 6 vertices (degrees in the whole graph) inside one
/// part of the vertex partition `N[v]` / residual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContributionTuple {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub scope: Scope,
    /// Boundary edge count for `N[v]`, degree sum for the residual.
    pub driver: usize,
}

impl ContributionTuple {
    pub fn counts(&self) -> [usize; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

fn check(what: &'static str, value: usize, range: &RangeInclusive<usize>) -> Result<(), EnumerateError> {
    if range.contains(&value) {
        Ok(())
    } else {
        Err(EnumerateError::DriverOutOfRange {
            what,
            value: value as u32,
            lo: *range.start() as u32,
            hi: *range.end() as u32,
        })
    }
}

fn tuples(
    scope: Scope,
    driver: usize,
    size: usize,
    weight: usize,
    degree6: RangeInclusive<usize>,
) -> Vec<ContributionTuple> {
    let mut out: Vec<ContributionTuple> = degree6
        .flat_map(|d| {
            solve_counts(size - d, weight - 6 * d)
                .into_iter()
                .map(move |[a, b, c]| ContributionTuple { a, b, c, d, scope, driver })
        })
        .collect();
    out.sort_by(|x, y| y.a.cmp(&x.a).then(y.b.cmp(&x.b)));
    out
}

/// Contributions of the 7 vertices of `N[v]` when `boundary_edges` edges join
/// `N(v)` to the residual. Their degrees sum to `boundary_edges + 12`: `v`
/// itself contributes 6 and each neighbor's edge to `v` another 6. `v` is one
/// degree-6 vertex and at most one more may sit in `N(v)`.
pub fn nv_contributions(boundary_edges: usize) -> Result<Vec<ContributionTuple>, EnumerateError> {
    check("boundary edge count", boundary_edges, &BOUNDARY_EDGES)?;
    Ok(tuples(
        Scope::ClosedNeighborhood,
        boundary_edges,
        7,
        boundary_edges + 12,
        1..=2,
    ))
}

/// Contributions of the 34 residual vertices whose degrees sum to `degree_sum`,
/// allowing at most one degree-6 vertex among them.
pub fn gammav_contributions(degree_sum: usize) -> Result<Vec<ContributionTuple>, EnumerateError> {
    check("residual degree sum", degree_sum, &RESIDUAL_DEGREE_SUMS)?;
    Ok(tuples(Scope::Residual, degree_sum, 34, degree_sum, 0..=1))
}

/// Residual degree sums compatible with a boundary edge count: twice the
/// residual edge count plus the boundary edges, within the admissible window.
pub fn residual_degree_sums(boundary_edges: usize) -> Vec<usize> {
    RESIDUAL_EDGES
        .map(|r| 2 * r + boundary_edges)
        .filter(|s| RESIDUAL_DEGREE_SUMS.contains(s))
        .collect()
}

/// Combined sequences for one boundary edge count.
pub fn diam2_deg6_sequences_for(boundary_edges: usize, strict: bool) -> Result<Vec<DegreeSequenceClass>, EnumerateError> {
    let inner = nv_contributions(boundary_edges)?;
    let mut seen = BTreeSet::new();
    for sum in residual_degree_sums(boundary_edges) {
        for outer in gammav_contributions(sum)? {
            if strict && outer.d > 0 {
                continue;
            }
            for part in &inner {
                if part.d + outer.d > 2 {
                    continue;
                }
                let counts = [
                    part.a + outer.a,
                    part.b + outer.b,
                    part.c + outer.c,
                    part.d + outer.d,
                ];
                seen.insert(counts);
            }
        }
    }
    Ok(sorted_classes(seen))
}

/// Every degree sequence a diameter-2 (3,10,41) graph with a degree-6 vertex
/// can have. `strict` additionally forbids degree-6 vertices in the residual.
pub fn diam2_deg6_sequences(strict: bool) -> Vec<DegreeSequenceClass> {
    let mut seen = BTreeSet::new();
    for e in BOUNDARY_EDGES {
        for class in diam2_deg6_sequences_for(e, strict).expect("boundary count in range") {
            seen.insert(class.counts());
        }
    }
    sorted_classes(seen)
}

fn sorted_classes(set: BTreeSet<[usize; 4]>) -> Vec<DegreeSequenceClass> {
    let mut out: Vec<_> = set
        .into_iter()
        .map(|c| DegreeSequenceClass::from_counts(c).expect("degree sum is even"))
        .collect();
    out.sort_by(|x, y| y.a.cmp(&x.a).then(y.b.cmp(&x.b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(v: &[ContributionTuple]) -> Vec<[usize; 4]> {
        v.iter().map(ContributionTuple::counts).collect()
    }

    #[test]
    fn closed_neighborhood_cases() {
        assert_eq!(
            counts(&nv_contributions(44).unwrap()),
            vec![[4, 1, 0, 2], [4, 0, 2, 1], [3, 2, 1, 1], [2, 4, 0, 1]]
        );
        assert_eq!(counts(&nv_contributions(47).unwrap()), vec![[5, 1, 0, 1]]);
        assert_eq!(counts(&nv_contributions(48).unwrap()), vec![[6, 0, 0, 1]]);
        assert!(nv_contributions(43).is_err());
        assert!(nv_contributions(49).is_err());
    }

    #[test]
    fn residual_cases() {
        assert_eq!(
            counts(&gammav_contributions(302).unwrap()),
            vec![[32, 1, 0, 1], [32, 0, 2, 0], [31, 2, 1, 0], [30, 4, 0, 0]]
        );
        assert_eq!(counts(&gammav_contributions(305).unwrap()), vec![[33, 1, 0, 0]]);
        assert_eq!(counts(&gammav_contributions(306).unwrap()), vec![[34, 0, 0, 0]]);
        assert!(gammav_contributions(301).is_err());
    }

    #[test]
    fn degree_sum_windows() {
        assert_eq!(residual_degree_sums(44), vec![302, 304, 306]);
        assert_eq!(residual_degree_sums(45), vec![303, 305]);
        assert_eq!(residual_degree_sums(48), vec![306]);
    }

    #[test]
    fn twenty_one_sequences() {
        let all = diam2_deg6_sequences(false);
        assert_eq!(all.len(), 21);
        assert_eq!(all[0].counts(), [40, 0, 0, 1]);
        assert_eq!(all[20].counts(), [32, 8, 0, 1]);
        assert!(all.iter().all(|c| c.order == 41));
    }

    #[test]
    fn per_boundary_sets() {
        let at = |e| {
            diam2_deg6_sequences_for(e, false)
                .unwrap()
                .iter()
                .map(DegreeSequenceClass::counts)
                .collect::<Vec<_>>()
        };
        assert_eq!(at(44).len(), 18);
        assert_eq!(at(45).len(), 8);
        assert_eq!(at(46), vec![[39, 0, 1, 1], [38, 2, 0, 1], [38, 0, 2, 1], [37, 2, 1, 1], [36, 4, 0, 1]]);
        assert_eq!(at(47), vec![[38, 2, 0, 1]]);
        assert_eq!(at(48), vec![[40, 0, 0, 1]]);
    }
}
