use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

/// Counts of vertices of degree 9, 8, 7 and 6 in a graph of order `order`
/// with `edges` edges. Construction checks both counting identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeSequenceClass {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub order: usize,
    pub edges: usize,
}

impl DegreeSequenceClass {
    pub fn new(counts: [usize; 4], order: usize, edges: usize) -> Option<Self> {
        let [a, b, c, d] = counts;
        (a + b + c + d == order && weighted_sum(counts) == 2 * edges).then_some(Self {
            a,
            b,
            c,
            d,
            order,
            edges,
        })
    }

    /// The class with order and edge count implied by the counts. `None` when
    /// the degree sum is odd.
    pub fn from_counts(counts: [usize; 4]) -> Option<Self> {
        let sum = weighted_sum(counts);
        (sum % 2 == 0).then(|| Self::new(counts, counts.iter().sum(), sum / 2))?
    }

    pub fn counts(&self) -> [usize; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

impl fmt::Display for DegreeSequenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

pub(crate) fn weighted_sum([a, b, c, d]: [usize; 4]) -> usize {
    9 * a + 8 * b + 7 * c + 6 * d
}

/// All `(a, b, c)` with `a + b + c = total` and `9a + 8b + 7c = weight`,
/// by descending `a`.
///
/// Subtracting 7 times the first equation leaves `2a + b = weight - 7 total`,
/// so each `a` fixes `b` and then `c`.
pub(crate) fn solve_counts(total: usize, weight: usize) -> Vec<[usize; 3]> {
    let Some(excess) = weight.checked_sub(7 * total) else {
        return Vec::new();
    };
    let hi = total.min(excess / 2);
    let lo = excess.saturating_sub(total);
    if lo > hi {
        return Vec::new();
    }
    (lo..=hi)
        .rev()
        .map(|a| {
            let b = excess - 2 * a;
            [a, b, total - a - b]
        })
        .collect()
}

/// Every degree-sequence class on `n` vertices and `e` edges with degrees in
/// 6..=9 and exactly `d6` vertices of degree 6, by descending `a`.
pub fn degseq_solutions(n: usize, e: usize, d6: usize) -> Vec<DegreeSequenceClass> {
    let Some(rest) = n.checked_sub(d6) else {
        return Vec::new();
    };
    let Some(weight) = (2 * e).checked_sub(6 * d6) else {
        return Vec::new();
    };
    solve_counts(rest, weight)
        .into_iter()
        .map(|[a, b, c]| {
            DegreeSequenceClass::new([a, b, c, d6], n, e).expect("solution satisfies both identities")
        })
        .collect()
}

/// The (edge count, degree-6 count) grid a table regeneration covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableGrid {
    pub order: usize,
    pub edges: RangeInclusive<usize>,
    pub degree6: RangeInclusive<usize>,
}

impl TableGrid {
    /// Order 41, 172..=184 edges, at most six vertices of degree 6.
    pub fn gamma41() -> Self {
        Self {
            order: 41,
            edges: 172..=184,
            degree6: 0..=6,
        }
    }
}

pub type TableCells = BTreeMap<(usize, usize), Vec<DegreeSequenceClass>>;

/// Solutions for every `(e, d6)` cell of the grid, empty cells included.
pub fn regenerate_tables(grid: &TableGrid) -> TableCells {
    let mut cells = BTreeMap::new();
    for e in grid.edges.clone() {
        for d6 in grid.degree6.clone() {
            cells.insert((e, d6), degseq_solutions(grid.order, e, d6));
        }
    }
    cells
}
