//! Brute-force reference enumeration, kept separate from the linear solve in
//! [`super::degseq_solutions`] so each can check the other.

use super::DegreeSequenceClass;

/// Scans every `(a, b, c)` in `[0, n]^3` against both counting identities.
/// Intended for tests; `n` should stay small (at most 64).
pub fn degseq_oracle(n: usize, e: usize, d6: usize) -> Vec<DegreeSequenceClass> {
    let mut found = Vec::new();
    for a in 0..=n {
        for b in 0..=n {
            for c in 0..=n {
                if a + b + c + d6 == n && 9 * a + 8 * b + 7 * c + 6 * d6 == 2 * e {
                    found.push(DegreeSequenceClass {
                        a,
                        b,
                        c,
                        d: d6,
                        order: n,
                        edges: e,
                    });
                }
            }
        }
    }
    found.sort_by(|x, y| y.a.cmp(&x.a).then(y.b.cmp(&x.b)));
    found
}
