use std::collections::BTreeSet;

use critgraph::enumerate::{
    audit_printed_rows, degseq_oracle, degseq_solutions, diam2_deg6_sequences, gammav_contributions,
    nv_contributions, partition_triples, printed_rows, regenerate_tables, ContributionTuple,
    TableGrid,
};
use proptest::prelude::*;

fn brute_tuples(size: usize, weight: usize, d_range: std::ops::RangeInclusive<usize>) -> BTreeSet<[usize; 4]> {
    let mut out = BTreeSet::new();
    for a in 0..=size {
        for b in 0..=size - a {
            for c in 0..=size - a - b {
                let d = size - a - b - c;
                if d_range.contains(&d) && 9 * a + 8 * b + 7 * c + 6 * d == weight {
                    out.insert([a, b, c, d]);
                }
            }
        }
    }
    out
}

fn as_set(v: &[ContributionTuple]) -> BTreeSet<[usize; 4]> {
    v.iter().map(ContributionTuple::counts).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn solver_matches_oracle(n in 0usize..=48, e in 0usize..=220, d6 in 0usize..=8) {
        prop_assert_eq!(degseq_solutions(n, e, d6), degseq_oracle(n, e, d6));
    }
}

#[test]
fn solver_matches_oracle_on_table_grid() {
    for e in 150..=200 {
        for d6 in 0..=8 {
            assert_eq!(degseq_solutions(41, e, d6), degseq_oracle(41, e, d6), "e={e} d6={d6}");
        }
    }
}

#[test]
fn solutions_satisfy_both_identities() {
    for cell in regenerate_tables(&TableGrid::gamma41()).values() {
        for c in cell {
            assert_eq!(c.a + c.b + c.c + c.d, 41);
            assert_eq!(9 * c.a + 8 * c.b + 7 * c.c + 6 * c.d, 2 * c.edges);
        }
        assert!(cell.windows(2).all(|w| w[0].a > w[1].a));
    }
}

#[test]
fn degree9_lower_bound_is_non_negativity() {
    let sols = degseq_solutions(41, 172, 0);
    assert_eq!(sols.iter().map(|s| s.a).min(), Some(16));
    assert_eq!(sols.iter().map(|s| s.a).max(), Some(28));
}

#[test]
fn contributions_match_brute_force() {
    for e in 44..=48 {
        assert_eq!(as_set(&nv_contributions(e).unwrap()), brute_tuples(7, e + 12, 1..=2));
    }
    for s in 302..=306 {
        assert_eq!(as_set(&gammav_contributions(s).unwrap()), brute_tuples(34, s, 0..=1));
    }
}

#[test]
fn partition_triples_match_brute_force() {
    let mut expected = Vec::new();
    for h21 in 0..=34usize {
        for h22 in 0..=34 - h21 {
            let h23 = 34 - h21 - h22;
            let edges = h21 + 2 * h22 + 3 * h23;
            if (20..=24).contains(&h21) && edges <= 48 {
                expected.push((h21, h22, h23, edges));
            }
        }
    }
    expected.sort_by_key(|&(h21, _, h23, _)| (h21, h23));
    let got: Vec<_> = partition_triples()
        .iter()
        .map(|t| (t.h21, t.h22, t.h23, t.boundary_edges))
        .collect();
    assert_eq!(got, expected);
}

#[test]
fn combined_sequences_are_feasible_table_rows() {
    let cells = regenerate_tables(&TableGrid::gamma41());
    let rows: BTreeSet<[usize; 4]> = cells
        .iter()
        .filter(|((_, d6), _)| (1..=2).contains(d6))
        .flat_map(|(_, v)| v.iter().map(|c| c.counts()))
        .collect();
    for strict in [false, true] {
        for seq in diam2_deg6_sequences(strict) {
            assert!(rows.contains(&seq.counts()), "{seq}");
        }
    }
}

#[test]
fn strict_variant_gives_the_same_sequences() {
    assert_eq!(diam2_deg6_sequences(true), diam2_deg6_sequences(false));
}

#[test]
fn audit_corrections_pass_checksums() {
    let flagged = audit_printed_rows(&printed_rows());
    assert_eq!(flagged.len(), 5);
    for d in &flagged {
        let fix = d.suggested_correction.expect("every flagged row has a correction");
        assert_eq!(fix.iter().sum::<usize>(), 41);
        assert_eq!(9 * fix[0] + 8 * fix[1] + 7 * fix[2] + 6 * fix[3], 2 * d.edges);
        assert_eq!(fix[3], d.table_id - 1);
    }
}
