//! Plain-text renderings laid out like the printed tables: edge count first,
//! then the sequences of that row by ascending `a`.

use std::fmt::Write;

use super::degseq::TableCells;
use super::{DegreeSequenceClass, PartitionTriple, TableRowDiagnostic};

const PER_LINE: usize = 6;

fn tuple(c: [usize; 4]) -> String {
    format!("({}, {}, {}, {})", c[0], c[1], c[2], c[3])
}

/// One block per degree-6 count present in `cells`, one row per edge count.
/// Empty rows are printed with a dash.
pub fn render_degree_tables(cells: &TableCells) -> String {
    let mut out = String::new();
    let mut d6s: Vec<usize> = cells.keys().map(|&(_, d)| d).collect();
    d6s.sort_unstable();
    d6s.dedup();
    for (i, d6) in d6s.into_iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "degree-6 vertices: {d6}");
        let _ = writeln!(out, "{:>4} | degree sequences (a, b, c, d)", "e");
        for (&(e, _), classes) in cells.range((0, d6)..).filter(|((_, d), _)| *d == d6) {
            render_row(&mut out, e, classes);
        }
    }
    out
}

fn render_row(out: &mut String, e: usize, classes: &[DegreeSequenceClass]) {
    let mut sorted: Vec<[usize; 4]> = classes.iter().map(DegreeSequenceClass::counts).collect();
    sorted.sort_unstable();
    if sorted.is_empty() {
        let _ = writeln!(out, "{e:>4} | -");
        return;
    }
    for (i, chunk) in sorted.chunks(PER_LINE).enumerate() {
        let label = if i == 0 { e.to_string() } else { String::new() };
        let body: Vec<String> = chunk.iter().copied().map(tuple).collect();
        let _ = writeln!(out, "{label:>4} | {}", body.join(", "));
    }
}

pub fn render_partition_triples(rows: &[PartitionTriple]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>4} {:>4} {:>4} {:>6}", "h21", "h22", "h23", "edges");
    for r in rows {
        let _ = writeln!(
            out,
            "{:>4} {:>4} {:>4} {:>6}",
            r.h21, r.h22, r.h23, r.boundary_edges
        );
    }
    out
}

pub fn render_sequences(classes: &[DegreeSequenceClass]) -> String {
    let mut out = String::new();
    for c in classes {
        let _ = writeln!(out, "{:>4} | {}", c.edges, tuple(c.counts()));
    }
    out
}

pub fn render_audit(diagnostics: &[TableRowDiagnostic]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>5} {:>4}  {:<16} {:<6} {:<6} correction",
        "table", "e", "printed", "order", "edges"
    );
    for d in diagnostics {
        let ok = |b: bool| if b { "ok" } else { "FAIL" };
        let fix = d
            .suggested_correction
            .map(tuple)
            .unwrap_or_else(|| "-".to_string());
        let _ = writeln!(
            out,
            "{:>5} {:>4}  {:<16} {:<6} {:<6} {}",
            d.table_id,
            d.edges,
            tuple(d.printed_row),
            ok(d.checksum_order),
            ok(d.checksum_edges),
            fix
        );
    }
    out
}
