//! The bundled transcription of the printed degree-sequence tables and the
//! checksum audit run against it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::degseq::{weighted_sum, TableCells};
use super::DegreeSequenceClass;
use crate::error::EnumerateError;

const PRINTED_TABLES: &str = include_str!("../../data/printed_tables.txt");

/// Order of every graph the printed tables describe.
pub const TABLE_ORDER: usize = 41;

/// One row as printed. `table_id` k lists sequences with k - 1 vertices of
/// degree 6; the printed `d` may disagree with that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrintedRow {
    pub table_id: usize,
    pub edges: usize,
    pub counts: [usize; 4],
}

impl PrintedRow {
    /// The degree-6 count implied by the table the row appears in.
    pub fn table_degree6(&self) -> usize {
        self.table_id.saturating_sub(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowDiagnostic {
    pub table_id: usize,
    pub edges: usize,
    pub printed_row: [usize; 4],
    pub checksum_order: bool,
    pub checksum_edges: bool,
    pub suggested_correction: Option<[usize; 4]>,
}

impl TableRowDiagnostic {
    pub fn passes(&self) -> bool {
        self.checksum_order && self.checksum_edges
    }
}

/// Parses `table_id e a b c d` lines. Blank lines and `#` comments are skipped.
pub fn parse_printed_rows(text: &str) -> Result<Vec<PrintedRow>, EnumerateError> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        let fields = fields.map_err(|e| EnumerateError::Transcription {
            line: idx + 1,
            reason: e.to_string(),
        })?;
        let [table_id, edges, a, b, c, d] = fields[..] else {
            return Err(EnumerateError::Transcription {
                line: idx + 1,
                reason: format!("expected 6 fields, found {}", fields.len()),
            });
        };
        if !(1..=7).contains(&table_id) {
            return Err(EnumerateError::Transcription {
                line: idx + 1,
                reason: format!("table id {table_id} outside 1..=7"),
            });
        }
        rows.push(PrintedRow {
            table_id,
            edges,
            counts: [a, b, c, d],
        });
    }
    Ok(rows)
}

/// The bundled transcription.
pub fn printed_rows() -> Vec<PrintedRow> {
    parse_printed_rows(PRINTED_TABLES).expect("bundled transcription parses")
}

/// Checks each row against `a+b+c+d = 41` and `9a+8b+7c+6d = 2e`, returning
/// one diagnostic per failing row. The correction keeps the printed `a` and
/// the table's degree-6 count, which fixes `b` and `c`.
pub fn audit_printed_rows(rows: &[PrintedRow]) -> Vec<TableRowDiagnostic> {
    rows.iter()
        .map(diagnose)
        .filter(|d| !d.passes())
        .collect()
}

/// The diagnostic for a single row, passing or not.
pub fn diagnose(row: &PrintedRow) -> TableRowDiagnostic {
    let checksum_order = row.counts.iter().sum::<usize>() == TABLE_ORDER;
    let checksum_edges = weighted_sum(row.counts) == 2 * row.edges;
    let suggested_correction = if checksum_order && checksum_edges {
        None
    } else {
        correction(row)
    };
    TableRowDiagnostic {
        table_id: row.table_id,
        edges: row.edges,
        printed_row: row.counts,
        checksum_order,
        checksum_edges,
        suggested_correction,
    }
}

fn correction(row: &PrintedRow) -> Option<[usize; 4]> {
    let a = row.counts[0];
    let d = row.table_degree6();
    let rest = TABLE_ORDER.checked_sub(a + d)?;
    let b = (2 * row.edges)
        .checked_sub(6 * d + 7 * (TABLE_ORDER - d) + 2 * a)?;
    let c = rest.checked_sub(b)?;
    let fixed = [a, b, c, d];
    DegreeSequenceClass::new(fixed, TABLE_ORDER, row.edges).map(|_| fixed)
}

/// Printed rows grouped by `(e, d6)` where `d6` comes from the table id.
pub fn printed_cells(rows: &[PrintedRow]) -> BTreeMap<(usize, usize), Vec<[usize; 4]>> {
    let mut cells: BTreeMap<_, Vec<_>> = BTreeMap::new();
    for row in rows {
        cells
            .entry((row.edges, row.table_degree6()))
            .or_default()
            .push(row.counts);
    }
    cells
}

/// Cells whose printed rows differ as a set from the regenerated ones. Cells
/// absent from the transcription count as empty.
pub fn mismatched_cells(rows: &[PrintedRow], regenerated: &TableCells) -> Vec<(usize, usize)> {
    let printed = printed_cells(rows);
    let mut keys: Vec<_> = printed.keys().chain(regenerated.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .filter(|key| {
            let mut lhs = printed.get(key).cloned().unwrap_or_default();
            let mut rhs: Vec<_> = regenerated
                .get(key)
                .map(|v| v.iter().map(DegreeSequenceClass::counts).collect())
                .unwrap_or_default();
            lhs.sort_unstable();
            rhs.sort_unstable();
            lhs != rhs
        })
        .collect()
}
