//! Regeneration of degree-sequence tables, partition triples and
//! contribution tuples from their counting identities.

mod contributions;
mod degseq;
mod oracle;
mod partition;
pub mod render;
mod transcription;

pub use contributions::{
    diam2_deg6_sequences, diam2_deg6_sequences_for, gammav_contributions, nv_contributions,
    residual_degree_sums, ContributionTuple, Scope, BOUNDARY_EDGES, RESIDUAL_DEGREE_SUMS,
    RESIDUAL_EDGES,
};
pub use degseq::{degseq_solutions, regenerate_tables, DegreeSequenceClass, TableCells, TableGrid};
pub use oracle::degseq_oracle;
pub use partition::{partition_triples, PartitionTriple};
pub use transcription::{
    audit_printed_rows, diagnose, mismatched_cells, parse_printed_rows, printed_cells,
    printed_rows, PrintedRow, TableRowDiagnostic, TABLE_ORDER,
};
