use std::fmt::Write as _;
use std::io::{self, BufRead, BufReader, Read};
use std::path::Path;

use anyhow::{bail, ensure, Context};
use critgraph::constraints::{
    full_report_with, neighborhood_partition, ClauseId, CriticalityReport, PartitionProfile,
    ReportOptions, Verdict, MAX_CUT_BUDGET,
};
use critgraph::enumerate::render::{
    render_audit, render_degree_tables, render_partition_triples, render_sequences,
};
use critgraph::enumerate::{
    audit_printed_rows, degseq_solutions, diam2_deg6_sequences, gammav_contributions,
    nv_contributions, partition_triples, printed_rows, regenerate_tables, ContributionTuple,
    TableGrid,
};
use critgraph::generators;
use critgraph::invariants::{verify_r39_critical, InvariantSummary};
use critgraph::{parse_graph6, to_graph6, LayerProfile};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{
    AnalyzeArgs, DegseqArgs, Format, GenArgs, GenKind, LayersArgs, PartitionArgs, TablesArgs,
    VerifyArgs,
};
use crate::envelope::{append_jsonl, AnalyzePayload, ReportEnvelope};
use crate::{EXIT_FAIL, EXIT_INPUT, EXIT_OK};

pub const CATALOG_FILE: &str = "r39_35.g6";
const TABLE_EDGES: std::ops::RangeInclusive<usize> = 172..=184;
const TABLE_DEGREE6: std::ops::RangeInclusive<usize> = 0..=6;

/// Non-blank lines with their 1-based line numbers.
fn read_lines(path: &Path) -> anyhow::Result<Vec<(usize, String)>> {
    let reader: Box<dyn Read> = if path.as_os_str() == "-" {
        Box::new(io::stdin())
    } else {
        Box::new(
            std::fs::File::open(path).with_context(|| format!("reading {}", path.display()))?,
        )
    };
    let mut out = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line.with_context(|| format!("reading {}", path.display()))?;
        let trimmed = line.trim();
        if !trimmed.is_empty() {
            out.push((i + 1, trimmed.to_string()));
        }
    }
    Ok(out)
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

pub fn analyze(args: AnalyzeArgs) -> anyhow::Result<u8> {
    let params = args.profile.clone().with_strict(args.strict);
    let mut options = if args.exhaustive_cuts || args.budget.is_some() {
        if let Some(b) = args.budget {
            ensure!(b <= MAX_CUT_BUDGET, "--budget {b} exceeds the maximum {MAX_CUT_BUDGET}");
        }
        ReportOptions::exhaustive(args.budget)
    } else {
        ReportOptions::default()
    };
    for name in &args.disable {
        let id: ClauseId = name.parse().map_err(anyhow::Error::msg)?;
        options.disabled.insert(id);
    }
    if params.extrapolated {
        eprintln!(
            "note: profile {} is extrapolated; its thresholds are not established for this order",
            params.name()
        );
    }
    let lines = read_lines(&args.path)?;
    let envelopes: Vec<ReportEnvelope<AnalyzePayload>> = lines
        .par_iter()
        .map(|(no, line)| {
            let payload = match parse_graph6(line) {
                Ok(g) => AnalyzePayload::Report(full_report_with(&g, &params, &options)),
                Err(e) => AnalyzePayload::Error { message: e.to_string() },
            };
            ReportEnvelope::new(payload, Some(line), Some(*no))
        })
        .collect();

    let mut code = EXIT_OK;
    for env in &envelopes {
        match &env.payload {
            AnalyzePayload::Report(r) if !r.overall_pass && code == EXIT_OK => code = EXIT_FAIL,
            AnalyzePayload::Error { .. } => code = EXIT_INPUT,
            _ => {}
        }
        match args.format.format {
            Format::Json => print_json(env)?,
            Format::Table => print!("{}", render_envelope(env)),
        }
    }
    if let Some(log) = &args.log {
        append_jsonl(log, &envelopes)?;
    }
    Ok(code)
}

fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::NotApplicable => "n/a",
        Verdict::BudgetExceeded => "budget",
    }
}

fn render_envelope(env: &ReportEnvelope<AnalyzePayload>) -> String {
    let line = env.source_line.unwrap_or(0);
    let digest = env.input_digest.as_deref().map_or("", |d| &d[..12]);
    match &env.payload {
        AnalyzePayload::Error { message } => format!("line {line} [{digest}]: error: {message}\n"),
        AnalyzePayload::Report(r) => render_report(line, digest, r),
    }
}

fn render_report(line: usize, digest: &str, r: &CriticalityReport) -> String {
    let mut out = String::new();
    let banner = if r.extrapolated { " [extrapolated]" } else { "" };
    let _ = writeln!(
        out,
        "line {line} [{digest}]: {} vertices, {} edges, profile {}{banner}",
        r.order, r.edge_count, r.profile
    );
    let width = r.clauses.iter().map(|c| c.id.name().len()).max().unwrap_or(0);
    for c in &r.clauses {
        let mut detail = c.outcome.detail.clone();
        if c.outcome.failed() && !c.outcome.witness.is_empty() {
            let _ = write!(detail, " {:?}", c.outcome.witness);
        }
        let _ = writeln!(
            out,
            "  {:<6} {:<width$}  {detail}",
            verdict_label(c.outcome.verdict),
            c.id.name()
        );
    }
    let overall = if r.overall_pass { "not excluded" } else { "excluded" };
    let _ = writeln!(out, "  overall: {overall}");
    out
}

#[derive(Serialize)]
struct VerifyPayload {
    path: String,
    holds: bool,
    failures: Vec<String>,
    summary: InvariantSummary,
}

pub fn verify(args: VerifyArgs) -> anyhow::Result<u8> {
    let path = args.catalog_dir.join(CATALOG_FILE);
    let text = std::fs::read_to_string(&path)
        .with_context(|| format!("reading {}", path.display()))?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .with_context(|| format!("{} is empty", path.display()))?;
    let g = parse_graph6(line).with_context(|| format!("parsing {}", path.display()))?;
    let check = verify_r39_critical(&g);
    let payload = VerifyPayload {
        path: path.display().to_string(),
        holds: check.holds,
        failures: check.failures,
        summary: InvariantSummary::of(&g)?,
    };
    match args.format.format {
        Format::Json => print_json(&ReportEnvelope::new(&payload, Some(line), None))?,
        Format::Table => {
            let s = &payload.summary;
            println!("{}", payload.path);
            println!(
                "  order {}, {} edges, degrees [{}, {}], alpha {}, kappa {}, kappa' {}, diameter {}",
                s.order,
                s.edge_count,
                s.min_degree,
                s.max_degree,
                s.independence_number,
                s.vertex_connectivity,
                s.edge_connectivity,
                s.diameter.finite().map_or("inf".to_string(), |d| d.to_string())
            );
            for f in &payload.failures {
                println!("  failure: {f}");
            }
            println!("  verified: {}", if payload.holds { "yes" } else { "no" });
        }
    }
    Ok(if payload.holds { EXIT_OK } else { EXIT_FAIL })
}

fn render_contributions(rows: &[ContributionTuple]) -> String {
    let mut out = String::new();
    for t in rows {
        let _ = writeln!(out, "({}, {}, {}, {})", t.a, t.b, t.c, t.d);
    }
    out
}

pub fn degseq(args: DegseqArgs) -> anyhow::Result<u8> {
    let fmt = args.format.format;
    if args.diam2 {
        let rows = diam2_deg6_sequences(args.strict);
        match fmt {
            Format::Json => print_json(&ReportEnvelope::new(&rows, None, None))?,
            Format::Table => print!("{}", render_sequences(&rows)),
        }
    } else if let Some(e) = args.nv {
        let rows = nv_contributions(e)?;
        match fmt {
            Format::Json => print_json(&ReportEnvelope::new(&rows, None, None))?,
            Format::Table => print!("{}", render_contributions(&rows)),
        }
    } else if let Some(s) = args.gammav {
        let rows = gammav_contributions(s)?;
        match fmt {
            Format::Json => print_json(&ReportEnvelope::new(&rows, None, None))?,
            Format::Table => print!("{}", render_contributions(&rows)),
        }
    } else {
        let Some(e) = args.e else {
            bail!("one of --e, --diam2, --nv or --gammav is required");
        };
        let rows = degseq_solutions(args.n, e, args.d6);
        match fmt {
            Format::Json => print_json(&ReportEnvelope::new(&rows, None, None))?,
            Format::Table => print!("{}", render_sequences(&rows)),
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct TableRow {
    edges: usize,
    degree6: usize,
    sequences: Vec<[usize; 4]>,
}

pub fn tables(args: TablesArgs) -> anyhow::Result<u8> {
    ensure!(
        TABLE_EDGES.contains(args.e.start()) && TABLE_EDGES.contains(args.e.end()),
        "--e must lie within 172..184"
    );
    ensure!(
        TABLE_DEGREE6.contains(args.d6.start()) && TABLE_DEGREE6.contains(args.d6.end()),
        "--d6 must lie within 0..6"
    );
    let grid = TableGrid { order: 41, edges: args.e.clone(), degree6: args.d6.clone() };
    let cells = regenerate_tables(&grid);
    let audit = args.audit.then(|| audit_printed_rows(&printed_rows()));
    match args.format.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Payload<'a> {
                rows: Vec<TableRow>,
                #[serde(skip_serializing_if = "Option::is_none")]
                audit: Option<&'a [critgraph::enumerate::TableRowDiagnostic]>,
            }
            let rows = cells
                .iter()
                .map(|(&(edges, degree6), classes)| {
                    let mut sequences: Vec<[usize; 4]> = classes.iter().map(|c| c.counts()).collect();
                    sequences.sort_unstable();
                    TableRow { edges, degree6, sequences }
                })
                .collect();
            let payload = Payload { rows, audit: audit.as_deref() };
            print_json(&ReportEnvelope::new(&payload, None, None))?;
        }
        Format::Table => {
            print!("{}", render_degree_tables(&cells));
            if let Some(diags) = &audit {
                println!();
                println!("printed rows failing a checksum: {}", diags.len());
                print!("{}", render_audit(diags));
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn audit(format: Format) -> anyhow::Result<u8> {
    let diags = audit_printed_rows(&printed_rows());
    match format {
        Format::Json => print_json(&ReportEnvelope::new(&diags, None, None))?,
        Format::Table => {
            println!("printed rows failing a checksum: {}", diags.len());
            print!("{}", render_audit(&diags));
        }
    }
    Ok(EXIT_OK)
}

fn selected_vertices(order: usize, vertex: Option<usize>) -> anyhow::Result<Vec<usize>> {
    match vertex {
        Some(v) if v >= order => bail!("vertex {v} out of range for a graph on {order} vertices"),
        Some(v) => Ok(vec![v]),
        None => Ok((0..order).collect()),
    }
}

/// Parses every line, failing on the first malformed one.
fn parse_all(path: &Path) -> anyhow::Result<Vec<(usize, String, critgraph::Graph)>> {
    read_lines(path)?
        .into_iter()
        .map(|(no, line)| {
            let g = parse_graph6(&line).with_context(|| format!("line {no}"))?;
            Ok((no, line, g))
        })
        .collect()
}

pub fn partition(args: PartitionArgs) -> anyhow::Result<u8> {
    let fmt = args.format.format;
    let Some(path) = &args.path else {
        let rows = partition_triples();
        match fmt {
            Format::Json => print_json(&ReportEnvelope::new(&rows, None, None))?,
            Format::Table => print!("{}", render_partition_triples(&rows)),
        }
        return Ok(EXIT_OK);
    };
    for (no, line, g) in parse_all(path)? {
        let profiles: Vec<PartitionProfile> = selected_vertices(g.order(), args.vertex)?
            .into_iter()
            .map(|v| neighborhood_partition(&g, v))
            .collect::<Result<_, _>>()?;
        match fmt {
            Format::Json => print_json(&ReportEnvelope::new(&profiles, Some(&line), Some(no)))?,
            Format::Table => {
                println!("line {no}: {} vertices", g.order());
                for p in &profiles {
                    let parts: Vec<String> =
                        p.nonzero().iter().map(|(i, c)| format!("{i}:{c}")).collect();
                    println!(
                        "  v{:<4} degree {:<3} residual {:<3} boundary {:<4} {}",
                        p.base_vertex,
                        g.degree(p.base_vertex),
                        p.residual_order(),
                        p.boundary_edges,
                        parts.join(" ")
                    );
                }
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn layers(args: LayersArgs) -> anyhow::Result<u8> {
    for (no, line, g) in parse_all(&args.path)? {
        let profiles: Vec<LayerProfile> = selected_vertices(g.order(), args.vertex)?
            .into_iter()
            .map(|v| g.distance_layers(v))
            .collect::<Result<_, _>>()?;
        match args.format.format {
            Format::Json => print_json(&ReportEnvelope::new(&profiles, Some(&line), Some(no)))?,
            Format::Table => {
                println!("line {no}: {} vertices", g.order());
                for p in &profiles {
                    let sizes: Vec<String> = p.layer_sizes.iter().map(usize::to_string).collect();
                    let unreachable = if p.unreachable_count > 0 {
                        format!(" unreachable {}", p.unreachable_count)
                    } else {
                        String::new()
                    };
                    println!("  v{:<4} layers {}{unreachable}", p.source, sizes.join(" "));
                }
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn gen(args: GenArgs) -> anyhow::Result<u8> {
    let g = match args.kind {
        GenKind::Cycle { n } => {
            ensure!(n >= 3, "a cycle needs at least 3 vertices");
            generators::cycle(n)
        }
        GenKind::Path { n } => generators::path(n),
        GenKind::Complete { n } => generators::complete(n),
        GenKind::Circulant { n, offsets } => generators::circulant(n, &offsets)?,
        GenKind::Petersen => generators::petersen(),
        GenKind::RandomTriangleFree { n, seed } => {
            generators::random_triangle_free(n, &mut ChaCha8Rng::seed_from_u64(seed))?
        }
    };
    println!("{}", to_graph6(&g));
    Ok(EXIT_OK)
}
