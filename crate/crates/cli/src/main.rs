//! Command-line toolkit for Cayley incidence graphs.
//!
//! Machine-readable results go to stdout; human diagnostics go to stderr.
//! Exit codes: 0 success, 2 family validation failure (a witness object is
//! printed), 3 time-budget exhaustion (partial results are flagged),
//! 4 unknown group descriptor, 5 malformed family JSON, 1 anything else.
//! Identical invocations produce byte-identical stdout, independent of the
//! worker count.

use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cayley_incidence::cells::{self, CellFamily, Violation};
use cayley_incidence::enumeration::{
    self, group_category, EnumerateOptions, EnumerationReport, GroupCategory,
};
use cayley_incidence::{
    constructions, golden, graph, group, serialize, spectrum, verification, Error,
};

const EXIT_OK: i32 = 0;
const EXIT_GENERAL: i32 = 1;
const EXIT_INVALID: i32 = 2;
const EXIT_BUDGET: i32 = 3;
const EXIT_UNKNOWN_GROUP: i32 = 4;
const EXIT_BAD_JSON: i32 = 5;

#[derive(Parser)]
#[command(
    name = "bcay",
    about = "Construct, validate, classify, and enumerate Cayley incidence graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Reference {
    Published,
    Corrected,
}

impl From<Reference> for golden::ReferenceMode {
    fn from(r: Reference) -> Self {
        match r {
            Reference::Published => golden::ReferenceMode::Published,
            Reference::Corrected => golden::ReferenceMode::Corrected,
        }
    }
}

/// Where a cell family comes from: inline cells over a named group, a JSON
/// file, or stdin when neither is given.
#[derive(Args, Debug)]
struct FamilySource {
    /// Group descriptor, e.g. Z7, C3xC3, D4, Dic4, Q8, SD16, A4, S4, C7:C3
    #[arg(long)]
    group: Option<String>,
    /// Cells as a JSON array of arrays of element indices, e.g. [[0,1,3],[0,2,6],[0,4,5]]
    #[arg(long)]
    cells: Option<String>,
    /// Family document {"group": ..., "cells": ...} read from a file ("-" = stdin)
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the group catalog (orders 7 through 16)
    Groups {
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Stage a family through the validity checks and report the witness
    Validate {
        #[command(flatten)]
        source: FamilySource,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the incidence graph of a valid family
    Build {
        #[command(flatten)]
        source: FamilySource,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Eigenvalues of the incidence graph, directly and via the underlying graph
    Spectrum {
        #[command(flatten)]
        source: FamilySource,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Full classification record of one family
    Classify {
        #[command(flatten)]
        source: FamilySource,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate all isomorphism classes of incidence graphs over one group
    Enumerate {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Wall-clock budget in seconds (0 = immediate cutoff)
        #[arg(long, default_value_t = 300)]
        budget_seconds: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Reproduce the reference tables over the whole catalog
    Tables {
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also diff the computed rows against the embedded reference data
        #[arg(long)]
        compare: bool,
        /// Reference layer used by --compare
        #[arg(long, value_enum, default_value_t = Reference::Corrected)]
        reference: Reference,
        /// Wall-clock budget in seconds per group (0 = immediate cutoff)
        #[arg(long, default_value_t = 300)]
        budget_seconds: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Emit the family of a named construction as a family document
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Derive incidence families from bipartite Cayley or bi-Cayley data
    Convert {
        #[command(subcommand)]
        kind: ConvertKind,
    },
    /// Run the invariant suites and the reference-data comparison
    Verify {
        /// Largest group order the suites cover
        #[arg(long, default_value_t = 12)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Directory holding counts.json (and optionally profiles.json) to
        /// compare against instead of the embedded reference data
        #[arg(long)]
        golden_dir: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Point/line family of the projective space PG(n-1, q)
    Pg { n: usize, q: usize },
    /// Point/line family of the affine space AG(dim, q)
    Ag { dim: usize, q: usize },
    /// Translate family of a perfect difference set
    Diffset {
        #[arg(long)]
        group: String,
        /// The difference set as a JSON array, e.g. [0,1,3]
        #[arg(long)]
        set: String,
        /// Emit the inverse-translate family instead
        #[arg(long)]
        inverse: bool,
    },
}

#[derive(Subcommand)]
enum ConvertKind {
    /// Split a connected bipartite Cayley graph Cay(G, S) over its index-2 kernel
    BipartiteCayley {
        #[arg(long)]
        group: String,
        /// Connection set as a JSON array of element indices
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Read a bi-Cayley graph BCay(G, S) as an incidence family
    Bicay {
        #[arg(long)]
        group: String,
        /// Connection set as a JSON array of element indices
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli.command));
}

fn run(command: Command) -> i32 {
    let result = match command {
        Command::Groups { max_order, format } => cmd_groups(max_order, format),
        Command::Validate { source, format } => cmd_validate(&source, format),
        Command::Build { source, format } => cmd_build(&source, format),
        Command::Spectrum { source, format } => cmd_spectrum(&source, format),
        Command::Classify { source, format } => cmd_classify(&source, format),
        Command::Enumerate { group, format, budget_seconds, workers } => {
            cmd_enumerate(&group, format, budget_seconds, workers)
        }
        Command::Tables { max_order, format, compare, reference, budget_seconds, workers } => {
            cmd_tables(max_order, format, compare, reference, budget_seconds, workers)
        }
        Command::Construct { kind } => cmd_construct(kind),
        Command::Convert { kind } => cmd_convert(kind),
        Command::Verify { max_order, format, golden_dir, workers } => {
            cmd_verify(max_order, format, golden_dir.as_deref(), workers)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code_for(&e);
            let witness = serde_json::json!({
                "error": error_kind(&e),
                "message": e.to_string(),
            });
            println!("{}", serde_json::to_string_pretty(&witness).expect("json"));
            eprintln!("error: {e}");
            code
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::UnknownDescriptor(_) => EXIT_UNKNOWN_GROUP,
        Error::FamilyJson(_) => EXIT_BAD_JSON,
        Error::BudgetExhausted(_, _) => EXIT_BUDGET,
        Error::FamilyNotValid { .. } => EXIT_INVALID,
        _ => EXIT_GENERAL,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::UnknownDescriptor(_) => "unknown_group",
        Error::FamilyJson(_) => "family_json",
        Error::BudgetExhausted(_, _) => "budget_exhausted",
        Error::FamilyNotValid { .. } => "family_not_valid",
        _ => "general",
    }
}

// ======================================================================
// Family input
// ======================================================================

fn parse_index_list(text: &str) -> Result<Vec<usize>, Error> {
    serde_json::from_str(text).map_err(|e| Error::FamilyJson(e.to_string()))
}

fn read_stdin() -> Result<String, Error> {
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf)?;
    Ok(buf)
}

/// Resolves a family source to a staged family. Precedence: inline
/// group+cells, then --file (with "-" for stdin), then stdin.
fn resolve_family(source: &FamilySource) -> Result<CellFamily, Error> {
    match (&source.group, &source.cells, &source.file) {
        (Some(g), Some(c), None) => {
            let cells_list: Vec<Vec<usize>> =
                serde_json::from_str(c).map_err(|e| Error::FamilyJson(e.to_string()))?;
            let grp = group::make_group(g)?;
            cells::validate_family(&grp, &cells_list)
        }
        (None, None, Some(path)) if path == Path::new("-") => {
            serialize::family_from_json(&read_stdin()?)
        }
        (None, None, Some(path)) => serialize::load_family(path),
        (None, None, None) => serialize::family_from_json(&read_stdin()?),
        _ => Err(Error::BadArgument(
            "give either --group with --cells, or --file, or a document on stdin".into(),
        )),
    }
}

// ======================================================================
// Shared output helpers
// ======================================================================

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

/// Witness object for a family that failed validation; printed on stdout,
/// exit code 2.
#[derive(Serialize)]
struct ValidationWitness<'a> {
    error: &'static str,
    group: &'a str,
    cells: &'a [Vec<usize>],
    validity: String,
    violation: Option<&'a Violation>,
    message: String,
}

fn report_invalid(family: &CellFamily) -> i32 {
    let message = family
        .violation()
        .map(|v| v.to_string())
        .unwrap_or_else(|| "family is not fully valid".into());
    let witness = ValidationWitness {
        error: "validation",
        group: family.group().name(),
        cells: family.cells(),
        validity: family.validity().to_string(),
        violation: family.violation(),
        message: message.clone(),
    };
    print_json(&witness);
    eprintln!("validation failed: {message}");
    EXIT_INVALID
}

fn require_valid(family: &CellFamily) -> Option<i32> {
    if family.is_valid() {
        None
    } else {
        Some(report_invalid(family))
    }
}

fn category_name(c: GroupCategory) -> &'static str {
    match c {
        GroupCategory::Cyclic => "cyclic",
        GroupCategory::Abelian => "abelian",
        GroupCategory::Nonabelian => "nonabelian",
    }
}

// ======================================================================
// Commands
// ======================================================================

#[derive(Serialize)]
struct GroupLine {
    order: usize,
    name: String,
    category: &'static str,
    exponent_of_identity_free_part: usize,
}

fn cmd_groups(max_order: usize, format: Format) -> Result<i32, Error> {
    let mut lines = Vec::new();
    for order in 7..=max_order.min(16) {
        for g in group::catalog_order(order)? {
            let exponent = (0..g.order()).map(|x| g.element_order(x)).max().unwrap_or(1);
            lines.push(GroupLine {
                order,
                name: g.name().to_string(),
                category: category_name(group_category(&g)),
                exponent_of_identity_free_part: exponent,
            });
        }
    }
    match format {
        Format::Json => print_json(&lines),
        Format::Csv => {
            println!("order,group,category,max_element_order");
            for l in &lines {
                println!("{},{},{},{}", l.order, l.name, l.category, l.exponent_of_identity_free_part);
            }
        }
        _ => {
            println!("{:<6} {:<12} {:<11} {}", "order", "group", "category", "max_elt_order");
            for l in &lines {
                println!(
                    "{:<6} {:<12} {:<11} {}",
                    l.order, l.name, l.category, l.exponent_of_identity_free_part
                );
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ValidateOutput<'a> {
    group: &'a str,
    cells: &'a [Vec<usize>],
    validity: String,
    valid: bool,
    violation: Option<&'a Violation>,
}

fn cmd_validate(source: &FamilySource, format: Format) -> Result<i32, Error> {
    let family = resolve_family(source)?;
    if !family.is_valid() {
        // The witness object is the machine-readable output in every format.
        return Ok(report_invalid(&family));
    }
    let out = ValidateOutput {
        group: family.group().name(),
        cells: family.cells(),
        validity: family.validity().to_string(),
        valid: true,
        violation: None,
    };
    match format {
        Format::Text => {
            println!("group:    {}", out.group);
            println!("cells:    {}", serialize::format_cells(out.cells));
            println!("validity: {} (valid)", out.validity);
        }
        _ => print_json(&out),
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct BuildOutput {
    group: String,
    n_gamma: usize,
    n_beta: usize,
    ell: usize,
    k: usize,
    connected: bool,
    girth: Option<usize>,
    edges: Vec<(usize, usize)>,
    labels: Vec<String>,
}

fn cmd_build(source: &FamilySource, format: Format) -> Result<i32, Error> {
    let family = resolve_family(source)?;
    if let Some(code) = require_valid(&family) {
        return Ok(code);
    }
    let x = graph::build_bcay(&family)?;
    let g = x.graph();
    match format {
        Format::Dot => print!("{}", serialize::incidence_to_dot(&x, family.group().name())),
        Format::Csv => {
            println!("u,v");
            for (u, v) in g.edges() {
                println!("{u},{v}");
            }
        }
        Format::Json => {
            let (ell, k) = x.biregular().unwrap_or((0, 0));
            let out = BuildOutput {
                group: family.group().name().to_string(),
                n_gamma: x.n_gamma(),
                n_beta: x.n_beta(),
                ell,
                k,
                connected: g.is_connected(),
                girth: g.girth(),
                edges: g.edges(),
                labels: (0..g.n()).map(|v| g.label(v).to_string()).collect(),
            };
            print_json(&out);
        }
        Format::Text => {
            let (ell, k) = x.biregular().unwrap_or((0, 0));
            println!("group:     {}", family.group().name());
            println!("vertices:  {} + {}", x.n_gamma(), x.n_beta());
            println!("degrees:   ({ell}, {k})");
            println!("edges:     {}", g.edge_count());
            println!("connected: {}", g.is_connected());
            println!(
                "girth:     {}",
                g.girth().map(|x| x.to_string()).unwrap_or_else(|| "infinite".into())
            );
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SpectrumOutput {
    group: String,
    direct: Vec<(f64, usize)>,
    via_underlying: Vec<(f64, usize)>,
    agree: bool,
    tolerance: f64,
    rendered: String,
}

fn cmd_spectrum(source: &FamilySource, format: Format) -> Result<i32, Error> {
    let family = resolve_family(source)?;
    if let Some(code) = require_valid(&family) {
        return Ok(code);
    }
    let x = graph::build_bcay(&family)?;
    let direct = spectrum::spectrum_direct(x.graph())?;
    let via = spectrum::spectrum_via_underlying(&family)?;
    let tolerance = 1e-6;
    let out = SpectrumOutput {
        group: family.group().name().to_string(),
        direct: direct.eigenvalues.clone(),
        via_underlying: via.eigenvalues.clone(),
        agree: direct.matches(&via, tolerance),
        tolerance,
        rendered: direct.to_string(),
    };
    match format {
        Format::Csv => {
            println!("route,eigenvalue,multiplicity");
            for (v, m) in &out.direct {
                println!("direct,{v},{m}");
            }
            for (v, m) in &out.via_underlying {
                println!("via_underlying,{v},{m}");
            }
        }
        Format::Text => {
            println!("group:          {}", out.group);
            println!("spectrum:       {}", out.rendered);
            println!("routes agree:   {} (tolerance {})", out.agree, out.tolerance);
        }
        _ => print_json(&out),
    }
    if out.agree {
        Ok(EXIT_OK)
    } else {
        eprintln!("the two spectrum routes disagree beyond tolerance");
        Ok(EXIT_GENERAL)
    }
}

fn cmd_classify(source: &FamilySource, format: Format) -> Result<i32, Error> {
    let family = resolve_family(source)?;
    if let Some(code) = require_valid(&family) {
        return Ok(code);
    }
    let record = enumeration::classify(&family)?;
    match format {
        Format::Csv => print!("{}", serialize::records_to_csv(std::slice::from_ref(&record))),
        Format::Text => print!("{}", serialize::record_to_text(&record)),
        _ => print_json(&record),
    }
    Ok(EXIT_OK)
}

fn enumerate_options(budget_seconds: u64, workers: usize) -> EnumerateOptions {
    EnumerateOptions {
        budget: Some(Duration::from_secs(budget_seconds)),
        workers: workers.max(1),
        max_k: None,
    }
}

/// Clears the timing field so identical runs print identical bytes; the
/// wall-clock time goes to stderr instead.
fn strip_timing(report: &mut EnumerationReport) -> u128 {
    let elapsed = report.elapsed_ms;
    report.elapsed_ms = 0;
    elapsed
}

fn cmd_enumerate(desc: &str, format: Format, budget_seconds: u64, workers: usize) -> Result<i32, Error> {
    let g = group::make_group(desc)?;
    let mut report = enumeration::enumerate_group(&g, &enumerate_options(budget_seconds, workers))?;
    let elapsed = strip_timing(&mut report);
    eprintln!(
        "{}: {} classes from {} families in {elapsed} ms",
        report.group_name,
        report.class_count(),
        report.families_considered
    );
    match format {
        Format::Csv => print!("{}", serialize::records_to_csv(&report.records)),
        Format::Text => {
            println!(
                "group {} (order {}): {} isomorphism classes{}",
                report.group_name,
                report.group_order,
                report.class_count(),
                if report.complete { "" } else { "  [INCOMPLETE: budget hit]" }
            );
            for r in &report.records {
                let girth = r.girth.map(|x| x.to_string()).unwrap_or_else(|| "inf".into());
                println!(
                    "  (ell={}, k={}) girth={} cayley={} |Aut|={} orbits={} cells={}",
                    r.ell,
                    r.k,
                    girth,
                    if r.is_cayley { "yes" } else { "no" },
                    r.aut_order,
                    r.orbit_count,
                    serialize::format_cells(&r.cells)
                );
            }
        }
        _ => print_json(&report),
    }
    if report.complete {
        Ok(EXIT_OK)
    } else {
        eprintln!("time budget exhausted; results are partial");
        Ok(EXIT_BUDGET)
    }
}

#[derive(Serialize)]
struct TablesOutput {
    bundle: enumeration::TableBundle,
    comparison: Option<TableComparison>,
}

#[derive(Serialize)]
struct TableComparison {
    reference: &'static str,
    discrepancies: Vec<String>,
}

fn cmd_tables(
    max_order: usize,
    format: Format,
    compare: bool,
    reference: Reference,
    budget_seconds: u64,
    workers: usize,
) -> Result<i32, Error> {
    let mut bundle =
        enumeration::reproduce_tables(max_order, &enumerate_options(budget_seconds, workers))?;
    for r in &mut bundle.reports {
        strip_timing(r);
    }
    let comparison = compare.then(|| TableComparison {
        reference: match reference {
            Reference::Published => "published",
            Reference::Corrected => "corrected",
        },
        discrepancies: bundle.diff(reference.into()),
    });
    let complete = bundle.complete;
    match format {
        Format::Csv => {
            let all: Vec<_> = bundle.reports.iter().flat_map(|r| r.records.clone()).collect();
            print!("{}", serialize::records_to_csv(&all));
        }
        Format::Json => print_json(&TablesOutput { bundle, comparison }),
        _ => {
            print!("{}", serialize::tables_to_text(&bundle)?);
            if let Some(c) = &comparison {
                println!("\n== Comparison against the {} reference ==", c.reference);
                if c.discrepancies.is_empty() {
                    println!("all rows match");
                } else {
                    for line in &c.discrepancies {
                        println!("{line}");
                    }
                }
            }
        }
    }
    if complete {
        Ok(EXIT_OK)
    } else {
        eprintln!("time budget exhausted; tables are partial");
        Ok(EXIT_BUDGET)
    }
}

fn cmd_construct(kind: ConstructKind) -> Result<i32, Error> {
    let family = match kind {
        ConstructKind::Pg { n, q } => constructions::pg_family(n, q)?,
        ConstructKind::Ag { dim, q } => constructions::ag_family(dim, q)?,
        ConstructKind::Diffset { group: desc, set, inverse } => {
            let g = group::make_group(&desc)?;
            let d = parse_index_list(&set)?;
            let fams = constructions::diffset_families(&g, &d)?;
            eprintln!(
                "difference set {:?}: lambda {:?}, perfect {}, four-way isomorphic {:?}",
                fams.report.normalized, fams.report.lambda, fams.report.is_perfect,
                fams.four_way_isomorphic
            );
            if inverse {
                fams.family_inverse
            } else {
                fams.family
            }
        }
    };
    // Always a family document, so the output pipes into the family-reading
    // commands regardless of format.
    println!("{}", serialize::family_to_json(&family));
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ConvertOutput {
    kind: &'static str,
    group: String,
    set: Vec<usize>,
    family: serialize::FamilyDocument,
    family_valid: bool,
    girth: Option<usize>,
    certificate_match: Option<bool>,
    kernel: Option<String>,
    blocks_distinct: Option<bool>,
}

fn cmd_convert(kind: ConvertKind) -> Result<i32, Error> {
    let (out, format) = match kind {
        ConvertKind::BipartiteCayley { group: desc, set, format } => {
            let g = group::make_group(&desc)?;
            let s = parse_index_list(&set)?;
            let conv = constructions::bipartite_cayley_to_bcay(&g, &s)?;
            (
                ConvertOutput {
                    kind: "bipartite_cayley",
                    group: g.name().to_string(),
                    set: s,
                    family: serialize::FamilyDocument {
                        group: conv.family.group().name().to_string(),
                        cells: conv.family.cells().to_vec(),
                    },
                    family_valid: conv.is_valid,
                    girth: conv.girth,
                    certificate_match: conv.certificate_match,
                    kernel: Some(conv.kernel.name().to_string()),
                    blocks_distinct: None,
                },
                format,
            )
        }
        ConvertKind::Bicay { group: desc, set, format } => {
            let g = group::make_group(&desc)?;
            let s = parse_index_list(&set)?;
            let conv = constructions::bicay_to_bcay(&g, &s)?;
            (
                ConvertOutput {
                    kind: "bicay",
                    group: g.name().to_string(),
                    set: s,
                    family: serialize::FamilyDocument {
                        group: conv.family.group().name().to_string(),
                        cells: conv.family.cells().to_vec(),
                    },
                    family_valid: conv.is_valid,
                    girth: conv.bicay_graph.girth(),
                    certificate_match: conv.certificate_match,
                    kernel: None,
                    blocks_distinct: Some(conv.blocks_distinct),
                },
                format,
            )
        }
    };
    match format {
        Format::Text => {
            println!("conversion:        {}", out.kind);
            println!("group:             {}", out.group);
            if let Some(k) = &out.kernel {
                println!("kernel:            {k}");
            }
            println!("family group:      {}", out.family.group);
            println!("family cells:      {}", serialize::format_cells(&out.family.cells));
            println!("family valid:      {}", out.family_valid);
            if let Some(b) = out.blocks_distinct {
                println!("blocks distinct:   {b}");
            }
            println!(
                "girth:             {}",
                out.girth.map(|x| x.to_string()).unwrap_or_else(|| "infinite".into())
            );
            println!("certificates equal: {:?}", out.certificate_match);
        }
        _ => print_json(&out),
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyOutput {
    checks: Vec<VerifyCheck>,
    reference: ReferenceComparison,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyCheck {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct ReferenceComparison {
    source: String,
    groups_checked: usize,
    mismatches: Vec<String>,
}

#[derive(serde::Deserialize)]
struct GoldenCountRow {
    group: String,
    count: usize,
}

#[derive(serde::Deserialize)]
struct GoldenProfileRow {
    group: String,
    ell: usize,
    k: usize,
    cayley: bool,
    aut_order: u128,
    orbits: usize,
    girth: Option<usize>,
}

fn cmd_verify(
    max_order: usize,
    format: Format,
    golden_dir: Option<&Path>,
    workers: usize,
) -> Result<i32, Error> {
    let suite = verification::run_suite(max_order)?;
    let checks: Vec<VerifyCheck> = suite
        .iter()
        .map(|c| VerifyCheck {
            name: c.name.clone(),
            passed: c.passed,
            detail: c.detail.clone(),
        })
        .collect();

    // Reference comparison: embedded corrected data by default, or the
    // contents of --golden-dir (counts.json, optional profiles.json).
    let external = match golden_dir {
        Some(dir) => Some(load_external_golden(dir)?),
        None => None,
    };
    let source = match golden_dir {
        Some(dir) => format!("golden dir {}", dir.display()),
        None => "embedded corrected reference".to_string(),
    };
    let opts = EnumerateOptions {
        budget: None,
        workers: workers.max(1),
        max_k: None,
    };
    let mut mismatches = Vec::new();
    let mut groups_checked = 0usize;
    for order in 7..=max_order.min(16) {
        for g in group::catalog_order(order)? {
            let report = enumeration::enumerate_group(&g, &opts)?;
            groups_checked += 1;
            match &external {
                None => {
                    let cmp = golden::compare_records(g.name(), &report.records);
                    if !cmp.ok() {
                        mismatches.push(format!(
                            "{}: found {} classes, reference {:?}; profiles ok: {:?}",
                            g.name(),
                            cmp.found_count,
                            cmp.expected_count,
                            cmp.profiles_ok
                        ));
                    }
                }
                Some((counts, profiles)) => {
                    diff_against_external(&report, counts, profiles.as_deref(), &mut mismatches);
                }
            }
        }
    }

    let passed = checks.iter().all(|c| c.passed) && mismatches.is_empty();
    let out = VerifyOutput {
        checks,
        reference: ReferenceComparison {
            source,
            groups_checked,
            mismatches,
        },
        passed,
    };
    match format {
        Format::Text => {
            for c in &out.checks {
                println!("{} {:<34} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            println!(
                "{} reference-comparison               {} groups vs {}",
                if out.reference.mismatches.is_empty() { "PASS" } else { "FAIL" },
                out.reference.groups_checked,
                out.reference.source
            );
            for m in &out.reference.mismatches {
                println!("  diff: {m}");
            }
            println!("overall: {}", if out.passed { "PASS" } else { "FAIL" });
        }
        _ => print_json(&out),
    }
    Ok(if out.passed { EXIT_OK } else { EXIT_GENERAL })
}

type ExternalGolden = (Vec<GoldenCountRow>, Option<Vec<GoldenProfileRow>>);

fn load_external_golden(dir: &Path) -> Result<ExternalGolden, Error> {
    let counts_path = dir.join("counts.json");
    let text = std::fs::read_to_string(&counts_path)?;
    let counts: Vec<GoldenCountRow> = serde_json::from_str(&text)
        .map_err(|e| Error::BadArgument(format!("{}: {e}", counts_path.display())))?;
    let profiles_path = dir.join("profiles.json");
    let profiles = if profiles_path.exists() {
        let text = std::fs::read_to_string(&profiles_path)?;
        Some(
            serde_json::from_str(&text)
                .map_err(|e| Error::BadArgument(format!("{}: {e}", profiles_path.display())))?,
        )
    } else {
        None
    };
    Ok((counts, profiles))
}

fn diff_against_external(
    report: &EnumerationReport,
    counts: &[GoldenCountRow],
    profiles: Option<&[GoldenProfileRow]>,
    mismatches: &mut Vec<String>,
) {
    let name = &report.group_name;
    if let Some(row) = counts.iter().find(|r| &r.group == name) {
        if row.count != report.class_count() {
            mismatches.push(format!(
                "{name}: found {} classes, golden file says {}",
                report.class_count(),
                row.count
            ));
        }
    }
    if let Some(rows) = profiles {
        let mut expected: Vec<(usize, usize, bool, u128, usize, Option<usize>)> = rows
            .iter()
            .filter(|r| &r.group == name)
            .map(|r| (r.ell, r.k, r.cayley, r.aut_order, r.orbits, r.girth))
            .collect();
        if expected.is_empty() {
            return;
        }
        let keep_girth = expected.iter().any(|r| r.5.is_some());
        let mut found: Vec<(usize, usize, bool, u128, usize, Option<usize>)> = report
            .records
            .iter()
            .map(|r| {
                (r.ell, r.k, r.is_cayley, r.aut_order, r.orbit_count,
                 if keep_girth { r.girth } else { None })
            })
            .collect();
        expected.sort();
        found.sort();
        if expected != found {
            mismatches.push(format!(
                "{name}: profile rows differ: golden {expected:?} vs computed {found:?}"
            ));
        }
    }
}
