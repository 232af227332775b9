//! Command-line front end for the verification engine.
//!
//! Three commands: `analyze` runs the full pipeline on one space,
//! `verify` sweeps every kind over a parameter range in parallel, and
//! `coindex` prints the sphere-map nonexistence bound. Reports are
//! emitted as JSON (a fixed, versioned schema) or markdown; all output
//! is deterministic — byte-identical across runs and across worker
//! counts.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use leray::algebra::SpaceKind;
use leray::spectral::CaseLabel;
use leray::theorems::{
    map_nonexistence_bound, verify_space, SpaceSpec, TheoremError, VerificationReport,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Version tag embedded in every JSON document.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "leray",
    version,
    about = "Verifies closed-form orbit-space cohomology for free involutions on products of \
             projective spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify one space: run every transgression pattern and compare the
    /// limit totals against the closed-form presentations.
    Analyze(AnalyzeArgs),
    /// Sweep-verify every kind for all parameters up to the bounds.
    Verify(VerifyArgs),
    /// Print the co-index and the sphere-map nonexistence bound.
    Coindex(SpaceArgs),
}

#[derive(Args, Debug)]
pub struct SpaceArgs {
    /// Space kind.
    #[arg(long, value_enum)]
    pub kind: KindArg,
    /// First factor parameter.
    #[arg(long)]
    pub n: usize,
    /// Second factor parameter; required for product kinds.
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    /// Restrict the report to one transgression pattern.
    #[arg(long, value_enum, default_value_t = CaseFilter::All)]
    pub case: CaseFilter,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Md)]
    pub format: Format,
    /// Write the report to this path instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Upper bound for n (products) and for single-space dimensions.
    #[arg(long)]
    pub max_n: usize,
    /// Upper bound for m; defaults to the n bound.
    #[arg(long)]
    pub max_m: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Md)]
    pub format: Format,
    /// Write the report to this path instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for the sweep; defaults to the available cores.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum KindArg {
    Real,
    Complex,
    RealSingle,
    ComplexSingle,
}

impl From<KindArg> for SpaceKind {
    fn from(kind: KindArg) -> SpaceKind {
        match kind {
            KindArg::Real => SpaceKind::RealProduct,
            KindArg::Complex => SpaceKind::ComplexProduct,
            KindArg::RealSingle => SpaceKind::RealSingle,
            KindArg::ComplexSingle => SpaceKind::ComplexSingle,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseFilter {
    I,
    Ii,
    Iii,
    All,
}

impl CaseFilter {
    fn label(self) -> Option<CaseLabel> {
        match self {
            CaseFilter::I => Some(CaseLabel::I),
            CaseFilter::Ii => Some(CaseLabel::II),
            CaseFilter::Iii => Some(CaseLabel::III),
            CaseFilter::All => None,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Json,
    Md,
}

// ---------------------------------------------------------------------
// Wire schema (versioned; see SCHEMA_VERSION).

/// One space's verification result on the wire.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct WireReport {
    pub schema_version: u32,
    pub space: WireSpace,
    pub admissible: bool,
    pub cases: Vec<WireCase>,
    pub euler: WireEuler,
    pub coindex: Option<usize>,
    pub induced_action: Option<WireInducedAction>,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct WireSpace {
    pub kind: String,
    pub n: usize,
    pub m: Option<usize>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct WireCase {
    pub label: String,
    pub admissible: bool,
    pub reason: Option<String>,
    pub e_infinity_totals: Vec<usize>,
    pub presentation_series: Vec<usize>,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct WireEuler {
    #[serde(rename = "chi_X")]
    pub chi_x: i64,
    pub chi_quotient: Option<i64>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct WireInducedAction {
    pub candidates: usize,
    pub trivial_forced: bool,
}

/// The sweep summary on the wire: bounds, counts, and every report in
/// canonical order.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct WireSweep {
    pub schema_version: u32,
    pub max_n: usize,
    pub max_m: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub reports: Vec<WireReport>,
}

/// Flattens a verification report onto the wire schema, optionally
/// restricted to one case label.
pub fn wire_report(report: &VerificationReport, filter: Option<CaseLabel>) -> WireReport {
    WireReport {
        schema_version: SCHEMA_VERSION,
        space: WireSpace {
            kind: report.space.kind().as_str().to_string(),
            n: report.space.n(),
            m: report.space.m(),
        },
        admissible: report.admissible.admissible,
        cases: report
            .cases
            .iter()
            .filter(|c| filter.is_none_or(|label| c.label == label))
            .map(|c| WireCase {
                label: c.label.as_str().to_string(),
                admissible: c.admissible,
                reason: c.reason.clone(),
                e_infinity_totals: c.e_infinity_totals.clone(),
                presentation_series: c.presentation_series.clone(),
                matches: c.matches,
            })
            .collect(),
        euler: WireEuler {
            chi_x: report.chi_fiber,
            chi_quotient: report.chi_quotient,
        },
        coindex: report.coindex,
        induced_action: report.induced_action.as_ref().map(|a| WireInducedAction {
            candidates: a.candidates,
            trivial_forced: a.trivial_forced,
        }),
        pass: report.pass,
    }
}

// ---------------------------------------------------------------------
// Markdown emitters.

fn dims_row(label: &str, dims: &[usize], window: usize) -> String {
    let cells: Vec<String> = dims[..=window].iter().map(|d| d.to_string()).collect();
    format!("| {label} | {} |\n", cells.join(" | "))
}

/// Renders one space's report as markdown, one block per case, with the
/// presentation in text form.
pub fn report_markdown(report: &VerificationReport, filter: Option<CaseLabel>) -> String {
    let mut out = format!("# Orbit-space verification: {}\n\n", report.space);
    if !report.admissible.admissible {
        let reason = report.admissible.reason.clone().unwrap_or_default();
        out.push_str(&format!("- free involution: impossible — {reason}\n"));
        out.push_str(&format!("- Euler characteristic: {}\n", report.chi_fiber));
        out.push_str("- overall: PASS (expected negative — no free involution exists)\n");
        return out;
    }
    out.push_str("- free involution: admissible\n");
    out.push_str(&format!(
        "- Euler characteristic: {} (orbit space: {})\n",
        report.chi_fiber,
        report.chi_quotient.unwrap_or(0)
    ));
    if let Some(ci) = report.coindex {
        out.push_str(&format!(
            "- co-index: {ci}; no equivariant map from the k-sphere for k >= {}\n",
            ci + 1
        ));
    }
    if let Some(witness) = report.degenerate_witness {
        out.push_str(&format!(
            "- degeneration witness: a fully degenerate sequence would leave total degree \
             {witness} nonzero, past the window\n"
        ));
    }
    if let Some(action) = &report.induced_action {
        out.push_str(&format!(
            "- induced action: {} involutive candidate(s), {} ruled out; trivial action {}\n",
            action.candidates,
            action.ruled_out,
            if action.trivial_forced {
                "forced"
            } else {
                "assumed"
            }
        ));
        if let Some(note) = &action.assumption_note {
            out.push_str(&format!("  - {note}\n"));
        }
    }
    for failure in &report.failures {
        out.push_str(&format!("- failure: {failure}\n"));
    }
    out.push_str(&format!(
        "- overall: {}\n",
        if report.pass { "PASS" } else { "FAIL" }
    ));

    for case in report
        .cases
        .iter()
        .filter(|c| filter.is_none_or(|label| c.label == label))
    {
        if !case.admissible {
            out.push_str(&format!(
                "\n## Case {} — inadmissible ({})\n",
                case.label,
                case.reason.clone().unwrap_or_default()
            ));
            continue;
        }
        out.push_str(&format!("\n## Case {}\n\n", case.label));
        if let Some(presentation) = &case.presentation {
            out.push_str(&format!("Orbit-space cohomology: `{presentation}`\n\n"));
        }
        let top = case.e_infinity_totals.len() - 1;
        let window = top / 2;
        let degrees: Vec<String> = (0..=window).map(|p| p.to_string()).collect();
        out.push_str(&format!("| degree | {} |\n", degrees.join(" | ")));
        out.push_str(&format!("|{}\n", "---|".repeat(window + 2)));
        out.push_str(&dims_row("limit totals", &case.e_infinity_totals, window));
        out.push_str(&dims_row(
            "presentation series",
            &case.presentation_series,
            window,
        ));
        out.push_str(&format!(
            "\nDegrees {}..{top} vanish on both sides. Verdict: {}\n",
            window + 1,
            if case.matches {
                format!("match in every degree 0..{top}")
            } else {
                let bad: Vec<String> = case
                    .degree_matches
                    .iter()
                    .enumerate()
                    .filter(|(_, ok)| !**ok)
                    .map(|(p, _)| p.to_string())
                    .collect();
                format!("MISMATCH at degrees [{}]", bad.join(", "))
            }
        ));
    }
    out
}

fn sweep_markdown(doc: &WireSweep) -> String {
    let mut out = String::from("# Sweep verification\n\n");
    out.push_str(&format!(
        "- bounds: n <= {}, m <= {}\n- spaces checked: {}\n- passed: {}\n- failed: {}\n\n",
        doc.max_n, doc.max_m, doc.total, doc.passed, doc.failed
    ));
    out.push_str("| kind | n | m | free involution | admissible cases | matching | co-index | pass |\n");
    out.push_str("|---|---|---|---|---|---|---|---|\n");
    for report in &doc.reports {
        let admissible_cases = report.cases.iter().filter(|c| c.admissible).count();
        let matching = report
            .cases
            .iter()
            .filter(|c| c.admissible && c.matches)
            .count();
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
            report.space.kind,
            report.space.n,
            report
                .space
                .m
                .map_or_else(|| "-".to_string(), |m| m.to_string()),
            if report.admissible { "yes" } else { "no" },
            admissible_cases,
            matching,
            report
                .coindex
                .map_or_else(|| "-".to_string(), |c| c.to_string()),
            if report.pass { "yes" } else { "no" }
        ));
    }
    out.push_str(&format!(
        "\n{}\n",
        if doc.failed == 0 {
            "All admissible cases pass.".to_string()
        } else {
            format!("{} space(s) failed verification.", doc.failed)
        }
    ));
    out
}

// ---------------------------------------------------------------------
// Command driver.

/// Parses the arguments and runs the requested command, returning the
/// process exit code: 0 for success or an expected negative, 1 for a
/// verification mismatch, 2 for usage errors.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Coindex(args) => cmd_coindex(args),
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

fn space_from_args(args: &SpaceArgs) -> Result<SpaceSpec, String> {
    SpaceSpec::new(args.kind.into(), args.n, args.m).map_err(|e| e.to_string())
}

fn json_text<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("reports always serialize");
    text.push('\n');
    text
}

fn deliver(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> i32 {
    let space = match space_from_args(&args.space) {
        Ok(space) => space,
        Err(msg) => return usage_error(&msg),
    };
    let report = verify_space(&space);
    let filter = args.case.label();
    let text = match args.format {
        Format::Json => json_text(&wire_report(&report, filter)),
        Format::Md => report_markdown(&report, filter),
    };
    if let Err(msg) = deliver(&text, args.out.as_deref()) {
        return usage_error(&msg);
    }
    i32::from(!report.pass)
}

fn kind_rank(kind: &str) -> usize {
    match kind {
        "real" => 0,
        "complex" => 1,
        "real-single" => 2,
        _ => 3,
    }
}

/// Every space the sweep covers, in canonical order: products of both
/// kinds over 1 <= n <= m, then singles of both kinds over n.
fn sweep_spaces(max_n: usize, max_m: usize) -> Vec<SpaceSpec> {
    let mut spaces = Vec::new();
    for kind in [SpaceKind::RealProduct, SpaceKind::ComplexProduct] {
        for n in 1..=max_n {
            for m in n..=max_m {
                spaces.push(SpaceSpec::new(kind, n, Some(m)).expect("valid sweep parameters"));
            }
        }
    }
    for kind in [SpaceKind::RealSingle, SpaceKind::ComplexSingle] {
        for n in 1..=max_n {
            spaces.push(SpaceSpec::new(kind, n, None).expect("valid sweep parameters"));
        }
    }
    spaces
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    if args.max_n == 0 {
        return usage_error("--max-n must be at least 1");
    }
    let max_m = args.max_m.unwrap_or(args.max_n);
    if max_m == 0 {
        return usage_error("--max-m must be at least 1");
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => return usage_error(&format!("cannot build worker pool: {e}")),
    };
    let spaces = sweep_spaces(args.max_n, max_m);
    let reports: Vec<VerificationReport> =
        pool.install(|| spaces.par_iter().map(verify_space).collect());
    let mut wires: Vec<WireReport> = reports.iter().map(|r| wire_report(r, None)).collect();
    // Parallel collection already preserves input order; the explicit
    // sort makes the canonical order a contract rather than an accident.
    wires.sort_by(|a, b| {
        (kind_rank(&a.space.kind), a.space.n, a.space.m)
            .cmp(&(kind_rank(&b.space.kind), b.space.n, b.space.m))
    });
    let passed = wires.iter().filter(|w| w.pass).count();
    let failed = wires.len() - passed;
    let doc = WireSweep {
        schema_version: SCHEMA_VERSION,
        max_n: args.max_n,
        max_m,
        total: wires.len(),
        passed,
        failed,
        reports: wires,
    };
    let text = match args.format {
        Format::Json => json_text(&doc),
        Format::Md => sweep_markdown(&doc),
    };
    if let Err(msg) = deliver(&text, args.out.as_deref()) {
        return usage_error(&msg);
    }
    i32::from(failed != 0)
}

fn cmd_coindex(args: SpaceArgs) -> i32 {
    let space = match space_from_args(&args) {
        Ok(space) => space,
        Err(msg) => return usage_error(&msg),
    };
    match map_nonexistence_bound(&space) {
        Ok(bound) => {
            println!(
                "{space}: co-index {}; no equivariant map from the k-sphere for k >= {}",
                bound.coindex, bound.forbidden_from
            );
            println!(
                "index of the involution: at most {} (index <= co-index)",
                bound.coindex
            );
            println!("certificate: {}", bound.certificate);
            0
        }
        Err(TheoremError::NoFreeAction(reason)) => {
            println!("{space}: no free involution exists ({reason})");
            0
        }
        Err(e) => usage_error(&e.to_string()),
    }
}
