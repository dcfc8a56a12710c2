//! `plandist` — command-line front end for the distance-parameter engine.
//!
//! Subcommands: `params` (σ, π, ρ, radius, diameter of one graph), `family`
//! (generate a named family member), `classify` (class flags + κ), `lemmas`
//! (active-vertex lemma checks), `check` (every applicable bound with a
//! verdict), `enumerate` (stream a catalog), and `sweep` (verify all bounds
//! across a class up to an order, with optional checkpointing).
//!
//! Exit status: 0 on success, 1 on usage/input errors (one-line diagnostics
//! naming the offending field), 2 when a mathematical finding — a bound
//! VIOLATION or a lemma failure — was detected, so CI can gate on it.
//!
//! All reports are deterministic: identical invocations (including `--seed`)
//! emit byte-identical artifacts. Rationals appear as exact `num`/`den`
//! integer pairs plus a display-only `decimal` convenience field.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use plandist::bounds::{check_bounds, BoundReport};
use plandist::canon::canonical_code;
use plandist::connectivity::vertex_connectivity;
use plandist::enumerate::{
    enumerate_maximal_outerplanar, enumerate_quadrangulations, enumerate_triangulations,
};
use plandist::families::{closed_forms, generate, ClosedForm, FamilyName, FamilySpec};
use plandist::graph6;
use plandist::planar::{check_lemma, classify, ClassFlags, LemmaId, LemmaReport, Verdict};
use plandist::rat::RatJson;
use plandist::sweep::{sweep, sweep_with_checkpoint, SweepClass, SweepOptions, SweepReport};
use plandist::Graph;

#[derive(Parser)]
#[command(
    name = "plandist",
    version,
    about = "Exact distance parameters, bound verification, catalogs, and sweeps \
             for planar graph classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance parameters (status, proximity, remoteness, radius, diameter)
    Params {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Generate a family member and its closed-form parameter values
    Family {
        /// Family name: T, Q, MOP, Gnk, GnkBar, DiamExtremal
        #[arg(long, value_name = "NAME")]
        family: String,
        /// Order n
        #[arg(long)]
        n: usize,
        /// Connectivity parameter κ (Gnk, GnkBar, DiamExtremal)
        #[arg(long)]
        kappa: Option<usize>,
        /// Diameter parameter (DiamExtremal)
        #[arg(long)]
        d: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Class membership flags and vertex connectivity
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check every active-vertex lemma whose class precondition holds
    Lemmas {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate every applicable bound and report verdicts
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Stream the complete catalog of a class at one order
    Enumerate {
        /// Catalog class: maximal_planar, maximal_outerplanar, quadrangulation
        #[arg(long, value_name = "CLASS")]
        class: String,
        /// Order to enumerate
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify all applicable bounds across a class up to an order
    Sweep {
        /// Class: maximal_outerplanar, maximal_planar, quadrangulation,
        /// random_connected
        #[arg(long, value_name = "CLASS")]
        class: String,
        /// Largest order to cover
        #[arg(long, value_name = "N")]
        n_max: usize,
        /// RNG seed (random_connected only)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Total number of random draws (random_connected only)
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Checkpoint file: completed strata are reused on restart
        #[arg(long, value_name = "PATH")]
        resume: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Exactly one of `--in`, `--g6`, `--family` selects the graph.
#[derive(Args)]
struct InputArgs {
    /// Graph6 file with exactly one graph, or `-` for stdin
    #[arg(long = "in", value_name = "PATH")]
    input: Option<String>,
    /// Inline graph6 string
    #[arg(long, value_name = "G6")]
    g6: Option<String>,
    /// Family name: T, Q, MOP, Gnk, GnkBar, DiamExtremal
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
    /// Order n (with --family)
    #[arg(long)]
    n: Option<usize>,
    /// Connectivity parameter κ (with --family Gnk, GnkBar, DiamExtremal)
    #[arg(long)]
    kappa: Option<usize>,
    /// Diameter parameter (with --family DiamExtremal)
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the artifact here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    G6,
    Text,
}

impl Format {
    fn as_str(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::G6 => "g6",
            Format::Text => "text",
        }
    }
}

/// One-line diagnostics; always exit status 1.
struct CliError(String);

fn fail(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

/// Whether a run surfaced a mathematical finding (exit status 2).
#[derive(PartialEq)]
enum Finding {
    Clean,
    Flagged,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help/--version print to stdout and are not errors.
            let status = u8::from(err.use_stderr());
            let _ = err.print();
            return ExitCode::from(status);
        }
    };
    match run(cli.command) {
        Ok(Finding::Clean) => ExitCode::SUCCESS,
        Ok(Finding::Flagged) => ExitCode::from(2),
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<Finding, CliError> {
    match command {
        Command::Params { input, output } => cmd_params(&input, &output),
        Command::Family {
            family,
            n,
            kappa,
            d,
            output,
        } => cmd_family(&family, n, kappa, d, &output),
        Command::Classify { input, output } => cmd_classify(&input, &output),
        Command::Lemmas { input, output } => cmd_lemmas(&input, &output),
        Command::Check { input, output } => cmd_check(&input, &output),
        Command::Enumerate { class, n, output } => cmd_enumerate(&class, n, &output),
        Command::Sweep {
            class,
            n_max,
            seed,
            samples,
            resume,
            output,
        } => cmd_sweep(&class, n_max, seed, samples, resume.as_deref(), &output),
    }
}

// ---------------------------------------------------------------------------
// Input plumbing
// ---------------------------------------------------------------------------

/// Resolves the one graph named by `--in`/`--g6`/`--family`, connected.
fn resolve_graph(args: &InputArgs) -> Result<Graph, CliError> {
    let sources =
        usize::from(args.input.is_some()) + usize::from(args.g6.is_some()) + usize::from(args.family.is_some());
    if sources != 1 {
        return Err(fail(
            "exactly one of --in, --g6, --family must be given",
        ));
    }
    if args.family.is_none() {
        for (flag, given) in [
            ("--n", args.n.is_some()),
            ("--kappa", args.kappa.is_some()),
            ("--d", args.d.is_some()),
        ] {
            if given {
                return Err(fail(format!("{flag} is only valid together with --family")));
            }
        }
    }

    let graph = if let Some(path) = &args.input {
        let text = read_input(path)?;
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let first = lines
            .next()
            .ok_or_else(|| fail(format!("--in {path}: no graph6 line found")))?;
        if lines.next().is_some() {
            return Err(fail(format!(
                "--in {path}: multiple graph6 lines; this command takes exactly one graph"
            )));
        }
        graph6::decode(first.trim()).map_err(|e| fail(format!("--in {path}: {e}")))?
    } else if let Some(g6) = &args.g6 {
        graph6::decode(g6.trim()).map_err(|e| fail(format!("--g6: {e}")))?
    } else {
        let spec = family_spec(
            args.family.as_deref().expect("family source chosen"),
            args.n,
            args.kappa,
            args.d,
        )?;
        generate(&spec).map_err(|e| fail(format!("--family: {e}")))?.graph
    };

    if !graph.is_connected() {
        return Err(fail("input graph is disconnected; this command requires a connected graph"));
    }
    Ok(graph)
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| fail(format!("--in -: cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| fail(format!("--in {path}: {e}")))
    }
}

fn family_spec(
    family: &str,
    n: Option<usize>,
    kappa: Option<usize>,
    d: Option<usize>,
) -> Result<FamilySpec, CliError> {
    let name = FamilyName::from_str(family).map_err(|e| fail(format!("--family: {e}")))?;
    let n = n.ok_or_else(|| fail("--n is required together with --family"))?;
    let spec = FamilySpec { name, n, kappa, d };
    spec.validate().map_err(|e| fail(format!("--family: {e}")))?;
    Ok(spec)
}

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

fn pick_format(output: &OutputArgs, default: Format, allowed: &[Format], command: &str) -> Result<Format, CliError> {
    let format = output.format.unwrap_or(default);
    if !allowed.contains(&format) {
        let names: Vec<&str> = allowed.iter().map(|f| f.as_str()).collect();
        return Err(fail(format!(
            "--format {} is not valid for {command}; expected one of {}",
            format.as_str(),
            names.join(", ")
        )));
    }
    Ok(format)
}

fn emit(output: &OutputArgs, mut content: String) -> Result<(), CliError> {
    if !content.ends_with('\n') {
        content.push('\n');
    }
    match &output.out {
        Some(path) => fs::write(path, content)
            .map_err(|e| fail(format!("--out {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| fail(format!("JSON encoding failed: {e}")))
}

/// Runs `fill` against a fresh CSV writer and returns the built document.
fn csv_document<F>(fill: F) -> Result<String, CliError>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<(), csv::Error>,
{
    let mut writer = csv::Writer::from_writer(Vec::new());
    fill(&mut writer).map_err(|e| fail(format!("CSV encoding failed: {e}")))?;
    let bytes = writer
        .into_inner()
        .map_err(|e| fail(format!("CSV encoding failed: {e}")))?;
    String::from_utf8(bytes).map_err(|e| fail(format!("CSV encoding failed: {e}")))
}

fn rat_text(r: plandist::Rat) -> String {
    r.to_string()
}

// ---------------------------------------------------------------------------
// params
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ParamsOut {
    graph6: String,
    n: usize,
    m: usize,
    kappa: usize,
    radius: usize,
    diameter: usize,
    proximity: RatJson,
    remoteness: RatJson,
    median_vertices: Vec<usize>,
    remote_vertices: Vec<usize>,
    status: Vec<u64>,
}

fn cmd_params(input: &InputArgs, output: &OutputArgs) -> Result<Finding, CliError> {
    let format = pick_format(output, Format::Text, &[Format::Json, Format::Csv, Format::Text], "params")?;
    let graph = resolve_graph(input)?;
    let summary = graph
        .param_summary()
        .map_err(|e| fail(format!("cannot compute parameters: {e}")))?;
    let report = ParamsOut {
        graph6: graph6::encode(&graph),
        n: summary.n,
        m: graph.edge_count(),
        kappa: vertex_connectivity(&graph).kappa,
        radius: summary.radius,
        diameter: summary.diameter,
        proximity: RatJson::from(summary.proximity),
        remoteness: RatJson::from(summary.remoteness),
        median_vertices: summary.median_vertices.clone(),
        remote_vertices: summary.remote_vertices.clone(),
        status: summary.status.clone(),
    };

    let content = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => csv_document(|w| {
            w.write_record([
                "graph6",
                "n",
                "m",
                "kappa",
                "radius",
                "diameter",
                "proximity_num",
                "proximity_den",
                "remoteness_num",
                "remoteness_den",
            ])?;
            w.write_record([
                report.graph6.clone(),
                report.n.to_string(),
                report.m.to_string(),
                report.kappa.to_string(),
                report.radius.to_string(),
                report.diameter.to_string(),
                report.proximity.num.to_string(),
                report.proximity.den.to_string(),
                report.remoteness.num.to_string(),
                report.remoteness.den.to_string(),
            ])
        })?,
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "graph: {} ({} vertices, {} edges)", report.graph6, report.n, report.m);
            let _ = writeln!(s, "kappa: {}", report.kappa);
            let _ = writeln!(s, "radius: {}", report.radius);
            let _ = writeln!(s, "diameter: {}", report.diameter);
            let _ = writeln!(
                s,
                "proximity: {} ({})",
                rat_text(summary.proximity),
                report.proximity.decimal()
            );
            let _ = writeln!(
                s,
                "remoteness: {} ({})",
                rat_text(summary.remoteness),
                report.remoteness.decimal()
            );
            let _ = writeln!(s, "median vertices: {:?}", report.median_vertices);
            let _ = writeln!(s, "remote vertices: {:?}", report.remote_vertices);
            s
        }
        Format::G6 => unreachable!("rejected by pick_format"),
    };
    emit(output, content)?;
    Ok(Finding::Clean)
}

// ---------------------------------------------------------------------------
// family
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ClosedFormOut {
    value: RatJson,
    provenance: plandist::families::Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    computed: Option<RatJson>,
}

impl ClosedFormOut {
    fn new(form: &ClosedForm) -> Self {
        ClosedFormOut {
            value: RatJson::from(form.value),
            provenance: form.provenance,
            computed: form.computed.map(RatJson::from),
        }
    }
}

#[derive(Serialize)]
struct FamilyOut {
    family: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    graph6: String,
    labels: BTreeMap<String, usize>,
    closed_forms: BTreeMap<&'static str, ClosedFormOut>,
}

fn cmd_family(
    family: &str,
    n: usize,
    kappa: Option<usize>,
    d: Option<usize>,
    output: &OutputArgs,
) -> Result<Finding, CliError> {
    let format = pick_format(output, Format::G6, &[Format::G6, Format::Json, Format::Text], "family")?;
    let spec = family_spec(family, Some(n), kappa, d)?;
    let member = generate(&spec).map_err(|e| fail(format!("--family: {e}")))?;
    let forms = closed_forms(&spec).map_err(|e| fail(format!("--family: {e}")))?;
    let g6 = graph6::encode(&member.graph);

    let content = match format {
        Format::G6 => g6,
        Format::Json => {
            let mut form_map = BTreeMap::new();
            for (key, form) in [
                ("rad", &forms.rad),
                ("diam", &forms.diam),
                ("pi", &forms.pi),
                ("rho", &forms.rho),
            ] {
                if let Some(form) = form {
                    form_map.insert(key, ClosedFormOut::new(form));
                }
            }
            to_json(&FamilyOut {
                family: spec.name.to_string(),
                n: spec.n,
                kappa: spec.kappa,
                d: spec.d,
                graph6: g6,
                labels: member.labels.clone(),
                closed_forms: form_map,
            })?
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{spec}");
            let _ = writeln!(
                s,
                "graph: {} ({} vertices, {} edges)",
                g6,
                member.graph.n(),
                member.graph.edge_count()
            );
            for (key, form) in [
                ("rad", &forms.rad),
                ("diam", &forms.diam),
                ("pi", &forms.pi),
                ("rho", &forms.rho),
            ] {
                match form {
                    Some(form) => match form.computed {
                        None => {
                            let _ = writeln!(s, "{key}: {}", rat_text(form.value));
                        }
                        Some(computed) => {
                            let _ = writeln!(
                                s,
                                "{key}: recorded {} vs computed {} (known discrepancy)",
                                rat_text(form.value),
                                rat_text(computed)
                            );
                        }
                    },
                    None => {
                        let _ = writeln!(s, "{key}: (no closed form recorded)");
                    }
                }
            }
            let labels: Vec<String> = member
                .labels
                .iter()
                .map(|(name, v)| format!("{name}={v}"))
                .collect();
            let _ = writeln!(s, "labels: {}", labels.join(" "));
            s
        }
        Format::Csv => unreachable!("rejected by pick_format"),
    };
    emit(output, content)?;
    Ok(Finding::Clean)
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ClassifyOut {
    graph6: String,
    n: usize,
    m: usize,
    kappa: usize,
    flags: ClassFlags,
}

fn cmd_classify(input: &InputArgs, output: &OutputArgs) -> Result<Finding, CliError> {
    let format = pick_format(output, Format::Text, &[Format::Json, Format::Csv, Format::Text], "classify")?;
    let graph = resolve_graph(input)?;
    let report = ClassifyOut {
        graph6: graph6::encode(&graph),
        n: graph.n(),
        m: graph.edge_count(),
        kappa: vertex_connectivity(&graph).kappa,
        flags: classify(&graph),
    };

    let flag_rows = [
        ("planar", report.flags.planar),
        ("outerplanar", report.flags.outerplanar),
        ("bipartite", report.flags.bipartite),
        ("maximal_planar", report.flags.maximal_planar),
        ("quadrangulation", report.flags.quadrangulation),
        ("maximal_outerplanar", report.flags.maximal_outerplanar),
    ];
    let content = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => csv_document(|w| {
            let mut header = vec!["graph6", "n", "m", "kappa"];
            header.extend(flag_rows.iter().map(|(name, _)| *name));
            w.write_record(&header)?;
            let mut row = vec![
                report.graph6.clone(),
                report.n.to_string(),
                report.m.to_string(),
                report.kappa.to_string(),
            ];
            row.extend(flag_rows.iter().map(|(_, v)| v.to_string()));
            w.write_record(&row)
        })?,
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "graph: {} ({} vertices, {} edges)", report.graph6, report.n, report.m);
            let _ = writeln!(s, "kappa: {}", report.kappa);
            for (name, value) in flag_rows {
                let _ = writeln!(s, "{name}: {}", if value { "yes" } else { "no" });
            }
            s
        }
        Format::G6 => unreachable!("rejected by pick_format"),
    };
    emit(output, content)?;
    Ok(Finding::Clean)
}

// ---------------------------------------------------------------------------
// lemmas
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct LemmaOut {
    lemma: String,
    /// `checked` or `skipped` (class precondition not met).
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pairs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failures: Option<Vec<LemmaReport>>,
}

#[derive(Serialize)]
struct LemmasOut {
    graph6: String,
    lemmas: Vec<LemmaOut>,
}

fn cmd_lemmas(input: &InputArgs, output: &OutputArgs) -> Result<Finding, CliError> {
    let format = pick_format(output, Format::Text, &[Format::Json, Format::Csv, Format::Text], "lemmas")?;
    let graph = resolve_graph(input)?;

    let mut rows = Vec::new();
    let mut any_failure = false;
    for lemma in LemmaId::ALL {
        match check_lemma(&graph, lemma) {
            Err(err) => rows.push(LemmaOut {
                lemma: lemma.to_string(),
                outcome: "skipped",
                reason: Some(err.to_string()),
                pairs: None,
                failures: None,
            }),
            Ok(reports) => {
                let failures: Vec<LemmaReport> = reports
                    .iter()
                    .filter(|r| r.verdict == Verdict::Fail)
                    .cloned()
                    .collect();
                any_failure |= !failures.is_empty();
                rows.push(LemmaOut {
                    lemma: lemma.to_string(),
                    outcome: "checked",
                    reason: None,
                    pairs: Some(reports.len()),
                    failures: Some(failures),
                });
            }
        }
    }

    let content = match format {
        Format::Json => to_json(&LemmasOut {
            graph6: graph6::encode(&graph),
            lemmas: rows,
        })?,
        Format::Csv => csv_document(|w| {
            w.write_record(["lemma", "outcome", "pairs", "failures", "reason"])?;
            for row in &rows {
                w.write_record([
                    row.lemma.clone(),
                    row.outcome.to_string(),
                    row.pairs.map_or(String::new(), |p| p.to_string()),
                    row.failures
                        .as_ref()
                        .map_or(String::new(), |f| f.len().to_string()),
                    row.reason.clone().unwrap_or_default(),
                ])?;
            }
            Ok(())
        })?,
        Format::Text => {
            let mut s = String::new();
            for row in &rows {
                match row.outcome {
                    "skipped" => {
                        let _ = writeln!(
                            s,
                            "{}: skipped — {}",
                            row.lemma,
                            row.reason.as_deref().unwrap_or("precondition not met")
                        );
                    }
                    _ => {
                        let failures = row.failures.as_ref().expect("checked rows carry failures");
                        if failures.is_empty() {
                            let _ = writeln!(
                                s,
                                "{}: pass ({} root/level pairs)",
                                row.lemma,
                                row.pairs.unwrap_or(0)
                            );
                        } else {
                            let first = &failures[0];
                            let _ = writeln!(
                                s,
                                "{}: FAIL ({} of {} root/level pairs; first at root {} level {}, counterexample {:?})",
                                row.lemma,
                                failures.len(),
                                row.pairs.unwrap_or(0),
                                first.root,
                                first.level,
                                first.counterexample.as_deref().unwrap_or(&[])
                            );
                        }
                    }
                }
            }
            s
        }
        Format::G6 => unreachable!("rejected by pick_format"),
    };
    emit(output, content)?;
    Ok(if any_failure { Finding::Flagged } else { Finding::Clean })
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

fn cmd_check(input: &InputArgs, output: &OutputArgs) -> Result<Finding, CliError> {
    let format = pick_format(output, Format::Text, &[Format::Json, Format::Csv, Format::Text], "check")?;
    let graph = resolve_graph(input)?;
    let report: BoundReport = check_bounds(&graph);

    let content = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => csv_document(|w| {
            w.write_record([
                "id",
                "quantity",
                "value_num",
                "value_den",
                "computed_num",
                "computed_den",
                "verdict",
                "quarantined",
            ])?;
            for outcome in &report.applicable {
                w.write_record([
                    outcome.id.to_string(),
                    outcome.quantity.as_str().to_string(),
                    outcome.value.numer().to_string(),
                    outcome.value.denom().to_string(),
                    outcome.computed.numer().to_string(),
                    outcome.computed.denom().to_string(),
                    outcome.verdict.as_str().to_string(),
                    outcome.quarantined.to_string(),
                ])?;
            }
            Ok(())
        })?,
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "graph: {}", report.graph_id);
            for outcome in &report.applicable {
                let _ = writeln!(
                    s,
                    "{:<18} {:<18} bound {:<8} computed {:<8} {}{}",
                    outcome.id,
                    outcome.quantity.as_str(),
                    rat_text(outcome.value),
                    rat_text(outcome.computed),
                    outcome.verdict.as_str(),
                    if outcome.quarantined { " [quarantined]" } else { "" }
                );
            }
            for note in &report.discrepancy_notes {
                let _ = writeln!(s, "note: {note}");
            }
            s
        }
        Format::G6 => unreachable!("rejected by pick_format"),
    };
    emit(output, content)?;
    Ok(if report.violations().is_empty() {
        Finding::Clean
    } else {
        Finding::Flagged
    })
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct EnumerateOut {
    class: String,
    n: usize,
    count: usize,
    graphs: Vec<String>,
}

fn cmd_enumerate(class: &str, n: usize, output: &OutputArgs) -> Result<Finding, CliError> {
    let format = pick_format(output, Format::G6, &[Format::G6, Format::Json, Format::Text], "enumerate")?;
    let class = SweepClass::from_str(class).map_err(|e| fail(format!("--class: {e}")))?;
    let members = match class {
        SweepClass::MaximalPlanar => enumerate_triangulations(n),
        SweepClass::MaximalOuterplanar => enumerate_maximal_outerplanar(n),
        SweepClass::Quadrangulation => enumerate_quadrangulations(n),
        SweepClass::RandomConnected => {
            return Err(fail(
                "--class: random_connected is not a finite catalog; use `sweep` to sample it",
            ));
        }
    };
    let members = members.map_err(|e| fail(format!("--n: {e}")))?;
    let codes: Vec<String> = members.iter().map(|g| canonical_code(g).0).collect();

    let content = match format {
        Format::G6 => codes.join("\n"),
        Format::Json => to_json(&EnumerateOut {
            class: class.to_string(),
            n,
            count: codes.len(),
            graphs: codes,
        })?,
        Format::Text => {
            let mut s = format!("{class} at n = {n}: {} members\n", codes.len());
            for code in &codes {
                let _ = writeln!(s, "{code}");
            }
            s
        }
        Format::Csv => unreachable!("rejected by pick_format"),
    };
    emit(output, content)?;
    Ok(Finding::Clean)
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

fn cmd_sweep(
    class: &str,
    n_max: usize,
    seed: u64,
    samples: usize,
    resume: Option<&std::path::Path>,
    output: &OutputArgs,
) -> Result<Finding, CliError> {
    let format = pick_format(output, Format::Json, &[Format::Json, Format::Csv, Format::Text], "sweep")?;
    let class = SweepClass::from_str(class).map_err(|e| fail(format!("--class: {e}")))?;
    let options = SweepOptions {
        class,
        n_max,
        seed,
        samples,
    };
    let report: SweepReport = match resume {
        Some(path) => sweep_with_checkpoint(&options, path),
        None => sweep(&options),
    }
    .map_err(|e| fail(format!("sweep failed: {e}")))?;

    let content = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => csv_document(|w| {
            w.write_record([
                "class",
                "n",
                "members",
                "id",
                "quantity",
                "quarantined",
                "applicable",
                "max_computed_num",
                "max_computed_den",
                "equality_count",
                "violation_count",
                "certificates",
                "equality_witnesses",
                "violations",
            ])?;
            for stratum in &report.strata {
                for agg in &stratum.bounds {
                    w.write_record([
                        report.class.to_string(),
                        stratum.n.to_string(),
                        stratum.count.to_string(),
                        agg.id.clone(),
                        agg.quantity.clone(),
                        agg.quarantined.to_string(),
                        agg.applicable.to_string(),
                        agg.max_computed.num.to_string(),
                        agg.max_computed.den.to_string(),
                        agg.equality_count.to_string(),
                        agg.violation_count.to_string(),
                        agg.certificates.join(";"),
                        agg.equality_witnesses.join(";"),
                        agg.violations.join(";"),
                    ])?;
                }
            }
            Ok(())
        })?,
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "class: {}", report.class);
            let _ = writeln!(s, "n_max: {}", report.n_max);
            if let Some(seed) = report.seed {
                let _ = writeln!(s, "seed: {seed}");
            }
            if let Some(samples) = report.samples {
                let _ = writeln!(s, "samples: {samples}");
            }
            let _ = writeln!(s, "total members: {}", report.total_count);
            for stratum in &report.strata {
                let _ = writeln!(s, "  n = {}: {} members", stratum.n, stratum.count);
            }
            let violations = report.violations();
            if violations.is_empty() {
                let _ = writeln!(s, "violations: none");
            } else {
                for (id, n, code) in &violations {
                    let _ = writeln!(s, "VIOLATION {id} at n = {n}: {code}");
                }
            }
            s
        }
        Format::G6 => unreachable!("rejected by pick_format"),
    };
    emit(output, content)?;
    Ok(if report.violations().is_empty() {
        Finding::Clean
    } else {
        Finding::Flagged
    })
}
