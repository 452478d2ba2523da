//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns the process exit status:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | usage error (bad flags or configuration) |
//! | 2 | data error (unreadable or unsuitable input) |
//! | 3 | `proto --verify` found non-matching messages |

pub mod bench;

use std::ffi::OsString;
use std::fs::OpenOptions;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::baseline::Scoring;
use crate::corpus::{generate_synthetic, load, Corpus, InputFormat, Template};
use crate::error::Error;
use crate::gst::Gst;
use crate::metrics::{sp_edit_distance, AlignmentReport};
use crate::msalign::{
    align_with_stats, compile_skeleton, regex_skeleton, render, Alignment, StrategyConfig,
    StrategyKind,
};
use bench::{run_bench, Algorithm, BenchPlan, DEFAULT_COUNTS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "gstalign",
    version,
    about = "Suffix-tree multiple alignment of short messages"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Align every message of a file and print the gapped rows or the anchor chain.
    Align(AlignArgs),
    /// Time the aligners on growing prefixes of a corpus.
    Bench(BenchArgs),
    /// Print a regular-expression prototype of the messages.
    Proto(ProtoArgs),
    /// Show the generalized suffix tree and its multi sub-words.
    Gst(GstArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Message file.
    input: PathBuf,
    /// How the file encodes messages.
    #[arg(long, value_enum, default_value_t = InputFormat::Raw)]
    mode: InputFormat,
    /// Use only the first N messages.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Debug, Args)]
struct StrategyArgs {
    /// Anchor selection strategy.
    #[arg(long, value_enum, default_value_t = StrategyKind::BiggestLeftMost)]
    strategy: StrategyKind,
    /// Candidate pool of min_variance.
    #[arg(long, default_value_t = 9)]
    n_largest: usize,
    /// Ignore common sub-words shorter than this.
    #[arg(long, default_value_t = 1)]
    min_anchor_len: usize,
    /// min_variance skips sub-words with more occurrence combinations.
    #[arg(long, default_value_t = 10_000)]
    combination_cap: u64,
}

impl StrategyArgs {
    fn config(&self) -> StrategyConfig {
        StrategyConfig {
            kind: self.strategy,
            n_largest: self.n_largest,
            min_anchor_len: self.min_anchor_len,
            combination_cap: self.combination_cap,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct AlignArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    strategy: StrategyArgs,
    /// Symbol printed for gaps (one ASCII character).
    #[arg(long, default_value_t = '*')]
    gap_char: char,
    /// Print spaces inside messages as '␣' so padding stands out from gaps.
    #[arg(long)]
    show_spaces: bool,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    out: OutFormat,
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Message file; omit when using --gen.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Raw)]
    mode: InputFormat,
    /// Synthetic corpus instead of a file: TEMPLATE:COUNT[:SEED], e.g. ldap_like:200:7.
    #[arg(long, conflicts_with = "input")]
    gen: Option<String>,
    /// Comma separated prefix sizes; "all" means the whole corpus.
    #[arg(long)]
    counts: Option<String>,
    /// Timed runs per algorithm and prefix size.
    #[arg(long, default_value_t = 25)]
    repeats: usize,
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "ms,clustalw_lite"
    )]
    algorithms: Vec<Algorithm>,
    /// Seed for --gen when it has none of its own.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Append one row per run to this CSV file.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[command(flatten)]
    strategy: StrategyArgs,
}

#[derive(Debug, Args)]
struct ProtoArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Minimum constant length; anchors fixed at a message boundary are always kept.
    #[arg(long, default_value_t = 1)]
    min_anchor_len: usize,
    #[arg(long, value_enum, default_value_t = StrategyKind::BiggestLeftMost)]
    strategy: StrategyKind,
    #[arg(long, default_value_t = 9)]
    n_largest: usize,
    /// Check the pattern against every message in the file.
    #[arg(long)]
    verify: bool,
}

#[derive(Debug, Args)]
struct GstArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    out: OutFormat,
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidConfig(_) => EXIT_USAGE,
            _ => EXIT_DATA,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_DATA,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Runs the command line `args` (program name first), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Align(a) => cmd_align(&a, out),
        Command::Bench(b) => cmd_bench(&b, out, err),
        Command::Proto(p) => cmd_proto(&p, out, err),
        Command::Gst(g) => cmd_gst(&g, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load_input(input: &InputArgs) -> std::result::Result<Corpus, Failure> {
    if input.n == Some(0) {
        return Err(Failure::usage("--n must be at least 1"));
    }
    Ok(load(&input.input, input.mode, input.n)?)
}

/// Text rows for display. Printable corpora are shown verbatim; anything
/// else is shown as two hex digits per cell so columns stay aligned.
fn display_rows(aln: &Alignment, corpus: &Corpus, gap: u8, show_spaces: bool) -> Vec<String> {
    let printable = corpus
        .iter()
        .all(|s| s.bytes().iter().all(|b| (0x20..0x7f).contains(b)));
    aln.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell| match (cell, printable) {
                    (None, true) => char::from(gap).to_string(),
                    (None, false) => format!("{0}{0}", char::from(gap)),
                    (Some(b' '), true) if show_spaces => "␣".to_string(),
                    (Some(b), true) => char::from(*b).to_string(),
                    (Some(b), false) => format!("{b:02x}"),
                })
                .collect()
        })
        .collect()
}

fn open_output<'a>(
    path: &Option<PathBuf>,
    out: &'a mut dyn Write,
) -> io::Result<Box<dyn Write + 'a>> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(out),
    })
}

fn cmd_align(args: &AlignArgs, out: &mut dyn Write) -> CmdResult {
    if !args.gap_char.is_ascii() {
        return Err(Failure::usage("--gap-char must be an ASCII character"));
    }
    let gap = args.gap_char as u8;
    let cfg = args.strategy.config();
    cfg.validate()?;
    let corpus = load_input(&args.input)?;

    let start = std::time::Instant::now();
    let (chain, stats) = align_with_stats(&corpus, &cfg)?;
    let elapsed = start.elapsed();
    let aln = render(&corpus, &chain)?;

    let rows = aln.to_rows(gap);
    let report = AlignmentReport {
        algorithm: "ms".into(),
        rows: rows.len(),
        columns: aln.width(),
        sp_edit_distance: sp_edit_distance(&rows, gap)?,
        overlap_chars: chain.overlap_chars(),
        anchor_count: chain.len(),
        msw_count: stats.msw_count,
        elapsed,
    };
    let shown = display_rows(&aln, &corpus, gap, args.show_spaces);

    let mut w = open_output(&args.output, out)?;
    match args.out {
        OutFormat::Text => {
            for r in &shown {
                writeln!(w, "{r}")?;
            }
            writeln!(
                w,
                "# strategy={} n_largest={} min_anchor_len={}",
                cfg.kind, cfg.n_largest, cfg.min_anchor_len
            )?;
            writeln!(
                w,
                "# sequences={} columns={} anchors={} overlap_chars={} sp_edit_distance={} msws={} elapsed_ns={}",
                report.rows,
                report.columns,
                report.anchor_count,
                report.overlap_chars,
                report.sp_edit_distance,
                report.msw_count,
                report.elapsed.as_nanos()
            )?;
        }
        OutFormat::Json => {
            let doc = json!({
                "source": corpus.source(),
                "strategy": cfg,
                "chain": chain,
                "rows": shown,
                "report": report,
            });
            serde_json::to_writer_pretty(&mut w, &doc).map_err(io::Error::from)?;
            writeln!(w)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn parse_gen(
    spec: &str,
    default_seed: u64,
) -> std::result::Result<(Template, usize, u64), Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Failure::usage(format!("--gen expects TEMPLATE:COUNT[:SEED], got '{spec}'"));
    if !(2..=3).contains(&parts.len()) {
        return Err(bad());
    }
    let template: Template = parts[0].parse().map_err(Failure::usage)?;
    let n = parts[1].parse().map_err(|_| bad())?;
    let seed = match parts.get(2) {
        Some(s) => s.parse().map_err(|_| bad())?,
        None => default_seed,
    };
    Ok((template, n, seed))
}

/// Resolves the count schedule against the corpus size. The default
/// schedule silently drops sizes the corpus cannot supply; an explicit one
/// is taken literally.
fn resolve_counts(
    spec: Option<&str>,
    available: usize,
) -> std::result::Result<Vec<usize>, Failure> {
    let mut counts = Vec::new();
    match spec {
        None => {
            counts.extend(DEFAULT_COUNTS.iter().copied().filter(|&c| c <= available));
            counts.push(available);
        }
        Some(s) => {
            for part in s.split(',').map(str::trim) {
                if part == "all" {
                    counts.push(available);
                } else {
                    counts.push(
                        part.parse()
                            .map_err(|_| Failure::usage(format!("bad count '{part}'")))?,
                    );
                }
            }
        }
    }
    counts.dedup();
    Ok(counts)
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let corpus = match (&args.input, &args.gen) {
        (Some(path), None) => load(path, args.mode, None)?,
        (None, Some(spec)) => {
            let (template, n, seed) = parse_gen(spec, args.seed)?;
            generate_synthetic(template, n, seed)?
        }
        _ => return Err(Failure::usage("give an input file or --gen")),
    };
    let plan = BenchPlan {
        counts: resolve_counts(args.counts.as_deref(), corpus.len())?,
        repeats: args.repeats,
        algorithms: args.algorithms.clone(),
        strategy: args.strategy.config(),
        scoring: Scoring::default(),
    };
    plan.validate(&corpus)?;

    let mut csv = match &args.csv {
        Some(path) => Some(open_csv(path)?),
        None => None,
    };
    let mut csv_error = None;
    let summary = run_bench(&corpus, &plan, |report, repeat| {
        let _ = writeln!(
            err,
            "{} n={} repeat={} {:.3} ms",
            report.algorithm,
            report.rows,
            repeat,
            report.elapsed.as_secs_f64() * 1e3
        );
        if let Some(f) = csv.as_mut() {
            if let Err(e) = writeln!(f, "{}", report.csv_row(repeat)) {
                csv_error.get_or_insert(e);
            }
        }
    })?;
    if let Some(e) = csv_error {
        return Err(e.into());
    }
    if let Some(mut f) = csv {
        f.flush()?;
    }
    writeln!(
        out,
        "corpus: {} ({} messages)",
        corpus.source(),
        corpus.len()
    )?;
    write!(out, "{summary}")?;
    Ok(())
}

/// Opens `path` for appending, writing the header only to a new or empty
/// file.
fn open_csv(path: &Path) -> io::Result<io::BufWriter<std::fs::File>> {
    let f = OpenOptions::new().create(true).append(true).open(path)?;
    let empty = f.metadata()?.len() == 0;
    let mut w = io::BufWriter::new(f);
    if empty {
        writeln!(w, "{}", AlignmentReport::CSV_HEADER)?;
    }
    Ok(w)
}

fn cmd_proto(args: &ProtoArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let emit = StrategyConfig {
        kind: args.strategy,
        n_largest: args.n_largest,
        min_anchor_len: args.min_anchor_len,
        ..Default::default()
    };
    emit.validate()?;
    // align with every anchor; the length threshold only applies to emission
    let cfg = StrategyConfig {
        min_anchor_len: 1,
        ..emit.clone()
    };
    let corpus = load_input(&args.input)?;
    let pattern = if corpus.len() == 1 {
        let whole = crate::msalign::AnchorChain {
            anchors: vec![crate::msalign::Anchor::new(
                corpus.sequences()[0].bytes(),
                vec![0],
            )],
        };
        regex_skeleton(&whole, &corpus, &emit)
    } else {
        let (chain, _) = align_with_stats(&corpus, &cfg)?;
        regex_skeleton(&chain, &corpus, &emit)
    };
    writeln!(out, "{pattern}")?;

    if args.verify {
        let all = load(&args.input.input, args.input.mode, None)?;
        let re = compile_skeleton(&pattern)?;
        let failed: Vec<usize> = all
            .iter()
            .filter(|s| !re.is_match(s.bytes()))
            .map(|s| all.line_of(s.id()).unwrap_or(s.id() + 1))
            .collect();
        if !failed.is_empty() {
            let list: Vec<String> = failed.iter().map(usize::to_string).collect();
            return Err(Failure {
                code: EXIT_VERIFY,
                message: format!(
                    "{} of {} messages do not match; lines {}",
                    failed.len(),
                    all.len(),
                    list.join(", ")
                ),
            });
        }
        writeln!(err, "verified: all {} messages match", all.len())?;
    }
    Ok(())
}

fn cmd_gst(args: &GstArgs, out: &mut dyn Write) -> CmdResult {
    let corpus = load_input(&args.input)?;
    corpus.require(2)?;
    let report = Gst::build(&corpus)?.report();
    match args.out {
        OutFormat::Text => write!(out, "{report}")?,
        OutFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &report).map_err(io::Error::from)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
