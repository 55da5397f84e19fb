use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use franklin_core::{
    band_profile, builtin_fixtures, fixture, franklin_cells, search_most_perfect, theta,
    verify_all, CheckOptions, Classification, Direction, Family, GeneratorConfig, Partitions,
    PatternSpec, PropertyReport, TypeParams,
};
use serde::Serialize;

use crate::document::{Format, SquareDocument, SCHEMA};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "franklin-forge",
    version,
    about = "Build and verify Franklin and most-perfect squares"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a most-perfect square of order p^r.
    Construct(ConstructArgs),
    /// Apply the block-digit involution θ.
    Theta(ThetaArgs),
    /// Print the cells of a Franklin pattern, or its sum over a square.
    Pattern(PatternArgs),
    /// Check every property and classify a square.
    Verify(VerifyArgs),
    /// List or export the embedded reference squares.
    Fixtures(FixturesArgs),
    /// Human-readable certificate with band-sum diagnostics.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    DigitLinear,
    FixturesOnly,
}

#[derive(Debug, Args)]
struct InputArg {
    /// Input square (JSON or CSV); `-` or absent reads stdin.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output file; stdout when absent.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    r: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = franklin_core::construct::DEFAULT_MAX_ATTEMPTS)]
    max_attempts: usize,
    #[arg(long, value_enum, default_value_t = FamilyArg::DigitLinear)]
    family: FamilyArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct ThetaArgs {
    #[arg(long)]
    p: usize,
    #[command(flatten)]
    input: InputArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct PatternArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    direction: Direction,
    #[arg(long)]
    alpha: usize,
    #[arg(long, default_value_t = 0)]
    offset: usize,
    /// Print the cells as `[row, col]` pairs (default).
    #[arg(long, conflicts_with = "sum")]
    cells: bool,
    /// Print the sum of the pattern over the input square.
    #[arg(long)]
    sum: bool,
    #[command(flatten)]
    input: InputArg,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    p: usize,
    #[command(flatten)]
    input: InputArg,
    /// Check Franklin patterns for a single partition α only.
    #[arg(long, value_name = "ALPHA")]
    weakened: Option<usize>,
    /// Also require complementary sums along broken anti-diagonals.
    #[arg(long)]
    anti_complementary: bool,
    /// Emit the certificate as JSON.
    #[arg(long)]
    json: bool,
    /// Exit 0 only if every requirement of this label passes; default is any label.
    #[arg(long, value_name = "CLASS")]
    expect: Option<Classification>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct FixturesSelect {
    #[arg(long)]
    list: bool,
    #[arg(long, value_name = "NAME")]
    export: Option<String>,
}

#[derive(Debug, Args)]
struct FixturesArgs {
    #[command(flatten)]
    select: FixturesSelect,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct ReportArgs {
    #[arg(long)]
    p: usize,
    #[command(flatten)]
    input: InputArg,
    #[arg(long, value_name = "ALPHA")]
    weakened: Option<usize>,
}

/// Streams used by a single invocation.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, io: Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = io.stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = io.stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    match dispatch(cli.command, io.stdin, io.stdout, io.stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    match command {
        Command::Construct(a) => construct(a, stdout, stderr),
        Command::Theta(a) => {
            let doc = read_document(&a.input, stdin, stderr)?;
            theta_command(a, doc, stdout)
        }
        Command::Pattern(a) => pattern(a, stdin, stdout, stderr),
        Command::Verify(a) => {
            let doc = read_document(&a.input, stdin, stderr)?;
            verify(a, doc, stdout)
        }
        Command::Fixtures(a) => fixtures(a, stdout),
        Command::Report(a) => {
            let doc = read_document(&a.input, stdin, stderr)?;
            report(a, doc, stdout)
        }
    }
}

fn read_document(
    input: &InputArg,
    stdin: &mut dyn Read,
    stderr: &mut dyn Write,
) -> Result<SquareDocument, CliError> {
    let text = match &input.input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?,
        _ => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            text
        }
    };
    let doc = SquareDocument::parse_auto(&text)?;
    if let Some(warning) = doc.natural_warning() {
        writeln!(stderr, "warning: {warning}")?;
    }
    Ok(doc)
}

fn write_output(output: &OutputArgs, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn params_for(p: usize, doc: &SquareDocument) -> Result<TypeParams, CliError> {
    Ok(TypeParams::new(p, doc.order)?)
}

fn construct(
    a: ConstructArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    let config = GeneratorConfig {
        max_attempts: a.max_attempts,
        family: match a.family {
            FamilyArg::DigitLinear => Family::DigitLinear,
            FamilyArg::FixturesOnly => Family::FixturesOnly,
        },
        ..GeneratorConfig::new(a.p, a.r, a.seed)
    };
    let outcome = search_most_perfect(&config)?;
    writeln!(stderr, "found after {} candidate(s)", outcome.attempts)?;
    let mut doc = SquareDocument::new(outcome.square.into_grid())?;
    doc.p = Some(a.p);
    doc.r = Some(a.r);
    let generator = match a.family {
        FamilyArg::DigitLinear => "digit_linear",
        FamilyArg::FixturesOnly => "fixtures_only",
    };
    doc.metadata.insert("generator".into(), generator.into());
    doc.metadata.insert("seed".into(), a.seed.to_string());
    doc.metadata
        .insert("attempts".into(), outcome.attempts.to_string());
    if let Some(c) = &outcome.candidate {
        let rows: Vec<String> = c
            .matrix()
            .iter()
            .map(|row| {
                row.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        doc.metadata.insert("matrix".into(), rows.join("; "));
        let offset: Vec<String> = c.offset().iter().map(usize::to_string).collect();
        doc.metadata.insert("offset".into(), offset.join(" "));
    }
    write_output(&a.output, &doc.emit(a.output.format.into()), stdout)
}

fn theta_command(
    a: ThetaArgs,
    doc: SquareDocument,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let params = params_for(a.p, &doc)?;
    let image = theta(&doc.grid, &params)?;
    let mut out = SquareDocument {
        grid: image,
        p: Some(a.p),
        k: params.franklin_multiplier(),
        ..doc
    };
    let step = format!("theta(p={})", a.p);
    out.metadata
        .entry("transform".into())
        .and_modify(|t| {
            t.push(';');
            t.push_str(&step);
        })
        .or_insert(step);
    write_output(&a.output, &out.emit(a.output.format.into()), stdout)
}

fn pattern(
    a: PatternArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    let params = TypeParams::franklin(a.p, a.k)?;
    let spec = PatternSpec::new(params, a.direction, a.alpha, a.offset)?;
    let cells = franklin_cells(&spec)?;
    if a.sum {
        let doc = read_document(&a.input, stdin, stderr)?;
        if doc.order != params.n() {
            return Err(CliError::Input(format!(
                "pattern needs a square of order {}, input has order {}",
                params.n(),
                doc.order
            )));
        }
        writeln!(stdout, "{}", cells.sum(&doc.grid))?;
    } else {
        let pairs: Vec<[usize; 2]> = cells.iter().map(|(r, c)| [r, c]).collect();
        let json = serde_json::to_string(&pairs).map_err(|e| CliError::Input(e.to_string()))?;
        writeln!(stdout, "{json}")?;
    }
    Ok(())
}

fn options(weakened: Option<usize>, anti: bool) -> CheckOptions {
    CheckOptions {
        partitions: weakened.map_or(Partitions::All, Partitions::One),
        anti_complementary: anti,
    }
}

#[derive(Serialize)]
struct Certificate<'a> {
    schema: &'static str,
    order: usize,
    p: usize,
    partitions: Partitions,
    classification: Classification,
    verdicts: &'a [franklin_core::PropertyVerdict],
    skipped: &'a [franklin_core::SkippedCheck],
}

fn verdict_table(report: &PropertyReport) -> String {
    let mut out = String::new();
    for v in &report.verdicts {
        match &v.witness {
            None => {
                let _ = writeln!(out, "{:<18} pass", v.property.as_str());
            }
            Some(w) => {
                let _ = writeln!(out, "{:<18} FAIL  {w}", v.property.as_str());
            }
        }
    }
    for s in &report.skipped {
        let _ = writeln!(out, "{:<18} skipped  {}", s.property.as_str(), s.reason);
    }
    out
}

fn verify(a: VerifyArgs, doc: SquareDocument, stdout: &mut dyn Write) -> Result<(), CliError> {
    let params = params_for(a.p, &doc)?;
    let opts = options(a.weakened, a.anti_complementary);
    let report = verify_all(&doc.grid, &params, &opts)?;
    if a.json {
        let cert = Certificate {
            schema: SCHEMA,
            order: doc.order,
            p: a.p,
            partitions: opts.partitions,
            classification: report.classification,
            verdicts: &report.verdicts,
            skipped: &report.skipped,
        };
        let json =
            serde_json::to_string_pretty(&cert).map_err(|e| CliError::Input(e.to_string()))?;
        writeln!(stdout, "{json}")?;
    } else {
        writeln!(stdout, "order {} with p = {}", doc.order, a.p)?;
        stdout.write_all(verdict_table(&report).as_bytes())?;
        writeln!(stdout, "classification: {}", report.classification)?;
    }
    let met = match a.expect {
        Some(label) => report.meets(label),
        None => report.classification != Classification::None,
    };
    if met {
        Ok(())
    } else {
        let wanted = a
            .expect
            .map_or("any classification".to_string(), |c| c.to_string());
        Err(CliError::VerificationFailed(format!(
            "square does not meet {wanted} (classified as {})",
            report.classification
        )))
    }
}

fn fixtures(a: FixturesArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    if let Some(name) = &a.select.export {
        let f = fixture(name)?;
        let mut doc = SquareDocument::new(f.square.into_grid())?;
        doc.p = Some(f.params.p());
        doc.k = f.params.franklin_multiplier();
        doc.metadata.insert("name".into(), f.name.into());
        doc.metadata
            .insert("description".into(), f.description.into());
        return write_output(&a.output, &doc.emit(a.output.format.into()), stdout);
    }
    let mut text = String::new();
    for f in builtin_fixtures() {
        let _ = writeln!(
            text,
            "{:<18} order {:>2}  p = {}  {}",
            f.name,
            f.params.n(),
            f.params.p(),
            f.description
        );
    }
    write_output(&a.output, &text, stdout)
}

fn report(a: ReportArgs, doc: SquareDocument, stdout: &mut dyn Write) -> Result<(), CliError> {
    let params = params_for(a.p, &doc)?;
    let opts = options(a.weakened, false);
    let report = verify_all(&doc.grid, &params, &opts)?;
    let mut out = String::new();
    let _ = writeln!(out, "square of order {} with p = {}", doc.order, a.p);
    for (key, value) in &doc.metadata {
        let _ = writeln!(out, "  {key}: {value}");
    }
    let _ = writeln!(out, "magic sum {}", params.magic_sum());
    out.push('\n');
    out.push_str(&verdict_table(&report));
    let _ = writeln!(out, "classification: {}", report.classification);
    out.push('\n');
    match band_profile(&doc.grid, &params, opts.partitions) {
        Ok(profile) => {
            let _ = writeln!(out, "band sums over all selected patterns:");
            for entry in profile {
                let status = if entry.uniform_at_target() {
                    "ok"
                } else {
                    "off"
                };
                let _ = writeln!(
                    out,
                    "  s_{}  target {}  min {}  max {}  {status}",
                    entry.pair + 1,
                    entry.target,
                    entry.min,
                    entry.max
                );
            }
        }
        Err(e) => {
            let _ = writeln!(out, "band sums not applicable: {e}");
        }
    }
    Ok(stdout.write_all(out.as_bytes())?)
}
