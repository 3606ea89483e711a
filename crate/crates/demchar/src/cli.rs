//! Command-line front end: compute weight distributions and their
//! statistics, emit figure data files, and run the closed-form
//! verification suite. Identical invocations produce byte-identical
//! output regardless of thread count.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::demazure::{apply_word, SignedMeasure};
use crate::formulas::{
    dimension, expected_b, expected_degree, expected_finite_dev, limit_ratio_len,
    max_degree_closed, variance_finite, Family,
};
use crate::lattice::HighestWeight;
use crate::serialize;
use crate::stats::{expectation, max_degree, total_mass, variance, Functional, StatsError};
use crate::verify::{self, GridBounds};
use crate::weyl::WeylWord;

/// CLI failure modes, mapped onto process exit codes: usage errors exit 2,
/// runtime errors exit 1 and verification mismatches exit 1 without an
/// error message.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Stats(#[from] StatsError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "demchar",
    version,
    about = "Exact weight distributions and degree statistics of Demazure modules of affine sl2"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the full weight distribution of a word measure
    Dist(DistArgs),
    /// Write the pushforward histogram along a coordinate axis
    Hist(HistArgs),
    /// Print exact statistics, optionally checked against the closed forms
    Stats(StatsArgs),
    /// Emit figure data files (weight plane or degree histogram)
    Figure(FigureArgs),
    /// Cross-check every closed form against the brute-force engine
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum FamilyArg {
    Std0,
    Std1,
    Ext0,
    Ext1,
}

impl FamilyArg {
    fn family(self) -> Family {
        match self {
            FamilyArg::Std0 => Family::Std0,
            FamilyArg::Std1 => Family::Std1,
            FamilyArg::Ext0 => Family::Ext0,
            FamilyArg::Ext1 => Family::Ext1,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
    Tsv,
}

impl FormatArg {
    fn separator(self) -> char {
        match self {
            FormatArg::Csv => ',',
            _ => '\t',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum AxisArg {
    Degree,
    Finite,
}

impl AxisArg {
    fn functional(self) -> Functional {
        match self {
            AxisArg::Degree => Functional::Degree,
            AxisArg::Finite => Functional::FiniteDev,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum FigureKind {
    Weight2d,
    Degreehist,
}

/// Parameters selecting the measure a command operates on.
#[derive(Args, Debug)]
pub struct SelectArgs {
    /// Coefficient of Lambda0 in the highest weight
    #[arg(long, value_name = "INT", default_value_t = 0)]
    pub m: u32,
    /// Coefficient of Lambda1 in the highest weight
    #[arg(long, value_name = "INT", default_value_t = 0)]
    pub n: u32,
    /// Word length
    #[arg(long = "N", value_name = "INT", default_value_t = 0)]
    pub len: u32,
    /// Word family (defaults to std0 unless --word is given)
    #[arg(long, value_enum, conflicts_with = "word")]
    pub family: Option<FamilyArg>,
    /// Explicit word: whitespace-separated s0/s1/sigma tokens, leftmost first
    #[arg(long)]
    pub word: Option<String>,
}

struct Selection {
    hw: HighestWeight,
    word: WeylWord,
    /// None in explicit word mode, where no closed forms apply.
    family: Option<Family>,
    len: u32,
}

impl SelectArgs {
    fn resolve(&self) -> Result<Selection, CliError> {
        let hw = HighestWeight::new(self.m, self.n);
        if let Some(text) = &self.word {
            let word: WeylWord = text.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
            let len = word.reflection_length() as u32;
            return Ok(Selection {
                hw,
                word,
                family: None,
                len,
            });
        }
        let family = self.family.map_or(Family::Std0, FamilyArg::family);
        let word = family.key(self.m, self.n, self.len).word();
        Ok(Selection {
            hw,
            word,
            family: Some(family),
            len: self.len,
        })
    }

    fn measure(&self) -> Result<(Selection, SignedMeasure), CliError> {
        let sel = self.resolve()?;
        let mu = apply_word(&sel.word, sel.hw);
        Ok((sel, mu))
    }
}

#[derive(Args, Debug)]
pub struct DistArgs {
    #[command(flatten)]
    pub select: SelectArgs,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    /// Output path (standard output when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct HistArgs {
    #[command(flatten)]
    pub select: SelectArgs,
    /// Coordinate functional the measure is pushed forward along
    #[arg(long, value_enum, default_value_t = AxisArg::Degree)]
    pub axis: AxisArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
    /// Output path (standard output when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    #[command(flatten)]
    pub select: SelectArgs,
    /// Also evaluate the closed forms and exit nonzero on any mismatch
    #[arg(long)]
    pub check: bool,
    /// Append 12-digit decimal approximations to the asymptotic ratios
    #[arg(long)]
    pub decimal: bool,
    /// Output path (standard output when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    /// Which figure data to emit
    #[arg(value_enum)]
    pub which: FigureKind,
    #[command(flatten)]
    pub select: SelectArgs,
    #[arg(long, value_enum, default_value_t = FormatArg::Tsv)]
    pub format: FormatArg,
    /// Output path (standard output when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Grid bounds, e.g. "m<=3,n<=3,N<=8"
    #[arg(long, default_value = "m<=3,n<=3,N<=8")]
    pub grid: String,
    /// Worker threads for the grid sweep (output is identical for any value)
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Output path (standard output when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn emit(out: &Option<PathBuf>, stdout: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_dist(args: &DistArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let (sel, mu) = args.select.measure()?;
    let text = match args.format {
        FormatArg::Json => serialize::measure_to_json(&mu, &sel.word),
        sep => serialize::measure_to_delimited(&mu, sep.separator()),
    };
    emit(&args.out, stdout, &text)?;
    Ok(0)
}

fn cmd_hist(args: &HistArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let (_, mu) = args.select.measure()?;
    let hist = crate::stats::pushforward(&mu, args.axis.functional());
    let text = match args.format {
        FormatArg::Json => serialize::histogram_to_json(&hist),
        sep => serialize::histogram_to_delimited(&hist, sep.separator()),
    };
    emit(&args.out, stdout, &text)?;
    Ok(0)
}

struct CheckLine {
    closed: Option<String>,
    ok: bool,
}

fn check_suffix(check: Option<&CheckLine>) -> String {
    match check {
        None => String::new(),
        Some(CheckLine {
            closed: Some(closed),
            ok,
        }) => {
            format!(
                "  [closed {closed}: {}]",
                if *ok { "ok" } else { "MISMATCH" }
            )
        }
        Some(CheckLine { closed: None, .. }) => "  [brute-force only]".to_owned(),
    }
}

fn cmd_stats(args: &StatsArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    if args.check && args.select.word.is_some() {
        return Err(CliError::Usage(
            "--check applies only to the standard/extended families, not --word".to_owned(),
        ));
    }
    let (sel, mu) = args.select.measure()?;
    let mass = total_mass(&mu);
    let e_a = expectation(&mu, Functional::Degree)?;
    let e_b = expectation(&mu, Functional::B)?;
    let e_dev = expectation(&mu, Functional::FiniteDev)?;
    let var_dev = variance(&mu, Functional::FiniteDev)?;
    let var_a = variance(&mu, Functional::Degree)?;
    let max_deg = max_degree(&mu)?;

    let key = sel.family.map(|f| f.key(sel.hw.m, sel.hw.n, sel.len));
    let checks: Option<Vec<CheckLine>> = if args.check {
        let key = key.as_ref().expect("family mode enforced above");
        let line = |ok: bool, closed: String| CheckLine {
            closed: Some(closed),
            ok,
        };
        Some(vec![
            line(mass == dimension(key), dimension(key).to_string()),
            line(
                e_a == expected_degree(key),
                expected_degree(key).to_string(),
            ),
            line(e_b == expected_b(key), expected_b(key).to_string()),
            line(
                e_dev == expected_finite_dev(key),
                expected_finite_dev(key).to_string(),
            ),
            line(
                var_dev == variance_finite(key),
                variance_finite(key).to_string(),
            ),
            CheckLine {
                closed: None,
                ok: true,
            },
            line(
                max_deg == max_degree_closed(key),
                max_degree_closed(key).to_string(),
            ),
        ])
    } else {
        None
    };

    let mut text = String::new();
    text.push_str(&format!(
        "m = {}, n = {}, N = {}, word = {}\n",
        sel.hw.m,
        sel.hw.n,
        sel.len,
        if sel.word.is_empty() {
            "(empty)".to_owned()
        } else {
            sel.word.to_string()
        }
    ));
    let row = |idx: usize| checks.as_ref().map(|c| &c[idx]);
    text.push_str(&format!("mass = {mass}{}\n", check_suffix(row(0))));
    text.push_str(&format!("E[a] = {e_a}{}\n", check_suffix(row(1))));
    text.push_str(&format!("E[b] = {e_b}{}\n", check_suffix(row(2))));
    text.push_str(&format!("E[a-b] = {e_dev}{}\n", check_suffix(row(3))));
    text.push_str(&format!("Var(a-b) = {var_dev}{}\n", check_suffix(row(4))));
    text.push_str(&format!("Var(a) = {var_a}{}\n", check_suffix(row(5))));
    text.push_str(&format!("max degree = {max_deg}{}\n", check_suffix(row(6))));

    if max_deg != 0 {
        let ratio = &e_a / BigRational::from_integer(max_deg.into());
        text.push_str(&format!(
            "E[a]/max = {ratio}{}\n",
            decimal_suffix(args.decimal, &ratio)
        ));
    }
    let limit = limit_ratio_len(sel.hw.m, sel.hw.n);
    text.push_str(&format!(
        "limit of E[a]/max for large N = {limit}{}\n",
        decimal_suffix(args.decimal, &limit)
    ));

    let failed = checks
        .as_ref()
        .map(|c| c.iter().any(|l| !l.ok))
        .unwrap_or(false);
    if failed {
        text.push_str("check: MISMATCH\n");
    } else if args.check {
        text.push_str("check: ok\n");
    }
    emit(&args.out, stdout, &text)?;
    Ok(if failed { 1 } else { 0 })
}

fn decimal_suffix(enabled: bool, value: &BigRational) -> String {
    if enabled {
        format!(" ~ {}", serialize::rational_decimal(value, 12))
    } else {
        String::new()
    }
}

fn cmd_figure(args: &FigureArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let (_, mu) = args.select.measure()?;
    let text = match args.which {
        FigureKind::Weight2d => match args.format {
            FormatArg::Json => serialize::weight2d_to_json(&mu),
            sep => serialize::weight2d_to_delimited(&mu, sep.separator()),
        },
        FigureKind::Degreehist => {
            let hist = crate::stats::pushforward(&mu, Functional::Degree);
            match args.format {
                FormatArg::Json => serialize::histogram_to_json(&hist),
                sep => serialize::histogram_to_delimited(&hist, sep.separator()),
            }
        }
    };
    emit(&args.out, stdout, &text)?;
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let grid: GridBounds = args.grid.parse().map_err(CliError::Usage)?;
    let opts = verify::Options {
        threads: args.threads.max(1),
        corrupt: None,
    };
    let report = verify::run(&grid, &opts);
    emit(&args.out, stdout, &report.render())?;
    Ok(if report.passed() { 0 } else { 1 })
}

/// Runs one parsed command, writing its output to `stdout` (or the path
/// given by `--out`). Returns the process exit code.
pub fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Dist(args) => cmd_dist(args, stdout),
        Command::Hist(args) => cmd_hist(args, stdout),
        Command::Stats(args) => cmd_stats(args, stdout),
        Command::Figure(args) => cmd_figure(args, stdout),
        Command::Verify(args) => cmd_verify(args, stdout),
    }
}
