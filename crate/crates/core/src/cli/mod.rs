//! The `macdonald-interp` command line: compute, enumerate, verify and
//! render.
//!
//! Exit codes: 0 ok, 2 usage, 3 pole (resample with another seed),
//! 4 bounds exceeded, 5 verification failure.

mod compute;
mod enumerate;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::comb::{is_partition, parse_composition};
use crate::interp::InterpError;
use crate::tableaux::{enumerate_tableaux, enumerate_tableaux_typed, render_latex, render_svg};
use crate::verify::{self, Mode, Tally, VerifyConfig};

pub use compute::Target;
pub use enumerate::Kind;

/// Largest number of variables accepted.
pub const MAX_N: usize = 4;
/// Largest size accepted.
pub const MAX_SIZE: i32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
    Svg,
}

#[derive(Debug, Parser)]
#[command(name = "macdonald-interp", version, about = "Interpolation Macdonald polynomials, signed multiline queues and queue tableaux")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

/// Composition-valued arguments shared by the subcommands.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct Shape {
    /// Number of variables; shorter compositions are padded with zeros.
    #[arg(long)]
    pub n: Option<usize>,
    /// A composition, e.g. `0,2`.
    #[arg(long)]
    pub mu: Option<String>,
    /// A partition (or a top row), e.g. `2,0`.
    #[arg(long)]
    pub lambda: Option<String>,
    /// The type of a tableau: the composition read off its bottom row.
    #[arg(long = "type")]
    pub type_comp: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a polynomial or a family of coefficients.
    Compute {
        #[arg(value_enum)]
        target: Target,
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: Mode,
        /// Seed for the sampled (q, t) point in specialized mode.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// List combinatorial objects with their weights.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: Mode,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Run a verification suite (or `all`) and print one JSON line per
    /// checked instance.
    Verify {
        suite: String,
        /// Alias for `--max-n`.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_size: Option<i32>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Only run instances of this mode.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// Draw a tableau of the given shape (and type).
    Render {
        #[command(flatten)]
        shape: Shape,
        /// Which tableau of the listing to draw.
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("pole at the sampled point: {0}; resample with a different --seed")]
    Pole(String),
    #[error("bounds exceeded: {0} (limits: n <= {MAX_N}, size <= {MAX_SIZE})")]
    Bounds(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Pole(_) => 3,
            CliError::Bounds(_) => 4,
            CliError::Verification(_) => 5,
        }
    }
}

impl From<InterpError> for CliError {
    fn from(e: InterpError) -> Self {
        match e {
            InterpError::Algebra(AlgebraError::Pole { .. }) => CliError::Pole(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::from(InterpError::from(e))
    }
}

/// What a command produced: the text to emit and, for verification, an
/// error to report after emitting it.
pub struct Output {
    pub text: String,
    pub failure: Option<CliError>,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, failure: None }
    }
}

impl Shape {
    fn parse(text: &str, what: &str) -> Result<Vec<i32>, CliError> {
        parse_composition(text).map_err(|e| CliError::Usage(format!("invalid {what} `{text}`: {e}")))
    }

    fn padded(&self, mut v: Vec<i32>, what: &str) -> Result<Vec<i32>, CliError> {
        if let Some(n) = self.n {
            if v.len() > n {
                return Err(CliError::Usage(format!("{what} has more than {n} parts")));
            }
            v.resize(n, 0);
        }
        if v.is_empty() {
            return Err(CliError::Usage(format!("{what} is empty")));
        }
        check_bounds(v.len(), v.iter().map(|p| p.abs()).sum())?;
        Ok(v)
    }

    /// `--mu` as a composition.
    pub fn mu(&self) -> Result<Vec<i32>, CliError> {
        let text = self.mu.as_deref().ok_or_else(|| CliError::Usage("--mu is required".into()))?;
        let v = self.padded(Self::parse(text, "composition")?, "--mu")?;
        if v.iter().any(|&p| p < 0) {
            return Err(CliError::Usage(format!("--mu `{text}` has a negative part")));
        }
        Ok(v)
    }

    /// `--lambda` as a partition.
    pub fn lambda(&self) -> Result<Vec<i32>, CliError> {
        let v = self.top()?.ok_or_else(|| CliError::Usage("--lambda is required".into()))?;
        if !is_partition(&v) {
            return Err(CliError::Usage(format!("--lambda {v:?} is not a partition")));
        }
        Ok(v)
    }

    /// `--lambda` as an arbitrary (possibly signed) row, when given.
    pub fn top(&self) -> Result<Option<Vec<i32>>, CliError> {
        self.lambda.as_deref().map(|t| self.padded(Self::parse(t, "--lambda")?, "--lambda")).transpose()
    }

    pub fn type_comp(&self) -> Result<Option<Vec<i32>>, CliError> {
        self.type_comp.as_deref().map(|t| self.padded(Self::parse(t, "--type")?, "--type")).transpose()
    }
}

fn check_bounds(n: usize, total: i32) -> Result<(), CliError> {
    if n > MAX_N {
        return Err(CliError::Bounds(format!("n = {n}")));
    }
    if total > MAX_SIZE {
        return Err(CliError::Bounds(format!("size {total}")));
    }
    Ok(())
}

fn text_or_json(format: Format) -> Result<(), CliError> {
    match format {
        Format::Text | Format::Json => Ok(()),
        other => Err(CliError::Usage(format!("--format {other:?} is only available for render"))),
    }
}

/// Execute a parsed command.
pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Compute { target, shape, mode, seed } => {
            text_or_json(cli.format)?;
            Ok(compute::run(*target, shape, *mode, *seed, cli.format)?.into())
        }
        Command::Enumerate { kind, shape, mode, seed } => {
            text_or_json(cli.format)?;
            Ok(enumerate::run(*kind, shape, *mode, *seed, cli.format)?.into())
        }
        Command::Verify { suite, n, max_n, max_size, seed, mode } => {
            let max_n = max_n.or(*n);
            check_bounds(max_n.unwrap_or(0), max_size.unwrap_or(0))?;
            let cfg = VerifyConfig { seed: *seed, max_n, max_size: *max_size, mode: *mode, ..VerifyConfig::default() };
            let reports = verify::run(suite, &cfg).map_err(|e| CliError::Usage(e.to_string()))?;
            let mut text = String::new();
            for r in &reports {
                text.push_str(&r.to_json());
                text.push('\n');
            }
            let tally = Tally::of(&reports);
            let failure = (!tally.all_pass()).then(|| CliError::Verification(format!("{} failed, {} errors, {} passed", tally.fail, tally.error, tally.pass)));
            Ok(Output { text, failure })
        }
        Command::Render { shape, index } => {
            let lambda = shape.lambda()?;
            let tabs = match shape.type_comp()? {
                Some(mu) => enumerate_tableaux_typed(&lambda, &mu),
                None => enumerate_tableaux(&lambda),
            };
            let count = tabs.len();
            let tab = tabs.into_iter().nth(*index).ok_or_else(|| CliError::Usage(format!("--index {index} out of range ({count} tableaux)")))?;
            Ok(match cli.format {
                Format::Text => format!("{tab}\n"),
                Format::Json => format!("{}\n", serde_json::to_string(&tab).expect("tableaux serialize")),
                Format::Latex => render_latex(&tab),
                Format::Svg => render_svg(&tab),
            }
            .into())
        }
    }
}

/// Parse `args`, run, write the output and return the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = execute(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => std::fs::write(path, &out.text)?,
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(out.text.as_bytes())?;
                stdout.flush()?;
            }
        }
        out.failure.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("macdonald-interp: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_exit_codes() {
        let pole = CliError::from(AlgebraError::Pole { denominator: "1 - q t".into() });
        assert_eq!(pole.exit_code(), 3);
        assert_eq!(CliError::Verification("1 failed".into()).exit_code(), 5);
        assert_eq!(CliError::Bounds("n = 5".into()).exit_code(), 4);
        assert_eq!(CliError::Usage("bad".into()).exit_code(), 2);
    }

    #[test]
    fn shapes_are_padded_and_bounded() {
        let shape = Shape { n: Some(3), mu: Some("0,2".into()), ..Shape::default() };
        assert_eq!(shape.mu().unwrap(), vec![0, 2, 0]);
        let big = Shape { mu: Some("3,3".into()), ..Shape::default() };
        assert!(matches!(big.mu(), Err(CliError::Bounds(_))));
        let negative = Shape { mu: Some("1,-1".into()), ..Shape::default() };
        assert!(matches!(negative.mu(), Err(CliError::Usage(_))));
    }
}
