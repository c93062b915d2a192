//! Argument parsing and command dispatch, separate from the binary so it can
//! be driven in-process.

use std::io::Write;

use clap::{Parser, Subcommand};
use gitgr_core::rep::hilbert_function;
use gitgr_core::semistability::enumerate_a;
use gitgr_core::{EnumBudget, Error, GrassParams};

use crate::analyze::{analyze, AnalyzeOptions};
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIAGNOSTIC_FAIL: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable overriding the enumeration cap.
pub const MAX_ENUM_VAR: &str = "GITGR_MAX_ENUM";

#[derive(Debug, Parser)]
#[command(name = "gitgr", version, about = "Torus quotients of Grassmannians G(r,n) by λ = nλ_s")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report for one triple.
    Analyze {
        n: u32,
        r: u32,
        s: u32,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Last Plücker degree of the Hilbert function.
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        /// Line bundles O(a,b) as "(a,b);(a,b);...".
        #[arg(long)]
        bundles: Option<String>,
    },
    /// Hilbert function of the invariant ring as CSV.
    Hilbert {
        n: u32,
        r: u32,
        s: u32,
        #[arg(long)]
        degrees: u32,
    },
    /// The Richardson pairs of A in lexicographic order.
    Cells {
        n: u32,
        r: u32,
        s: u32,
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Validation(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::Core(Error::Domain(_)) => EXIT_VALIDATION,
            CliError::Core(Error::Resource { .. }) => EXIT_RESOURCE,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}

/// Parses `"(a,b);(c,d)"`. Whitespace is ignored and empty items skipped.
pub fn parse_bundles(text: &str) -> Result<Vec<(i64, i64)>, CliError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    compact
        .split(';')
        .filter(|item| !item.is_empty())
        .map(|item| {
            let bad = || CliError::Validation(format!("bundle {item:?} is not of the form (a,b)"));
            let inner = item.strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(bad)?;
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
        })
        .collect()
}

/// Reads the cap from `value`, the contents of [`MAX_ENUM_VAR`] if set.
pub fn budget_from(value: Option<&str>) -> Result<EnumBudget, CliError> {
    match value {
        None => Ok(EnumBudget::default()),
        Some(v) => v
            .trim()
            .parse()
            .map(EnumBudget::new)
            .map_err(|_| CliError::Validation(format!("{MAX_ENUM_VAR}={v:?} is not a nonnegative integer"))),
    }
}

/// Runs one parsed command, writing the result to `out`. Returns the exit code
/// for a completed run; errors carry their own.
pub fn execute(cli: Cli, budget: EnumBudget, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze { n, r, s, json, max_degree, bundles } => {
            let params = GrassParams::new(n, r, s)?;
            let bundles = bundles.as_deref().map(parse_bundles).transpose()?.unwrap_or_default();
            let doc = analyze(&params, &AnalyzeOptions { max_degree, bundles, budget })?;
            if json {
                let text = serde_json::to_string_pretty(&doc).map_err(std::io::Error::from)?;
                writeln!(out, "{text}")?;
            } else {
                write!(out, "{}", render::human(&doc))?;
            }
            Ok(if doc.all_pass() { EXIT_OK } else { EXIT_DIAGNOSTIC_FAIL })
        }
        Command::Hilbert { n, r, s, degrees } => {
            let params = GrassParams::new(n, r, s)?;
            write!(out, "{}", render::hilbert_csv(&hilbert_function(&params, degrees, &budget)?))?;
            Ok(EXIT_OK)
        }
        Command::Cells { n, r, s, limit } => {
            let params = GrassParams::new(n, r, s)?;
            write!(out, "{}", render::cells(&enumerate_a(&params, None, &budget)?, limit))?;
            Ok(EXIT_OK)
        }
    }
}

/// Full entry point: parse `args`, read the cap from `env_cap`, run, and
/// report errors on `err`.
pub fn run<I, T>(args: I, env_cap: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
        }
    };
    let result = budget_from(env_cap).and_then(|budget| execute(cli, budget, out));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "gitgr: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundle_lists() {
        assert_eq!(parse_bundles("(1,2);(0,-3)").unwrap(), vec![(1, 2), (0, -3)]);
        assert_eq!(parse_bundles(" ( 4 , 5 ) ; ").unwrap(), vec![(4, 5)]);
        assert!(parse_bundles("(1;2)").is_err());
        assert!(parse_bundles("1,2").is_err());
    }

    #[test]
    fn cap_from_environment() {
        assert_eq!(budget_from(None).unwrap(), EnumBudget::default());
        assert_eq!(budget_from(Some("17")).unwrap(), EnumBudget::new(17));
        assert!(budget_from(Some("many")).is_err());
    }
}
