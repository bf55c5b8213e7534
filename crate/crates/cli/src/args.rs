//! Command-line definitions and `--config` file handling.

use std::ffi::OsString;
use std::ops::RangeInclusive;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::emit::Notation;
use crate::verify::Suite;
use crate::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "rankone",
    version,
    about = "Limits of the Fourier-Mukai transform on rank-one degenerations"
)]
#[command(args_override_self = true)]
pub struct Cli {
    /// Preset flags from a `key=value` file; explicit flags take precedence.
    #[arg(long, value_name = "PATH", global = true)]
    pub config: Option<std::path::PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the limit `(a, b)` for a specialized cycle `(z, w)`.
    Transform(TransformArgs),
    /// Run the identity suites and print a report.
    Verify(VerifyArgs),
    /// Print a worked example.
    Demo(DemoArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum ModeArg {
    Rational,
    Algebraic,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Route {
    Closed,
    Direct,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum DemoName {
    CubicThreefold,
    NodalCurve,
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    /// Genus of the generic fibre; the base has dimension `g - 1`.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub g: u32,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub z: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub w: String,
    #[arg(long, value_enum, default_value = "rational")]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value = "both")]
    pub route: Route,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, value_enum, default_value = "paper")]
    pub notation: Notation,
    /// Reject symbols whose weight lies outside `i - d <= j <= i`.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub g_max: u32,
    /// Symbol weights on the input grid, `lo..hi` inclusive.
    #[arg(long, default_value = "0..3", value_parser = parse_window)]
    pub weight_window: RangeInclusive<i32>,
    #[arg(long, default_value_t = 2)]
    pub truncation_slack: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
}

#[derive(Args, Debug)]
pub struct DemoArgs {
    #[arg(value_enum)]
    pub name: DemoName,
    /// Genus for the nodal-curve example.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(3..))]
    pub g: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, value_enum, default_value = "paper")]
    pub notation: Notation,
}

fn parse_window(s: &str) -> Result<RangeInclusive<i32>, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected `lo..hi`, got `{s}`"))?;
    let lo: i32 = lo.trim().parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: i32 = hi
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|e| format!("bad upper bound: {e}"))?;
    if lo > hi {
        return Err(format!("empty window {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// Reads `key=value` lines. Blank lines and `#` comments are skipped; a bare
/// key or `key=true` sets a switch.
pub fn config_args(text: &str, path: &Path) -> Result<Vec<OsString>, CliError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = match line.split_once('=') {
            Some((k, v)) => (k.trim(), Some(v.trim())),
            None => (line, None),
        };
        if key.is_empty() || key.starts_with('-') {
            return Err(CliError::Config(format!(
                "{}:{}: bad key `{key}`",
                path.display(),
                n + 1
            )));
        }
        out.push(OsString::from(format!("--{key}")));
        match value {
            None | Some("true") => {}
            Some(v) => out.push(OsString::from(v)),
        }
    }
    Ok(out)
}

/// Splices flags from `--config PATH` in right after the subcommand, so that
/// flags given on the command line, which come later, override them.
pub fn expand_config(args: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let mut rest = Vec::with_capacity(args.len());
    let mut path = None;
    let mut it = args.into_iter();
    if let Some(bin) = it.next() {
        rest.push(bin);
    }
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            let p = it
                .next()
                .ok_or_else(|| CliError::Config("--config needs a path".to_string()))?;
            path = Some(std::path::PathBuf::from(p));
        } else if let Some(p) = s.strip_prefix("--config=") {
            path = Some(std::path::PathBuf::from(p));
        } else {
            rest.push(a);
        }
    }
    let Some(path) = path else {
        return Ok(rest);
    };
    let text = std::fs::read_to_string(&path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    let extra = config_args(&text, &path)?;
    let at = rest
        .iter()
        .skip(1)
        .position(|a| !a.to_string_lossy().starts_with('-'))
        .map_or(rest.len(), |i| i + 2);
    rest.splice(at..at, extra);
    Ok(rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows() {
        assert_eq!(parse_window("0..3").unwrap(), 0..=3);
        assert_eq!(parse_window("-1..=2").unwrap(), -1..=2);
        assert!(parse_window("3..1").is_err());
        assert!(parse_window("3").is_err());
    }

    #[test]
    fn config_lines() {
        let args = config_args("# preset\ng-max = 3\n\nstrict\nsuite=lemmas\n", Path::new("x")).unwrap();
        let args: Vec<_> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
        assert_eq!(args, ["--g-max", "3", "--strict", "--suite", "lemmas"]);
        assert!(config_args("--g=1", Path::new("x")).is_err());
    }
}
