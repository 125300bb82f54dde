//! Command-line front end: configuration, the seven commands and their
//! text, JSON, CSV and SVG renderings.

mod commands;
mod render;
pub mod suite;

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::DEFAULT_RADII;
use crate::params::ParamTriple;

pub use commands::{
    cmd_asym, cmd_certify, cmd_eval, cmd_image, cmd_kappa, cmd_sector, cmd_suite, AsymReport, EvalReport, EvalRow,
    ImageReport, SectorReport,
};
pub use commands::{render_suite, suite_text, Skipped};
pub use render::{svg_figure, Envelope, SCHEMA};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// 2F1, f, g and the preschwarzian at the points given by --z
    Eval,
    /// Order of convexity, closed form and numeric
    Kappa,
    /// Sector containment of f and g, and the apex sector when kappa >= 0
    Sector,
    /// Universal-convexity certification
    Certify,
    /// Image of the unit circle as CSV or SVG
    Image,
    /// Limit probes and the connection formula
    Asym,
    /// The acceptance suite
    Suite,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        f.write_str(&s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
    Svg,
}

/// A parsed and validated invocation. Equal configurations give
/// byte-identical output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<ParamTriple>,
    /// Delta-table diagonal bound `k + n <= depth`.
    pub depth: usize,
    pub max_k: usize,
    /// Side of the square half-plane grid of the Liu–Pego check.
    pub grid: usize,
    pub radii: Vec<f64>,
    pub n_theta: usize,
    pub theta_min: f64,
    pub samples: usize,
    pub seed: u64,
    pub format: OutputFormat,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub out: Option<PathBuf>,
    pub exact: bool,
    pub points: Vec<Complex64>,
    /// Include wall-clock timings in JSON; off by default so output stays reproducible.
    pub timing: bool,
}

impl RunConfig {
    /// Defaults for `command` with no parameters.
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            params: None,
            depth: 40,
            max_k: 40,
            grid: 64,
            radii: DEFAULT_RADII.to_vec(),
            n_theta: if command == Command::Image { 400 } else { 4096 },
            theta_min: 1e-6,
            samples: 10_000,
            seed: 1,
            format: if command == Command::Image { OutputFormat::Csv } else { OutputFormat::Text },
            out: None,
            exact: false,
            points: Vec::new(),
            timing: false,
        }
    }

    pub fn with_params(mut self, a: f64, b: f64, c: f64) -> Result<Self> {
        self.params = Some(ParamTriple::new(a, b, c)?);
        Ok(self)
    }

    pub fn params(&self) -> Result<ParamTriple> {
        self.params
            .ok_or_else(|| Error::InvalidArgument(format!("--a, --b and --c are required for `{}`", self.command)))
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidArgument(m.into()));
        if self.depth == 0 || self.max_k == 0 {
            return bad("--depth and --max-k must be positive");
        }
        if self.grid == 0 || self.samples == 0 || self.n_theta < 2 {
            return bad("--grid and --samples must be positive and --n-theta at least 2");
        }
        if !(self.theta_min > 0.0 && self.theta_min < std::f64::consts::PI) {
            return bad("--theta-min must lie in (0, pi)");
        }
        if self.radii.is_empty() || self.radii.iter().any(|r| !(*r > 0.0 && *r < 1.0)) {
            return bad("--radii must be a non-empty list in (0, 1)");
        }
        let allowed = match self.command {
            Command::Image => true,
            Command::Eval => self.format != OutputFormat::Svg,
            _ => matches!(self.format, OutputFormat::Text | OutputFormat::Json),
        };
        if !allowed {
            return Err(Error::InvalidArgument(format!("--format {:?} is not available for `{}`", self.format, self.command)));
        }
        if self.command != Command::Suite {
            self.params()?;
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(name = "shifted-hyp", version, about = "Shifted hypergeometric maps: evaluation, geometry and certification")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<f64>,
    /// Delta-table diagonal bound k + n
    #[arg(long)]
    pub depth: Option<usize>,
    /// Largest difference order k
    #[arg(long = "max-k")]
    pub max_k: Option<usize>,
    /// Side of the half-plane grid for the class-T check
    #[arg(long)]
    pub grid: Option<usize>,
    /// Circle radii for the numeric order of convexity, comma separated
    #[arg(long, value_delimiter = ',')]
    pub radii: Option<Vec<f64>>,
    #[arg(long = "theta-min")]
    pub theta_min: Option<f64>,
    /// Number of angles (kappa, image)
    #[arg(long = "n-theta")]
    pub n_theta: Option<usize>,
    /// Number of disk samples (sector)
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Exact rational delta tables
    #[arg(long)]
    pub exact: bool,
    /// Evaluation point such as 0.3+0.4i; repeatable
    #[arg(long = "z", allow_hyphen_values = true)]
    pub z: Vec<String>,
    /// Include wall-clock timings in JSON output
    #[arg(long)]
    pub timing: bool,
}

impl Args {
    pub fn into_config(self) -> Result<RunConfig> {
        let mut cfg = RunConfig::new(self.command);
        cfg.params = match (self.a, self.b, self.c) {
            (Some(a), Some(b), Some(c)) => Some(ParamTriple::new(a, b, c)?),
            (None, None, None) => None,
            _ => return Err(Error::InvalidArgument("give all of --a, --b and --c".into())),
        };
        cfg.depth = self.depth.unwrap_or(cfg.depth);
        cfg.max_k = self.max_k.unwrap_or(cfg.max_k);
        cfg.grid = self.grid.unwrap_or(cfg.grid);
        cfg.radii = self.radii.unwrap_or(cfg.radii);
        cfg.theta_min = self.theta_min.unwrap_or(cfg.theta_min);
        cfg.n_theta = self.n_theta.unwrap_or(cfg.n_theta);
        cfg.samples = self.samples.unwrap_or(cfg.samples);
        cfg.seed = self.seed;
        cfg.format = self.format.unwrap_or(cfg.format);
        cfg.out = self.out;
        cfg.exact = self.exact;
        cfg.points = self.z.iter().map(|s| parse_complex(s)).collect::<Result<_>>()?;
        cfg.timing = self.timing;
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Parses `x`, `yi`, `x+yi` or `x-yi`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let bad = || Error::InvalidArgument(format!("cannot read `{s}` as a complex number"));
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let num = |x: &str| -> Result<f64> {
        match x {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => x.parse::<f64>().map_err(|_| bad()),
        }
    };
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(t.parse::<f64>().map_err(|_| bad())?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(Complex64::new(body[..k].parse::<f64>().map_err(|_| bad())?, num(&body[k..])?)),
        None => Ok(Complex64::new(0.0, num(body)?)),
    }
}

/// Rendered output and whether every assertion of the command held.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub body: String,
    pub pass: bool,
}

pub fn run(cfg: &RunConfig) -> Result<Output> {
    cfg.validate()?;
    match cfg.command {
        Command::Eval => cmd_eval(cfg),
        Command::Kappa => cmd_kappa(cfg),
        Command::Sector => cmd_sector(cfg),
        Command::Certify => cmd_certify(cfg),
        Command::Image => cmd_image(cfg),
        Command::Asym => cmd_asym(cfg),
        Command::Suite => cmd_suite(cfg),
    }
}

/// 2 for invalid parameters or arguments, 1 for everything else, including
/// failures at individual grid points.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_)
        | Error::Hypothesis(_)
        | Error::InvalidArgument(_)
        | Error::UnsupportedParams(_)
        | Error::Degenerate(_)
        | Error::Pole { .. } => 2,
        _ => 1,
    }
}

/// Parses `args`, runs the command and writes its output. Returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let cfg = match args.into_config() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let out = match run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &out.body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => print!("{}", out.body),
    }
    if out.pass {
        0
    } else {
        eprintln!("assertion failed; see the report");
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complex_syntax() {
        assert_eq!(parse_complex("0.3+0.4i").unwrap(), c(0.3, 0.4));
        assert_eq!(parse_complex("-0.5-2i").unwrap(), c(-0.5, -2.0));
        assert_eq!(parse_complex("1e-3+2.5e-1i").unwrap(), c(1e-3, 0.25));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("0.25").unwrap(), c(0.25, 0.0));
        assert_eq!(parse_complex("3i").unwrap(), c(0.0, 3.0));
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("1+xi").is_err());
    }

    fn parse(args: &[&str]) -> Result<RunConfig> {
        let full: Vec<&str> = std::iter::once("shifted-hyp").chain(args.iter().copied()).collect();
        Args::try_parse_from(full).unwrap().into_config()
    }

    #[test]
    fn config_defaults_and_flags() {
        let cfg = parse(&["certify", "--a", "0.5", "--b", "0.8", "--c", "1.9", "--exact", "--depth", "20"]).unwrap();
        assert_eq!(cfg.depth, 20);
        assert_eq!(cfg.max_k, 40);
        assert!(cfg.exact);
        assert_eq!(cfg.format, OutputFormat::Text);
        let img = parse(&["image", "--a", "0.9", "--b", "1.2", "--c", "2", "--radii", "0.5,0.9"]).unwrap();
        assert_eq!(img.format, OutputFormat::Csv);
        assert_eq!(img.radii, vec![0.5, 0.9]);
        let ev = parse(&["eval", "--a", "1", "--b", "1", "--c", "2", "--z", "-0.5+0.1i", "--z", "0"]).unwrap();
        assert_eq!(ev.points, vec![c(-0.5, 0.1), c(0.0, 0.0)]);
    }

    #[test]
    fn invalid_arguments_exit_2() {
        for args in [
            &["kappa"][..],
            &["kappa", "--a", "1", "--b", "1"],
            &["kappa", "--a", "1", "--b", "1", "--c", "-2"],
            &["sector", "--a", "1", "--b", "1", "--c", "2", "--format", "svg"],
            &["image", "--a", "1", "--b", "1", "--c", "2", "--theta-min", "0"],
        ] {
            let e = parse(args).unwrap_err();
            assert_eq!(exit_code(&e), 2, "{args:?}: {e}");
        }
        let code = main_with_args(["shifted-hyp", "sector", "--a", "0.5", "--b", "0.5", "--c", "1.2"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn evaluation_errors_keep_their_class() {
        let inner = Error::Domain("x".into());
        assert_eq!(exit_code(&inner.clone().at(c(2.0, 0.0))), 1);
        assert_eq!(exit_code(&Error::NearZeroDerivative { z: c(0.0, 0.0) }), 1);
        assert_eq!(exit_code(&inner), 2);
    }
}
