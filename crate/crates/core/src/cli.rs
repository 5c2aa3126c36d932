//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failures, 2 domain error,
//! 64 usage, 65 parse.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::controlled;
use crate::error::{Error, Result};
use crate::frames::Frame;
use crate::harness::{self, Generator, Suite, TrialConfig};
use crate::io::{parse_reals, parse_vector};
use crate::multiplier::{multiplier_apply, Symbol};
use crate::operator::QOperator;
use crate::quaternion::fmt_real;
use crate::random::{random_vector, rng_from_seed};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;

#[derive(Debug, Parser)]
#[command(name = "qframe", version, about = "Frames and multipliers on quaternionic Hilbert spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random frame file.
    Gen(GenArgs),
    /// Print the optimal bounds `A B is_frame`.
    Bounds { frame: PathBuf },
    /// Write the canonical dual frame.
    Dual {
        frame: PathBuf,
        /// Output path (stdout when omitted).
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Report frame properties.
    CheckFrame {
        frame: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Check a controller against a frame.
    ControlledCheck {
        frame: PathBuf,
        /// Controller in the operator text format.
        #[arg(long)]
        operator: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Seed for the sampled vectors.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Apply a frame multiplier to a vector.
    MultiplierApply(MultiplierArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, short = 'n')]
    pub dim: usize,
    #[arg(long, short = 'm')]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0)]
    pub trial: u64,
    /// Draw an orthonormal basis instead (`count` must equal `dim`).
    #[arg(long)]
    pub orthonormal: bool,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MultiplierArgs {
    /// Synthesis frame (the φ_k).
    pub frame: PathBuf,
    /// Analysis frame (the ψ_k); defaults to the synthesis frame.
    pub second: Option<PathBuf>,
    #[arg(long)]
    pub symbol: PathBuf,
    #[arg(long)]
    pub vector: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    pub suite: Suite,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Fixed `N,M`; otherwise both vary per trial up to 8 and 24.
    #[arg(long, value_parser = parse_dims)]
    pub dims: Option<(usize, usize)>,
    /// Use orthonormal bases as frames.
    #[arg(long)]
    pub orthonormal: bool,
    /// Also write the report as JSON.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_dims(s: &str) -> std::result::Result<(usize, usize), String> {
    let (n, m) = s.split_once(',').ok_or("expected N,M")?;
    let n = n.trim().parse().map_err(|_| format!("bad dimension `{n}`"))?;
    let m = m.trim().parse().map_err(|_| format!("bad count `{m}`"))?;
    Ok((n, m))
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::InvalidConfig(_) | Error::Io(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_frame(path: &Path) -> Result<Frame> {
    Frame::parse(&read(path)?)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn field(out: &mut dyn Write, key: &str, value: impl std::fmt::Display) -> Result<()> {
    Ok(writeln!(out, "{key} {value}")?)
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gen(a) => {
            let cfg = TrialConfig {
                dim: a.dim,
                count: a.count,
                vary_dims: false,
                trials: 1,
                master_seed: a.seed,
                generator: if a.orthonormal { Generator::OrthonormalBasis } else { Generator::Uniform },
                ..TrialConfig::default()
            };
            if a.orthonormal && a.count != a.dim {
                return Err(Error::InvalidConfig("an orthonormal basis needs count = dim".into()));
            }
            let frame = harness::gen_frame(&cfg, a.trial)?;
            emit(out, a.out.as_deref(), &frame.to_qhf())?;
        }
        Command::Bounds { frame } => {
            let f = read_frame(&frame)?;
            let (a, b) = f.optimal_bounds();
            writeln!(out, "{} {} {}", fmt_real(a), fmt_real(b), f.is_frame())?;
        }
        Command::Dual { frame, out: path } => {
            let dual = read_frame(&frame)?.canonical_dual()?;
            emit(out, path.as_deref(), &dual.to_qhf())?;
        }
        Command::CheckFrame { frame, tol } => {
            let f = read_frame(&frame)?;
            let (a, b) = f.optimal_bounds();
            field(out, "dim", f.dim())?;
            field(out, "count", f.len())?;
            field(out, "lower", fmt_real(a))?;
            field(out, "upper", fmt_real(b))?;
            field(out, "is_frame", f.is_frame())?;
            field(out, "normalized", f.is_normalized(tol))?;
            field(out, "tight", f.is_frame() && (b - a) <= tol * b)?;
            field(out, "parseval", f.is_frame() && (a - 1.0).abs() <= tol && (b - 1.0).abs() <= tol)?;
        }
        Command::ControlledCheck { frame, operator, tol, seed } => {
            let f = read_frame(&frame)?;
            let c = QOperator::parse(&read(&operator)?)?;
            let mut rng = rng_from_seed(seed);
            let samples: Vec<_> = (0..harness::SAMPLES_PER_TRIAL).map(|_| random_vector(&mut rng, f.dim())).collect();
            let check = controlled::check_controlled(&f, &c, tol, &samples)?;
            let nc = controlled::verify_prop_nc(&f, &c, tol, &samples)?;
            field(out, "controlled", check.is_controlled)?;
            field(out, "lower", fmt_real(check.lower))?;
            field(out, "upper", fmt_real(check.upper))?;
            field(out, "controller_in_gl_plus", check.in_gl_plus)?;
            field(out, "form_real", check.form_real)?;
            field(out, "max_imaginary", fmt_real(check.max_imaginary))?;
            field(out, "commutation", fmt_real(nc.commutation))?;
            field(out, "two_sums", fmt_real(nc.two_sums))?;
            field(out, "recovered", fmt_real(nc.recovered))?;
            match controlled::verify_prop_cfpro(&f, &c, tol, &samples) {
                Ok(cf) => {
                    field(out, "commuting", cf.commuting)?;
                    field(out, "commutator", fmt_real(cf.commutator))?;
                    field(out, "equivalence_holds", cf.forward && cf.backward)?;
                }
                Err(Error::NotSelfAdjoint { .. }) => field(out, "commuting", "n/a")?,
                Err(e) => return Err(e),
            }
        }
        Command::MultiplierApply(a) => {
            let phi = read_frame(&a.frame)?;
            let psi = match &a.second {
                Some(p) => read_frame(p)?,
                None => phi.clone(),
            };
            let symbol = Symbol::Real(parse_reals(&read(&a.symbol)?)?);
            let h = parse_vector(&read(&a.vector)?)?;
            writeln!(out, "{}", multiplier_apply(&symbol, &phi, &psi, &h)?)?;
        }
        Command::Verify(a) => {
            let (dim, count, vary_dims) = match a.dims {
                Some((n, m)) => (n, m, false),
                None => (8, 24, true),
            };
            let cfg = TrialConfig {
                dim,
                count,
                vary_dims,
                trials: a.trials,
                master_seed: a.seed,
                tol: a.tol,
                generator: if a.orthonormal { Generator::OrthonormalBasis } else { Generator::Uniform },
            };
            let report = harness::run_suite(&cfg, a.suite)?;
            out.write_all(report.to_text().as_bytes())?;
            if let Some(p) = a.report {
                fs::write(&p, report.to_json()).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            }
            return Ok(if report.passed() { EXIT_OK } else { EXIT_FAILURES });
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
