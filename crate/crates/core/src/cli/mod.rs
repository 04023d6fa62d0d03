//! Command-line surface. Every command writes to the given sinks and returns
//! an exit code: 0 when all checks pass, 1 when a mathematical check fails,
//! 2 for usage or input errors.

pub mod config;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::hadamard::load_zeros;
use crate::metric::{distance, distance_sq_expansion, ExpansionPairs, MetricPoint};
use crate::repdata::ConductorMode;
use crate::zfr::{case_ledger, final_constant_checks, region_width, LEDGER_TOLERANCE};

pub use config::RepConfig;
pub use verify::SuiteReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pretentious", version, about = "Pretentious-distance checks for L-function data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute the zero-free-region constants ledger.
    Constants(ConstantsArgs),
    /// Width of a zero-free region.
    Zfr(ZfrArgs),
    /// Run a seeded invariant suite.
    Verify(VerifyArgs),
    /// Pretentious distance between the representations of a config file.
    Distance(DistanceArgs),
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    #[arg(long)]
    pub csv: bool,
    /// Add the column computed with full-precision k and k′.
    #[arg(long = "exact-c1")]
    pub exact_c1: bool,
}

#[derive(Debug, Args)]
pub struct ZfrArgs {
    #[arg(long)]
    pub theorem: u8,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub mprime: Option<u32>,
    #[arg(long)]
    pub cond: f64,
    #[arg(long)]
    pub condprime: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: f64,
    #[arg(long)]
    pub degree: u32,
    #[arg(long = "self-dual")]
    pub self_dual: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    MetricAxioms,
    Psd,
    Hijt,
    Conductor,
    Hadamard,
    Tails,
    ThreeFourOne,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of seeded samples; each suite has its own default.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub zeros: Option<PathBuf>,
    /// Euler-sum cutoff; each suite has its own default.
    #[arg(long = "X")]
    pub x: Option<f64>,
    #[arg(long)]
    pub sigma: Option<f64>,
}

#[derive(Debug, Args)]
pub struct DistanceArgs {
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long)]
    pub sigma: f64,
    #[arg(long = "X", default_value_t = 1e5)]
    pub x: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma1: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma2: f64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub delta1: i8,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub delta2: i8,
    #[arg(long)]
    pub expansion: bool,
    /// Use the explicit Rankin–Selberg data for character pairs.
    #[arg(long)]
    pub explicit: bool,
}

/// Formats `x` with 10 significant digits.
pub fn sig10(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    if (-5..10).contains(&exponent) {
        format!("{:.*}", (9 - exponent) as usize, x)
    } else {
        format!("{x:.9e}")
    }
}

pub fn run(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let result = match cli.command {
        Command::Constants(a) => cmd_constants(&a, out),
        Command::Zfr(a) => cmd_zfr(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Distance(a) => cmd_distance(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

pub fn cmd_constants(args: &ConstantsArgs, out: &mut impl Write) -> Result<i32> {
    let ledger = case_ledger();
    let checks = final_constant_checks();
    let all_pass = ledger.iter().all(|e| e.passes()) && checks.iter().all(|c| c.holds);
    if args.csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        let mut header = vec!["case_id", "computed", "paper", "delta", "pass"];
        if args.exact_c1 {
            header.push("exact_c1");
        }
        w.write_record(&header).map_err(csv_error)?;
        for e in &ledger {
            let mut row = vec![
                e.case_id.to_string(),
                sig10(e.computed),
                sig10(e.paper_value),
                sig10(e.delta()),
                e.passes().to_string(),
            ];
            if args.exact_c1 {
                row.push(sig10(e.exact_c1));
            }
            w.write_record(&row).map_err(csv_error)?;
        }
        w.flush().map_err(io)?;
    } else {
        writeln!(out, "tolerance {}", sig10(LEDGER_TOLERANCE)).map_err(io)?;
        for e in &ledger {
            let argmin = e.argmin.map(|a| format!("  argmin {}", sig10(a))).unwrap_or_default();
            let exact = if args.exact_c1 {
                format!("  exact_c1 {}", sig10(e.exact_c1))
            } else {
                String::new()
            };
            writeln!(
                out,
                "{:<22} computed {}  paper {}  |Δ| {}  {}{argmin}{exact}",
                e.case_id,
                sig10(e.computed),
                sig10(e.paper_value),
                sig10(e.delta()),
                if e.passes() { "pass" } else { "FAIL" },
            )
            .map_err(io)?;
        }
        for c in &checks {
            writeln!(out, "{}: {} ({})", c.name, if c.holds { "pass" } else { "FAIL" }, c.detail).map_err(io)?;
        }
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_FAILED })
}

pub fn cmd_zfr(args: &ZfrArgs, out: &mut impl Write) -> Result<i32> {
    if matches!(args.theorem, 2 | 3) && (args.mprime.is_none() || args.condprime.is_none()) {
        return Err(Error::Config(format!(
            "theorem {} needs --mprime and --condprime",
            args.theorem
        )));
    }
    let width = region_width(
        args.theorem,
        args.m,
        args.mprime,
        args.cond,
        args.condprime,
        args.t,
        args.degree,
        args.self_dual,
    )?;
    writeln!(out, "width {}", sig10(width)).map_err(io)?;
    writeln!(out, "sigma_min {}", sig10(1.0 - width)).map_err(io)?;
    Ok(EXIT_OK)
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut impl Write) -> Result<i32> {
    let report = match args.suite {
        Suite::MetricAxioms => {
            verify::metric_axioms(args.seed, args.n.unwrap_or(100), args.sigma.unwrap_or(1.5), args.x.unwrap_or(1e5))?
        }
        Suite::Psd => verify::psd(args.seed, args.n.unwrap_or(50), args.sigma.unwrap_or(1.5), args.x.unwrap_or(1e4))?,
        Suite::Hijt => verify::hijt()?,
        Suite::Conductor => verify::conductor(args.seed, args.n.unwrap_or(100_000))?,
        Suite::Hadamard => {
            let path = args
                .zeros
                .as_ref()
                .ok_or_else(|| Error::Config("the hadamard suite needs --zeros PATH".into()))?;
            let parsed = load_zeros(path)?;
            verify::hadamard(&parsed.zeros, args.sigma.unwrap_or(1.5), args.x.unwrap_or(1e5))?
        }
        Suite::Tails => verify::tails(args.seed, args.n.unwrap_or(50), args.x.unwrap_or(1e4))?,
        Suite::ThreeFourOne => verify::three_four_one(args.sigma.unwrap_or(1.1), args.x.unwrap_or(1e5))?,
    };
    let name = args.suite.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    write_report(out, &name, &report)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn write_report(out: &mut impl Write, name: &str, report: &SuiteReport) -> Result<()> {
    writeln!(out, "suite {name}: {} checks, {} failed", report.checks, report.failures.len()).map_err(io)?;
    for (label, v) in &report.extremes {
        writeln!(out, "  {label}: {}", sig10(*v)).map_err(io)?;
    }
    for f in &report.failures {
        writeln!(out, "  FAIL {f}").map_err(io)?;
    }
    Ok(())
}

pub fn cmd_distance(args: &DistanceArgs, out: &mut impl Write) -> Result<i32> {
    let cfg = RepConfig::load(&args.config)?;
    let (r1, r2) = cfg.build_pair()?;
    let x1 = MetricPoint::new(&r1, args.gamma1, args.delta1)?;
    let x2 = MetricPoint::new(&r2, args.gamma2, args.delta2)?;
    let d = distance(&x1, &x2, args.sigma, args.x)?;
    writeln!(out, "distance {}", sig10(d.value)).map_err(io)?;
    writeln!(out, "distance_sq {}", sig10(d.value_sq)).map_err(io)?;
    writeln!(out, "tail_bound {}", sig10(d.tail_bound)).map_err(io)?;
    if !args.expansion {
        return Ok(EXIT_OK);
    }
    let mode = if args.explicit {
        ConductorMode::Explicit
    } else {
        ConductorMode::UpperBound
    };
    let pairs = ExpansionPairs::new(&r1, &r2, mode)?;
    let e = distance_sq_expansion(&x1, &x2, args.sigma, args.x, &pairs)?;
    for (label, v) in ["log_11", "log_22", "log_12"].iter().zip(e.log_terms) {
        writeln!(out, "{label} {}", sig10(v)).map_err(io)?;
    }
    for (label, v) in ["e_11", "e_22", "e_12"].iter().zip(e.e_terms) {
        writeln!(out, "{label} {}", sig10(v)).map_err(io)?;
    }
    writeln!(out, "expansion_total {}", sig10(e.total)).map_err(io)?;
    writeln!(out, "residual {}", sig10(e.residual)).map_err(io)?;
    writeln!(out, "tail_budget {}", sig10(e.tail_budget)).map_err(io)?;
    Ok(if e.residual <= e.tail_budget { EXIT_OK } else { EXIT_FAILED })
}
