//! Command-line front end.
//!
//! Subcommands: `coproducts`, `phase-space`, `contract`, `uncertainty`,
//! `verify`. Identical configurations produce byte-identical output; the
//! numeric checks are seeded. Exit codes: 0 success, 1 verification
//! failure or internal error, 2 usage/configuration error.

mod report;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use twistspace::poincare::{CarrierCase, TwistCarrier};

#[derive(Parser)]
#[command(
    name = "twistspace",
    version,
    about = "Twisted phase-space derivation and verification engine"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit the deformed coproducts and their closed-form verdicts.
    Coproducts(CommonArgs),
    /// Derive and emit a relativistic phase-space table.
    PhaseSpace(CommonArgs),
    /// Contract a relativistic table and emit the Galilean one.
    Contract(CommonArgs),
    /// Emit the uncertainty bounds of the relativistic and Galilean tables.
    Uncertainty(CommonArgs),
    /// Run the verification pipeline.
    Verify(VerifyArgs),
}

#[derive(Args, Clone, Default)]
struct CommonArgs {
    /// Carrier case: rotation-gamma | rotation-zero | boost.
    #[arg(long)]
    carrier: Option<String>,
    /// First carrier index k.
    #[arg(long)]
    k: Option<u8>,
    /// Second carrier index l.
    #[arg(long)]
    l: Option<u8>,
    /// Momentum index gamma (rotation-gamma case only).
    #[arg(long)]
    gamma: Option<u8>,
    /// Series truncation order.
    #[arg(long)]
    order: Option<u32>,
    /// Output format: text | json | latex.
    #[arg(long)]
    format: Option<String>,
    /// Output path (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for the numeric checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Quadrature points per momentum axis.
    #[arg(long)]
    grid_points: Option<usize>,
    /// JSON config file with the same keys as the flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Clone, Default)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Run every check for all three default carriers.
    #[arg(long)]
    all: bool,
    /// Coproduct oracle comparison.
    #[arg(long)]
    coproducts: bool,
    /// Hopf-structure suite (cocycle, coassociativity, counit, homomorphism).
    #[arg(long)]
    hopf: bool,
    /// Phase-space tables against the printed reference.
    #[arg(long)]
    tables: bool,
    /// Jacobi closure of every table.
    #[arg(long)]
    jacobi: bool,
    /// Contraction against the printed Galilean reference.
    #[arg(long)]
    contraction: bool,
    /// Structural bound comparison.
    #[arg(long)]
    bounds: bool,
    /// Seeded numeric realization checks.
    #[arg(long)]
    numeric: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OutFormat {
    Text,
    Json,
    Latex,
}

impl OutFormat {
    fn parse(s: &str) -> Option<OutFormat> {
        match s {
            "text" => Some(OutFormat::Text),
            "json" => Some(OutFormat::Json),
            "latex" => Some(OutFormat::Latex),
            _ => None,
        }
    }
}

struct RunConfig {
    carrier: TwistCarrier,
    order: u32,
    format: OutFormat,
    out: Option<PathBuf>,
    seed: u64,
    grid_points: usize,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn merge_config(args: &mut CommonArgs) -> Result<(), String> {
    let Some(path) = &args.config else {
        return Ok(());
    };
    let raw = std::fs::read_to_string(path).map_err(|e| format!("cannot read config: {e}"))?;
    let v: serde_json::Value =
        serde_json::from_str(&raw).map_err(|e| format!("config is not valid JSON: {e}"))?;
    let obj = v.as_object().ok_or("config must be a JSON object")?;
    let get_u64 = |k: &str| obj.get(k).and_then(|x| x.as_u64());
    let get_str = |k: &str| obj.get(k).and_then(|x| x.as_str()).map(|s| s.to_string());
    if args.carrier.is_none() {
        args.carrier = get_str("carrier");
    }
    if args.k.is_none() {
        args.k = get_u64("k").map(|v| v as u8);
    }
    if args.l.is_none() {
        args.l = get_u64("l").map(|v| v as u8);
    }
    if args.gamma.is_none() {
        args.gamma = get_u64("gamma").map(|v| v as u8);
    }
    if args.order.is_none() {
        args.order = get_u64("order").map(|v| v as u32);
    }
    if args.format.is_none() {
        args.format = get_str("format");
    }
    if args.out.is_none() {
        args.out = get_str("out").map(PathBuf::from);
    }
    if args.seed.is_none() {
        args.seed = get_u64("seed");
    }
    if args.grid_points.is_none() {
        args.grid_points = get_u64("grid_points").map(|v| v as usize);
    }
    Ok(())
}

fn resolve(mut args: CommonArgs) -> Result<RunConfig, String> {
    merge_config(&mut args)?;
    let case = match args.carrier.as_deref() {
        None => CarrierCase::RotationGamma,
        Some(s) => CarrierCase::parse(s).ok_or_else(|| {
            format!("unknown carrier '{s}' (expected rotation-gamma | rotation-zero | boost)")
        })?,
    };
    let defaults = TwistCarrier::default_for(case);
    let k = args.k.unwrap_or(defaults.k);
    let l = args.l.unwrap_or(defaults.l);
    let carrier = match case {
        CarrierCase::RotationGamma => {
            TwistCarrier::rotation_gamma(k, l, args.gamma.unwrap_or(defaults.gamma))
        }
        CarrierCase::RotationZero => TwistCarrier::rotation_zero(k, l),
        CarrierCase::Boost => TwistCarrier::boost(k, l),
    }
    .map_err(|e| e.to_string())?;
    let format = match args.format.as_deref() {
        None => OutFormat::Text,
        Some(s) => OutFormat::parse(s).ok_or_else(|| format!("unknown format '{s}'"))?,
    };
    Ok(RunConfig {
        carrier,
        order: args.order.unwrap_or(twistspace::DEFAULT_ORDER),
        format,
        out: args.out,
        seed: args.seed.unwrap_or(0x5EED),
        grid_points: args.grid_points.unwrap_or(2048),
    })
}

fn write_output(cfg: &RunConfig, content: &str) -> Result<(), String> {
    match &cfg.out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(p) => {
            std::fs::write(p, content).map_err(|e| format!("cannot write {}: {e}", p.display()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Coproducts(a) => run_simple(a, report::run_coproducts),
        Cmd::PhaseSpace(a) => run_simple(a, report::run_phase_space),
        Cmd::Contract(a) => run_simple(a, report::run_contract),
        Cmd::Uncertainty(a) => run_simple(a, report::run_uncertainty),
        Cmd::Verify(a) => run_verify(a),
    };
    match result {
        Ok(code) => code,
        Err(Fail::Usage(msg)) => usage_error(&msg),
        Err(Fail::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

enum Fail {
    Usage(String),
    Internal(String),
}

type CmdResult = Result<ExitCode, Fail>;

fn run_simple(
    args: CommonArgs,
    f: impl Fn(&RunConfig, OutFormat) -> Result<String, String>,
) -> CmdResult {
    let cfg = resolve(args).map_err(Fail::Usage)?;
    let content = f(&cfg, cfg.format).map_err(Fail::Internal)?;
    write_output(&cfg, &content).map_err(Fail::Internal)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> CmdResult {
    let select_none = !(args.coproducts
        || args.hopf
        || args.tables
        || args.jacobi
        || args.contraction
        || args.bounds
        || args.numeric);
    let all_checks = args.all || select_none;
    let selection = report::VerifySelection {
        coproducts: all_checks || args.coproducts,
        hopf: all_checks || args.hopf,
        tables: all_checks || args.tables,
        jacobi: all_checks || args.jacobi,
        contraction: all_checks || args.contraction,
        bounds: all_checks || args.bounds,
        numeric: all_checks || args.numeric,
        all_carriers: args.all,
    };
    let cfg = resolve(args.common).map_err(Fail::Usage)?;
    let (content, pass) =
        report::run_verify(&cfg, cfg.format, &selection).map_err(Fail::Internal)?;
    write_output(&cfg, &content).map_err(Fail::Internal)?;
    if pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
