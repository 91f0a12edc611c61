//! Command-line front end.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::config::{format_word, parse_word, CodeSpec};
use crate::decoder::{tau_gs, tau_pow, DecodeResult, DecoderParams, DEFAULT_POWER_CEILING};
use crate::decoder::radius::params_admissible;
use crate::grs::GrsCode;
use crate::poly::Poly;
use crate::sim::{default_taus, run_trials, write_csv, SimConfig};
use crate::variants::Variant;

#[derive(Debug, Parser)]
#[command(name = "powerdec", version, about = "Power decoding of Reed-Solomon codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the decoding radius for (s, l), or sweep admissible pairs.
    Radius(RadiusArgs),
    /// Encode a message polynomial given by its coefficients, lowest first.
    Encode(EncodeArgs),
    /// Decode a received word.
    Decode(DecodeArgs),
    /// Estimate failure rates by simulation and write a CSV report.
    Simulate(SimulateArgs),
}

#[derive(Debug, Args)]
struct CodeArg {
    /// JSON code description.
    #[arg(long, value_name = "FILE")]
    code: PathBuf,
}

#[derive(Debug, Args)]
struct RadiusArgs {
    #[command(flatten)]
    code: CodeArg,
    #[arg(long, requires = "l", conflicts_with = "sweep")]
    s: Option<usize>,
    #[arg(long, requires = "s")]
    l: Option<usize>,
    /// List every admissible (s, l) up to the given maxima.
    #[arg(long)]
    sweep: bool,
    #[arg(long, default_value_t = 6)]
    max_s: usize,
    #[arg(long, default_value_t = 18)]
    max_l: usize,
}

#[derive(Debug, Args)]
struct EncodeArgs {
    #[command(flatten)]
    code: CodeArg,
    /// Comma-separated coefficients.
    #[arg(long, allow_hyphen_values = true)]
    message: String,
}

#[derive(Debug, Args)]
struct DecoderArgs {
    #[arg(long)]
    s: usize,
    #[arg(long)]
    l: usize,
    #[arg(long, default_value = "gao")]
    variant: Variant,
    /// Keep the lambda_1 .. lambda_{s-1} columns.
    #[arg(long)]
    full_module: bool,
}

#[derive(Debug, Args)]
struct DecodeArgs {
    #[command(flatten)]
    code: CodeArg,
    #[command(flatten)]
    decoder: DecoderArgs,
    /// Comma-separated received word.
    #[arg(long)]
    received: String,
    /// Print the outcome as a JSON object.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    #[command(flatten)]
    code: CodeArg,
    #[command(flatten)]
    decoder: DecoderArgs,
    /// Comma-separated error weights; defaults to the floored radius and its
    /// two neighbours.
    #[arg(long, value_delimiter = ',')]
    tau: Option<Vec<usize>>,
    #[arg(long, default_value_t = 2000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_name = "CSV")]
    out: PathBuf,
}

impl DecoderArgs {
    fn params(&self) -> DecoderParams {
        DecoderParams {
            s: self.s,
            l: self.l,
            punctured: !self.full_module,
        }
    }
}

fn load_code(arg: &CodeArg, variant: Variant) -> Result<GrsCode> {
    let spec = CodeSpec::load(&arg.code)?;
    Ok(spec.build(variant == Variant::Syndrome)?)
}

enum Status {
    Ok,
    Failed,
}

fn radius(args: &RadiusArgs, out: &mut dyn Write) -> Result<Status> {
    let code = load_code(&args.code, Variant::Gao)?;
    let (n, k) = (code.n(), code.k());
    let line = |out: &mut dyn Write, s: usize, l: usize| -> io::Result<()> {
        let (si, li, ni, ki) = (s as i64, l as i64, n as i64, k as i64);
        let tp = tau_pow(si, li, ni, ki);
        writeln!(
            out,
            "s={s} l={l} tau_pow={tp} floor={} tau_gs={}",
            tp.floor().to_integer(),
            tau_gs(si, li, ni, ki)
        )
    };
    match (args.s, args.l) {
        (Some(s), Some(l)) => {
            if !params_admissible(s, l, n, k, DEFAULT_POWER_CEILING) {
                bail!("(s, l) = ({s}, {l}) is not admissible for n = {n}, k = {k}");
            }
            line(out, s, l)?;
        }
        _ if args.sweep => {
            for s in 1..=args.max_s {
                for l in s..=args.max_l {
                    if params_admissible(s, l, n, k, args.max_l) {
                        line(out, s, l)?;
                    }
                }
            }
        }
        _ => bail!("give --s and --l, or --sweep"),
    }
    Ok(Status::Ok)
}

fn encode(args: &EncodeArgs, out: &mut dyn Write) -> Result<Status> {
    let code = load_code(&args.code, Variant::Gao)?;
    let coeffs = parse_word(code.field(), &args.message)?;
    let f = Poly::from_coeffs(code.field(), coeffs);
    writeln!(out, "{}", format_word(&code.encode(&f)?))?;
    Ok(Status::Ok)
}

fn decode(args: &DecodeArgs, out: &mut dyn Write) -> Result<Status> {
    let variant = args.decoder.variant;
    let code = load_code(&args.code, variant)?;
    let r = parse_word(code.field(), &args.received)?;
    let outcome = variant.decode(&code, &args.decoder.params(), &r)?;
    let d = &outcome.diagnostics;
    let deg = d.deg_lambda0.map_or("none".to_string(), |v| v.to_string());
    if args.json {
        let mut obj = json!({
            "variant": variant.name(),
            "deg_lambda0": d.deg_lambda0,
            "tau_pow": d.tau.to_string(),
            "reduction_steps": d.reduction_steps,
        });
        match &outcome.result {
            DecodeResult::Decoded { f, codeword, error_weight } => {
                obj["status"] = json!("decoded");
                obj["message"] = json!(f.coeffs().iter().map(|c| c.value()).collect::<Vec<_>>());
                obj["codeword"] = json!(codeword.iter().map(|c| c.value()).collect::<Vec<_>>());
                obj["error_weight"] = json!(error_weight);
            }
            DecodeResult::Failed { reason } => {
                obj["status"] = json!("failed");
                obj["reason"] = json!(reason.to_string());
            }
        }
        writeln!(out, "{obj}")?;
    } else {
        match &outcome.result {
            DecodeResult::Decoded { f, codeword, error_weight } => {
                writeln!(out, "status: decoded")?;
                writeln!(out, "message: {}", format_word(f.coeffs()))?;
                writeln!(out, "codeword: {}", format_word(codeword))?;
                writeln!(out, "error_weight: {error_weight}")?;
            }
            DecodeResult::Failed { reason } => {
                writeln!(out, "status: failed")?;
                writeln!(out, "reason: {reason}")?;
            }
        }
        writeln!(out, "deg_lambda0: {deg}")?;
        writeln!(out, "tau_pow: {}", d.tau)?;
        writeln!(out, "reduction_steps: {}", d.reduction_steps)?;
    }
    Ok(if outcome.is_decoded() { Status::Ok } else { Status::Failed })
}

fn simulate(args: &SimulateArgs, out: &mut dyn Write) -> Result<Status> {
    let variant = args.decoder.variant;
    let code = load_code(&args.code, variant)?;
    let params = args.decoder.params();
    params.validate(&code)?;
    let taus = args.tau.clone().unwrap_or_else(|| default_taus(&code, &params));
    let cfg = SimConfig {
        code,
        params,
        variant,
        taus,
        trials: args.trials,
        seed: args.seed,
        jobs: args.jobs,
    };
    let stats = run_trials(&cfg)?;
    let file = File::create(&args.out).with_context(|| format!("cannot create {}", args.out.display()))?;
    let mut w = BufWriter::new(file);
    write_csv(&mut w, &cfg, &stats)?;
    w.flush()?;
    for st in &stats.per_tau {
        writeln!(
            out,
            "tau={} trials={} no_result={} wrong={} pf={:.6}",
            st.tau,
            st.trials,
            st.no_result,
            st.wrong,
            st.pf()
        )?;
    }
    writeln!(out, "wall_time_s={:.3}", stats.wall.as_secs_f64())?;
    Ok(Status::Ok)
}

/// Runs the CLI on `argv` (program name first) and returns the exit code:
/// 0 on success, 2 when decoding fails, 1 on invalid input.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let res = match &cli.command {
        Command::Radius(a) => radius(a, &mut out),
        Command::Encode(a) => encode(a, &mut out),
        Command::Decode(a) => decode(a, &mut out),
        Command::Simulate(a) => simulate(a, &mut out),
    };
    match res {
        Ok(Status::Ok) => 0,
        Ok(Status::Failed) => 2,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    }
}
