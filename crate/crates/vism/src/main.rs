use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use vism::basis::BoundaryMode;
use vism::optimize::LHatMethod;
use vism::run::{
    cmd_calibrate, cmd_compare, cmd_scan_l, cmd_solve, render_anchors_csv, render_compare,
    render_result, render_scan_csv, CalibrateConfig, CompareConfig, LChoice, OutputFormat,
    ReferenceKind, RunConfig, ScanConfig,
};
use vism::VismError;

/// High-precision Fourier spectral solver for 1-D Schrödinger bound states
/// with variational domain optimization.
#[derive(Parser, Debug)]
#[command(name = "vism", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve for the lowest eigenpairs in a single run.
    Solve(SolveArgs),
    /// Tabulate E(L) over a range of half-lengths (optionally several N).
    ScanL(ScanArgs),
    /// Locate optimal half-lengths L̂(N) and write an anchor table.
    Calibrate(CalibrateArgs),
    /// Compare computed energies against a reference solution.
    Compare(CompareArgs),
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Potential, e.g. "x^2 + 0.1*x^4" or "x^2 + 10*cos(10*pi*x)".
    #[arg(long)]
    potential: Option<String>,

    /// Boundary condition: periodic | confinement.
    #[arg(long)]
    mode: Option<String>,

    /// Truncation index; the basis holds 2N functions.
    #[arg(short = 'N', long = "N", value_name = "N")]
    n: Option<u32>,

    /// Half-length as a decimal, or "auto" for the calibrated value.
    #[arg(long = "L", value_name = "L")]
    l: Option<String>,

    /// Working precision in decimal digits (≥ 16).
    #[arg(long)]
    precision: Option<u32>,

    /// Number of eigenpairs to report.
    #[arg(long)]
    states: Option<usize>,

    /// Output format: csv | json.
    #[arg(long)]
    format: Option<String>,

    /// Write results to this file (otherwise stdout).
    #[arg(long)]
    out: Option<PathBuf>,

    /// Anchor CSV from `calibrate`, used when --L auto.
    #[arg(long)]
    anchors: Option<PathBuf>,

    /// Reference for error columns: exact | perturbation0 | perturbation1.
    #[arg(long)]
    reference: Option<String>,

    /// Also report the N-vs-N+1 self-estimate per state (needs auto-able L̂).
    #[arg(long)]
    delta_e_hat: bool,

    /// Export wavefunction samples of --psi-state to this CSV.
    #[arg(long)]
    psi_out: Option<PathBuf>,

    /// State index for --psi-out.
    #[arg(long, default_value_t = 0)]
    psi_state: usize,

    /// Grid size for --psi-out.
    #[arg(long, default_value_t = 1001)]
    psi_samples: usize,

    /// Dump the assembled matrix as decimal CSV for external checks.
    #[arg(long)]
    dump_matrix: Option<PathBuf>,

    /// JSON config file mirroring these options; explicit flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long)]
    potential: String,

    #[arg(long, default_value = "periodic")]
    mode: String,

    /// One or more truncations, comma separated (several = 2-D sweep).
    #[arg(short = 'N', long = "N", value_delimiter = ',', required = true)]
    n: Vec<u32>,

    #[arg(long, default_value_t = 0)]
    state: usize,

    #[arg(long)]
    l_min: String,

    #[arg(long)]
    l_max: String,

    #[arg(long, default_value_t = 41)]
    samples: usize,

    #[arg(long, default_value_t = 30)]
    precision: u32,

    /// Adds a delta_e column: exact | perturbation0 | perturbation1.
    #[arg(long)]
    reference: Option<String>,

    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CalibrateArgs {
    #[arg(long)]
    potential: String,

    /// energy-min-confinement | energy-inflection-periodic |
    /// energy-error-min | wavefunction-error-min | delta-hat-min
    #[arg(long, default_value = "energy-min-confinement")]
    method: String,

    /// Ascending truncation list, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    n_list: Vec<u32>,

    #[arg(long, default_value_t = 0)]
    state: usize,

    #[arg(long, default_value_t = 30)]
    precision: u32,

    /// Half-length tolerance of the search.
    #[arg(long, default_value = "1e-8")]
    tol_l: String,

    /// Search bracket override "lo,hi".
    #[arg(long, value_delimiter = ',')]
    bracket: Option<Vec<String>>,

    /// Reference for the error-based methods.
    #[arg(long)]
    reference: Option<String>,

    /// Anchor CSV destination (otherwise stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[arg(long)]
    potential: String,

    /// exact | perturbation0 | perturbation1
    #[arg(long)]
    reference: String,

    #[arg(long, default_value = "periodic")]
    mode: String,

    #[arg(short = 'N', long = "N")]
    n: u32,

    #[arg(long = "L", default_value = "auto")]
    l: String,

    #[arg(long, default_value_t = 40)]
    precision: u32,

    #[arg(long, default_value_t = 10)]
    states: usize,

    #[arg(long, default_value = "csv")]
    format: String,

    #[arg(long)]
    anchors: Option<PathBuf>,

    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_mode(s: &str) -> Result<BoundaryMode, VismError> {
    match s {
        "periodic" => Ok(BoundaryMode::Periodic),
        "confinement" => Ok(BoundaryMode::Confinement),
        other => Err(VismError::Config(format!(
            "mode must be periodic or confinement, got '{other}'"
        ))),
    }
}

fn run() -> Result<(), VismError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve(args) => {
            let mut cfg = match &args.config {
                Some(path) => RunConfig::from_json(&std::fs::read_to_string(path)?)?,
                None => RunConfig::default(),
            };
            if let Some(v) = args.potential {
                cfg.potential = v;
            }
            if let Some(v) = args.mode {
                cfg.mode = parse_mode(&v)?;
            }
            if let Some(v) = args.n {
                cfg.n = v;
            }
            if let Some(v) = args.l {
                cfg.l = LChoice::parse(&v);
            }
            if let Some(v) = args.precision {
                cfg.precision = v;
            }
            if let Some(v) = args.states {
                cfg.states = v;
            }
            if let Some(v) = args.format {
                cfg.format = OutputFormat::parse(&v)?;
            }
            if args.out.is_some() {
                cfg.out = args.out;
            }
            if args.anchors.is_some() {
                cfg.lhat_anchors = args.anchors;
            }
            if let Some(v) = args.reference {
                cfg.reference = Some(ReferenceKind::parse(&v)?);
            }
            if args.delta_e_hat {
                cfg.delta_e_hat = true;
            }
            if args.psi_out.is_some() {
                cfg.psi_out = args.psi_out;
            }
            cfg.psi_state = args.psi_state;
            cfg.psi_samples = args.psi_samples;
            if args.dump_matrix.is_some() {
                cfg.dump_matrix = args.dump_matrix;
            }

            let record = cmd_solve(&cfg)?;
            if cfg.out.is_none() {
                print!("{}", render_result(&record, cfg.format));
            }
            eprintln!("solved {} states in {} ms", record.states.len(), record.wall_ms);
            Ok(())
        }
        Command::ScanL(args) => {
            let cfg = ScanConfig {
                potential: args.potential,
                mode: parse_mode(&args.mode)?,
                n_list: args.n,
                state: args.state,
                l_min: args.l_min,
                l_max: args.l_max,
                samples: args.samples,
                precision: args.precision,
                reference: args
                    .reference
                    .as_deref()
                    .map(ReferenceKind::parse)
                    .transpose()?,
                out: args.out,
            };
            let table = cmd_scan_l(&cfg)?;
            if cfg.out.is_none() {
                print!("{}", render_scan_csv(&table));
            }
            eprintln!("scanned {} points in {} ms", table.rows.len(), table.wall_ms);
            Ok(())
        }
        Command::Calibrate(args) => {
            let bracket = match args.bracket {
                Some(v) if v.len() == 2 => Some((v[0].clone(), v[1].clone())),
                Some(_) => {
                    return Err(VismError::Config("--bracket needs exactly lo,hi".into()))
                }
                None => None,
            };
            let cfg = CalibrateConfig {
                potential: args.potential,
                method: LHatMethod::parse(&args.method)?,
                n_list: args.n_list,
                state: args.state,
                precision: args.precision,
                tol_l: args.tol_l,
                bracket,
                reference: args
                    .reference
                    .as_deref()
                    .map(ReferenceKind::parse)
                    .transpose()?,
                out: args.out,
            };
            let out = cmd_calibrate(&cfg)?;
            if cfg.out.is_none() {
                print!("{}", render_anchors_csv(&out, cfg.precision)?);
            }
            for (n, why) in &out.failures {
                eprintln!("calibration failed at N={n}: {why}");
            }
            eprintln!(
                "calibrated {} anchors in {} ms",
                out.anchors.len(),
                out.wall_ms
            );
            if !out.failures.is_empty() {
                return Err(VismError::CalibrationIncomplete {
                    failed: out.failures.len(),
                    total: out.failures.len() + out.anchors.len(),
                });
            }
            Ok(())
        }
        Command::Compare(args) => {
            let cfg = CompareConfig {
                potential: args.potential,
                reference: ReferenceKind::parse(&args.reference)?,
                mode: parse_mode(&args.mode)?,
                n: args.n,
                l: LChoice::parse(&args.l),
                precision: args.precision,
                states: args.states,
                format: OutputFormat::parse(&args.format)?,
                lhat_anchors: args.anchors,
                out: args.out,
            };
            let table = cmd_compare(&cfg)?;
            if cfg.out.is_none() {
                print!("{}", render_compare(&table, cfg.format));
            }
            eprintln!("compared {} states in {} ms", table.rows.len(), table.wall_ms);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
