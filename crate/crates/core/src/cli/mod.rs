//! Batch front end: single phase shifts, reference-table reproduction, the
//! beta scan, bound states, and the validation grid, emitting CSV or JSON.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 validation failure.

pub mod output;
pub mod scan;
pub mod table1;
pub mod validate;

use crate::error::Error;
use crate::kinematics::{KinematicContext, MassPreset, TwoBodyMasses};
use crate::potential::VarshniParams;
use crate::scattering::{lambda, phase_shift, Channel};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{Cell, OutputFormat, Table};
use rayon::prelude::*;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "vscat", version, about = "Semi-relativistic Varshni-potential scattering")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Phase shift, wave number and normalization per channel
    PhaseShift(PhaseShiftArgs),
    /// Scan the screening parameter against the embedded reference table
    ScanBeta(ScanBetaArgs),
    /// Bound-state energies from the pole condition
    BoundStates(BoundStatesArgs),
    /// Compare the closed form against the Numerov oracle; nonzero exit on failure
    Validate(ValidateArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresetArg {
    Equal,
    Unequal,
}

impl PresetArg {
    fn preset(self) -> MassPreset {
        match self {
            PresetArg::Equal => MassPreset::Equal,
            PresetArg::Unequal => MassPreset::Unequal,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatArg {
    Csv,
    Json,
}

impl FormatArg {
    fn format(self) -> OutputFormat {
        match self {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Args, Debug)]
pub struct MassArgs {
    /// Mass of particle 1 (required unless --preset is given)
    #[arg(long)]
    pub m1: Option<f64>,
    /// Mass of particle 2
    #[arg(long)]
    pub m2: Option<f64>,
    /// Mass preset; twice on phase-shift gives the two-column comparison
    #[arg(long, value_enum)]
    pub preset: Vec<PresetArg>,
    /// Override the relativistic coefficient sigma = (mu/eta)^3
    #[arg(long)]
    pub sigma: Option<f64>,
}

#[derive(Args, Debug)]
pub struct PotentialArgs {
    /// Potential strength a (energy dimension)
    #[arg(long, default_value_t = 0.15)]
    pub a: f64,
    /// Potential strength b (length dimension)
    #[arg(long, default_value_t = 0.15)]
    pub b: f64,
    /// Semi-relativistic energy E
    #[arg(long, default_value_t = 1.0)]
    pub energy: f64,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Record stream format
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
    /// Write records to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PhaseShiftArgs {
    #[command(flatten)]
    pub masses: MassArgs,
    #[command(flatten)]
    pub potential: PotentialArgs,
    /// Screening parameter beta
    #[arg(long)]
    pub beta: f64,
    /// Channel: a single l or an inclusive range lo..hi
    #[arg(long, default_value = "0..20")]
    pub l: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ScanBetaArgs {
    /// Mass preset whose reference column to target
    #[arg(long, value_enum, default_value = "equal")]
    pub preset: PresetArg,
    #[command(flatten)]
    pub potential: PotentialArgs,
    /// Lower edge of the beta grid
    #[arg(long)]
    pub beta_min: Option<f64>,
    /// Upper edge of the beta grid (must stay below the open-channel bound)
    #[arg(long)]
    pub beta_max: Option<f64>,
    /// Number of grid points
    #[arg(long, default_value_t = 200)]
    pub beta_count: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct BoundStatesArgs {
    #[command(flatten)]
    pub masses: MassArgs,
    #[command(flatten)]
    pub potential: PotentialArgs,
    /// Screening parameter beta
    #[arg(long)]
    pub beta: f64,
    /// Channels to solve: single l or range lo..hi
    #[arg(long, default_value = "0")]
    pub l: String,
    /// Largest radial quantum number to search
    #[arg(long, default_value_t = 3)]
    pub n_max: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    /// Multiply w2 by this factor in the residual certification (the
    /// validation must then fail; demonstrates the check's sensitivity)
    #[arg(long)]
    pub debug_perturb_w2: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Parse "5" or "0..20" into an inclusive channel list.
fn parse_l_spec(spec: &str) -> Result<Vec<u32>, Error> {
    let parse_one = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| Error::Domain(format!("invalid l value '{s}'")))
    };
    let (lo, hi) = match spec.split_once("..") {
        Some((lo, hi)) => (parse_one(lo)?, parse_one(hi)?),
        None => {
            let l = parse_one(spec)?;
            (l, l)
        }
    };
    if hi < lo {
        return Err(Error::Domain(format!("empty l range '{spec}'")));
    }
    if u64::from(hi - lo) + 1 > 10_000 {
        return Err(Error::Domain("l range larger than 10000 channels".into()));
    }
    Ok((lo..=hi).collect())
}

fn build_context(masses: &MassArgs, energy: f64) -> Result<KinematicContext, Error> {
    let preset = match masses.preset.as_slice() {
        [] => None,
        [one] => Some(*one),
        _ => {
            return Err(Error::Domain(
                "multiple --preset values are only meaningful for phase-shift".into(),
            ))
        }
    };
    let mut ctx = match (preset, masses.m1, masses.m2) {
        (Some(p), None, None) => p.preset().context(energy),
        (None, Some(m1), Some(m2)) => {
            KinematicContext::new(TwoBodyMasses::new(m1, m2)?, energy)?
        }
        (Some(_), _, _) => {
            return Err(Error::Domain("--preset conflicts with explicit --m1/--m2".into()))
        }
        _ => return Err(Error::Domain("need either --preset or both --m1 and --m2".into())),
    };
    if let Some(s) = masses.sigma {
        ctx = ctx.with_sigma_override(s)?;
    }
    Ok(ctx)
}

/// Entry point used by the binary and by tests. Writes the record stream to
/// stdout (or --out) and human-readable summaries to stderr.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    match dispatch(cli, stdout, stderr) {
        Ok(code) => code,
        Err(RunError::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DOMAIN
        }
        Err(RunError::Io(e)) => {
            let _ = writeln!(stderr, "i/o error: {e}");
            EXIT_USAGE
        }
    }
}

enum RunError {
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Domain(e)
    }
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Io(e)
    }
}

fn emit(table: &Table, output: &OutputArgs, stdout: &mut dyn Write) -> Result<(), RunError> {
    let format = output.format.format();
    match &output.out {
        Some(path) => {
            let mut file = std::fs::File::create(path)?;
            table.write(format, &mut file)?;
        }
        None => table.write(format, stdout)?,
    }
    Ok(())
}

fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, RunError> {
    match cli.command {
        Command::PhaseShift(args) => cmd_phase_shift(args, stdout),
        Command::ScanBeta(args) => cmd_scan_beta(args, stdout, stderr),
        Command::BoundStates(args) => cmd_bound_states(args, stdout),
        Command::Validate(args) => cmd_validate(args, stdout),
    }
}

fn phase_row(ctx: &KinematicContext, p: &VarshniParams, l: u32) -> Result<Vec<Cell>, Error> {
    let ch = Channel::new(l);
    let lam = lambda(ctx, p, ch).ok();
    match phase_shift(ctx, p, ch) {
        Ok(res) => Ok(vec![
            Cell::Int(i64::from(l)),
            Cell::OptNum(Some(res.k)),
            Cell::OptNum(Some(res.delta)),
            Cell::OptNum(Some(res.normalization)),
            Cell::OptNum(lam),
            Cell::Text("ok".into()),
        ]),
        Err(Error::EvanescentChannel { .. }) => Ok(vec![
            Cell::Int(i64::from(l)),
            Cell::OptNum(None),
            Cell::OptNum(None),
            Cell::OptNum(None),
            Cell::OptNum(lam),
            Cell::Text("closed".into()),
        ]),
        Err(Error::SupercriticalStrength { .. }) => Ok(vec![
            Cell::Int(i64::from(l)),
            Cell::OptNum(None),
            Cell::OptNum(None),
            Cell::OptNum(None),
            Cell::OptNum(None),
            Cell::Text("supercritical".into()),
        ]),
        Err(e) => Err(e),
    }
}

fn cmd_phase_shift(args: PhaseShiftArgs, stdout: &mut dyn Write) -> Result<i32, RunError> {
    let ls = parse_l_spec(&args.l)?;
    let p = VarshniParams::new(args.potential.a, args.potential.b, args.beta)?;

    // two presets: the side-by-side comparison layout of the reference table
    if args.masses.preset.len() == 2 {
        if args.masses.m1.is_some() || args.masses.m2.is_some() {
            return Err(Error::Domain("--preset conflicts with explicit --m1/--m2".into()).into());
        }
        let mut presets = args.masses.preset.clone();
        presets.dedup();
        if presets.len() != 2 {
            return Err(Error::Domain("give two distinct presets for a comparison".into()).into());
        }
        let ctx_eq = MassPreset::Equal.context(args.potential.energy);
        let ctx_un = MassPreset::Unequal.context(args.potential.energy);
        let rows: Result<Vec<_>, Error> = ls
            .par_iter()
            .map(|&l| {
                let ch = Channel::new(l);
                let d_eq = phase_shift(&ctx_eq, &p, ch).map(|r| r.delta);
                let d_un = phase_shift(&ctx_un, &p, ch).map(|r| r.delta);
                let status = match (&d_eq, &d_un) {
                    (Ok(_), Ok(_)) => "ok",
                    (Err(_), Ok(_)) => "closed:equal",
                    (Ok(_), Err(_)) => "closed:unequal",
                    (Err(_), Err(_)) => "closed:both",
                };
                Ok(vec![
                    Cell::Int(i64::from(l)),
                    Cell::OptNum(d_eq.ok()),
                    Cell::OptNum(d_un.ok()),
                    Cell::Text(status.into()),
                ])
            })
            .collect();
        let mut table = Table::new(vec!["l", "delta_equal", "delta_unequal", "status"]);
        for row in rows? {
            table.push(row);
        }
        emit(&table, &args.output, stdout)?;
        return Ok(EXIT_OK);
    }

    let ctx = build_context(&args.masses, args.potential.energy)?;
    let rows: Result<Vec<_>, Error> =
        ls.par_iter().map(|&l| phase_row(&ctx, &p, l)).collect();
    let mut table = Table::new(vec!["l", "k", "delta", "normalization", "lambda", "status"]);
    for row in rows? {
        table.push(row);
    }
    emit(&table, &args.output, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_scan_beta(
    args: ScanBetaArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, RunError> {
    let report = scan::run_beta_scan(
        args.preset.preset(),
        args.potential.energy,
        args.potential.a,
        args.potential.b,
        args.beta_min,
        args.beta_max,
        args.beta_count,
    )?;

    let mut table = Table::new(vec![
        "beta",
        "max_abs_dev",
        "mean_abs_dev",
        "sign_mismatches",
        "pattern_match",
        "printed_max_abs_dev",
        "printed_sign_mismatches",
    ]);
    for (fit, pfit) in report.grid.iter().zip(&report.printed_grid) {
        table.push(vec![
            Cell::Num(fit.beta),
            Cell::Num(fit.max_abs_dev),
            Cell::Num(fit.mean_abs_dev),
            Cell::Int(i64::from(fit.sign_mismatches)),
            Cell::Bool(fit.pattern_match),
            Cell::Num(pfit.max_abs_dev),
            Cell::Int(i64::from(pfit.sign_mismatches)),
        ]);
    }
    emit(&table, &args.output, stdout)?;

    let best = &report.grid[report.best];
    let pbest = &report.printed_grid[report.printed_best];
    writeln!(stderr, "# beta scan: {:?} preset, open-channel bound {}", report.preset,
        output::fmt_g12(report.feasible_bound))?;
    writeln!(
        stderr,
        "# best fit (derived coefficients): beta = {}, max-abs deviation = {}, sign mismatches = {}",
        output::fmt_g12(best.beta),
        output::fmt_g12(best.max_abs_dev),
        best.sign_mismatches
    )?;
    writeln!(
        stderr,
        "# best fit (printed-variant coefficients): beta = {}, max-abs deviation = {}, sign mismatches = {}",
        output::fmt_g12(pbest.beta),
        output::fmt_g12(pbest.max_abs_dev),
        pbest.sign_mismatches
    )?;
    match report.pattern_beta {
        Some(b) => writeln!(stderr, "# reference sign pattern matched at beta = {}", output::fmt_g12(b))?,
        None => writeln!(stderr, "# no scanned beta reproduces the reference sign pattern")?,
    }
    writeln!(stderr, "# residual table at best-fit beta (derived):")?;
    writeln!(stderr, "# {:>3} {:>16} {:>16} {:>16}", "l", "delta", "reference", "deviation")?;
    for (l, (d, r)) in best.deltas.iter().zip(report.reference).enumerate() {
        writeln!(stderr, "# {l:>3} {d:>16.6} {r:>16.6} {:>16.6}", d - r)?;
    }
    Ok(EXIT_OK)
}

fn cmd_bound_states(args: BoundStatesArgs, stdout: &mut dyn Write) -> Result<i32, RunError> {
    let ls = parse_l_spec(&args.l)?;
    let ctx = build_context(&args.masses, args.potential.energy)?;
    let p = VarshniParams::new(args.potential.a, args.potential.b, args.beta)?;

    let jobs: Vec<(u32, u32)> = ls
        .iter()
        .flat_map(|&l| (0..=args.n_max).map(move |n| (l, n)))
        .collect();
    let states: Result<Vec<_>, Error> = jobs
        .par_iter()
        .map(|&(l, n)| crate::bound::solve_bound_energy(&ctx, &p, Channel::new(l), n))
        .collect();

    let mut table = Table::new(vec!["n", "l", "energy", "residual"]);
    // jobs are already sorted by (l, n); energies then increase with n
    for state in states?.into_iter().flatten() {
        table.push(vec![
            Cell::Int(i64::from(state.n)),
            Cell::Int(i64::from(state.channel.l)),
            Cell::Num(state.energy),
            Cell::Num(state.residual),
        ]);
    }
    emit(&table, &args.output, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_validate(args: ValidateArgs, stdout: &mut dyn Write) -> Result<i32, RunError> {
    let report = validate::run_validation(args.debug_perturb_w2)?;
    let mut rendered = String::new();
    for check in &report.checks {
        rendered.push_str(&format!(
            "{} {} - {}\n",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            check.detail
        ));
    }
    rendered.push_str(&format!(
        "max beta*r encountered: {} (screened approximation derived for beta*r << 1)\n",
        output::fmt_g12(report.max_beta_r)
    ));
    rendered.push_str(&format!(
        "validation {}\n",
        if report.passed() { "PASSED" } else { "FAILED" }
    ));
    match &args.output.out {
        Some(path) => std::fs::write(path, &rendered)?,
        None => stdout.write_all(rendered.as_bytes())?,
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_VALIDATION })
}
