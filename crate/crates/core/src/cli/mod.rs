//! Command-line front end: `solve`, `verify` and `benchmark`.

pub mod benchmark;
pub mod config;
pub mod output;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::sampler::{profile, Sampler};
use crate::star_solver::{solve_star, SolverOptions, StarSolution};
use crate::verifier::{contact_check, oracle_star, shock_residuals};
use crate::wave_curves::ShockMode;
use config::{parse_config, SampleGrid, SolveConfig};

/// Grid size used when `--out` is given and the configuration has no `[sample]` table.
pub const AUTO_SAMPLE_COUNT: usize = 201;
/// Threshold on normalized jump residuals and oracle agreement in `verify`.
pub const VERIFY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    CheckFailed = 1,
    SolverFailure = 2,
    IoFailure = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Parser)]
#[command(name = "mixture-riemann", version, about = "Exact Riemann solver for isothermal two-phase mixtures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the problem in a configuration file and print the star state.
    Solve {
        #[arg(long)]
        config: PathBuf,
        /// Write the sampled profile as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the shock mode of the configuration.
        #[arg(long)]
        mode: Option<ShockMode>,
    },
    /// Solve in both shock modes and check the result against an independent solver.
    Verify {
        #[arg(long)]
        config: PathBuf,
    },
    /// Run the built-in benchmark problems.
    Benchmark {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        case: Option<u8>,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() {
                ExitStatus::SolverFailure
            } else {
                let _ = write!(out, "{e}");
                ExitStatus::Success
            };
        }
    };
    let status = match cli.command {
        Command::Solve { config, out: path, mode } => run_solve(&config, path.as_deref(), mode, out, err),
        Command::Verify { config } => run_verify(&config, out, err),
        Command::Benchmark { case } => run_benchmark(case, out),
    };
    match status {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitStatus::IoFailure
        }
    }
}

fn load(path: &Path, err: &mut dyn Write) -> Result<SolveConfig, ExitStatus> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return Err(ExitStatus::IoFailure);
        }
    };
    parse_config(&text).map_err(|e| {
        let _ = writeln!(err, "error: {}: {e}", path.display());
        ExitStatus::SolverFailure
    })
}

fn auto_grid(solution: &StarSolution, cfg: &SolveConfig) -> crate::Result<SampleGrid> {
    let edges = Sampler::new(solution, &cfg.left, &cfg.right, &cfg.params)?.edges();
    let lo = edges.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = edges.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let pad = 0.25 * (hi - lo) + 1.0;
    Ok(SampleGrid {
        xi_min: lo - pad,
        xi_max: hi + pad,
        count: AUTO_SAMPLE_COUNT,
    })
}

fn run_solve(
    path: &Path,
    out_path: Option<&Path>,
    mode: Option<ShockMode>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    let mut cfg = match load(path, err) {
        Ok(c) => c,
        Err(s) => return Ok(s),
    };
    if let Some(m) = mode {
        cfg.solver.mode = m;
    }
    let solved = solve_star(&cfg.left, &cfg.right, &cfg.params, &cfg.solver).and_then(|sol| {
        let summary = output::solve_summary(&cfg.params, &cfg.left, &cfg.right, &sol)?;
        Ok((sol, summary))
    });
    let (solution, summary) = match solved {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "error: solver failed: {e}")?;
            return Ok(ExitStatus::SolverFailure);
        }
    };
    out.write_all(summary.as_bytes())?;

    let Some(out_path) = out_path else {
        if cfg.sample.is_some() {
            writeln!(out, "note: [sample] present but no --out given; profile not written")?;
        }
        return Ok(ExitStatus::Success);
    };
    let grid = match cfg.sample {
        Some(g) => Ok(g),
        None => auto_grid(&solution, &cfg),
    };
    let prof = grid.and_then(|g| {
        profile(&solution, &cfg.left, &cfg.right, &cfg.params, g.xi_min, g.xi_max, g.count)
    });
    let prof = match prof {
        Ok(p) => p,
        Err(e) => {
            writeln!(err, "error: sampling failed: {e}")?;
            return Ok(ExitStatus::SolverFailure);
        }
    };
    let csv = output::profile_csv(&prof, cfg.params.components());
    if let Err(e) = fs::write(out_path, csv) {
        writeln!(err, "error: cannot write {}: {e}", out_path.display())?;
        return Ok(ExitStatus::IoFailure);
    }
    writeln!(out, "profile: {} ({} rows)", out_path.display(), prof.entries.len())?;
    Ok(ExitStatus::Success)
}

struct VerifyOutcome {
    lines: Vec<String>,
    passed: bool,
}

fn verify_config(cfg: &SolveConfig) -> crate::Result<VerifyOutcome> {
    let (params, left, right) = (&cfg.params, &cfg.left, &cfg.right);
    let mut lines = Vec::new();
    let mut passed = true;
    let mut flag = |lines: &mut Vec<String>, key: String, value: f64, ok: bool| {
        lines.push(format!("{key}: {value} {}", if ok { "ok" } else { "FAIL" }));
        passed &= ok;
    };

    let p_scale = left.pressure(params)?.abs().max(right.pressure(params)?.abs());
    let v_scale = left
        .v()
        .abs()
        .max(right.v().abs())
        .max(left.sound_speed(params)?)
        .max(right.sound_speed(params)?);

    let mut rh_solution = None;
    for mode in [ShockMode::RhConsistent, ShockMode::PaperLiteral] {
        let options = SolverOptions { mode, ..cfg.solver };
        let sol = solve_star(left, right, params, &options)?;
        let name = mode.as_str();
        lines.push(format!("{name}_p_star: {}", sol.p_star));
        lines.push(format!("{name}_v_star: {}", sol.v_star));
        let (rl, rr) = shock_residuals(params, &sol, left, right)?;
        for (side, r) in [("left", rl), ("right", rr)] {
            let Some(r) = r else { continue };
            let mass = r.max_normalized_mass();
            flag(&mut lines, format!("{name}_{side}_rh_mass"), mass, mass < VERIFY_TOL);
            let mom = r.normalized_momentum.abs();
            // Only the jump-consistent mode is required to conserve momentum.
            let ok = mode == ShockMode::PaperLiteral || mom < VERIFY_TOL;
            flag(&mut lines, format!("{name}_{side}_rh_momentum"), mom, ok);
        }
        let contact = contact_check(params, &sol, left, right)?;
        let ok = contact.admissible(sol.p_star.abs().max(p_scale), v_scale, VERIFY_TOL);
        flag(
            &mut lines,
            format!("{name}_contact_pressure_jump"),
            contact.pressure_jump,
            ok,
        );
        lines.push(format!("{name}_contact_velocity_jump: {}", contact.velocity_jump));
        if mode == ShockMode::RhConsistent {
            rh_solution = Some(sol);
        }
    }

    let sol = rh_solution.expect("rh-consistent solve ran");
    let oracle = oracle_star(params, left, right, 1e-14)?;
    let dp = (sol.p_star - oracle.p_star).abs() / oracle.p_star.abs().max(1.0);
    let dv = (sol.v_star - oracle.v_star).abs() / v_scale.max(oracle.v_star.abs()).max(1.0);
    lines.push(format!("oracle_p_star: {}", oracle.p_star));
    lines.push(format!("oracle_v_star: {}", oracle.v_star));
    flag(&mut lines, "oracle_p_rel_diff".into(), dp, dp < VERIFY_TOL);
    flag(&mut lines, "oracle_v_rel_diff".into(), dv, dv < VERIFY_TOL);
    Ok(VerifyOutcome { lines, passed })
}

fn run_verify(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<ExitStatus> {
    let cfg = match load(path, err) {
        Ok(c) => c,
        Err(s) => return Ok(s),
    };
    match verify_config(&cfg) {
        Ok(outcome) => {
            for line in &outcome.lines {
                writeln!(out, "{line}")?;
            }
            writeln!(out, "status: {}", if outcome.passed { "pass" } else { "fail" })?;
            Ok(if outcome.passed {
                ExitStatus::Success
            } else {
                ExitStatus::CheckFailed
            })
        }
        Err(e) => {
            writeln!(err, "error: verification failed: {e}")?;
            Ok(ExitStatus::SolverFailure)
        }
    }
}

fn run_benchmark(case: Option<u8>, out: &mut dyn Write) -> io::Result<ExitStatus> {
    let cases: Vec<_> = benchmark::builtin_cases()
        .into_iter()
        .filter(|c| case.is_none_or(|id| c.id == id))
        .collect();
    benchmark::report(&cases, out)
}
