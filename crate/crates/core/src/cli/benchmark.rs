//! Benchmark problems with reference solutions.

use std::io::Write;

use super::config::{parse_config, SolveConfig};
use super::ExitStatus;
use crate::star_solver::{solve_star, SolverOptions, StarSolution};
use crate::wave_curves::{ShockMode, WaveDescriptor};

pub const P_STAR_REL_TOL: f64 = 1e-6;
pub const V_STAR_ABS_TOL: f64 = 1e-3;
pub const SPEED_ABS_TOL: f64 = 1e-2;
/// Agreement between shock modes when no shock is present.
pub const MODE_AGREEMENT_REL_TOL: f64 = 1e-10;

const EXAMPLE1: &str = include_str!("../../fixtures/example1.toml");
const EXAMPLE2: &str = include_str!("../../fixtures/example2.toml");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    LeftShock,
    LeftHead,
    LeftTail,
    RightTail,
    RightHead,
    RightShock,
}

impl Edge {
    pub fn label(self) -> &'static str {
        match self {
            Edge::LeftShock => "S_L",
            Edge::LeftHead => "S_L_head",
            Edge::LeftTail => "S_L_tail",
            Edge::RightTail => "S_R_tail",
            Edge::RightHead => "S_R_head",
            Edge::RightShock => "S_R",
        }
    }

    /// The edge speed in `solution`, or NaN when the wave has another kind.
    pub fn speed(self, solution: &StarSolution) -> f64 {
        match (self, &solution.left_wave, &solution.right_wave) {
            (Edge::LeftShock, WaveDescriptor::Shock { speed, .. }, _) => *speed,
            (Edge::LeftHead, WaveDescriptor::Rarefaction { head, .. }, _) => *head,
            (Edge::LeftTail, WaveDescriptor::Rarefaction { tail, .. }, _) => *tail,
            (Edge::RightTail, _, WaveDescriptor::Rarefaction { tail, .. }) => *tail,
            (Edge::RightHead, _, WaveDescriptor::Rarefaction { head, .. }) => *head,
            (Edge::RightShock, _, WaveDescriptor::Shock { speed, .. }) => *speed,
            _ => f64::NAN,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expected {
    pub p_star: f64,
    pub v_star: f64,
    pub edges: Vec<(Edge, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkCase {
    pub id: u8,
    pub config: SolveConfig,
    pub modes: Vec<ShockMode>,
    pub expected: Expected,
}

pub fn builtin_cases() -> Vec<BenchmarkCase> {
    let one = parse_config(EXAMPLE1).expect("embedded fixture is valid");
    let two = parse_config(EXAMPLE2).expect("embedded fixture is valid");
    vec![
        BenchmarkCase {
            id: 1,
            config: one,
            modes: vec![ShockMode::PaperLiteral],
            expected: Expected {
                p_star: 2716903.0964,
                v_star: -132.2825,
                edges: vec![
                    (Edge::LeftShock, -176.3412),
                    (Edge::RightTail, 289.925),
                    (Edge::RightHead, 422.207),
                ],
            },
        },
        BenchmarkCase {
            id: 2,
            config: two,
            modes: vec![ShockMode::PaperLiteral, ShockMode::RhConsistent],
            expected: Expected {
                p_star: 305261.3806,
                v_star: 14.4244,
                edges: vec![
                    (Edge::LeftHead, -317.331),
                    (Edge::LeftTail, -252.907),
                    (Edge::RightTail, 343.028),
                    (Edge::RightHead, 348.604),
                ],
            },
        },
    ]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance {
    Relative(f64),
    Absolute(f64),
}

impl Tolerance {
    fn accepts(self, expected: f64, computed: f64) -> bool {
        let diff = (computed - expected).abs();
        match self {
            Tolerance::Relative(t) => diff <= t * expected.abs(),
            Tolerance::Absolute(t) => diff <= t,
        }
    }

    fn describe(self) -> String {
        match self {
            Tolerance::Relative(t) => format!("rel {t:e}"),
            Tolerance::Absolute(t) => format!("abs {t:e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub case: u8,
    pub mode: String,
    pub quantity: String,
    pub expected: f64,
    pub computed: f64,
    pub tolerance: Tolerance,
    pub passed: bool,
}

fn check(
    case: u8,
    mode: &str,
    quantity: &str,
    expected: f64,
    computed: f64,
    tolerance: Tolerance,
) -> CheckResult {
    CheckResult {
        case,
        mode: mode.to_string(),
        quantity: quantity.to_string(),
        expected,
        computed,
        tolerance,
        passed: tolerance.accepts(expected, computed),
    }
}

/// Runs one case in each of its modes and compares with the reference values.
pub fn evaluate(case: &BenchmarkCase) -> Vec<CheckResult> {
    let cfg = &case.config;
    let mut results = Vec::new();
    let mut solutions = Vec::new();
    for &mode in &case.modes {
        let options = SolverOptions {
            mode,
            ..cfg.solver
        };
        let name = mode.as_str();
        match solve_star(&cfg.left, &cfg.right, &cfg.params, &options) {
            Ok(sol) => {
                let e = &case.expected;
                results.push(check(
                    case.id,
                    name,
                    "p_star",
                    e.p_star,
                    sol.p_star,
                    Tolerance::Relative(P_STAR_REL_TOL),
                ));
                results.push(check(
                    case.id,
                    name,
                    "v_star",
                    e.v_star,
                    sol.v_star,
                    Tolerance::Absolute(V_STAR_ABS_TOL),
                ));
                for &(edge, value) in &e.edges {
                    results.push(check(
                        case.id,
                        name,
                        edge.label(),
                        value,
                        edge.speed(&sol),
                        Tolerance::Absolute(SPEED_ABS_TOL),
                    ));
                }
                solutions.push(sol);
            }
            Err(_) => results.push(check(
                case.id,
                name,
                "solve",
                0.0,
                f64::NAN,
                Tolerance::Absolute(0.0),
            )),
        }
    }
    if solutions.len() == 2 && case.modes.len() == 2 {
        let (a, b) = (&solutions[0], &solutions[1]);
        results.push(check(
            case.id,
            "both",
            "p_star_mode_agreement",
            a.p_star,
            b.p_star,
            Tolerance::Relative(MODE_AGREEMENT_REL_TOL),
        ));
        results.push(check(
            case.id,
            "both",
            "v_star_mode_agreement",
            a.v_star,
            b.v_star,
            Tolerance::Relative(MODE_AGREEMENT_REL_TOL),
        ));
    }
    results
}

/// Prints a pass/fail table; `CheckFailed` if any check fails.
pub fn report<W: Write + ?Sized>(cases: &[BenchmarkCase], out: &mut W) -> std::io::Result<ExitStatus> {
    writeln!(
        out,
        "{:<5} {:<14} {:<22} {:>18} {:>22} {:>10}  status",
        "case", "mode", "quantity", "expected", "computed", "tolerance"
    )?;
    let mut failures = Vec::new();
    for case in cases {
        for r in evaluate(case) {
            writeln!(
                out,
                "{:<5} {:<14} {:<22} {:>18} {:>22} {:>10}  {}",
                r.case,
                r.mode,
                r.quantity,
                r.expected,
                r.computed,
                r.tolerance.describe(),
                if r.passed { "PASS" } else { "FAIL" }
            )?;
            if !r.passed {
                failures.push(r);
            }
        }
    }
    if failures.is_empty() {
        writeln!(out, "all benchmarks passed")?;
        return Ok(ExitStatus::Success);
    }
    writeln!(out, "{} check(s) failed:", failures.len())?;
    for r in &failures {
        writeln!(
            out,
            "  case {} {} {}: expected {}, computed {}, |diff| = {} ({})",
            r.case,
            r.mode,
            r.quantity,
            r.expected,
            r.computed,
            (r.computed - r.expected).abs(),
            r.tolerance.describe()
        )?;
    }
    Ok(ExitStatus::CheckFailed)
}
