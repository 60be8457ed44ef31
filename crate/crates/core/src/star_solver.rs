//! Root finding for the star pressure and assembly of the star region.
//!
//! `f(p) = f_left(p) + f_right(p) + (v_+ - v_-)` is strictly increasing on
//! `(max(A0_-, A0_+), ∞)`, tends to `-∞` at the lower end (logarithmic
//! rarefaction branch) and to `+∞` for large `p`, so it has exactly one root.

use crate::eos::EosParameters;
use crate::error::{Error, Result};
use crate::state::RiemannState;
use crate::wave_curves::{
    rarefaction_speeds, shock_speed, star_densities, ShockMode, Side, StarFunction, WaveCurve,
    WaveDescriptor,
};

const BRACKET_STEPS: usize = 200;
const BRACKET_GROWTH: f64 = 8.0;
const DERIVATIVE_STEP: f64 = 1e-7;
const RESIDUAL_TOL: f64 = 1e-10;
const POLISH_STEPS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RootMethod {
    /// Newton with a central-difference derivative, safeguarded by bisection.
    #[default]
    Hybrid,
    Bisection,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub mode: ShockMode,
    pub tol_rel: f64,
    pub max_iter: usize,
    pub method: RootMethod,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            mode: ShockMode::RhConsistent,
            tol_rel: 1e-12,
            max_iter: 200,
            method: RootMethod::Hybrid,
        }
    }
}

impl SolverOptions {
    pub fn with_mode(mode: ShockMode) -> Self {
        Self {
            mode,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StarSolution {
    pub p_star: f64,
    pub v_star: f64,
    pub left_wave: WaveDescriptor,
    pub right_wave: WaveDescriptor,
    pub rho_star_left: Vec<f64>,
    pub rho_star_right: Vec<f64>,
    pub mode: ShockMode,
    pub iterations: usize,
    /// `f(p_star)` in m/s.
    pub f_residual: f64,
}

/// Returns `(p_lo, p_hi)` with `f(p_lo) < 0 < f(p_hi)`.
pub fn bracket_root(
    left: &RiemannState,
    right: &RiemannState,
    params: &EosParameters,
    mode: ShockMode,
) -> Result<(f64, f64)> {
    bracket(&StarFunction::new(params, left, right)?, mode)
}

fn bracket(func: &StarFunction, mode: ShockMode) -> Result<(f64, f64)> {
    let floor = func.floor();
    let mut eps = 1e-9 * floor.abs().max(1.0);
    let mut lo = None;
    for _ in 0..BRACKET_STEPS {
        let p = floor + eps;
        if p <= floor {
            break;
        }
        if func.eval(p, mode)? < 0.0 {
            lo = Some(p);
            break;
        }
        eps *= 1e-3;
    }
    let lo = lo.ok_or_else(|| {
        Error::Bracket(format!("f stays non-negative just above the floor {floor} Pa"))
    })?;

    let mut hi = func
        .left
        .pressure()
        .max(func.right.pressure())
        .max(2.0 * lo);
    if hi <= lo {
        hi = lo + lo.abs().max(1.0);
    }
    for _ in 0..BRACKET_STEPS {
        let f = func.eval(hi, mode)?;
        if f > 0.0 {
            return Ok((lo, hi));
        }
        if !f.is_finite() {
            break;
        }
        // Grow the distance from the floor side so negative pressures behave.
        hi = lo + (hi - lo) * BRACKET_GROWTH;
    }
    Err(Error::Bracket(format!(
        "no positive value of f found up to {hi} Pa"
    )))
}

pub fn solve_star(
    left: &RiemannState,
    right: &RiemannState,
    params: &EosParameters,
    options: &SolverOptions,
) -> Result<StarSolution> {
    left.check_components(params)?;
    right.check_components(params)?;
    let func = StarFunction::new(params, left, right)?;
    let mode = options.mode;
    let (mut lo, mut hi) = bracket(&func, mode)?;

    let velocity_scale = left
        .v()
        .abs()
        .max(right.v().abs())
        .max(func.left.sound_speed())
        .max(func.right.sound_speed());
    let f_tol = RESIDUAL_TOL * velocity_scale;
    let floor = func.floor();
    let derivative = |x: f64| -> Result<f64> {
        let step = (DERIVATIVE_STEP * x.abs().max(x - floor)).min(0.5 * (x - floor));
        Ok((func.eval(x + step, mode)? - func.eval(x - step, mode)?) / (2.0 * step))
    };

    let mut x = 0.5 * (lo + hi);
    let mut prev_abs = f64::INFINITY;
    let mut iterations = 0;
    let mut converged = None;
    while iterations < options.max_iter {
        iterations += 1;
        let fx = func.eval(x, mode)?;
        // Pure bisection runs to the bracket width so it can serve as a
        // reference for the hybrid iteration.
        let f_tol = match options.method {
            RootMethod::Hybrid => f_tol,
            RootMethod::Bisection => 0.0,
        };
        if fx.abs() <= f_tol {
            converged = Some(fx);
            break;
        }
        if fx < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let mid = 0.5 * (lo + hi);
        if hi - lo <= options.tol_rel * x.abs() || mid <= lo || mid >= hi {
            converged = Some(fx);
            break;
        }
        let stalled = fx.abs() >= prev_abs;
        prev_abs = fx.abs();
        x = match options.method {
            RootMethod::Bisection => mid,
            RootMethod::Hybrid if stalled => mid,
            RootMethod::Hybrid => {
                let slope = derivative(x)?;
                let step = x - fx / slope;
                if slope > 0.0 && step.is_finite() && step > lo && step < hi {
                    step
                } else {
                    mid
                }
            }
        };
    }
    let mut fx = converged.ok_or(Error::NoConvergence {
        iterations,
        lo,
        hi,
        residual: prev_abs,
    })?;

    // A few extra Newton steps take the converged root to round-off, so
    // zero-strength waves are recognised reliably.
    if options.method == RootMethod::Hybrid {
        for _ in 0..POLISH_STEPS {
            if fx == 0.0 {
                break;
            }
            let slope = derivative(x)?;
            let candidate = x - fx / slope;
            if !(slope > 0.0 && candidate > floor && candidate.is_finite()) {
                break;
            }
            let fc = func.eval(candidate, mode)?;
            if fc.abs() >= fx.abs() {
                break;
            }
            iterations += 1;
            x = candidate;
            fx = fc;
        }
    }

    assemble(params, left, right, &func, x, fx, mode, options.tol_rel, iterations)
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    params: &EosParameters,
    left: &RiemannState,
    right: &RiemannState,
    func: &StarFunction,
    p_star: f64,
    f_residual: f64,
    mode: ShockMode,
    tol_rel: f64,
    iterations: usize,
) -> Result<StarSolution> {
    let fl = func.left.eval(p_star, mode)?;
    let fr = func.right.eval(p_star, mode)?;
    let v_star = 0.5 * (left.v() + right.v()) + 0.5 * (fr - fl);
    let rho_star_left = star_densities(p_star, left, params)?;
    let rho_star_right = star_densities(p_star, right, params)?;
    let left_wave = describe(
        params, left, &func.left, &rho_star_left, p_star, v_star, tol_rel, Side::Left,
    )?;
    let right_wave = describe(
        params, right, &func.right, &rho_star_right, p_star, v_star, tol_rel, Side::Right,
    )?;
    Ok(StarSolution {
        p_star,
        v_star,
        left_wave,
        right_wave,
        rho_star_left,
        rho_star_right,
        mode,
        iterations,
        f_residual,
    })
}

#[allow(clippy::too_many_arguments)]
fn describe(
    params: &EosParameters,
    state: &RiemannState,
    curve: &WaveCurve,
    star_rho: &[f64],
    p_star: f64,
    v_star: f64,
    tol_rel: f64,
    side: Side,
) -> Result<WaveDescriptor> {
    let p_side = curve.pressure();
    if (p_star - p_side).abs() <= 10.0 * tol_rel * p_star.abs() {
        let a = curve.sound_speed();
        let speed = match side {
            Side::Left => v_star - a,
            Side::Right => v_star + a,
        };
        return Ok(WaveDescriptor::ZeroStrength { speed });
    }
    if p_star > p_side {
        let (speed, mass_flux) = shock_speed(state, star_rho, v_star)?;
        Ok(WaveDescriptor::Shock { speed, mass_flux })
    } else {
        let (head, tail) = rarefaction_speeds(params, state, v_star, side)?;
        Ok(WaveDescriptor::Rarefaction { head, tail })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eos::PhaseLaw;

    fn example1() -> (EosParameters, RiemannState, RiemannState) {
        let params = EosParameters::new(
            PhaseLaw::ideal(vec![200.0, 300.0]).unwrap(),
            PhaseLaw::new(vec![500.0, 400.0], vec![-1.495e8, -6.35e7]).unwrap(),
            0.0,
        )
        .unwrap();
        (
            params,
            RiemannState::new(-0.95, vec![2.5, 7.5], 0.0).unwrap(),
            RiemannState::new(0.5, vec![600.0, 800.0], 0.0).unwrap(),
        )
    }

    #[test]
    fn bracket_contains_reference_root() {
        let (params, left, right) = example1();
        let (lo, hi) = bracket_root(&left, &right, &params, ShockMode::PaperLiteral).unwrap();
        assert!(lo < 2716903.0964 && 2716903.0964 < hi);
    }

    #[test]
    fn example1_paper_literal() {
        let (params, left, right) = example1();
        let sol = solve_star(&left, &right, &params, &SolverOptions::with_mode(ShockMode::PaperLiteral))
            .unwrap();
        assert!((sol.p_star - 2716903.0964).abs() < 1e-6 * 2716903.0964);
        assert!((sol.v_star - (-132.2825)).abs() < 1e-3);
        match sol.left_wave {
            WaveDescriptor::Shock { speed, .. } => assert!((speed + 176.3412).abs() < 1e-2),
            ref other => panic!("expected a left shock, got {other:?}"),
        }
        match sol.right_wave {
            WaveDescriptor::Rarefaction { head, tail } => {
                assert!((head - 422.207).abs() < 1e-2);
                assert!((tail - 289.925).abs() < 1e-2);
            }
            ref other => panic!("expected a right rarefaction, got {other:?}"),
        }
    }

    #[test]
    fn identical_states_give_zero_strength_waves() {
        let (params, left, _) = example1();
        let moving = RiemannState::new(left.chi(), left.rho().to_vec(), 35.0).unwrap();
        let p = moving.pressure(&params).unwrap();
        for mode in [ShockMode::PaperLiteral, ShockMode::RhConsistent] {
            let sol = solve_star(&moving, &moving, &params, &SolverOptions::with_mode(mode)).unwrap();
            assert!((sol.p_star - p).abs() <= 1e-12 * p);
            assert!((sol.v_star - 35.0).abs() <= 1e-9);
            assert!(matches!(sol.left_wave, WaveDescriptor::ZeroStrength { .. }));
            assert!(matches!(sol.right_wave, WaveDescriptor::ZeroStrength { .. }));
        }
    }

    #[test]
    fn bisection_matches_hybrid() {
        let (params, left, right) = example1();
        let hybrid = solve_star(&left, &right, &params, &SolverOptions::default()).unwrap();
        let bisect = solve_star(
            &left,
            &right,
            &params,
            &SolverOptions {
                method: RootMethod::Bisection,
                ..SolverOptions::default()
            },
        )
        .unwrap();
        assert!((hybrid.p_star - bisect.p_star).abs() <= 10.0 * 1e-12 * hybrid.p_star);
        assert!(hybrid.iterations < bisect.iterations);
    }

    #[test]
    fn iteration_budget_is_enforced() {
        let (params, left, right) = example1();
        let opts = SolverOptions {
            max_iter: 2,
            method: RootMethod::Bisection,
            ..SolverOptions::default()
        };
        assert!(matches!(
            solve_star(&left, &right, &params, &opts),
            Err(Error::NoConvergence { .. })
        ));
    }

    #[test]
    fn component_mismatch_is_rejected() {
        let (params, left, _) = example1();
        let bad = RiemannState::new(0.0, vec![1.0], 0.0).unwrap();
        assert!(matches!(
            solve_star(&left, &bad, &params, &SolverOptions::default()),
            Err(Error::Contract(_))
        ));
    }
}
