//! Independent checks of a computed Riemann solution.
//!
//! [`oracle_star`] never touches the closed-form wave curves: on a shock side
//! it eliminates the shock speed with the component-1 mass jump and solves
//! the momentum jump for `v*` by bisection, on a rarefaction side it uses the
//! logarithmic Riemann invariant directly. [`isothermal_reference`] is the
//! textbook single-component isothermal Euler solver.

use crate::eos::EosParameters;
use crate::error::{Error, Result};
use crate::star_solver::StarSolution;
use crate::state::RiemannState;
use crate::wave_curves::{star_densities, MassFlux, WaveCurve, WaveDescriptor};

const BISECTION_STEPS: usize = 400;
const EXPANSION_STEPS: usize = 400;

/// Residuals of the mass and momentum jump conditions across a discontinuity.
#[derive(Debug, Clone, PartialEq)]
pub struct RhResidual {
    /// `(ρ''_α v'' - ρ'_α v') - S (ρ''_α - ρ'_α)` per component (kg/(m² s)).
    pub mass: Vec<f64>,
    /// Momentum jump residual (Pa).
    pub momentum: f64,
    /// `mass` divided by `max(|flux terms|, 1)` of each equation.
    pub normalized_mass: Vec<f64>,
    pub normalized_momentum: f64,
}

impl RhResidual {
    pub fn max_normalized_mass(&self) -> f64 {
        self.normalized_mass.iter().fold(0.0, |m, r| m.max(r.abs()))
    }
}

fn max_abs(terms: &[f64]) -> f64 {
    terms.iter().fold(1.0_f64, |m, t| m.max(t.abs()))
}

/// Jump-condition residuals for `front` (left, `'`) and `back` (right, `''`)
/// separated by a discontinuity moving at `speed`.
pub fn rh_residual(
    params: &EosParameters,
    front: &RiemannState,
    back: &RiemannState,
    speed: f64,
) -> Result<RhResidual> {
    if front.components() != back.components() {
        return Err(Error::Contract("states differ in component count".into()));
    }
    let (v1, v2) = (front.v(), back.v());
    let p1 = front.pressure(params)?;
    let p2 = back.pressure(params)?;

    let mut mass = Vec::with_capacity(front.components());
    let mut normalized_mass = Vec::with_capacity(front.components());
    for (&r1, &r2) in front.rho().iter().zip(back.rho()) {
        let terms = [r2 * v2, r1 * v1, speed * r2, speed * r1];
        let res = (r2 * v2 - r1 * v1) - speed * (r2 - r1);
        mass.push(res);
        normalized_mass.push(res / max_abs(&terms));
    }

    let (d1, d2) = (front.density(), back.density());
    let terms = [d2 * v2 * v2, d1 * v1 * v1, p2, p1, speed * d2 * v2, speed * d1 * v1];
    let momentum = (d2 * v2 * v2 - d1 * v1 * v1) + (p2 - p1) - speed * (d2 * v2 - d1 * v1);
    Ok(RhResidual {
        normalized_momentum: momentum / max_abs(&terms),
        mass,
        momentum,
        normalized_mass,
    })
}

/// Jump-condition residuals at the left and right waves of `solution`,
/// `None` where that wave is not a shock.
pub fn shock_residuals(
    params: &EosParameters,
    solution: &StarSolution,
    left: &RiemannState,
    right: &RiemannState,
) -> Result<(Option<RhResidual>, Option<RhResidual>)> {
    let left_res = match solution.left_wave {
        WaveDescriptor::Shock { speed, .. } => {
            let star = RiemannState::new(left.chi(), solution.rho_star_left.clone(), solution.v_star)?;
            Some(rh_residual(params, left, &star, speed)?)
        }
        _ => None,
    };
    let right_res = match solution.right_wave {
        WaveDescriptor::Shock { speed, .. } => {
            let star =
                RiemannState::new(right.chi(), solution.rho_star_right.clone(), solution.v_star)?;
            Some(rh_residual(params, &star, right, speed)?)
        }
        _ => None,
    };
    Ok((left_res, right_res))
}

/// Admissibility data for the contact at `ξ = v*`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContactReport {
    pub chi_jump: f64,
    /// `p(χ_+, ρ*_+) - p(χ_-, ρ*_-)` (Pa).
    pub pressure_jump: f64,
    /// Star velocity from the right wave minus star velocity from the left wave (m/s).
    pub velocity_jump: f64,
    /// `max |s - v|` over both sides of the contact, with `s = v*`.
    pub speed_mismatch: f64,
}

impl ContactReport {
    /// Pressure and velocity continuous to the given relative tolerances.
    pub fn admissible(&self, p_scale: f64, v_scale: f64, tol: f64) -> bool {
        self.pressure_jump.abs() <= tol * p_scale.abs().max(1.0)
            && self.velocity_jump.abs() <= tol * v_scale.abs().max(1.0)
            && (self.chi_jump == 0.0 || self.speed_mismatch <= tol * v_scale.abs().max(1.0))
    }
}

pub fn contact_check(
    params: &EosParameters,
    solution: &StarSolution,
    left: &RiemannState,
    right: &RiemannState,
) -> Result<ContactReport> {
    let p_left = params.mixture_pressure(left.chi(), &solution.rho_star_left)?;
    let p_right = params.mixture_pressure(right.chi(), &solution.rho_star_right)?;
    let mode = solution.mode;
    let v_left = left.v() - WaveCurve::new(params, left)?.eval(solution.p_star, mode)?;
    let v_right = right.v() + WaveCurve::new(params, right)?.eval(solution.p_star, mode)?;
    Ok(ContactReport {
        chi_jump: right.chi() - left.chi(),
        pressure_jump: p_right - p_left,
        velocity_jump: v_right - v_left,
        speed_mismatch: (solution.v_star - v_left)
            .abs()
            .max((solution.v_star - v_right).abs()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Facing {
    Left,
    Right,
}

/// One side of the oracle problem, evaluated straight from the jump
/// conditions and the rarefaction invariant.
struct OracleSide<'a> {
    params: &'a EosParameters,
    state: &'a RiemannState,
    facing: Facing,
    pressure: f64,
    sound_speed: f64,
}

impl<'a> OracleSide<'a> {
    fn new(params: &'a EosParameters, state: &'a RiemannState, facing: Facing) -> Result<Self> {
        state.check_components(params)?;
        Ok(Self {
            params,
            state,
            facing,
            pressure: state.pressure(params)?,
            sound_speed: state.sound_speed(params)?,
        })
    }

    fn sign(&self) -> f64 {
        match self.facing {
            Facing::Left => -1.0,
            Facing::Right => 1.0,
        }
    }

    /// Momentum-jump residual for a shock with star densities `star`, when
    /// the star velocity is `v ± u`, oriented to equal `p - p_K > 0` at `u = 0`.
    fn momentum_residual(&self, star: &[f64], p: f64, u: f64) -> f64 {
        let v = self.state.v();
        let v_star = v + self.sign() * u;
        let rho1 = self.state.rho()[0];
        let speed = (rho1 * v - star[0] * v_star) / (rho1 - star[0]);
        let d = self.state.density();
        let d_star: f64 = star.iter().sum();
        let (d1, v1, p1, d2, v2, p2) = match self.facing {
            Facing::Left => (d, v, self.pressure, d_star, v_star, p),
            Facing::Right => (d_star, v_star, p, d, v, self.pressure),
        };
        let residual = (d2 * v2 * v2 - d1 * v1 * v1) + (p2 - p1) - speed * (d2 * v2 - d1 * v1);
        -self.sign() * residual
    }

    fn star_velocity(&self, p: f64) -> Result<f64> {
        let star = star_densities(p, self.state, self.params)?;
        let v = self.state.v();
        if p <= self.pressure {
            let shift = self.sound_speed * (star[0] / self.state.rho()[0]).ln();
            return Ok(v + self.sign() * shift);
        }
        if star[0] == self.state.rho()[0] {
            return Ok(v);
        }
        // Residual is Δp > 0 at u = 0 and decreases without bound in u.
        let mut hi = self.sound_speed.max(1.0);
        let mut found = false;
        for _ in 0..EXPANSION_STEPS {
            if self.momentum_residual(&star, p, hi) < 0.0 {
                found = true;
                break;
            }
            hi *= 2.0;
        }
        if !found {
            return Err(Error::Bracket(format!(
                "momentum jump has no root for star pressure {p} Pa"
            )));
        }
        let mut lo = 0.0;
        for _ in 0..BISECTION_STEPS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.momentum_residual(&star, p, mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(v + self.sign() * 0.5 * (lo + hi))
    }

    fn wave(&self, p_star: f64, v_star: f64, star: &[f64], tol: f64) -> WaveDescriptor {
        let a = self.sound_speed;
        if (p_star - self.pressure).abs() <= 10.0 * tol * p_star.abs() {
            return WaveDescriptor::ZeroStrength {
                speed: v_star + self.sign() * a,
            };
        }
        let v = self.state.v();
        if p_star > self.pressure {
            let rho1 = self.state.rho()[0];
            let speed = (rho1 * v - star[0] * v_star) / (rho1 - star[0]);
            let flux = self.state.rho().iter().map(|r| r * (v - speed)).collect();
            WaveDescriptor::Shock {
                speed,
                mass_flux: MassFlux(flux),
            }
        } else {
            WaveDescriptor::Rarefaction {
                head: v + self.sign() * a,
                tail: v_star + self.sign() * a,
            }
        }
    }
}

/// Star state from the jump conditions and rarefaction invariants alone.
///
/// Bisects `g(p) = v*_left(p) - v*_right(p)` until the bracket is narrower
/// than `tol` relative to `p`. The result carries `ShockMode::RhConsistent`.
pub fn oracle_star(
    params: &EosParameters,
    left: &RiemannState,
    right: &RiemannState,
    tol: f64,
) -> Result<StarSolution> {
    let ls = OracleSide::new(params, left, Facing::Left)?;
    let rs = OracleSide::new(params, right, Facing::Right)?;
    let g = |p: f64| -> Result<f64> { Ok(ls.star_velocity(p)? - rs.star_velocity(p)?) };

    let floor = left
        .pressure_coefficients(params)?
        .a0
        .max(right.pressure_coefficients(params)?.a0);
    let mut gap = 1e-9 * floor.abs().max(1.0);
    let mut lo = None;
    for _ in 0..EXPANSION_STEPS {
        let p = floor + gap;
        if p <= floor {
            break;
        }
        if g(p)? > 0.0 {
            lo = Some(p);
            break;
        }
        gap *= 1e-3;
    }
    let mut lo = lo.ok_or_else(|| Error::Bracket("oracle: no lower bracket".into()))?;
    let mut hi = ls.pressure.max(rs.pressure).max(lo + lo.abs().max(1.0));
    let mut expansions = 0;
    while g(hi)? >= 0.0 {
        expansions += 1;
        if expansions > EXPANSION_STEPS {
            return Err(Error::Bracket("oracle: no upper bracket".into()));
        }
        hi = lo + 2.0 * (hi - lo);
    }

    let mut iterations = 0;
    loop {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol * mid.abs() || mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        if iterations > BISECTION_STEPS {
            return Err(Error::NoConvergence {
                iterations,
                lo,
                hi,
                residual: g(mid)?.abs(),
            });
        }
        if g(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let p_star = 0.5 * (lo + hi);
    let v_left = ls.star_velocity(p_star)?;
    let v_right = rs.star_velocity(p_star)?;
    let v_star = 0.5 * (v_left + v_right);
    let rho_star_left = star_densities(p_star, left, params)?;
    let rho_star_right = star_densities(p_star, right, params)?;
    Ok(StarSolution {
        p_star,
        v_star,
        left_wave: ls.wave(p_star, v_star, &rho_star_left, tol),
        right_wave: rs.wave(p_star, v_star, &rho_star_right, tol),
        rho_star_left,
        rho_star_right,
        mode: crate::wave_curves::ShockMode::RhConsistent,
        iterations,
        f_residual: v_left - v_right,
    })
}

/// Exact solution of the single-component isothermal Euler equations with
/// `p = a² ρ`, returned as `(p*, v*)`.
///
/// Both states must carry one component and the same pure phase, `χ = -1`
/// or `χ = 1`.
pub fn isothermal_reference(
    left: &RiemannState,
    right: &RiemannState,
    sound_speed: f64,
) -> Result<(f64, f64)> {
    if left.components() != 1 || right.components() != 1 {
        return Err(Error::Contract(
            "isothermal reference needs single-component states".into(),
        ));
    }
    if left.chi() != right.chi() || left.chi().abs() != 1.0 {
        return Err(Error::Contract(format!(
            "isothermal reference needs equal pure phases, got chi = {} and {}",
            left.chi(),
            right.chi()
        )));
    }
    if !(sound_speed.is_finite() && sound_speed > 0.0) {
        return Err(Error::Contract(format!("sound speed must be positive, got {sound_speed}")));
    }
    let a2 = sound_speed * sound_speed;
    let branch = |p: f64, rho: f64| -> f64 {
        let rho_star = p / a2;
        let p_side = a2 * rho;
        if p > p_side {
            ((p - p_side) * (rho_star - rho) / (rho * rho_star)).sqrt()
        } else {
            sound_speed * (rho_star / rho).ln()
        }
    };
    let (rl, rr) = (left.rho()[0], right.rho()[0]);
    let f = |p: f64| branch(p, rl) + branch(p, rr) + right.v() - left.v();

    let mut lo = a2 * rl.min(rr);
    while f(lo) >= 0.0 {
        lo *= 0.5;
        if lo == 0.0 {
            return Err(Error::Bracket("isothermal reference: no lower bracket".into()));
        }
    }
    let mut hi = a2 * rl.max(rr);
    while f(hi) <= 0.0 {
        hi *= 2.0;
        if !hi.is_finite() {
            return Err(Error::Bracket("isothermal reference: no upper bracket".into()));
        }
    }
    for _ in 0..BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let p = 0.5 * (lo + hi);
    let v = 0.5 * (left.v() + right.v()) + 0.5 * (branch(p, rr) - branch(p, rl));
    Ok((p, v))
}
