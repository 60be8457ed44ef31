//! Wave curves connecting an initial state to the star region.
//!
//! `f_side(p)` is the velocity change across the outer wave on one side when
//! the star pressure is `p`, oriented so that `v* = v_- - f_left(p)` and
//! `v* = v_+ + f_right(p)`. Pressures above the initial pressure give a
//! shock, pressures at or below give a rarefaction.

use std::fmt;
use std::str::FromStr;

use crate::eos::{EosParameters, PressureCoefficients};
use crate::error::{finite, Error, Result};
use crate::state::RiemannState;

/// Selects the shock branch of the wave curves.
///
/// `PaperLiteral` divides `sqrt(p - p_K)·sqrt(1 - A1 ρ_1 / (p - A0))` by the
/// total density. `RhConsistent` divides by its square root, which is what
/// the mass and momentum jump conditions require. The rarefaction branch is
/// the same in both modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ShockMode {
    PaperLiteral,
    #[default]
    RhConsistent,
}

impl ShockMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ShockMode::PaperLiteral => "paper-literal",
            ShockMode::RhConsistent => "rh-consistent",
        }
    }
}

impl fmt::Display for ShockMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ShockMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper-literal" => Ok(ShockMode::PaperLiteral),
            "rh-consistent" => Ok(ShockMode::RhConsistent),
            other => Err(format!(
                "unknown shock mode `{other}` (expected `paper-literal` or `rh-consistent`)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Relative mass fluxes `Q_α = ρ_α (v - S)` through a shock (kg/(m² s)).
#[derive(Debug, Clone, PartialEq)]
pub struct MassFlux(pub Vec<f64>);

impl MassFlux {
    pub fn total(&self) -> f64 {
        self.0.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum WaveDescriptor {
    Shock { speed: f64, mass_flux: MassFlux },
    /// `head` is the edge adjacent to the initial state, `tail` the edge
    /// adjacent to the star region.
    Rarefaction { head: f64, tail: f64 },
    /// A wave whose star state equals the initial state; `speed` is the
    /// collapsed characteristic speed `v* ∓ A`.
    ZeroStrength { speed: f64 },
}

impl WaveDescriptor {
    pub fn kind(&self) -> &'static str {
        match self {
            WaveDescriptor::Shock { .. } => "shock",
            WaveDescriptor::Rarefaction { .. } => "rarefaction",
            WaveDescriptor::ZeroStrength { .. } => "zero-strength",
        }
    }

    /// Slowest and fastest speed occupied by the wave.
    pub fn span(&self) -> (f64, f64) {
        match *self {
            WaveDescriptor::Shock { speed, .. } | WaveDescriptor::ZeroStrength { speed } => {
                (speed, speed)
            }
            WaveDescriptor::Rarefaction { head, tail } => (head.min(tail), head.max(tail)),
        }
    }
}

/// Per-side quantities of one wave curve, computed once.
#[derive(Debug, Clone)]
pub struct WaveCurve {
    coeffs: PressureCoefficients,
    pressure: f64,
    rho1: f64,
    density: f64,
    sound_speed: f64,
}

impl WaveCurve {
    pub fn new(params: &EosParameters, state: &RiemannState) -> Result<Self> {
        let coeffs = state.pressure_coefficients(params)?;
        let rho1 = state.rho()[0];
        Ok(Self {
            coeffs,
            pressure: coeffs.pressure(rho1),
            rho1,
            density: state.density(),
            sound_speed: state.sound_speed(params)?,
        })
    }

    /// Initial pressure `A0 + A1 ρ_1`.
    pub fn pressure(&self) -> f64 {
        self.pressure
    }

    /// `A0`; the curve is defined for pressures strictly above it.
    pub fn floor(&self) -> f64 {
        self.coeffs.a0
    }

    pub fn coefficients(&self) -> PressureCoefficients {
        self.coeffs
    }

    pub fn sound_speed(&self) -> f64 {
        self.sound_speed
    }

    pub fn eval(&self, p: f64, mode: ShockMode) -> Result<f64> {
        finite("pressure", p)?;
        let above_floor = p - self.coeffs.a0;
        if above_floor <= 0.0 {
            return Err(Error::PressureDomain {
                pressure: p,
                floor: self.coeffs.a0,
            });
        }
        let dp = p - self.pressure;
        if dp > 0.0 {
            // sqrt(p - p_K) * sqrt(1 - A1 ρ_1 / (p - A0)) with the product
            // folded into (p - p_K) / sqrt(p - A0).
            let core = dp / above_floor.sqrt();
            Ok(match mode {
                ShockMode::PaperLiteral => core / self.density,
                ShockMode::RhConsistent => core / self.density.sqrt(),
            })
        } else {
            // ln(ρ*_1 / ρ_1) with ρ*_1 = (p - A0) / A1.
            Ok((dp / (self.coeffs.a1 * self.rho1)).ln_1p() * self.sound_speed)
        }
    }
}

/// Velocity change across one outer wave at star pressure `p`.
pub fn f_side(
    p: f64,
    state: &RiemannState,
    params: &EosParameters,
    mode: ShockMode,
) -> Result<f64> {
    WaveCurve::new(params, state)?.eval(p, mode)
}

/// `f(p) = f_left(p) + f_right(p) + (v_+ - v_-)` with both curves precomputed.
#[derive(Debug, Clone)]
pub struct StarFunction {
    pub left: WaveCurve,
    pub right: WaveCurve,
    velocity_jump: f64,
}

impl StarFunction {
    pub fn new(params: &EosParameters, left: &RiemannState, right: &RiemannState) -> Result<Self> {
        Ok(Self {
            left: WaveCurve::new(params, left)?,
            right: WaveCurve::new(params, right)?,
            velocity_jump: right.v() - left.v(),
        })
    }

    /// Lower end of the common domain, `max(A0_-, A0_+)`.
    pub fn floor(&self) -> f64 {
        self.left.floor().max(self.right.floor())
    }

    pub fn eval(&self, p: f64, mode: ShockMode) -> Result<f64> {
        Ok(self.left.eval(p, mode)? + self.right.eval(p, mode)? + self.velocity_jump)
    }
}

pub fn f_total(
    p: f64,
    left: &RiemannState,
    right: &RiemannState,
    params: &EosParameters,
    mode: ShockMode,
) -> Result<f64> {
    StarFunction::new(params, left, right)?.eval(p, mode)
}

/// Star densities `ρ*_α = c_α (p* - A0) / A1` at the state's own χ and concentrations.
pub fn star_densities(p_star: f64, state: &RiemannState, params: &EosParameters) -> Result<Vec<f64>> {
    finite("pressure", p_star)?;
    let coeffs = state.pressure_coefficients(params)?;
    if p_star <= coeffs.a0 {
        return Err(Error::PressureDomain {
            pressure: p_star,
            floor: coeffs.a0,
        });
    }
    let rho1 = coeffs.rho1(p_star);
    let mut rho: Vec<f64> = state.concentrations().iter().map(|c| c * rho1).collect();
    rho[0] = rho1;
    Ok(rho)
}

/// Shock speed from the component-1 mass jump, and the relative mass fluxes.
pub fn shock_speed(state: &RiemannState, star_rho: &[f64], v_star: f64) -> Result<(f64, MassFlux)> {
    if star_rho.len() != state.components() {
        return Err(Error::Contract(format!(
            "{} star densities for a {}-component state",
            star_rho.len(),
            state.components()
        )));
    }
    let rho1 = state.rho()[0];
    let star1 = star_rho[0];
    if star1 == rho1 {
        return Err(Error::DegenerateWave);
    }
    let v = state.v();
    let speed = (rho1 * v - star1 * v_star) / (rho1 - star1);
    let flux = state.rho().iter().map(|r| r * (v - speed)).collect();
    Ok((speed, MassFlux(flux)))
}

/// `(head, tail)` of a rarefaction fan; `A` is constant across the fan.
pub fn rarefaction_speeds(
    params: &EosParameters,
    state: &RiemannState,
    v_star: f64,
    side: Side,
) -> Result<(f64, f64)> {
    let a = state.sound_speed(params)?;
    Ok(match side {
        Side::Left => (state.v() - a, v_star - a),
        Side::Right => (state.v() + a, v_star + a),
    })
}
