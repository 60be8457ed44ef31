//! Evaluation of the self-similar solution `W(ξ)`, `ξ = x / t`.
//!
//! Regions are half-open: each owns its left endpoint, so a sample taken
//! exactly on a shock or on the contact returns the state to the right.

use std::fmt;

use crate::eos::EosParameters;
use crate::error::{Error, Result};
use crate::star_solver::StarSolution;
use crate::state::RiemannState;
use crate::wave_curves::{Side, WaveDescriptor};

/// Offset, relative to the speed scale, of the samples that bracket every
/// wave edge in a [`Profile`].
const EDGE_OFFSET: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region {
    L,
    LFan,
    LStar,
    RStar,
    RFan,
    R,
}

impl Region {
    pub fn tag(self) -> &'static str {
        match self {
            Region::L => "L",
            Region::LFan => "LFAN",
            Region::LStar => "LSTAR",
            Region::RStar => "RSTAR",
            Region::RFan => "RFAN",
            Region::R => "R",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "L" => Region::L,
            "LFAN" => Region::LFan,
            "LSTAR" => Region::LStar,
            "RSTAR" => Region::RStar,
            "RFAN" => Region::RFan,
            "R" => Region::R,
            _ => return None,
        })
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// State inside a rarefaction fan at `xi`, from the closed-form Riemann invariants.
pub fn fan_state(
    params: &EosParameters,
    xi: f64,
    state: &RiemannState,
    side: Side,
    v_star: f64,
) -> Result<RiemannState> {
    let a = state.sound_speed(params)?;
    let (head, tail) = match side {
        Side::Left => (state.v() - a, v_star - a),
        Side::Right => (state.v() + a, v_star + a),
    };
    let (lo, hi) = (head.min(tail), head.max(tail));
    if !(lo..=hi).contains(&xi) {
        return Err(Error::Contract(format!(
            "xi = {xi} lies outside the fan [{lo}, {hi}]"
        )));
    }
    Ok(fan_state_unchecked(state, side, a, xi))
}

fn fan_state_unchecked(state: &RiemannState, side: Side, a: f64, xi: f64) -> RiemannState {
    let (v, ratio) = match side {
        Side::Left => {
            let v = xi + a;
            (v, ((state.v() - v) / a).exp())
        }
        Side::Right => {
            let v = xi - a;
            (v, ((v - state.v()) / a).exp())
        }
    };
    let rho = state.rho().iter().map(|r| r * ratio).collect();
    RiemannState::new(state.chi(), rho, v).expect("fan densities stay positive")
}

/// Precomputed region boundaries for repeated sampling of one solution.
#[derive(Debug, Clone)]
pub struct Sampler<'a> {
    left: &'a RiemannState,
    right: &'a RiemannState,
    left_star: RiemannState,
    right_star: RiemannState,
    solution: &'a StarSolution,
    sound_left: f64,
    sound_right: f64,
}

impl<'a> Sampler<'a> {
    pub fn new(
        solution: &'a StarSolution,
        left: &'a RiemannState,
        right: &'a RiemannState,
        params: &EosParameters,
    ) -> Result<Self> {
        Ok(Self {
            left,
            right,
            left_star: left.with_rho(solution.rho_star_left.clone(), solution.v_star)?,
            right_star: right.with_rho(solution.rho_star_right.clone(), solution.v_star)?,
            solution,
            sound_left: left.sound_speed(params)?,
            sound_right: right.sound_speed(params)?,
        })
    }

    pub fn left_star(&self) -> &RiemannState {
        &self.left_star
    }

    pub fn right_star(&self) -> &RiemannState {
        &self.right_star
    }

    /// Speeds at which the solution is discontinuous or has a kink, in increasing order.
    pub fn edges(&self) -> Vec<f64> {
        let mut edges = Vec::with_capacity(5);
        match self.solution.left_wave {
            WaveDescriptor::Rarefaction { head, tail } => edges.extend([head, tail]),
            WaveDescriptor::Shock { speed, .. } | WaveDescriptor::ZeroStrength { speed } => {
                edges.push(speed)
            }
        }
        edges.push(self.solution.v_star);
        match self.solution.right_wave {
            WaveDescriptor::Rarefaction { head, tail } => edges.extend([tail, head]),
            WaveDescriptor::Shock { speed, .. } | WaveDescriptor::ZeroStrength { speed } => {
                edges.push(speed)
            }
        }
        edges
    }

    pub fn sample(&self, xi: f64) -> (RiemannState, Region) {
        let v_star = self.solution.v_star;
        if xi < v_star {
            match self.solution.left_wave {
                WaveDescriptor::Rarefaction { head, tail } => {
                    if xi < head {
                        (self.left.clone(), Region::L)
                    } else if xi < tail {
                        let s = fan_state_unchecked(self.left, Side::Left, self.sound_left, xi);
                        (s, Region::LFan)
                    } else {
                        (self.left_star.clone(), Region::LStar)
                    }
                }
                WaveDescriptor::Shock { speed, .. } | WaveDescriptor::ZeroStrength { speed } => {
                    if xi < speed {
                        (self.left.clone(), Region::L)
                    } else {
                        (self.left_star.clone(), Region::LStar)
                    }
                }
            }
        } else {
            match self.solution.right_wave {
                WaveDescriptor::Rarefaction { head, tail } => {
                    if xi < tail {
                        (self.right_star.clone(), Region::RStar)
                    } else if xi < head {
                        let s = fan_state_unchecked(self.right, Side::Right, self.sound_right, xi);
                        (s, Region::RFan)
                    } else {
                        (self.right.clone(), Region::R)
                    }
                }
                WaveDescriptor::Shock { speed, .. } | WaveDescriptor::ZeroStrength { speed } => {
                    if xi < speed {
                        (self.right_star.clone(), Region::RStar)
                    } else {
                        (self.right.clone(), Region::R)
                    }
                }
            }
        }
    }
}

/// Samples the solution at a single `xi`.
pub fn sample(
    solution: &StarSolution,
    left: &RiemannState,
    right: &RiemannState,
    params: &EosParameters,
    xi: f64,
) -> Result<(RiemannState, Region)> {
    Ok(Sampler::new(solution, left, right, params)?.sample(xi))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileEntry {
    pub xi: f64,
    pub state: RiemannState,
    pub pressure: f64,
    pub region: Region,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Profile {
    pub entries: Vec<ProfileEntry>,
}

impl Profile {
    /// Region tags in order of appearance, consecutive repeats removed.
    pub fn region_sequence(&self) -> Vec<Region> {
        let mut seq: Vec<Region> = Vec::new();
        for e in &self.entries {
            if seq.last() != Some(&e.region) {
                seq.push(e.region);
            }
        }
        seq
    }
}

/// Uniform samples on `[xi_min, xi_max]` plus samples at every wave edge
/// inside the range and just below and above it.
pub fn profile(
    solution: &StarSolution,
    left: &RiemannState,
    right: &RiemannState,
    params: &EosParameters,
    xi_min: f64,
    xi_max: f64,
    count: usize,
) -> Result<Profile> {
    if !(xi_min.is_finite() && xi_max.is_finite() && xi_min < xi_max) {
        return Err(Error::Contract(format!(
            "profile range [{xi_min}, {xi_max}] is not a finite increasing interval"
        )));
    }
    if count < 2 {
        return Err(Error::Contract(format!(
            "profile needs at least 2 points, got {count}"
        )));
    }
    let sampler = Sampler::new(solution, left, right, params)?;
    let edges = sampler.edges();
    let scale = edges.iter().fold(1.0_f64, |m, e| m.max(e.abs()));
    let delta = EDGE_OFFSET * scale;

    let step = (xi_max - xi_min) / (count - 1) as f64;
    let mut xis: Vec<f64> = (0..count)
        .map(|i| if i == count - 1 { xi_max } else { xi_min + step * i as f64 })
        .collect();
    for e in edges {
        for x in [e - delta, e, e + delta] {
            if x >= xi_min && x <= xi_max {
                xis.push(x);
            }
        }
    }
    xis.sort_by(f64::total_cmp);
    xis.dedup();

    let entries = xis
        .into_iter()
        .map(|xi| {
            let (state, region) = sampler.sample(xi);
            let pressure = state.pressure(params)?;
            Ok(ProfileEntry {
                xi,
                state,
                pressure,
                region,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Profile { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eos::PhaseLaw;
    use crate::star_solver::{solve_star, SolverOptions};
    use crate::wave_curves::ShockMode;

    fn example2() -> (EosParameters, RiemannState, RiemannState) {
        let params = EosParameters::new(
            PhaseLaw::ideal(vec![200.0, 300.0, 100.0]).unwrap(),
            PhaseLaw::new(vec![250.0, 400.0, 200.0], vec![-7.45e7, -6.35e7, -3.15e7]).unwrap(),
            0.0,
        )
        .unwrap();
        (
            params,
            RiemannState::new(-0.95, vec![2.5, 7.5, 1.0], -50.0).unwrap(),
            RiemannState::new(0.5, vec![300.0, 800.0, 250.0], 20.0).unwrap(),
        )
    }

    #[test]
    fn fan_midpoint_example2() {
        let (params, left, right) = example2();
        let sol = solve_star(&left, &right, &params, &SolverOptions::default()).unwrap();
        let s = fan_state(&params, -285.119, &left, Side::Left, sol.v_star).unwrap();
        assert!((s.v() - (-17.788)).abs() < 1e-2, "{}", s.v());
        assert!((s.rho()[0] - 2.216).abs() < 1e-3, "{}", s.rho()[0]);
        let a = s.sound_speed(&params).unwrap();
        assert!((s.v() - a - (-285.119)).abs() < 1e-9 * 285.119);
        assert!(fan_state(&params, 0.0, &left, Side::Left, sol.v_star).is_err());
    }

    #[test]
    fn fan_endpoints() {
        let (params, left, right) = example2();
        let sol = solve_star(&left, &right, &params, &SolverOptions::default()).unwrap();
        let a = left.sound_speed(&params).unwrap();
        let head = fan_state(&params, left.v() - a, &left, Side::Left, sol.v_star).unwrap();
        for (x, y) in head.rho().iter().zip(left.rho()) {
            assert!((x - y).abs() <= 1e-10 * y);
        }
        let tail = fan_state(&params, sol.v_star - a, &left, Side::Left, sol.v_star).unwrap();
        for (x, y) in tail.rho().iter().zip(&sol.rho_star_left) {
            assert!((x - y).abs() <= 1e-9 * y);
        }
    }

    #[test]
    fn far_field_and_regions() {
        let (params, left, right) = example2();
        for mode in [ShockMode::PaperLiteral, ShockMode::RhConsistent] {
            let sol = solve_star(&left, &right, &params, &SolverOptions::with_mode(mode)).unwrap();
            let sampler = Sampler::new(&sol, &left, &right, &params).unwrap();
            assert_eq!(sampler.sample(-1e9), (left.clone(), Region::L));
            assert_eq!(sampler.sample(1e9), (right.clone(), Region::R));
            let (s, r) = sampler.sample(sol.v_star);
            assert_eq!(r, Region::RStar);
            assert_eq!(s.chi(), right.chi());
        }
    }

    #[test]
    fn profile_contract() {
        let (params, left, right) = example2();
        let sol = solve_star(&left, &right, &params, &SolverOptions::default()).unwrap();
        assert!(profile(&sol, &left, &right, &params, 1.0, 1.0, 10).is_err());
        assert!(profile(&sol, &left, &right, &params, 0.0, 1.0, 1).is_err());
        let prof = profile(&sol, &left, &right, &params, -400.0, 400.0, 41).unwrap();
        assert!(prof.entries.windows(2).all(|w| w[0].xi < w[1].xi));
        assert_eq!(
            prof.region_sequence(),
            vec![Region::L, Region::LFan, Region::LStar, Region::RStar, Region::RFan, Region::R]
        );
    }

    #[test]
    fn tags_round_trip() {
        for r in [Region::L, Region::LFan, Region::LStar, Region::RStar, Region::RFan, Region::R] {
            assert_eq!(Region::from_tag(r.tag()), Some(r));
        }
        assert_eq!(Region::from_tag("X"), None);
    }
}
