#![allow(dead_code)]

use mixture_riemann::{EosParameters, PhaseLaw, RiemannState};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[derive(Debug, Clone)]
pub struct Problem {
    pub params: EosParameters,
    pub left: RiemannState,
    pub right: RiemannState,
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_params(rng: &mut StdRng, n: usize) -> EosParameters {
    let a_v: Vec<f64> = (0..n).map(|_| rng.random_range(150.0..500.0)).collect();
    let d_v: Vec<f64> = (0..n)
        .map(|_| if rng.random_bool(0.5) { 0.0 } else { rng.random_range(0.0..1e5) })
        .collect();
    let a_l: Vec<f64> = (0..n).map(|_| rng.random_range(300.0..1500.0)).collect();
    let d_l: Vec<f64> = a_l
        .iter()
        .map(|a| -a * a * rng.random_range(0.0..300.0))
        .collect();
    let w0 = if rng.random_bool(0.5) { 0.0 } else { rng.random_range(0.0..1e5) };
    EosParameters::new(
        PhaseLaw::new(a_v, d_v).unwrap(),
        PhaseLaw::new(a_l, d_l).unwrap(),
        w0,
    )
    .unwrap()
}

pub fn random_chi(rng: &mut StdRng) -> f64 {
    match rng.random_range(0..4) {
        0 => -1.0,
        1 => 1.0,
        _ => rng.random_range(-1.0..1.0),
    }
}

/// State with positive pressure; densities scale from vapor-like to liquid-like with `χ`.
/// `None` if no such state turned up in a bounded number of draws.
pub fn random_state(
    rng: &mut StdRng,
    params: &EosParameters,
    chi: f64,
    v_max: f64,
) -> Option<RiemannState> {
    let n = params.components();
    let weight = 0.5 * (chi + 1.0);
    for _ in 0..50 {
        let rho: Vec<f64> = (0..n)
            .map(|_| {
                let vapor = rng.random_range(0.5..20.0);
                let liquid = rng.random_range(200.0..1000.0);
                vapor + weight * (liquid - vapor)
            })
            .collect();
        let v = rng.random_range(-v_max..v_max);
        let state = RiemannState::new(chi, rho, v).unwrap();
        if state.pressure(params).unwrap() > 0.0 {
            return Some(state);
        }
    }
    None
}

pub fn random_problem(rng: &mut StdRng, n: usize) -> Problem {
    loop {
        let params = random_params(rng, n);
        let (cl, cr) = (random_chi(rng), random_chi(rng));
        let Some(left) = random_state(rng, &params, cl, 400.0) else { continue };
        let Some(right) = random_state(rng, &params, cr, 400.0) else { continue };
        return Problem { params, left, right };
    }
}

/// `count` problems cycling through one to four components.
pub fn problems(seed: u64, count: usize) -> Vec<Problem> {
    let mut r = rng(seed);
    (0..count).map(|i| random_problem(&mut r, 1 + i % 4)).collect()
}

/// Single-component problem in one pure phase with `d = 0`, plus its sound speed.
pub fn pure_phase_problem(rng: &mut StdRng) -> (Problem, f64) {
    let a = rng.random_range(100.0..1500.0);
    let other = rng.random_range(100.0..1500.0);
    let liquid = rng.random_bool(0.5);
    let (vapor_a, liquid_a, chi) = if liquid { (other, a, 1.0) } else { (a, other, -1.0) };
    let w0 = if rng.random_bool(0.5) { 0.0 } else { rng.random_range(0.0..1e5) };
    let params = EosParameters::new(
        PhaseLaw::ideal(vec![vapor_a]).unwrap(),
        PhaseLaw::ideal(vec![liquid_a]).unwrap(),
        w0,
    )
    .unwrap();
    let mut state = || {
        let rho = rng.random_range(0.1..1000.0);
        let v = rng.random_range(-2.0 * a..2.0 * a);
        RiemannState::new(chi, vec![rho], v).unwrap()
    };
    let left = state();
    let right = state();
    (Problem { params, left, right }, a)
}

pub fn velocity_scale(p: &Problem) -> f64 {
    p.left
        .v()
        .abs()
        .max(p.right.v().abs())
        .max(p.left.sound_speed(&p.params).unwrap())
        .max(p.right.sound_speed(&p.params).unwrap())
}

pub fn pressure_scale(p: &Problem, p_star: f64) -> f64 {
    p_star
        .abs()
        .max(p.left.pressure(&p.params).unwrap().abs())
        .max(p.right.pressure(&p.params).unwrap().abs())
}
