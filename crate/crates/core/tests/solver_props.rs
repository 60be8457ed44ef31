mod common;

use std::collections::BTreeSet;

use common::{problems, pressure_scale, pure_phase_problem, rng, velocity_scale};
use mixture_riemann::star_solver::bracket_root;
use mixture_riemann::verifier::{isothermal_reference, oracle_star, shock_residuals};
use mixture_riemann::wave_curves::{f_side, f_total};
use mixture_riemann::{solve_star, RiemannState, RootMethod, ShockMode, SolverOptions, WaveDescriptor};

const MODES: [ShockMode; 2] = [ShockMode::PaperLiteral, ShockMode::RhConsistent];

#[test]
fn random_problems_cover_every_wave_pattern() {
    let mut seen = BTreeSet::new();
    for p in problems(11, 200) {
        let sol = solve_star(&p.left, &p.right, &p.params, &SolverOptions::default()).unwrap();
        seen.insert((sol.left_wave.kind(), sol.right_wave.kind()));
    }
    for pattern in [
        ("shock", "shock"),
        ("shock", "rarefaction"),
        ("rarefaction", "shock"),
        ("rarefaction", "rarefaction"),
    ] {
        assert!(seen.contains(&pattern), "missing {pattern:?} in {seen:?}");
    }
}

#[test]
fn bisection_and_hybrid_agree() {
    for p in problems(12, 200) {
        for mode in MODES {
            let tol = SolverOptions::default().tol_rel;
            let hybrid = solve_star(&p.left, &p.right, &p.params, &SolverOptions::with_mode(mode)).unwrap();
            let options = SolverOptions {
                method: RootMethod::Bisection,
                ..SolverOptions::with_mode(mode)
            };
            let bisect = solve_star(&p.left, &p.right, &p.params, &options).unwrap();
            let scale = pressure_scale(&p, hybrid.p_star);
            assert!(
                (hybrid.p_star - bisect.p_star).abs() <= 10.0 * tol * scale,
                "{mode}: {} vs {}",
                hybrid.p_star,
                bisect.p_star
            );
        }
    }
}

#[test]
fn star_pressure_is_recovered_from_star_densities() {
    for p in problems(13, 200) {
        for mode in MODES {
            let sol = solve_star(&p.left, &p.right, &p.params, &SolverOptions::with_mode(mode)).unwrap();
            let scale = pressure_scale(&p, sol.p_star);
            for (state, rho) in [(&p.left, &sol.rho_star_left), (&p.right, &sol.rho_star_right)] {
                let q = p.params.mixture_pressure(state.chi(), rho).unwrap();
                assert!((q - sol.p_star).abs() <= 1e-10 * scale, "{q} vs {}", sol.p_star);
            }
        }
    }
}

#[test]
fn velocity_identity_and_wave_ordering() {
    for p in problems(14, 200) {
        for mode in MODES {
            let sol = solve_star(&p.left, &p.right, &p.params, &SolverOptions::with_mode(mode)).unwrap();
            let vl = p.left.v() - f_side(sol.p_star, &p.left, &p.params, mode).unwrap();
            let vr = p.right.v() + f_side(sol.p_star, &p.right, &p.params, mode).unwrap();
            let vs = velocity_scale(&p);
            assert!((vl - vr).abs() <= 1e-9 * vs, "{vl} vs {vr}");

            let (l0, l1) = sol.left_wave.span();
            let (r0, r1) = sol.right_wave.span();
            assert!(l0 <= l1 && l1 <= sol.v_star, "{:?} {}", sol.left_wave, sol.v_star);
            assert!(sol.v_star <= r0 && r0 <= r1, "{:?} {}", sol.right_wave, sol.v_star);
        }
    }
}

#[test]
fn shocks_satisfy_jump_conditions() {
    for p in problems(15, 200) {
        for mode in MODES {
            let sol = solve_star(&p.left, &p.right, &p.params, &SolverOptions::with_mode(mode)).unwrap();
            let (l, r) = shock_residuals(&p.params, &sol, &p.left, &p.right).unwrap();
            for res in [l, r].into_iter().flatten() {
                assert!(res.max_normalized_mass() < 1e-8, "{res:?}");
                if mode == ShockMode::RhConsistent {
                    assert!(res.normalized_momentum.abs() < 1e-8, "{res:?}");
                }
            }
        }
    }
}

#[test]
fn rarefaction_problems_are_mode_independent() {
    let mut count = 0;
    for p in problems(16, 200) {
        let a = solve_star(&p.left, &p.right, &p.params, &SolverOptions::with_mode(ShockMode::PaperLiteral)).unwrap();
        let is_shock = |w: &WaveDescriptor| matches!(w, WaveDescriptor::Shock { .. });
        if is_shock(&a.left_wave) || is_shock(&a.right_wave) {
            continue;
        }
        count += 1;
        let b = solve_star(&p.left, &p.right, &p.params, &SolverOptions::with_mode(ShockMode::RhConsistent)).unwrap();
        let o = oracle_star(&p.params, &p.left, &p.right, 1e-14).unwrap();
        let scale = pressure_scale(&p, a.p_star);
        let vs = velocity_scale(&p);
        for (x, y) in [(a.p_star, b.p_star), (a.p_star, o.p_star)] {
            assert!((x - y).abs() <= 1e-8 * scale);
        }
        for (x, y) in [(a.v_star, b.v_star), (a.v_star, o.v_star)] {
            assert!((x - y).abs() <= 1e-8 * vs);
        }
    }
    assert!(count > 10, "only {count} all-rarefaction problems");
}

#[test]
fn single_component_matches_isothermal_reference() {
    let mut r = rng(17);
    for _ in 0..100 {
        let (p, a) = pure_phase_problem(&mut r);
        let sol = solve_star(&p.left, &p.right, &p.params, &SolverOptions::default()).unwrap();
        let (p_ref, v_ref) = isothermal_reference(&p.left, &p.right, a).unwrap();
        assert!((sol.p_star - p_ref).abs() <= 1e-9 * p_ref.abs(), "{} vs {p_ref}", sol.p_star);
        assert!((sol.v_star - v_ref).abs() <= 1e-9 * velocity_scale(&p), "{} vs {v_ref}", sol.v_star);
    }
}

#[test]
fn bracket_always_changes_sign() {
    for p in problems(18, 200) {
        for mode in MODES {
            let (lo, hi) = bracket_root(&p.left, &p.right, &p.params, mode).unwrap();
            assert!(f_total(lo, &p.left, &p.right, &p.params, mode).unwrap() < 0.0);
            assert!(f_total(hi, &p.left, &p.right, &p.params, mode).unwrap() > 0.0);
        }
    }
}

#[test]
fn colliding_symmetric_flows_stop_at_the_contact() {
    let mut r = rng(19);
    for i in 0..50 {
        let p = common::random_problem(&mut r, 1 + i % 4);
        let u = p.left.v().abs() + 1.0;
        let left = RiemannState::new(p.left.chi(), p.left.rho().to_vec(), u).unwrap();
        let right = RiemannState::new(p.left.chi(), p.left.rho().to_vec(), -u).unwrap();
        let sol = solve_star(&left, &right, &p.params, &SolverOptions::default()).unwrap();
        assert!(sol.v_star.abs() <= 1e-9 * u, "{}", sol.v_star);
    }
}
