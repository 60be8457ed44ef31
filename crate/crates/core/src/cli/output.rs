//! Text summary and CSV rendering.
//!
//! Floats are written with `Display`, the shortest decimal string that
//! parses back to the same `f64`.

use std::fmt::Write as _;
use std::io::{self, Write};

use crate::eos::EosParameters;
use crate::error::Result;
use crate::sampler::Profile;
use crate::star_solver::StarSolution;
use crate::state::RiemannState;
use crate::verifier::{contact_check, shock_residuals, RhResidual};
use crate::wave_curves::WaveDescriptor;

fn join(values: &[f64]) -> String {
    values
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn wave_lines(out: &mut String, side: &str, wave: &WaveDescriptor, rh: Option<&RhResidual>) {
    let _ = writeln!(out, "{side}_wave: {}", wave.kind());
    match wave {
        WaveDescriptor::Shock { speed, mass_flux } => {
            let _ = writeln!(out, "{side}_speed: {speed}");
            let _ = writeln!(out, "{side}_mass_flux: {}", join(&mass_flux.0));
        }
        WaveDescriptor::Rarefaction { head, tail } => {
            let _ = writeln!(out, "{side}_head: {head}");
            let _ = writeln!(out, "{side}_tail: {tail}");
        }
        WaveDescriptor::ZeroStrength { speed } => {
            let _ = writeln!(out, "{side}_speed: {speed}");
        }
    }
    if let Some(r) = rh {
        let _ = writeln!(out, "{side}_rh_mass: {}", r.max_normalized_mass());
        let _ = writeln!(out, "{side}_rh_momentum: {}", r.normalized_momentum.abs());
    }
}

/// `key: value` report of a solved problem.
pub fn solve_summary(
    params: &EosParameters,
    left: &RiemannState,
    right: &RiemannState,
    solution: &StarSolution,
) -> Result<String> {
    let (rh_left, rh_right) = shock_residuals(params, solution, left, right)?;
    let contact = contact_check(params, solution, left, right)?;
    let mut out = String::new();
    let _ = writeln!(out, "mode: {}", solution.mode);
    let _ = writeln!(out, "p_star: {}", solution.p_star);
    let _ = writeln!(out, "v_star: {}", solution.v_star);
    let _ = writeln!(out, "iterations: {}", solution.iterations);
    let _ = writeln!(out, "f_residual: {}", solution.f_residual);
    wave_lines(&mut out, "left", &solution.left_wave, rh_left.as_ref());
    let _ = writeln!(out, "contact_speed: {}", solution.v_star);
    let _ = writeln!(out, "contact_chi_jump: {}", contact.chi_jump);
    let _ = writeln!(out, "contact_pressure_jump: {}", contact.pressure_jump);
    let _ = writeln!(out, "contact_velocity_jump: {}", contact.velocity_jump);
    wave_lines(&mut out, "right", &solution.right_wave, rh_right.as_ref());
    let _ = writeln!(out, "rho_star_left: {}", join(&solution.rho_star_left));
    let _ = writeln!(out, "rho_star_right: {}", join(&solution.rho_star_right));
    Ok(out)
}

/// Header `xi,chi,rho_1,...,rho_<n>,v,p,region` and one row per entry.
pub fn write_profile_csv<W: Write>(profile: &Profile, components: usize, w: &mut W) -> io::Result<()> {
    let mut header = String::from("xi,chi");
    for alpha in 1..=components {
        let _ = write!(header, ",rho_{alpha}");
    }
    header.push_str(",v,p,region\n");
    w.write_all(header.as_bytes())?;
    for e in &profile.entries {
        let mut row = format!("{},{}", e.xi, e.state.chi());
        for r in e.state.rho() {
            let _ = write!(row, ",{r}");
        }
        let _ = writeln!(row, ",{},{},{}", e.state.v(), e.pressure, e.region);
        w.write_all(row.as_bytes())?;
    }
    Ok(())
}

pub fn profile_csv(profile: &Profile, components: usize) -> String {
    let mut buf = Vec::new();
    write_profile_csv(profile, components, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}
