//! Exact Riemann solver for the one-dimensional isothermal two-phase
//! N-component system with a phase-field mixture equation of state.
//!
//! The solution consists of a left wave (shock or rarefaction), a contact
//! across which the phase field may jump, and a right wave. The star
//! pressure is the unique root of a monotone scalar function built from the
//! wave curves of [`wave_curves`]; [`star_solver`] finds it, [`sampler`]
//! evaluates the self-similar solution and [`verifier`] checks the result
//! against the jump conditions with an independent solver.

pub mod characteristics;
pub mod cli;
pub mod eos;
pub mod error;
pub mod sampler;
pub mod star_solver;
pub mod state;
pub mod verifier;
pub mod wave_curves;

pub use eos::{EosParameters, Phase, PhaseLaw, PressureCoefficients};
pub use error::{Error, Result};
pub use sampler::{Profile, Region};
pub use star_solver::{solve_star, RootMethod, SolverOptions, StarSolution};
pub use state::RiemannState;
pub use wave_curves::{ShockMode, Side, WaveDescriptor};
