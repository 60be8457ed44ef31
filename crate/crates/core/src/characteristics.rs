//! Quasilinear structure in primitive variables `u = (χ, ρ_1..ρ_N, v)`.
//!
//! The Jacobian has eigenvalues `v - A`, `v` (multiplicity N) and `v + A`.
//! Two explicit eigenvector bases exist: one for `B = ∂p/∂χ ≠ 0` and one for
//! `B = 0`, since the eigenvectors do not vary smoothly as `B` passes through
//! zero. The outer fields are genuinely nonlinear, the middle ones linearly
//! degenerate.

use nalgebra::{DMatrix, DVector};

use crate::eos::EosParameters;
use crate::error::Result;
use crate::state::RiemannState;

/// Default threshold, relative to the pressure scale, below which `B` is
/// treated as zero and the degenerate eigenvector basis is used.
pub const DEFAULT_B_ZERO_TOL: f64 = 1e-12;

/// Relative step of the central differences used for `∇λ·k`.
const GRADIENT_STEP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem {
    /// `λ_0 ≤ λ_1 = … = λ_N ≤ λ_{N+1}`.
    pub eigenvalues: Vec<f64>,
    /// Right eigenvectors, `eigenvectors[j]` belongs to `eigenvalues[j]`.
    pub eigenvectors: Vec<DVector<f64>>,
    /// True when the `B = 0` basis was selected.
    pub degenerate_branch: bool,
}

impl EigenSystem {
    /// Eigenvectors as the columns of a square matrix.
    pub fn basis_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_columns(&self.eigenvectors)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    GenuinelyNonlinear,
    LinearlyDegenerate,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldClassification {
    pub kind: FieldKind,
    /// Finite-difference estimate of `∇_u λ_j · k_j`.
    pub nonlinearity: f64,
}

/// Jacobian of the quasilinear system, rows and columns ordered `(χ, ρ_1..ρ_N, v)`.
pub fn jacobian_primitive(params: &EosParameters, state: &RiemannState) -> Result<DMatrix<f64>> {
    state.check_components(params)?;
    let n = state.components();
    let dim = n + 2;
    let rho = state.density();
    let b = params.dp_dchi(state.chi(), state.rho())?;
    let a2 = params.squared_stiffness(state.chi())?;
    let v = state.v();

    let mut jac = DMatrix::zeros(dim, dim);
    for i in 0..dim {
        jac[(i, i)] = v;
    }
    for (alpha, &r) in state.rho().iter().enumerate() {
        jac[(alpha + 1, dim - 1)] = r;
        jac[(dim - 1, alpha + 1)] = a2[alpha] / rho;
    }
    jac[(dim - 1, 0)] = b / rho;
    Ok(jac)
}

pub fn eigen_system(
    params: &EosParameters,
    state: &RiemannState,
    b_zero_tol: f64,
) -> Result<EigenSystem> {
    state.check_components(params)?;
    let n = state.components();
    let dim = n + 2;
    let v = state.v();
    let a = state.sound_speed(params)?;
    let a2 = params.squared_stiffness(state.chi())?;
    let b = params.dp_dchi(state.chi(), state.rho())?;
    let coeffs = state.pressure_coefficients(params)?;
    let scale = (coeffs.a0.abs() + coeffs.a1 * state.rho()[0]).max(1.0);
    let degenerate = b.abs() <= b_zero_tol * scale;

    let mut eigenvalues = Vec::with_capacity(dim);
    eigenvalues.push(v - a);
    eigenvalues.extend(std::iter::repeat_n(v, n));
    eigenvalues.push(v + a);

    let acoustic = |sign: f64| {
        let mut k = DVector::zeros(dim);
        for (alpha, &r) in state.rho().iter().enumerate() {
            k[alpha + 1] = sign * r;
        }
        k[dim - 1] = a;
        k
    };

    let mut eigenvectors = Vec::with_capacity(dim);
    eigenvectors.push(acoustic(-1.0));
    if degenerate {
        let mut k = DVector::zeros(dim);
        k[0] = 1.0;
        eigenvectors.push(k);
        for j in 1..n {
            let mut k = DVector::zeros(dim);
            k[1] = -a2[j];
            k[j + 1] = a2[0];
            eigenvectors.push(k);
        }
    } else {
        for j in 0..n {
            let mut k = DVector::zeros(dim);
            k[0] = -a2[j];
            k[j + 1] = b;
            eigenvectors.push(k);
        }
    }
    eigenvectors.push(acoustic(1.0));

    Ok(EigenSystem {
        eigenvalues,
        eigenvectors,
        degenerate_branch: degenerate,
    })
}

/// Eigenvalue `j` as a function of the primitive vector `u`.
fn eigenvalue_at(params: &EosParameters, j: usize, u: &[f64]) -> Result<f64> {
    let n = u.len() - 2;
    let v = u[n + 1];
    if j == 0 || j == n + 1 {
        let a = params.sound_speed(u[0], &u[1..=n])?;
        Ok(if j == 0 { v - a } else { v + a })
    } else {
        Ok(v)
    }
}

/// Classifies every characteristic field by a central-difference estimate of `∇λ_j·k_j`.
pub fn classify_fields(
    params: &EosParameters,
    state: &RiemannState,
) -> Result<Vec<FieldClassification>> {
    let eig = eigen_system(params, state, DEFAULT_B_ZERO_TOL)?;
    let a = state.sound_speed(params)?;
    let mut u = Vec::with_capacity(state.components() + 2);
    u.push(state.chi());
    u.extend_from_slice(state.rho());
    u.push(state.v());

    eig.eigenvectors
        .iter()
        .enumerate()
        .map(|(j, k)| {
            let mut product = 0.0;
            for i in 0..u.len() {
                if k[i] == 0.0 {
                    continue;
                }
                let step = GRADIENT_STEP * u[i].abs().max(1.0);
                let mut up = u.clone();
                let mut down = u.clone();
                up[i] += step;
                down[i] -= step;
                let grad =
                    (eigenvalue_at(params, j, &up)? - eigenvalue_at(params, j, &down)?) / (2.0 * step);
                product += grad * k[i];
            }
            let kind = if product.abs() < 1e-8 * a {
                FieldKind::LinearlyDegenerate
            } else {
                FieldKind::GenuinelyNonlinear
            };
            Ok(FieldClassification {
                kind,
                nonlinearity: product,
            })
        })
        .collect()
}
