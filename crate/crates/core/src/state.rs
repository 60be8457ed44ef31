use crate::eos::{EosParameters, PressureCoefficients};
use crate::error::{finite, positive, Error, Result};

/// Primitive state `(χ, ρ_1..ρ_N, v)` on one side of a Riemann problem.
#[derive(Debug, Clone, PartialEq)]
pub struct RiemannState {
    chi: f64,
    rho: Vec<f64>,
    v: f64,
}

impl RiemannState {
    pub fn new(chi: f64, rho: Vec<f64>, v: f64) -> Result<Self> {
        finite("phase field", chi)?;
        finite("velocity", v)?;
        if rho.is_empty() {
            return Err(Error::Contract("state needs at least one partial density".into()));
        }
        for &r in &rho {
            positive("partial density", r)?;
        }
        Ok(Self { chi, rho, v })
    }

    pub fn chi(&self) -> f64 {
        self.chi
    }

    pub fn rho(&self) -> &[f64] {
        &self.rho
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn components(&self) -> usize {
        self.rho.len()
    }

    /// Total density `ρ = Σ ρ_α`.
    pub fn density(&self) -> f64 {
        self.rho.iter().sum()
    }

    /// Concentrations `c_α = ρ_α / ρ_1`; the first entry is exactly 1.
    pub fn concentrations(&self) -> Vec<f64> {
        let rho1 = self.rho[0];
        let mut c: Vec<f64> = self.rho.iter().map(|r| r / rho1).collect();
        c[0] = 1.0;
        c
    }

    pub fn pressure(&self, params: &EosParameters) -> Result<f64> {
        params.mixture_pressure(self.chi, &self.rho)
    }

    pub fn sound_speed(&self, params: &EosParameters) -> Result<f64> {
        params.sound_speed(self.chi, &self.rho)
    }

    pub fn pressure_coefficients(&self, params: &EosParameters) -> Result<PressureCoefficients> {
        self.check_components(params)?;
        params.pressure_coefficients(self.chi, &self.concentrations())
    }

    pub(crate) fn check_components(&self, params: &EosParameters) -> Result<()> {
        if self.rho.len() == params.components() {
            Ok(())
        } else {
            Err(Error::Contract(format!(
                "state has {} partial densities, the mixture has {} components",
                self.rho.len(),
                params.components()
            )))
        }
    }

    /// Same χ and velocity, new partial densities.
    pub(crate) fn with_rho(&self, rho: Vec<f64>, v: f64) -> Result<Self> {
        Self::new(self.chi, rho, v)
    }
}
