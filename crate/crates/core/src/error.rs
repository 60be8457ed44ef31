use thiserror::Error;

/// Errors raised by the equation of state, the wave curves and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{quantity} must be finite, got {value}")]
    NonFinite { quantity: &'static str, value: f64 },

    #[error("{quantity} must be positive, got {value}")]
    NonPositive { quantity: &'static str, value: f64 },

    /// The pressure lies at or below the affine offset `A0` of a wave curve,
    /// where the star density would be non-positive.
    #[error("pressure {pressure} Pa is outside the wave-curve domain (must exceed {floor} Pa)")]
    PressureDomain { pressure: f64, floor: f64 },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("zero-strength wave has no shock speed")]
    DegenerateWave,

    #[error("could not bracket the star pressure: {0}")]
    Bracket(String),

    #[error(
        "star pressure iteration did not converge after {iterations} iterations \
         (bracket [{lo}, {hi}] Pa, |f| = {residual} m/s)"
    )]
    NoConvergence {
        iterations: usize,
        lo: f64,
        hi: f64,
        residual: f64,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn finite(quantity: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { quantity, value })
    }
}

pub(crate) fn positive(quantity: &'static str, value: f64) -> Result<f64> {
    finite(quantity, value)?;
    if value > 0.0 {
        Ok(value)
    } else {
        Err(Error::NonPositive { quantity, value })
    }
}
