//! Phase-field mixture equation of state.
//!
//! Each component follows an affine (stiffened-gas) isothermal law in each
//! phase, `p_kα(ρ_α) = a_kα² ρ_α + d_kα`. The mixture pressure blends the
//! liquid and vapor sums with the interpolation function `h(χ)` and subtracts
//! the double-well potential `W(χ)`:
//!
//! ```text
//! p(χ, ρ_1..ρ_N) = -W(χ) + h(χ) Σ p_Lα(ρ_α) + (1 - h(χ)) Σ p_Vα(ρ_α)
//! ```
//!
//! For fixed χ and fixed concentrations `c_α = ρ_α / ρ_1` the pressure is
//! affine in `ρ_1`, `p = A0 + A1 ρ_1`, which is what makes the wave curves
//! available in closed form.

use crate::error::{finite, positive, Error, Result};

/// Phase selector for the per-component partial pressure laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Liquid,
    Vapor,
}

/// Sound speeds (m/s) and pressure offsets (Pa) of every component in one phase.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseLaw {
    sound_speed: Vec<f64>,
    offset: Vec<f64>,
}

impl PhaseLaw {
    pub fn new(sound_speed: Vec<f64>, offset: Vec<f64>) -> Result<Self> {
        if sound_speed.is_empty() {
            return Err(Error::Contract("at least one component is required".into()));
        }
        if sound_speed.len() != offset.len() {
            return Err(Error::Contract(format!(
                "{} sound speeds but {} pressure offsets",
                sound_speed.len(),
                offset.len()
            )));
        }
        for &a in &sound_speed {
            positive("sound speed", a)?;
        }
        for &d in &offset {
            finite("pressure offset", d)?;
        }
        Ok(Self {
            sound_speed,
            offset,
        })
    }

    /// A phase law with all offsets zero (ideal isothermal gas per component).
    pub fn ideal(sound_speed: Vec<f64>) -> Result<Self> {
        let n = sound_speed.len();
        Self::new(sound_speed, vec![0.0; n])
    }

    pub fn sound_speed(&self) -> &[f64] {
        &self.sound_speed
    }

    pub fn offset(&self) -> &[f64] {
        &self.offset
    }

    fn offset_sum(&self) -> f64 {
        self.offset.iter().sum()
    }

    /// `Σ a_α² w_α` for an arbitrary weight vector.
    fn weighted_stiffness(&self, weights: &[f64]) -> f64 {
        self.sound_speed
            .iter()
            .zip(weights)
            .map(|(a, w)| a * a * w)
            .sum()
    }
}

/// Parameters of the mixture equation of state.
#[derive(Debug, Clone, PartialEq)]
pub struct EosParameters {
    vapor: PhaseLaw,
    liquid: PhaseLaw,
    w0: f64,
}

/// Affine pressure coefficients `p = A0 + A1 ρ_1` at fixed χ and concentrations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PressureCoefficients {
    /// Offset `A0` (Pa).
    pub a0: f64,
    /// Slope `A1` (Pa m³/kg).
    pub a1: f64,
}

impl PressureCoefficients {
    pub fn pressure(&self, rho1: f64) -> f64 {
        self.a0 + self.a1 * rho1
    }

    /// Inverse of [`pressure`](Self::pressure).
    pub fn rho1(&self, pressure: f64) -> f64 {
        (pressure - self.a0) / self.a1
    }
}

impl EosParameters {
    pub fn new(vapor: PhaseLaw, liquid: PhaseLaw, w0: f64) -> Result<Self> {
        if vapor.sound_speed.len() != liquid.sound_speed.len() {
            return Err(Error::Contract(format!(
                "vapor law has {} components, liquid law has {}",
                vapor.sound_speed.len(),
                liquid.sound_speed.len()
            )));
        }
        finite("double-well height", w0)?;
        if w0 < 0.0 {
            return Err(Error::Contract(format!(
                "double-well height must be non-negative, got {w0}"
            )));
        }
        Ok(Self { vapor, liquid, w0 })
    }

    pub fn components(&self) -> usize {
        self.vapor.sound_speed.len()
    }

    pub fn vapor(&self) -> &PhaseLaw {
        &self.vapor
    }

    pub fn liquid(&self) -> &PhaseLaw {
        &self.liquid
    }

    pub fn w0(&self) -> f64 {
        self.w0
    }

    fn law(&self, phase: Phase) -> &PhaseLaw {
        match phase {
            Phase::Liquid => &self.liquid,
            Phase::Vapor => &self.vapor,
        }
    }

    fn check_len(&self, what: &str, len: usize) -> Result<()> {
        if len == self.components() {
            Ok(())
        } else {
            Err(Error::Contract(format!(
                "{what} has {len} entries, the mixture has {} components",
                self.components()
            )))
        }
    }

    fn check_densities(&self, rho: &[f64]) -> Result<()> {
        self.check_len("density vector", rho.len())?;
        for &r in rho {
            positive("partial density", r)?;
        }
        Ok(())
    }

    /// `p_kα(ρ_α) = a_kα² ρ_α + d_kα` for component `alpha` (zero-based).
    pub fn partial_pressure(&self, phase: Phase, alpha: usize, rho_alpha: f64) -> Result<f64> {
        positive("partial density", rho_alpha)?;
        let law = self.law(phase);
        if alpha >= law.sound_speed.len() {
            return Err(Error::Contract(format!(
                "component index {alpha} out of range for {} components",
                law.sound_speed.len()
            )));
        }
        let a = law.sound_speed[alpha];
        Ok(a * a * rho_alpha + law.offset[alpha])
    }

    /// Mixture pressure evaluated term by term.
    pub fn mixture_pressure(&self, chi: f64, rho: &[f64]) -> Result<f64> {
        let h = interp_h(chi)?;
        let (w, _) = double_well(chi, self.w0)?;
        self.check_densities(rho)?;
        let liquid = self.liquid.weighted_stiffness(rho) + self.liquid.offset_sum();
        let vapor = self.vapor.weighted_stiffness(rho) + self.vapor.offset_sum();
        Ok(-w + h * liquid + (1.0 - h) * vapor)
    }

    /// Affine coefficients `(A0, A1)` for concentrations `c` with `c[0] == 1`.
    pub fn pressure_coefficients(&self, chi: f64, c: &[f64]) -> Result<PressureCoefficients> {
        self.check_len("concentration vector", c.len())?;
        if c[0] != 1.0 {
            return Err(Error::Contract(format!(
                "first concentration must be exactly 1, got {}",
                c[0]
            )));
        }
        for &ci in c {
            positive("concentration", ci)?;
        }
        let h = interp_h(chi)?;
        let (w, _) = double_well(chi, self.w0)?;
        let a0 = -w + h * self.liquid.offset_sum() + (1.0 - h) * self.vapor.offset_sum();
        let a1 =
            h * self.liquid.weighted_stiffness(c) + (1.0 - h) * self.vapor.weighted_stiffness(c);
        Ok(PressureCoefficients { a0, a1 })
    }

    /// `A_α² = ∂p/∂ρ_α = h a_Lα² + (1 - h) a_Vα²`.
    pub fn squared_stiffness(&self, chi: f64) -> Result<Vec<f64>> {
        let h = interp_h(chi)?;
        Ok(self
            .liquid
            .sound_speed
            .iter()
            .zip(&self.vapor.sound_speed)
            .map(|(al, av)| h * al * al + (1.0 - h) * av * av)
            .collect())
    }

    /// `B = ∂p/∂χ`.
    pub fn dp_dchi(&self, chi: f64, rho: &[f64]) -> Result<f64> {
        let dh = interp_h_prime(chi)?;
        let (_, dw) = double_well(chi, self.w0)?;
        self.check_densities(rho)?;
        let liquid = self.liquid.weighted_stiffness(rho) + self.liquid.offset_sum();
        let vapor = self.vapor.weighted_stiffness(rho) + self.vapor.offset_sum();
        Ok(-dw + dh * liquid - dh * vapor)
    }

    /// Mixture sound speed `A = sqrt(Σ A_α² ρ_α / Σ ρ_α)`.
    ///
    /// Depends on χ and the concentrations only, so it is constant along
    /// a rarefaction fan.
    pub fn sound_speed(&self, chi: f64, rho: &[f64]) -> Result<f64> {
        self.check_densities(rho)?;
        let a2 = self.squared_stiffness(chi)?;
        let num: f64 = a2.iter().zip(rho).map(|(a, r)| a * r).sum();
        let den: f64 = rho.iter().sum();
        Ok((num / den).sqrt())
    }
}

/// Interpolation function `h(χ)`: 0 below -1, 1 above 1, cubic in between.
pub fn interp_h(chi: f64) -> Result<f64> {
    finite("phase field", chi)?;
    Ok(if chi <= -1.0 {
        0.0
    } else if chi >= 1.0 {
        1.0
    } else {
        (-0.25 * chi + 0.5) * (chi + 1.0) * (chi + 1.0)
    })
}

pub fn interp_h_prime(chi: f64) -> Result<f64> {
    finite("phase field", chi)?;
    Ok(if chi.abs() < 1.0 {
        0.75 * (1.0 - chi * chi)
    } else {
        0.0
    })
}

/// Double-well potential `W = w0 (χ-1)²(χ+1)²` and its derivative.
pub fn double_well(chi: f64, w0: f64) -> Result<(f64, f64)> {
    finite("phase field", chi)?;
    finite("double-well height", w0)?;
    let s = chi * chi - 1.0;
    Ok((w0 * s * s, 4.0 * w0 * chi * s))
}
