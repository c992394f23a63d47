// SPDX-License-Identifier: Apache-2.0

//! Weight (work reservoir) models and the dephasing channel they induce.
//!
//! Averaging the free system evolution `e^{-iH_S t}` over the weight's time
//! distribution `p(t)` leaves populations alone and multiplies the coherence
//! `ρ_ij` by the characteristic function of `p(t)` at `Δ = ε_i - ε_j`. The
//! channel is applied in that closed form.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid_param, Error, Result};
use crate::spectra::{check_dims, DensityOperator, DiagonalHamiltonian};

/// Anything that can scale a coherence between levels separated by `delta`.
///
/// Implementations must be positive-definite functions with `φ(0) = 1` for
/// the induced map to be a channel. This is only checked after the fact,
/// when [`control_marginal`] validates its output.
pub trait CharacteristicFunction {
    fn factor(&self, delta: f64) -> Complex64;
}

impl<F: Fn(f64) -> Complex64> CharacteristicFunction for F {
    fn factor(&self, delta: f64) -> Complex64 {
        self(delta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WeightModel {
    /// Gaussian superposition of energy states with energy spread `sigma`.
    Gaussian { sigma: f64 },
    /// Limit of a sharp time state: the channel is the rotation `e^{-iH_S t}`.
    TimeState { t: f64 },
    /// Sharp energy eigenstate: complete dephasing in the energy basis.
    EnergyEigenstate,
}

impl WeightModel {
    pub fn gaussian(sigma: f64) -> Result<Self> {
        let w = WeightModel::Gaussian { sigma };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            WeightModel::Gaussian { sigma } if !(sigma.is_finite() && sigma > 0.0) => {
                Err(invalid_param("sigma", format!("{sigma} is not positive")))
            }
            WeightModel::TimeState { t } if !t.is_finite() => {
                Err(invalid_param("t", format!("{t} is not finite")))
            }
            _ => Ok(()),
        }
    }
}

impl CharacteristicFunction for WeightModel {
    fn factor(&self, delta: f64) -> Complex64 {
        characteristic_factor(self, delta)
    }
}

/// `φ(Δ)` for the built-in models.
pub fn characteristic_factor(w: &WeightModel, delta: f64) -> Complex64 {
    match *w {
        WeightModel::Gaussian { sigma } => {
            Complex64::new((-delta * delta / (8.0 * sigma * sigma)).exp(), 0.0)
        }
        WeightModel::TimeState { t } => Complex64::from_polar(1.0, -delta * t),
        WeightModel::EnergyEigenstate => {
            if delta == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }
    }
}

/// `σ_ij = ρ_ij φ(ε_i - ε_j)`.
pub fn control_marginal(
    rho: &DensityOperator,
    h_s: &DiagonalHamiltonian,
    w: &impl CharacteristicFunction,
) -> Result<DensityOperator> {
    check_dims(h_s.dim(), rho.dim())?;
    let e = h_s.energies();
    let mut sigma = rho.matrix().clone();
    let d = rho.dim();
    for i in 0..d {
        for j in 0..d {
            if i != j {
                sigma[(i, j)] *= w.factor(e[i] - e[j]);
            }
        }
    }
    DensityOperator::new(sigma).map_err(|err| match err {
        Error::InvalidState(msg) => Error::InvalidState(format!(
            "characteristic function does not define a channel: {msg}"
        )),
        other => other,
    })
}
