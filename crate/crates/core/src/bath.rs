// SPDX-License-Identifier: Apache-2.0

//! Finite heat baths made of independent qubits.
//!
//! The bath Hamiltonian is the sum of local terms `ω_k |1⟩⟨1|_k`, so its
//! Gibbs state factorizes into one two-level ensemble per qubit.

use serde::{Deserialize, Serialize};

use crate::error::{invalid_param, Result};
use crate::spectra::{check_temperature, FactorizedEnsemble, SpectralEnsemble};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BathSpec {
    temperature: f64,
    gaps: Vec<f64>,
}

impl BathSpec {
    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn gaps(&self) -> &[f64] {
        &self.gaps
    }

    /// Number of bath qubits.
    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    /// A bath with no qubits at all; its ensemble is the tensor identity.
    pub fn none(temperature: f64) -> Result<Self> {
        check_temperature(temperature)?;
        Ok(Self {
            temperature,
            gaps: Vec::new(),
        })
    }
}

/// `e^{-x} / (1 + e^{-x})`, accurate for large `x`.
pub fn excited_population(gap: f64, temperature: f64) -> f64 {
    1.0 / (1.0 + (gap / temperature).exp())
}

/// The `N`-qubit ladder bath whose `k`-th qubit has excited population `kδ`,
/// `δ = e^{-ω/T} / (N (1 + e^{-ω/T}))`.
///
/// Its gaps are `ω_k = T ln[(1 - kδ) / (kδ)]`, all positive because
/// `Nδ < 1/2` whenever `ω > 0`.
pub fn skrzypczyk_bath(n: usize, temperature: f64, omega: f64) -> Result<BathSpec> {
    check_temperature(temperature)?;
    if n == 0 {
        return Err(invalid_param("N", "at least one bath qubit is required"));
    }
    if !(omega.is_finite() && omega > 0.0) {
        return Err(invalid_param("omega", format!("{omega} is not positive")));
    }
    let delta = ladder_step(n, temperature, omega);
    let gaps = (1..=n)
        .map(|k| {
            let x = k as f64 * delta;
            temperature * ((1.0 - x) / x).ln()
        })
        .collect();
    custom_bath(temperature, gaps)
}

/// `δ` of the ladder bath.
pub fn ladder_step(n: usize, temperature: f64, omega: f64) -> f64 {
    excited_population(omega, temperature) / n as f64
}

pub fn custom_bath(temperature: f64, gaps: Vec<f64>) -> Result<BathSpec> {
    check_temperature(temperature)?;
    if gaps.is_empty() {
        return Err(invalid_param("gaps", "a bath needs at least one qubit"));
    }
    if let Some(g) = gaps.iter().find(|g| !(g.is_finite() && **g > 0.0)) {
        return Err(invalid_param(
            "gaps",
            format!("gap {g} is not a positive finite number"),
        ));
    }
    Ok(BathSpec { temperature, gaps })
}

/// One Gibbs qubit factor per gap.
pub fn bath_ensemble(b: &BathSpec) -> FactorizedEnsemble {
    let factors = b
        .gaps
        .iter()
        .map(|&gap| {
            let excited = excited_population(gap, b.temperature);
            let ground = 1.0 / (1.0 + (-gap / b.temperature).exp());
            SpectralEnsemble::new(vec![ground, excited], vec![0.0, gap])
                .expect("Gibbs qubit factor is a valid ensemble")
        })
        .collect();
    FactorizedEnsemble::new(factors).expect("product of normalized qubits is normalized")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{gibbs_ensemble, DiagonalHamiltonian};
    use approx::assert_relative_eq;

    #[test]
    fn single_qubit_ladder_matches_system() {
        let b = skrzypczyk_bath(1, 1.0, 1.0).unwrap();
        assert_relative_eq!(ladder_step(1, 1.0, 1.0), 1.0 / (1f64.exp() + 1.0), epsilon = 1e-15);
        assert_relative_eq!(ladder_step(1, 1.0, 1.0), 0.268941, epsilon = 1e-6);
        assert_relative_eq!(b.gaps()[0], 1.0, epsilon = 1e-14);

        let b = skrzypczyk_bath(1, 1.0, 2f64.ln()).unwrap();
        assert_relative_eq!(ladder_step(1, 1.0, 2f64.ln()), 1.0 / 3.0, epsilon = 1e-15);
        assert_relative_eq!(b.gaps()[0], 2f64.ln(), epsilon = 1e-14);
    }

    #[test]
    fn excited_populations_form_the_ladder() {
        for &(n, t, w) in &[(1, 1.0, 1.0), (5, 0.5, 1.0), (12, 2.0, 0.7), (20, 1.0, 3.0)] {
            let b = skrzypczyk_bath(n, t, w).unwrap();
            let delta = ladder_step(n, t, w);
            for (k, &gap) in b.gaps().iter().enumerate() {
                assert!(gap > 0.0);
                let h = DiagonalHamiltonian::qubit(gap).unwrap();
                let g = gibbs_ensemble(&h, 1.0 / t).unwrap();
                assert_relative_eq!(g.probs()[1], (k + 1) as f64 * delta, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn bath_ensemble_populations() {
        let b = skrzypczyk_bath(1, 1.0, 1.0).unwrap();
        let f = bath_ensemble(&b);
        let q = &f.factors()[0];
        assert_relative_eq!(q.probs()[0], 0.731059, epsilon = 1e-6);
        assert_relative_eq!(q.probs()[1], 0.268941, epsilon = 1e-6);
        assert_eq!(q.energies()[0], 0.0);
        assert_relative_eq!(q.energies()[1], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn frozen_and_hot_limits() {
        let frozen = bath_ensemble(&custom_bath(1.0, vec![1e4]).unwrap());
        assert_eq!(frozen.factors()[0].probs(), &[1.0, 0.0]);
        let hot = bath_ensemble(&custom_bath(1e12, vec![1.0]).unwrap());
        assert_relative_eq!(hot.factors()[0].probs()[0], 0.5, epsilon = 1e-11);
        assert_relative_eq!(hot.factors()[0].probs()[1], 0.5, epsilon = 1e-11);
    }

    #[test]
    fn custom_bath_validation() {
        let custom = bath_ensemble(&custom_bath(1.0, vec![1.0]).unwrap());
        let ladder = bath_ensemble(&skrzypczyk_bath(1, 1.0, 1.0).unwrap());
        for (a, b) in custom.factors()[0]
            .probs()
            .iter()
            .zip(ladder.factors()[0].probs())
        {
            assert_relative_eq!(*a, *b, epsilon = 1e-14);
        }
        assert!(custom_bath(1.0, vec![]).is_err());
        assert!(custom_bath(1.0, vec![1.0, 0.0]).is_err());
        assert!(custom_bath(0.0, vec![1.0]).is_err());

        let three = bath_ensemble(&custom_bath(2.0, vec![0.5, 1.5, 2.5]).unwrap());
        assert_eq!(three.factors().len(), 3);
        let total: f64 = three.expand().unwrap().probs().iter().sum();
        assert_relative_eq!(total, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn ladder_domain_errors() {
        assert!(skrzypczyk_bath(0, 1.0, 1.0).is_err());
        assert!(skrzypczyk_bath(3, 1.0, 0.0).is_err());
        assert!(skrzypczyk_bath(3, -1.0, 1.0).is_err());
    }

    #[test]
    fn empty_bath_is_identity() {
        let b = BathSpec::none(1.0).unwrap();
        assert!(b.is_empty());
        assert_eq!(bath_ensemble(&b).expanded_len(), 1);
    }
}
