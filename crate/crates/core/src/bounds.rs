// SPDX-License-Identifier: Apache-2.0

//! Work-extraction bounds for a system, a weight and a finite bath.
//!
//! The chain evaluated here is
//!
//! ```text
//! tight_bound = R(σ_S ⊗ τ_B) ≤ R(ρ_S ⊗ τ_B) ≤ F(ρ_S) - F(τ_S)
//! ```
//!
//! with the gap between the first two being the locked energy. The
//! thermodynamic-limit estimate of the locked energy, `T [S(σ_S) - S(ρ_S)]`,
//! is carried along for comparison.

use serde::{Deserialize, Serialize};

use crate::bath::{bath_ensemble, BathSpec};
use crate::ergotropy::{ergotropy_product_sorted, SortedBath};
use crate::error::Result;
use crate::spectra::{
    check_temperature, state_free_energy, von_neumann_entropy, DensityOperator,
    DiagonalHamiltonian,
};
use crate::weight::{control_marginal, WeightModel};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    /// `R(σ_S ⊗ τ_B)`.
    pub tight_bound: f64,
    /// `R(ρ_S ⊗ τ_B)`.
    pub resource_ergotropy: f64,
    /// `resource_ergotropy - tight_bound`.
    pub locked_energy: f64,
    /// `F(ρ_S) - F(τ_S)`.
    pub free_energy_bound: f64,
    /// `T [S(σ_S) - S(ρ_S)]`.
    pub thermo_limit_locked: f64,
}

impl BoundReport {
    /// Checks the ordering `0 ≤ locked`, `tight ≤ resource ≤ free-energy bound`.
    /// Returns the most negative slack; non-negative means the chain holds.
    pub fn chain_slack(&self) -> f64 {
        [
            self.locked_energy,
            self.resource_ergotropy - self.tight_bound,
            self.free_energy_bound - self.resource_ergotropy,
        ]
        .into_iter()
        .fold(f64::INFINITY, f64::min)
    }
}

/// `R(σ_S ⊗ τ_B)`: the largest work the weight can receive.
pub fn tight_bound(
    rho: &DensityOperator,
    h_s: &DiagonalHamiltonian,
    w: &WeightModel,
    bath: &BathSpec,
) -> Result<f64> {
    let sigma = control_marginal(rho, h_s, w)?;
    let sorted = SortedBath::new(&bath_ensemble(bath))?;
    ergotropy_product_sorted(&sigma, h_s, &sorted)
}

/// `R(ρ_S ⊗ τ_B) - R(σ_S ⊗ τ_B)`.
pub fn locked_energy(
    rho: &DensityOperator,
    h_s: &DiagonalHamiltonian,
    w: &WeightModel,
    bath: &BathSpec,
) -> Result<f64> {
    Ok(bound_report(rho, h_s, w, bath)?.locked_energy)
}

/// `F(ρ_S) - F(τ_S)` at temperature `temperature`.
pub fn free_energy_bound(
    rho: &DensityOperator,
    h_s: &DiagonalHamiltonian,
    temperature: f64,
) -> Result<f64> {
    check_temperature(temperature)?;
    let tau = DensityOperator::gibbs(h_s, 1.0 / temperature)?;
    Ok(state_free_energy(rho, h_s, temperature)? - state_free_energy(&tau, h_s, temperature)?)
}

/// Infinite-bath locked energy `T [S(σ_S) - S(ρ_S)]`, non-negative since the
/// channel is a mixture of unitaries.
pub fn thermo_limit_locked(
    rho: &DensityOperator,
    h_s: &DiagonalHamiltonian,
    w: &WeightModel,
    temperature: f64,
) -> Result<f64> {
    check_temperature(temperature)?;
    let sigma = control_marginal(rho, h_s, w)?;
    Ok(thermo_limit_from(rho, &sigma, temperature))
}

fn thermo_limit_from(rho: &DensityOperator, sigma: &DensityOperator, temperature: f64) -> f64 {
    temperature * (von_neumann_entropy(sigma) - von_neumann_entropy(rho))
}

/// All bound quantities from a single evaluation of `σ_S` and the bath.
pub fn bound_report(
    rho: &DensityOperator,
    h_s: &DiagonalHamiltonian,
    w: &WeightModel,
    bath: &BathSpec,
) -> Result<BoundReport> {
    let temperature = bath.temperature();
    let sigma = control_marginal(rho, h_s, w)?;
    let sorted = SortedBath::new(&bath_ensemble(bath))?;
    let tight = ergotropy_product_sorted(&sigma, h_s, &sorted)?;
    let resource = ergotropy_product_sorted(rho, h_s, &sorted)?;
    Ok(BoundReport {
        tight_bound: tight,
        resource_ergotropy: resource,
        locked_energy: resource - tight,
        free_energy_bound: free_energy_bound(rho, h_s, temperature)?,
        thermo_limit_locked: thermo_limit_from(rho, &sigma, temperature),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bath::{custom_bath, skrzypczyk_bath};
    use approx::assert_relative_eq;

    fn qubit() -> DiagonalHamiltonian {
        DiagonalHamiltonian::qubit(1.0).unwrap()
    }

    fn unit_gaussian() -> WeightModel {
        WeightModel::Gaussian { sigma: 1.0 }
    }

    #[test]
    fn worked_single_qubit_bath() {
        let plus = DensityOperator::plus(2).unwrap();
        let bath = skrzypczyk_bath(1, 1.0, 1.0).unwrap();
        let r = bound_report(&plus, &qubit(), &unit_gaussian(), &bath).unwrap();
        let g = (-1.0f64 / 8.0).exp();
        assert_relative_eq!(r.tight_bound, g / 2.0, epsilon = 1e-12);
        assert_relative_eq!(r.resource_ergotropy, 0.5, epsilon = 1e-12);
        assert_relative_eq!(r.locked_energy, 0.5 - g / 2.0, epsilon = 1e-12);
        assert_relative_eq!(r.tight_bound, 0.44125, epsilon = 1e-5);
        assert_relative_eq!(r.locked_energy, 0.05875, epsilon = 1e-5);
        assert_relative_eq!(r.free_energy_bound, 0.81326, epsilon = 1e-5);
        assert_relative_eq!(r.thermo_limit_locked, 0.22350, epsilon = 1e-4);
        assert!(r.chain_slack() >= -1e-12);
    }

    #[test]
    fn diagonal_states_lock_nothing() {
        let rho = DensityOperator::diagonal(&[0.3, 0.7]).unwrap();
        let bath = custom_bath(0.8, vec![0.5, 1.2]).unwrap();
        for w in [
            unit_gaussian(),
            WeightModel::EnergyEigenstate,
            WeightModel::TimeState { t: 0.4 },
        ] {
            let r = bound_report(&rho, &qubit(), &w, &bath).unwrap();
            assert_eq!(r.tight_bound, r.resource_ergotropy);
            assert_eq!(r.locked_energy, 0.0);
            assert_eq!(r.thermo_limit_locked, 0.0);
            assert_eq!(
                tight_bound(&rho, &qubit(), &w, &bath).unwrap(),
                r.resource_ergotropy
            );
        }
    }

    #[test]
    fn time_state_weight_is_ideal() {
        let plus = DensityOperator::plus(2).unwrap();
        let bath = skrzypczyk_bath(3, 1.0, 1.0).unwrap();
        let w = WeightModel::TimeState { t: 1.7 };
        let r = bound_report(&plus, &qubit(), &w, &bath).unwrap();
        assert!(r.locked_energy.abs() < 1e-10);
        assert!(locked_energy(&plus, &qubit(), &w, &bath).unwrap().abs() < 1e-10);
    }

    #[test]
    fn energy_eigenstate_weight_locks_all_coherent_work() {
        let plus = DensityOperator::plus(2).unwrap();
        let bath = skrzypczyk_bath(1, 1.0, 1.0).unwrap();
        let w = WeightModel::EnergyEigenstate;
        let locked = locked_energy(&plus, &qubit(), &w, &bath).unwrap();
        assert_relative_eq!(locked, 0.5, epsilon = 1e-12);
        let limit = thermo_limit_locked(&plus, &qubit(), &w, 1.0).unwrap();
        assert_relative_eq!(limit, 2f64.ln(), epsilon = 1e-12);
    }

    #[test]
    fn free_energy_bound_examples() {
        let tau = DensityOperator::gibbs(&qubit(), 1.0).unwrap();
        assert!(free_energy_bound(&tau, &qubit(), 1.0).unwrap().abs() < 1e-14);

        let plus = DensityOperator::plus(2).unwrap();
        let expected = 0.5 + (1.0 + (-1.0f64).exp()).ln();
        assert_relative_eq!(free_energy_bound(&plus, &qubit(), 1.0).unwrap(), expected, epsilon = 1e-12);
        assert_relative_eq!(expected, 0.813262, epsilon = 1e-6);

        let ln2 = 2f64.ln();
        let h = DiagonalHamiltonian::qubit(ln2).unwrap();
        let expected = ln2 / 2.0 + 1.5f64.ln();
        assert_relative_eq!(free_energy_bound(&plus, &h, 1.0).unwrap(), expected, epsilon = 1e-12);
        assert_relative_eq!(expected, 0.752039, epsilon = 1e-6);
        assert!(free_energy_bound(&plus, &h, 0.0).is_err());
    }

    #[test]
    fn thermo_limit_examples() {
        let rho = DensityOperator::diagonal(&[0.3, 0.7]).unwrap();
        assert_eq!(thermo_limit_locked(&rho, &qubit(), &unit_gaussian(), 1.0).unwrap(), 0.0);

        let plus = DensityOperator::plus(2).unwrap();
        let g = (-1.0f64 / 8.0).exp();
        let (a, b) = ((1.0 + g) / 2.0, (1.0 - g) / 2.0);
        let by_hand = -(a * a.ln() + b * b.ln());
        let limit = thermo_limit_locked(&plus, &qubit(), &unit_gaussian(), 1.0).unwrap();
        assert_relative_eq!(limit, by_hand, epsilon = 1e-12);
        assert_relative_eq!(limit, 0.22350, epsilon = 1e-4);
    }

    #[test]
    fn gibbs_system_has_nothing_to_give() {
        let tau = DensityOperator::gibbs(&qubit(), 1.0).unwrap();
        let bath = skrzypczyk_bath(4, 1.0, 1.0).unwrap();
        let r = bound_report(&tau, &qubit(), &unit_gaussian(), &bath).unwrap();
        assert!(r.tight_bound.abs() < 1e-12);
        assert!(r.resource_ergotropy.abs() < 1e-12);
        assert!(r.locked_energy.abs() < 1e-12);
        assert!(r.free_energy_bound.abs() < 1e-12);
    }

    #[test]
    fn report_fields_are_consistent() {
        let plus = DensityOperator::plus(2).unwrap();
        let bath = skrzypczyk_bath(5, 0.5, 1.0).unwrap();
        let w = WeightModel::Gaussian { sigma: 0.4 };
        let r = bound_report(&plus, &qubit(), &w, &bath).unwrap();
        assert_eq!(r.locked_energy, r.resource_ergotropy - r.tight_bound);
        assert_eq!(r.tight_bound, tight_bound(&plus, &qubit(), &w, &bath).unwrap());
        assert_eq!(
            r.thermo_limit_locked,
            thermo_limit_locked(&plus, &qubit(), &w, 0.5).unwrap()
        );
    }
}
