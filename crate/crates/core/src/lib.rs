// SPDX-License-Identifier: Apache-2.0

//! Ergotropy and work-extraction bounds for a quantum system coupled to a
//! finite heat bath and an explicit weight.
//!
//! The crate computes, for a system state `ρ_S` with diagonal Hamiltonian
//! `H_S`, a Gibbs bath `τ_B` and a weight model:
//!
//! - the resource ergotropy `R(ρ_S ⊗ τ_B)`,
//! - the tight work bound `R(σ_S ⊗ τ_B)`, where `σ_S` is the control-marginal
//!   state obtained by dephasing `ρ_S` with the weight's characteristic function,
//! - the locked energy (their difference), and
//! - the free-energy bound `F(ρ_S) - F(τ_S)` together with the infinite-bath
//!   locked-energy estimate `T [S(σ_S) - S(ρ_S)]`.
//!
//! The joint spectrum of `ρ_S ⊗ τ_B` is handled in factorized form, so bath
//! sizes of twenty qubits and more are cheap. [`oracle`] contains dense
//! brute-force counterparts used to validate the fast path.

pub mod bath;
pub mod bounds;
pub mod ergotropy;
mod error;
pub mod oracle;
pub mod spectra;
pub mod sum;
pub mod weight;

pub use bath::{bath_ensemble, custom_bath, skrzypczyk_bath, BathSpec};
pub use bounds::{
    bound_report, free_energy_bound, locked_energy, thermo_limit_locked, tight_bound, BoundReport,
};
pub use ergotropy::{
    ergotropy, ergotropy_product, passive_energy, passive_state, theorem2_check, SortedBath,
    Theorem2Outcome,
};
pub use error::{Error, Result};
pub use spectra::{
    average_energy, eigens, entropy, free_energy, gibbs_ensemble, tensor, DensityOperator,
    DiagonalHamiltonian, FactorizedEnsemble, SpectralEnsemble,
};
pub use weight::{characteristic_factor, control_marginal, CharacteristicFunction, WeightModel};
