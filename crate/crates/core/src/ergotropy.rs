// SPDX-License-Identifier: Apache-2.0

//! Passive energy, ergotropy and passive states.
//!
//! For a state diagonal jointly with its Hamiltonian, the minimum of
//! `Tr[V† H V ρ]` over unitaries is the optimal-assignment value: the largest
//! probability sits on the lowest level, the next largest on the next level,
//! and so on. Everything here reduces to that rule.
//!
//! The product path ([`ergotropy_product`]) exploits the structure
//! `ρ_S ⊗ τ_B`. The bath spectrum is expanded and sorted once
//! ([`SortedBath`]); the joint spectrum is then the union of `d` scaled
//! (respectively shifted) copies of it, one per system level, which a lazy
//! `d`-way merge walks in sorted order. Joint lists are never stored.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectra::{
    check_dims, check_temperature, eigens, shannon_entropy, state_free_energy, DensityOperator,
    DiagonalHamiltonian, FactorizedEnsemble, SpectralEnsemble, DEFAULT_EXPANSION_CAP,
};
use crate::sum::{self, NeumaierSum};

/// Relative tolerance used when checking that bath factors are Gibbs states.
const GIBBS_RATIO_TOL: f64 = 1e-9;

/// `Σ r_k ε_k` with `r` descending and `ε` ascending.
pub fn passive_energy(e: &SpectralEnsemble) -> f64 {
    passive_energy_of_parts(e.probs().to_vec(), e.energies().to_vec())
}

/// Passive energy of unpaired probability and energy multisets.
pub fn passive_energy_of_parts(mut probs: Vec<f64>, mut energies: Vec<f64>) -> f64 {
    debug_assert_eq!(probs.len(), energies.len());
    probs.sort_unstable_by(|a, b| b.total_cmp(a));
    energies.sort_unstable_by(f64::total_cmp);
    sum::dot(&probs, &energies)
}

/// `E - P`.
pub fn ergotropy(e: &SpectralEnsemble) -> f64 {
    crate::spectra::average_energy(e) - passive_energy(e)
}

/// Whether the ensemble already realizes its passive assignment.
pub fn is_passive(e: &SpectralEnsemble, tol: f64) -> bool {
    ergotropy(e) <= tol
}

/// A bath spectrum expanded once and sorted for repeated passive-energy
/// evaluations against different system states.
#[derive(Debug, Clone)]
pub struct SortedBath {
    probs_desc: Vec<f64>,
    energies_asc: Vec<f64>,
    mean_energy: f64,
    entropy: f64,
}

impl SortedBath {
    pub fn new(bath: &FactorizedEnsemble) -> Result<Self> {
        Self::with_cap(bath, DEFAULT_EXPANSION_CAP)
    }

    /// `cap` bounds the expanded bath size, not the joint size.
    pub fn with_cap(bath: &FactorizedEnsemble, cap: usize) -> Result<Self> {
        let mut probs_desc = bath.expanded_probs(cap)?;
        let mut energies_asc = bath.expanded_energies(cap)?;
        probs_desc.sort_unstable_by(|a, b| b.total_cmp(a));
        energies_asc.sort_unstable_by(f64::total_cmp);
        Ok(Self {
            probs_desc,
            energies_asc,
            mean_energy: bath.average_energy(),
            entropy: bath.entropy(),
        })
    }

    pub fn len(&self) -> usize {
        self.probs_desc.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs_desc.is_empty()
    }

    pub fn mean_energy(&self) -> f64 {
        self.mean_energy
    }

    pub fn entropy(&self) -> f64 {
        self.entropy
    }
}

#[derive(Debug)]
struct Head {
    key: f64,
    list: usize,
    pos: usize,
}

impl PartialEq for Head {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Head {}

impl PartialOrd for Head {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Head {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key
            .total_cmp(&other.key)
            .then_with(|| other.list.cmp(&self.list))
    }
}

/// Lazy merge of `base` transformed by each of `params`.
///
/// `transform` must be monotone in the base value so that every transformed
/// list stays sorted; `descending` selects the direction of the output.
struct TransformedMerge<'a, F> {
    base: &'a [f64],
    params: &'a [f64],
    transform: F,
    descending: bool,
    heap: BinaryHeap<Head>,
}

impl<'a, F: Fn(f64, f64) -> f64> TransformedMerge<'a, F> {
    fn new(base: &'a [f64], params: &'a [f64], transform: F, descending: bool) -> Self {
        let mut merge = Self {
            base,
            params,
            transform,
            descending,
            heap: BinaryHeap::with_capacity(params.len()),
        };
        if !base.is_empty() {
            for list in 0..params.len() {
                merge.push(list, 0);
            }
        }
        merge
    }

    fn push(&mut self, list: usize, pos: usize) {
        let value = (self.transform)(self.params[list], self.base[pos]);
        // BinaryHeap is a max-heap; negate for ascending output
        let key = if self.descending { value } else { -value };
        self.heap.push(Head { key, list, pos });
    }
}

impl<F: Fn(f64, f64) -> f64> Iterator for TransformedMerge<'_, F> {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let head = self.heap.pop()?;
        let value = (self.transform)(self.params[head.list], self.base[head.pos]);
        if head.pos + 1 < self.base.len() {
            self.push(head.list, head.pos + 1);
        }
        Some(value)
    }
}

/// Passive energy of `system ⊗ bath`, where the system factor is given by an
/// unordered probability multiset and its energy levels.
pub fn passive_energy_joint(
    system_probs: &[f64],
    system_energies: &[f64],
    bath: &SortedBath,
) -> f64 {
    debug_assert_eq!(system_probs.len(), system_energies.len());
    // Both inputs are non-negative scaled copies of sorted lists, so the
    // merged probabilities come out descending.
    let probs = TransformedMerge::new(&bath.probs_desc, system_probs, |s, b| s * b, true);
    let energies = TransformedMerge::new(&bath.energies_asc, system_energies, |s, b| s + b, false);
    let mut acc = NeumaierSum::new();
    for (p, e) in probs.zip(energies) {
        if p <= 0.0 {
            // everything after this is zero weight
            break;
        }
        acc.add(p * e);
    }
    acc.value()
}

/// `R(ρ_S ⊗ bath)` for a system with Hamiltonian `h_s`.
///
/// `E` is obtained additively from the system diagonal and the bath mean; `P`
/// uses only the spectrum of `system`.
pub fn ergotropy_product(
    system: &DensityOperator,
    h_s: &DiagonalHamiltonian,
    bath: &FactorizedEnsemble,
) -> Result<f64> {
    let sorted = SortedBath::new(bath)?;
    ergotropy_product_sorted(system, h_s, &sorted)
}

/// [`ergotropy_product`] against a pre-sorted bath.
pub fn ergotropy_product_sorted(
    system: &DensityOperator,
    h_s: &DiagonalHamiltonian,
    bath: &SortedBath,
) -> Result<f64> {
    let energy = system.energy(h_s)? + bath.mean_energy();
    let passive = passive_energy_joint(&eigens(system), h_s.energies(), bath);
    Ok(energy - passive)
}

/// Diagonal state in the `h` basis carrying the spectrum of `rho`, largest
/// eigenvalue on the lowest level.
///
/// Ties in energy are broken by basis index (stable order), so the output is
/// reproducible.
pub fn passive_state(rho: &DensityOperator, h: &DiagonalHamiltonian) -> Result<DensityOperator> {
    check_dims(h.dim(), rho.dim())?;
    let values = eigens(rho);
    let mut order: Vec<usize> = (0..h.dim()).collect();
    order.sort_by(|&a, &b| h.energies()[a].total_cmp(&h.energies()[b]));
    let mut populations = vec![0.0; h.dim()];
    for (value, &level) in values.iter().zip(&order) {
        populations[level] = *value;
    }
    // eigens clips, so renormalize the tiny drift before validation
    let total = sum::sum(populations.iter().copied());
    populations.iter_mut().for_each(|p| *p /= total);
    let d = h.dim();
    let matrix = DMatrix::from_fn(d, d, |i, j| {
        if i == j {
            Complex64::new(populations[i], 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    DensityOperator::new_psd_by_construction(matrix)
}

/// Outcome of the ergotropy-difference versus free-energy-difference test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Theorem2Outcome {
    /// `F(ξ_p) ≤ F(ρ_p)` for the passive states of the joint ensembles.
    pub condition_holds: bool,
    /// `R(ρ_S ⊗ τ_B) - R(ξ_S ⊗ τ_B)`.
    pub lhs: f64,
    /// `F(ρ_S) - F(ξ_S)`.
    pub rhs: f64,
}

impl Theorem2Outcome {
    /// The implication holds: either the hypothesis fails or `lhs ≤ rhs + tol`.
    pub fn consistent(&self, tol: f64) -> bool {
        !self.condition_holds || self.lhs <= self.rhs + tol
    }
}

/// Evaluates both sides of the ergotropy/free-energy comparison between two
/// system states sharing the Gibbs bath `bath` at `temperature`.
pub fn theorem2_check(
    rho: &DensityOperator,
    xi: &DensityOperator,
    h_s: &DiagonalHamiltonian,
    bath: &FactorizedEnsemble,
    temperature: f64,
) -> Result<Theorem2Outcome> {
    check_temperature(temperature)?;
    check_dims(h_s.dim(), xi.dim())?;
    check_gibbs(bath, temperature)?;
    let sorted = SortedBath::new(bath)?;

    // passive state of a joint ensemble: energy P, entropy S(system) + S(bath)
    let passive_free_energy = |state: &DensityOperator| -> Result<(f64, f64)> {
        let spectrum = eigens(state);
        let passive = passive_energy_joint(&spectrum, h_s.energies(), &sorted);
        let ergotropy = state.energy(h_s)? + sorted.mean_energy() - passive;
        let s = shannon_entropy(&spectrum) + sorted.entropy();
        Ok((passive - temperature * s, ergotropy))
    };
    let (f_rho_p, r_rho) = passive_free_energy(rho)?;
    let (f_xi_p, r_xi) = passive_free_energy(xi)?;

    Ok(Theorem2Outcome {
        condition_holds: f_xi_p <= f_rho_p,
        lhs: r_rho - r_xi,
        rhs: state_free_energy(rho, h_s, temperature)? - state_free_energy(xi, h_s, temperature)?,
    })
}

/// Each factor must satisfy `p_i e^{E_i/T} = const`.
fn check_gibbs(bath: &FactorizedEnsemble, temperature: f64) -> Result<()> {
    for (index, factor) in bath.factors().iter().enumerate() {
        let ground = factor
            .energies()
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        let scaled: Vec<f64> = factor
            .pairs()
            .map(|(p, e)| p * ((e - ground) / temperature).exp())
            .collect();
        let reference = scaled[0];
        let ok = scaled
            .iter()
            .all(|s| (s - reference).abs() <= GIBBS_RATIO_TOL * reference.abs().max(1e-300));
        if !ok {
            return Err(Error::NotGibbs { index, temperature });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{average_energy, gibbs_ensemble, tensor};
    use approx::assert_relative_eq;

    fn ens(p: &[f64], e: &[f64]) -> SpectralEnsemble {
        SpectralEnsemble::new(p.to_vec(), e.to_vec()).unwrap()
    }

    /// Bath qubit with gap 1 at T = 1.
    fn unit_bath() -> FactorizedEnsemble {
        let h = DiagonalHamiltonian::qubit(1.0).unwrap();
        gibbs_ensemble(&h, 1.0).unwrap().into()
    }

    fn sigma_gaussian() -> DensityOperator {
        let g = (-1.0f64 / 8.0).exp();
        let c = |x: f64| Complex64::new(x, 0.0);
        DensityOperator::new(DMatrix::from_row_slice(
            2,
            2,
            &[c(0.5), c(g / 2.0), c(g / 2.0), c(0.5)],
        ))
        .unwrap()
    }

    #[test]
    fn passive_energy_examples() {
        assert_relative_eq!(
            passive_energy(&ens(&[0.5, 0.3, 0.2], &[0.0, 1.0, 2.0])),
            0.7,
            epsilon = 1e-15
        );
        assert_eq!(passive_energy(&ens(&[0.0, 1.0, 0.0], &[2.0, 1.5, -0.5])), -0.5);
        let p = passive_energy(&ens(&[0.7311, 0.2689, 0.0, 0.0], &[0.0, 1.0, 1.0, 2.0]));
        assert_relative_eq!(p, 0.2689, epsilon = 1e-15);
    }

    #[test]
    fn ergotropy_examples() {
        let h = DiagonalHamiltonian::new(vec![0.0, 0.3, 1.7]).unwrap();
        let g = gibbs_ensemble(&h, 0.8).unwrap();
        assert!(ergotropy(&g).abs() < 1e-15);
        assert!(is_passive(&g, 1e-12));

        let plus = ens(&[1.0, 0.0], &[0.0, 1.0]);
        // populations of |+> give E = 1/2, but the spectrum {1, 0} sits on [0, 1]
        let x = ens(&[0.5, 0.5], &[0.0, 1.0]);
        assert_eq!(average_energy(&x), 0.5);
        assert_eq!(passive_energy(&plus), 0.0);

        // |+> ⊗ bath: spectrum {1,0} ⊗ bath, with E taken from the populations
        let joint = tensor(plus, unit_bath()).expand().unwrap();
        let p = passive_energy(&joint);
        let e = 0.5 + unit_bath().average_energy();
        assert_relative_eq!(e, 0.76894, epsilon = 1e-5);
        assert_relative_eq!(p, 0.26894, epsilon = 1e-5);
        assert_relative_eq!(e - p, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn product_examples() {
        let h = DiagonalHamiltonian::qubit(1.0).unwrap();
        let gibbs = DensityOperator::gibbs(&h, 1.0).unwrap();
        assert!(ergotropy_product(&gibbs, &h, &unit_bath()).unwrap().abs() < 1e-12);

        let plus = DensityOperator::plus(2).unwrap();
        assert_relative_eq!(
            ergotropy_product(&plus, &h, &unit_bath()).unwrap(),
            0.5,
            epsilon = 1e-12
        );

        let r = ergotropy_product(&sigma_gaussian(), &h, &unit_bath()).unwrap();
        assert_relative_eq!(r, (-1.0f64 / 8.0).exp() / 2.0, epsilon = 1e-12);
        assert_relative_eq!(r, 0.44125, epsilon = 1e-5);
    }

    #[test]
    fn product_without_bath_is_system_ergotropy() {
        let h = DiagonalHamiltonian::qubit(2.0).unwrap();
        let plus = DensityOperator::plus(2).unwrap();
        let r = ergotropy_product(&plus, &h, &FactorizedEnsemble::trivial()).unwrap();
        assert_relative_eq!(r, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn product_dimension_mismatch() {
        let h = DiagonalHamiltonian::new(vec![0.0, 1.0, 2.0]).unwrap();
        let plus = DensityOperator::plus(2).unwrap();
        assert!(matches!(
            ergotropy_product(&plus, &h, &unit_bath()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn merge_matches_sort() {
        let bath = tensor(
            ens(&[0.6, 0.3, 0.1], &[0.0, 0.4, 2.0]),
            ens(&[0.25, 0.75], &[1.0, -1.0]),
        );
        let sorted = SortedBath::new(&bath).unwrap();
        let system_p = [0.1, 0.0, 0.5, 0.4];
        let system_e = [3.0, -2.0, 0.5, 0.5];
        let joint = tensor(ens(&system_p, &system_e), bath).expand().unwrap();
        assert_relative_eq!(
            passive_energy_joint(&system_p, &system_e, &sorted),
            passive_energy(&joint),
            epsilon = 1e-14
        );
    }

    #[test]
    fn passive_state_examples() {
        let h = DiagonalHamiltonian::qubit(1.0).unwrap();
        let already = DensityOperator::diagonal(&[0.8, 0.2]).unwrap();
        let p = passive_state(&already, &h).unwrap();
        assert!((p.matrix() - already.matrix()).norm() < 1e-14);

        let plus = DensityOperator::plus(2).unwrap();
        let p = passive_state(&plus, &h).unwrap();
        assert!((p.populations()[0] - 1.0).abs() < 1e-12);
        assert!(p.populations()[1].abs() < 1e-12);

        let g = (-1.0f64 / 8.0).exp();
        let xi = passive_state(&sigma_gaussian(), &h).unwrap();
        assert_relative_eq!(xi.populations()[0], (1.0 + g) / 2.0, epsilon = 1e-12);
        assert_relative_eq!(xi.populations()[1], (1.0 - g) / 2.0, epsilon = 1e-12);
        assert_eq!(xi.max_coherence(), 0.0);
    }

    #[test]
    fn passive_state_reversed_levels() {
        let h = DiagonalHamiltonian::new(vec![2.0, 0.0, 1.0]).unwrap();
        let rho = DensityOperator::diagonal(&[0.5, 0.2, 0.3]).unwrap();
        let p = passive_state(&rho, &h).unwrap().populations();
        assert_relative_eq!(p[1], 0.5, epsilon = 1e-14);
        assert_relative_eq!(p[2], 0.3, epsilon = 1e-14);
        assert_relative_eq!(p[0], 0.2, epsilon = 1e-14);
    }

    #[test]
    fn theorem2_examples() {
        let h = DiagonalHamiltonian::qubit(1.0).unwrap();
        let tau = DensityOperator::gibbs(&h, 1.0).unwrap();
        let plus = DensityOperator::plus(2).unwrap();

        let out = theorem2_check(&plus, &tau, &h, &unit_bath(), 1.0).unwrap();
        assert!(out.condition_holds);
        assert_relative_eq!(out.lhs, 0.5, epsilon = 1e-12);
        // F(τ) = -ln(1 + e^{-1})
        assert_relative_eq!(out.rhs, 0.5 + (1.0 + (-1.0f64).exp()).ln(), epsilon = 1e-12);
        assert_relative_eq!(out.rhs, 0.81326, epsilon = 1e-5);
        assert!(out.consistent(1e-9));

        let same = theorem2_check(&plus, &plus, &h, &unit_bath(), 1.0).unwrap();
        assert!(same.condition_holds);
        assert_eq!(same.lhs, 0.0);
        assert_eq!(same.rhs, 0.0);
    }

    #[test]
    fn theorem2_requires_gibbs_bath() {
        let h = DiagonalHamiltonian::qubit(1.0).unwrap();
        let plus = DensityOperator::plus(2).unwrap();
        let bath: FactorizedEnsemble = ens(&[0.5, 0.5], &[0.0, 1.0]).into();
        assert!(matches!(
            theorem2_check(&plus, &plus, &h, &bath, 1.0),
            Err(Error::NotGibbs { index: 0, .. })
        ));
        // correct at the wrong temperature
        assert!(theorem2_check(&plus, &plus, &h, &unit_bath(), 2.0).is_err());
    }
}
