// SPDX-License-Identifier: Apache-2.0

//! State representations for systems with diagonal Hamiltonians.
//!
//! Two views of a state coexist here. [`DensityOperator`] is the dense
//! matrix used for the (small) system and for the brute-force oracle.
//! [`SpectralEnsemble`] is the classical view: a list of (probability,
//! energy) pairs, which is all that energies, entropies and passive energies
//! depend on once the state is diagonal jointly with its Hamiltonian. A
//! [`FactorizedEnsemble`] keeps a tensor product of such lists unexpanded
//! until a caller actually needs the joint list.
//!
//! Units are ħ = k_B = 1 and logarithms are natural.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid_param, Error, Result};
use crate::sum;

/// Maximum absolute deviation of a density matrix from its adjoint.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Maximum deviation of a density matrix trace from one.
pub const TRACE_TOL: f64 = 1e-12;
/// Most negative eigenvalue tolerated in a density matrix.
pub const PSD_TOL: f64 = 1e-10;
/// Most negative probability tolerated in an ensemble.
pub const PROB_TOL: f64 = 1e-12;
/// Normalization slack of a single ensemble.
pub const NORM_TOL: f64 = 1e-10;
/// Normalization slack of an expanded product ensemble.
pub const PRODUCT_NORM_TOL: f64 = 1e-9;
/// Default limit on the number of entries [`FactorizedEnsemble::expand`] materializes.
pub const DEFAULT_EXPANSION_CAP: usize = 1 << 26;

/// A Hamiltonian that is diagonal in the computational basis.
///
/// The stored order of `energies` fixes the basis index used by every
/// matrix in this crate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagonalHamiltonian {
    energies: Vec<f64>,
}

impl DiagonalHamiltonian {
    pub fn new(energies: Vec<f64>) -> Result<Self> {
        if energies.is_empty() {
            return Err(Error::InvalidHamiltonian("no energy levels".into()));
        }
        if let Some(e) = energies.iter().find(|e| !e.is_finite()) {
            return Err(Error::InvalidHamiltonian(format!(
                "non-finite energy level {e}"
            )));
        }
        Ok(Self { energies })
    }

    /// `ω |1⟩⟨1|`.
    pub fn qubit(omega: f64) -> Result<Self> {
        Self::new(vec![0.0, omega])
    }

    /// Ground level at zero followed by levels spaced by `gaps`.
    pub fn from_gaps(gaps: &[f64]) -> Result<Self> {
        let mut energies = Vec::with_capacity(gaps.len() + 1);
        let mut level = 0.0;
        energies.push(level);
        for &g in gaps {
            if !(g.is_finite() && g > 0.0) {
                return Err(Error::InvalidHamiltonian(format!(
                    "gap {g} is not a positive finite number"
                )));
            }
            level += g;
            energies.push(level);
        }
        Self::new(energies)
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn dim(&self) -> usize {
        self.energies.len()
    }
}

/// A dense density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    matrix: DMatrix<Complex64>,
}

impl DensityOperator {
    /// Validates Hermiticity, unit trace and positive semidefiniteness.
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        let rho = Self::check_structure(matrix)?;
        let min_eig = rho
            .matrix
            .clone()
            .symmetric_eigenvalues()
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        if min_eig < -PSD_TOL {
            return Err(Error::InvalidState(format!(
                "negative eigenvalue {min_eig:e}"
            )));
        }
        Ok(rho)
    }

    /// Validation without the eigenvalue check, for states that are PSD by
    /// construction (Kronecker products and diagonal matrices of valid inputs).
    pub(crate) fn new_psd_by_construction(matrix: DMatrix<Complex64>) -> Result<Self> {
        Self::check_structure(matrix)
    }

    fn check_structure(matrix: DMatrix<Complex64>) -> Result<Self> {
        let (rows, cols) = matrix.shape();
        if rows == 0 || rows != cols {
            return Err(Error::InvalidState(format!(
                "matrix must be square and non-empty, got {rows}x{cols}"
            )));
        }
        if matrix.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::InvalidState("non-finite entry".into()));
        }
        let mut asym: f64 = 0.0;
        for i in 0..rows {
            for j in i..rows {
                asym = asym.max((matrix[(i, j)] - matrix[(j, i)].conj()).norm());
            }
        }
        if asym > HERMITIAN_TOL {
            return Err(Error::InvalidState(format!(
                "not Hermitian (max deviation {asym:e})"
            )));
        }
        let trace = sum::sum((0..rows).map(|i| matrix[(i, i)].re));
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace {trace} != 1")));
        }
        Ok(Self { matrix })
    }

    /// `|ψ⟩⟨ψ|` for a normalized vector (normalized here if needed).
    pub fn pure(amplitudes: &[Complex64]) -> Result<Self> {
        let norm = sum::sum(amplitudes.iter().map(|a| a.norm_sqr())).sqrt();
        if amplitudes.is_empty() || !(norm.is_finite() && norm > 0.0) {
            return Err(Error::InvalidState("zero or empty state vector".into()));
        }
        let psi: Vec<Complex64> = amplitudes.iter().map(|a| a / norm).collect();
        let d = psi.len();
        let matrix = DMatrix::from_fn(d, d, |i, j| psi[i] * psi[j].conj());
        Self::new_psd_by_construction(hermitize(matrix))
    }

    /// Uniform superposition of all basis states; `|+⟩` for a qubit.
    pub fn plus(dim: usize) -> Result<Self> {
        Self::pure(&vec![Complex64::new(1.0, 0.0); dim])
    }

    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(invalid_param("index", format!("{index} >= dimension {dim}")));
        }
        let mut populations = vec![0.0; dim];
        populations[index] = 1.0;
        Self::diagonal(&populations)
    }

    pub fn diagonal(populations: &[f64]) -> Result<Self> {
        if let Some(p) = populations.iter().find(|p| p.is_nan() || **p < -PSD_TOL) {
            return Err(Error::InvalidState(format!("negative population {p}")));
        }
        let d = populations.len();
        let matrix = DMatrix::from_fn(d, d, |i, j| {
            if i == j {
                Complex64::new(populations[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        Self::new_psd_by_construction(matrix)
    }

    /// Gibbs state of `h` at inverse temperature `beta`.
    pub fn gibbs(h: &DiagonalHamiltonian, beta: f64) -> Result<Self> {
        Self::diagonal(gibbs_ensemble(h, beta)?.probs())
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }

    /// Real parts of the diagonal (populations in the computational basis).
    pub fn populations(&self) -> Vec<f64> {
        (0..self.dim()).map(|i| self.matrix[(i, i)].re).collect()
    }

    /// `Tr[H ρ]`.
    pub fn energy(&self, h: &DiagonalHamiltonian) -> Result<f64> {
        check_dims(h.dim(), self.dim())?;
        Ok(sum::dot(&self.populations(), h.energies()))
    }

    /// Largest off-diagonal modulus.
    pub fn max_coherence(&self) -> f64 {
        let d = self.dim();
        let mut m: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    m = m.max(self.matrix[(i, j)].norm());
                }
            }
        }
        m
    }
}

/// Replaces `m` by `(m + m†)/2`, removing rounding asymmetry.
pub(crate) fn hermitize(m: DMatrix<Complex64>) -> DMatrix<Complex64> {
    let adj = m.adjoint();
    (m + adj).map(|z| z * 0.5)
}

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Paired (probability, energy) lists. Pairing is positional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralEnsemble {
    probs: Vec<f64>,
    energies: Vec<f64>,
}

impl SpectralEnsemble {
    pub fn new(probs: Vec<f64>, energies: Vec<f64>) -> Result<Self> {
        if probs.len() != energies.len() {
            return Err(Error::InvalidEnsemble(format!(
                "{} probabilities but {} energies",
                probs.len(),
                energies.len()
            )));
        }
        if probs.is_empty() {
            return Err(Error::InvalidEnsemble("empty ensemble".into()));
        }
        if let Some(p) = probs.iter().find(|p| !(p.is_finite() && **p >= -PROB_TOL)) {
            return Err(Error::InvalidEnsemble(format!("invalid probability {p}")));
        }
        if let Some(e) = energies.iter().find(|e| !e.is_finite()) {
            return Err(Error::InvalidEnsemble(format!("non-finite energy {e}")));
        }
        let total = sum::sum(probs.iter().copied());
        if (total - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidEnsemble(format!(
                "probabilities sum to {total}"
            )));
        }
        Ok(Self { probs, energies })
    }

    /// Populations of a density matrix paired with the Hamiltonian levels.
    ///
    /// Only meaningful as a description of the state when the matrix is
    /// diagonal; for coherent states use [`eigens`] instead.
    pub fn from_populations(rho: &DensityOperator, h: &DiagonalHamiltonian) -> Result<Self> {
        check_dims(h.dim(), rho.dim())?;
        Self::new(rho.populations(), h.energies().to_vec())
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.probs.iter().copied().zip(self.energies.iter().copied())
    }
}

/// Boltzmann weights `e^{-β E_i} / Z`.
pub fn gibbs_ensemble(h: &DiagonalHamiltonian, beta: f64) -> Result<SpectralEnsemble> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(invalid_param("beta", format!("{beta} is not positive")));
    }
    // shift by the ground energy so the largest weight is exactly 1
    let ground = h.energies().iter().cloned().fold(f64::INFINITY, f64::min);
    let weights: Vec<f64> = h
        .energies()
        .iter()
        .map(|e| (-beta * (e - ground)).exp())
        .collect();
    let z = sum::sum(weights.iter().copied());
    let probs = weights.into_iter().map(|w| w / z).collect();
    SpectralEnsemble::new(probs, h.energies().to_vec())
}

/// `Σ p_i E_i`.
pub fn average_energy(e: &SpectralEnsemble) -> f64 {
    sum::dot(&e.probs, &e.energies)
}

/// Shannon entropy `-Σ p ln p` with `0 ln 0 = 0`.
pub fn entropy(e: &SpectralEnsemble) -> f64 {
    shannon_entropy(&e.probs)
}

/// Entropy of a probability list. Entries at or below zero contribute nothing.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    sum::sum(
        probs
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| -p * p.ln()),
    )
}

/// von Neumann entropy `S(ρ)` from the spectrum of `rho`.
pub fn von_neumann_entropy(rho: &DensityOperator) -> f64 {
    shannon_entropy(&eigens(rho))
}

/// `E - T S`.
pub fn free_energy(e: &SpectralEnsemble, temperature: f64) -> Result<f64> {
    check_temperature(temperature)?;
    Ok(average_energy(e) - temperature * entropy(e))
}

/// `F(ρ) = Tr[H ρ] - T S(ρ)` for a dense state.
pub fn state_free_energy(
    rho: &DensityOperator,
    h: &DiagonalHamiltonian,
    temperature: f64,
) -> Result<f64> {
    check_temperature(temperature)?;
    Ok(rho.energy(h)? - temperature * von_neumann_entropy(rho))
}

pub(crate) fn check_temperature(temperature: f64) -> Result<()> {
    if temperature.is_finite() && temperature > 0.0 {
        Ok(())
    } else {
        Err(invalid_param(
            "temperature",
            format!("{temperature} is not positive"),
        ))
    }
}

/// Eigenvalues of `rho`, descending, clipped into `[0, 1]`.
pub fn eigens(rho: &DensityOperator) -> Vec<f64> {
    let mut values: Vec<f64> = rho
        .matrix
        .clone()
        .symmetric_eigenvalues()
        .iter()
        .map(|&v| v.clamp(0.0, 1.0))
        .collect();
    values.sort_unstable_by(|a, b| b.total_cmp(a));
    values
}

/// A lazily expanded tensor product of ensembles.
///
/// Expansion order is lexicographic over factor indices with the first
/// factor most significant, matching the Kronecker product convention.
/// An empty factor list is the one-outcome ensemble `([1], [0])`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct FactorizedEnsemble {
    factors: Vec<SpectralEnsemble>,
}

impl FactorizedEnsemble {
    pub fn new(factors: Vec<SpectralEnsemble>) -> Result<Self> {
        let f = Self { factors };
        let total: f64 = f
            .factors
            .iter()
            .map(|e| sum::sum(e.probs.iter().copied()))
            .product();
        if (total - 1.0).abs() > PRODUCT_NORM_TOL {
            return Err(Error::InvalidEnsemble(format!(
                "product ensemble sums to {total}"
            )));
        }
        Ok(f)
    }

    /// The identity of the tensor product.
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &[SpectralEnsemble] {
        &self.factors
    }

    /// Number of expanded entries. Saturates instead of overflowing.
    pub fn expanded_len(&self) -> u128 {
        self.factors
            .iter()
            .fold(1u128, |acc, e| acc.saturating_mul(e.len() as u128))
    }

    /// Average energy, computed factor by factor.
    pub fn average_energy(&self) -> f64 {
        sum::sum(self.factors.iter().map(average_energy))
    }

    /// Entropy, computed factor by factor.
    pub fn entropy(&self) -> f64 {
        sum::sum(self.factors.iter().map(entropy))
    }

    pub fn expand(&self) -> Result<SpectralEnsemble> {
        self.expand_with_cap(DEFAULT_EXPANSION_CAP)
    }

    pub fn expand_with_cap(&self, cap: usize) -> Result<SpectralEnsemble> {
        let probs = self.expanded_probs(cap)?;
        let energies = self.expanded_energies(cap)?;
        Ok(SpectralEnsemble { probs, energies })
    }

    /// Joint probabilities only, in expansion order.
    pub fn expanded_probs(&self, cap: usize) -> Result<Vec<f64>> {
        self.check_cap(cap)?;
        Ok(outer(
            vec![1.0],
            self.factors.iter().map(|f| f.probs()),
            |a, b| a * b,
        ))
    }

    /// Joint energies only, in expansion order.
    pub fn expanded_energies(&self, cap: usize) -> Result<Vec<f64>> {
        self.check_cap(cap)?;
        Ok(outer(
            vec![0.0],
            self.factors.iter().map(|f| f.energies()),
            |a, b| a + b,
        ))
    }

    pub(crate) fn check_cap(&self, cap: usize) -> Result<()> {
        let size = self.expanded_len();
        if size > cap as u128 {
            Err(Error::SizeCap { size, cap })
        } else {
            Ok(())
        }
    }
}

/// Folds the lists into their outer "product" under `combine`, first list
/// most significant.
fn outer<'a>(
    seed: Vec<f64>,
    lists: impl Iterator<Item = &'a [f64]>,
    combine: impl Fn(f64, f64) -> f64,
) -> Vec<f64> {
    let mut acc = seed;
    for list in lists {
        let mut next = Vec::with_capacity(acc.len() * list.len());
        for &a in &acc {
            next.extend(list.iter().map(|&b| combine(a, b)));
        }
        acc = next;
    }
    acc
}

impl From<SpectralEnsemble> for FactorizedEnsemble {
    fn from(e: SpectralEnsemble) -> Self {
        Self { factors: vec![e] }
    }
}

/// Tensor product without expansion: the factor lists are concatenated.
pub fn tensor(
    a: impl Into<FactorizedEnsemble>,
    b: impl Into<FactorizedEnsemble>,
) -> FactorizedEnsemble {
    let mut factors = a.into().factors;
    factors.extend(b.into().factors);
    FactorizedEnsemble { factors }
}
