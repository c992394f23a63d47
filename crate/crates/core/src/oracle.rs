// SPDX-License-Identifier: Apache-2.0

//! Dense brute-force reference implementations and seeded random instances.
//!
//! Nothing here goes through the factorized spectrum path: joint states are
//! built as literal Kronecker products and ergotropies come from a full
//! Hermitian eigendecomposition of the joint matrix. The fast path in
//! [`crate::ergotropy`] is checked against these.
//!
//! Randomness uses ChaCha20 (`rand_chacha::ChaCha20Rng`). A master seed is
//! expanded with `SeedableRng::seed_from_u64`, and trial `i` draws from
//! stream `i` of that key, so every trial is reproducible on its own.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::bath::{bath_ensemble, custom_bath, BathSpec};
use crate::error::{invalid_param, Error, Result};
use crate::spectra::{
    check_dims, hermitize, DensityOperator, DiagonalHamiltonian,
};
use crate::sum::NeumaierSum;
use crate::weight::WeightModel;

/// Largest joint dimension the dense path accepts.
pub const DENSE_CAP: usize = 4096;
/// Largest tolerated `max |V†V - 1|` for a unitary input.
pub const UNITARY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RandomKind {
    /// Normalized complex Gaussian vector.
    PureHaar,
    /// Ginibre `G G† / Tr`.
    MixedTraceNormalized,
    /// First column of a Haar unitary, i.e. a pure state drawn through QR.
    UnitaryHaar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub seed: u64,
    pub dim: usize,
    pub kind: RandomKind,
}

/// Generator for stream `stream` under master seed `seed`.
pub fn rng(seed: u64, stream: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Seed for trial `index` of a run with master seed `master`.
pub fn child_seed(master: u64, index: u64) -> u64 {
    rng(master, index).next_u64()
}

fn complex_gaussian(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

fn ginibre(rng: &mut impl Rng, dim: usize) -> DMatrix<Complex64> {
    // column-major fill, fixed order
    DMatrix::from_fn(dim, dim, |_, _| complex_gaussian(rng))
}

pub fn random_state(spec: RandomSpec) -> Result<DensityOperator> {
    if spec.dim == 0 {
        return Err(invalid_param("dim", "must be positive"));
    }
    let mut rng = rng(spec.seed, 0);
    match spec.kind {
        RandomKind::PureHaar => {
            let psi: Vec<Complex64> = (0..spec.dim).map(|_| complex_gaussian(&mut rng)).collect();
            DensityOperator::pure(&psi)
        }
        RandomKind::MixedTraceNormalized => {
            let g = ginibre(&mut rng, spec.dim);
            let m = &g * g.adjoint();
            let trace: f64 = (0..spec.dim).map(|i| m[(i, i)].re).sum();
            DensityOperator::new(hermitize(m.map(|z| z / trace)))
        }
        RandomKind::UnitaryHaar => {
            let u = haar_from(&mut rng, spec.dim);
            let psi: Vec<Complex64> = u.column(0).iter().copied().collect();
            DensityOperator::pure(&psi)
        }
    }
}

/// Haar-distributed unitary via QR of a Ginibre matrix with the phases of
/// `diag(R)` absorbed into `Q`.
pub fn random_unitary(seed: u64, dim: usize) -> Result<DMatrix<Complex64>> {
    if dim == 0 {
        return Err(invalid_param("dim", "must be positive"));
    }
    Ok(haar_from(&mut rng(seed, 0), dim))
}

fn haar_from(rng: &mut impl Rng, dim: usize) -> DMatrix<Complex64> {
    let qr = ginibre(rng, dim).qr();
    let (q, r) = (qr.q(), qr.r());
    let mut u = q;
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..dim {
            u[(i, j)] *= phase;
        }
    }
    u
}

/// `max |V†V - 1|`.
pub fn unitarity_deviation(v: &DMatrix<Complex64>) -> f64 {
    let n = v.nrows();
    let g = v.adjoint() * v;
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((g[(i, j)] - Complex64::new(target, 0.0)).norm());
        }
    }
    worst
}

/// Literal `ρ_S ⊗ τ_B` and `H_S ⊗ 1 + 1 ⊗ H_B`.
#[derive(Debug, Clone)]
pub struct DenseJoint {
    pub state: DensityOperator,
    pub hamiltonian: DiagonalHamiltonian,
}

pub fn dense_joint(
    rho: &DensityOperator,
    h_s: &DiagonalHamiltonian,
    bath: &BathSpec,
) -> Result<DenseJoint> {
    check_dims(h_s.dim(), rho.dim())?;
    let size = (rho.dim() as u128) << bath.len().min(100);
    if size > DENSE_CAP as u128 {
        return Err(Error::SizeCap { size, cap: DENSE_CAP });
    }
    let mut state = rho.matrix().clone();
    let mut levels = DVector::from_column_slice(h_s.energies());
    for factor in bath_ensemble(bath).factors() {
        let local_state = DMatrix::from_diagonal(&DVector::from_iterator(
            factor.len(),
            factor.probs().iter().map(|&p| Complex64::new(p, 0.0)),
        ));
        state = state.kronecker(&local_state);
        let ones = DVector::from_element(factor.len(), 1.0);
        let local_levels = DVector::from_column_slice(factor.energies());
        let before = DVector::from_element(levels.len(), 1.0);
        levels = levels.kronecker(&ones) + before.kronecker(&local_levels);
    }
    Ok(DenseJoint {
        state: DensityOperator::new_psd_by_construction(state)?,
        hamiltonian: DiagonalHamiltonian::new(levels.iter().copied().collect())?,
    })
}

/// Ergotropy from a full eigendecomposition of `state`.
pub fn dense_ergotropy(state: &DensityOperator, h: &DiagonalHamiltonian) -> Result<f64> {
    check_dims(h.dim(), state.dim())?;
    if state.dim() > DENSE_CAP {
        return Err(Error::SizeCap {
            size: state.dim() as u128,
            cap: DENSE_CAP,
        });
    }
    let mut eigenvalues: Vec<f64> = state
        .matrix()
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    eigenvalues.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    let mut levels = h.energies().to_vec();
    levels.sort_by(|a, b| a.partial_cmp(b).expect("finite energies"));

    let mut energy = NeumaierSum::new();
    for (i, e) in h.energies().iter().enumerate() {
        energy.add(state.matrix()[(i, i)].re * e);
    }
    let mut passive = NeumaierSum::new();
    for (l, e) in eigenvalues.iter().zip(&levels) {
        passive.add(l * e);
    }
    Ok(energy.value() - passive.value())
}

/// Work and residual ergotropy for a joint unitary `v` acting on `sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Theorem1Outcome {
    /// `Tr[H (σ - V σ V†)]`.
    pub work: f64,
    /// `R(σ)`.
    pub ergotropy: f64,
    /// `R(V σ V†)`.
    pub residual_ergotropy: f64,
}

impl Theorem1Outcome {
    /// `|W - (R(σ) - R(VσV†))|`.
    pub fn identity_gap(&self) -> f64 {
        (self.work - (self.ergotropy - self.residual_ergotropy)).abs()
    }
}

pub fn theorem1_work(
    v: &DMatrix<Complex64>,
    sigma: &DensityOperator,
    h: &DiagonalHamiltonian,
) -> Result<Theorem1Outcome> {
    check_dims(h.dim(), sigma.dim())?;
    if v.nrows() != v.ncols() {
        return Err(Error::DimensionMismatch {
            expected: v.nrows(),
            found: v.ncols(),
        });
    }
    check_dims(sigma.dim(), v.nrows())?;
    let deviation = unitarity_deviation(v);
    if deviation > UNITARY_TOL {
        return Err(Error::NotUnitary { deviation });
    }
    let evolved = v * sigma.matrix() * v.adjoint();
    let evolved = DensityOperator::new_psd_by_construction(hermitize(evolved))?;
    Ok(Theorem1Outcome {
        work: sigma.energy(h)? - evolved.energy(h)?,
        ergotropy: dense_ergotropy(sigma, h)?,
        residual_ergotropy: dense_ergotropy(&evolved, h)?,
    })
}

/// A unitary taking `sigma` to its passive state: eigenvector of the `k`-th
/// largest eigenvalue goes to the `k`-th lowest level.
pub fn passive_unitary(sigma: &DensityOperator, h: &DiagonalHamiltonian) -> Result<DMatrix<Complex64>> {
    check_dims(h.dim(), sigma.dim())?;
    let eig = sigma.matrix().clone().symmetric_eigen();
    let d = sigma.dim();
    let mut by_weight: Vec<usize> = (0..d).collect();
    by_weight.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let mut by_energy: Vec<usize> = (0..d).collect();
    by_energy.sort_by(|&a, &b| h.energies()[a].total_cmp(&h.energies()[b]));

    // V = Σ_k |level_k⟩⟨v_k|
    let mut v = DMatrix::zeros(d, d);
    for (&vec_idx, &level) in by_weight.iter().zip(&by_energy) {
        let column = eig.eigenvectors.column(vec_idx);
        for j in 0..d {
            v[(level, j)] = column[j].conj();
        }
    }
    Ok(v)
}

/// A random `(ρ_S, H_S, bath, weight)` tuple with joint dimension at most
/// `max_joint_dim`.
#[derive(Debug, Clone)]
pub struct RandomInstance {
    pub rho: DensityOperator,
    pub h_s: DiagonalHamiltonian,
    pub bath: BathSpec,
    pub weight: WeightModel,
}

impl RandomInstance {
    pub fn joint_dim(&self) -> usize {
        self.rho.dim() << self.bath.len()
    }
}

/// Draws a random instance deterministically from `seed`.
///
/// System dimension in `2..=min(6, max_joint_dim / 2)`, energies uniform in
/// `[0, 3)`, bath of as many qubits as fit (possibly none) with gaps in
/// `[0.1, 3)`, temperature in `[0.2, 3)`, and any of the three weight kinds.
pub fn random_instance(seed: u64, max_joint_dim: usize) -> Result<RandomInstance> {
    if max_joint_dim < 2 {
        return Err(invalid_param("max_joint_dim", "need room for at least a qubit"));
    }
    let mut rng = rng(seed, 1);
    let max_sys = (max_joint_dim / 2).clamp(2, 6);
    let dim = rng.random_range(2..=max_sys);
    let energies: Vec<f64> = (0..dim).map(|_| rng.random_range(0.0..3.0)).collect();
    let h_s = DiagonalHamiltonian::new(energies)?;
    let kind = match rng.random_range(0..3) {
        0 => RandomKind::PureHaar,
        1 => RandomKind::MixedTraceNormalized,
        _ => RandomKind::UnitaryHaar,
    };
    let rho = random_state(RandomSpec {
        seed: rng.next_u64(),
        dim,
        kind,
    })?;

    let mut max_qubits = 0;
    while dim << (max_qubits + 1) <= max_joint_dim {
        max_qubits += 1;
    }
    let n = rng.random_range(0..=max_qubits);
    let temperature = rng.random_range(0.2..3.0);
    let bath = if n == 0 {
        BathSpec::none(temperature)?
    } else {
        custom_bath(temperature, (0..n).map(|_| rng.random_range(0.1..3.0)).collect())?
    };
    let weight = match rng.random_range(0..3) {
        0 => WeightModel::Gaussian {
            sigma: 10f64.powf(rng.random_range(-1.5..1.5)),
        },
        1 => WeightModel::TimeState {
            t: rng.random_range(-5.0..5.0),
        },
        _ => WeightModel::EnergyEigenstate,
    };
    Ok(RandomInstance {
        rho,
        h_s,
        bath,
        weight,
    })
}
