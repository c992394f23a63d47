// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid Hamiltonian: {0}")]
    InvalidHamiltonian(String),

    #[error("invalid density operator: {0}")]
    InvalidState(String),

    #[error("invalid spectral ensemble: {0}")]
    InvalidEnsemble(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// The requested expansion would exceed the configured size limit.
    #[error("joint spectrum of size {size} exceeds cap {cap}")]
    SizeCap { size: u128, cap: usize },

    #[error("matrix is not unitary (max |V†V - 1| = {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("bath factor {index} is not a Gibbs state at T = {temperature}")]
    NotGibbs { index: usize, temperature: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid_param(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
