// Copyright 2026 The lme-wtype Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use thiserror::Error;

/// Errors produced by the library.
///
/// Every variant maps to a stable machine-readable name through
/// [`Error::kind`], which the command line front end echoes in its error
/// reports.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("state vector has zero norm")]
    ZeroVector,

    #[error("state vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("non-finite value in input")]
    NonFinite,

    #[error("operator on qubit {qubit} is not unitary and renormalization is off")]
    NonUnitaryWithoutRenormalize { qubit: usize },

    #[error("local operators annihilate the state")]
    ZeroResult,

    #[error("partial trace needs at least one kept qubit")]
    EmptyKeepSet,

    #[error("qubit index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("matrix is not Hermitian (defect {defect})")]
    NotHermitian { defect: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("invalid W-type parameters: {0}")]
    InvalidParams(String),

    #[error("x = {x} is nonzero; only x = 0 canonical states are supported here")]
    NonzeroX { x: f64 },

    #[error("operator on qubit {qubit} is singular (|det| = {det})")]
    SingularOperator { qubit: usize, det: f64 },

    #[error("certificate unitary on qubit {qubit} is not unitary (defect {defect})")]
    NonUnitaryCertificate { qubit: usize, defect: f64 },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("angles violate cos(alpha1 - alpha2) = 0 (|cos| = {cos})")]
    AngleConstraintViolated { cos: f64 },

    #[error("{qubits} qubits exceeds the limit of {limit}")]
    TooLarge { qubits: usize, limit: usize },

    #[error("qubits {qubits:?} are all degenerate; at most one may be")]
    AmbiguousDegeneracy { qubits: Vec<usize> },

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Stable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::ZeroVector => "ZeroVector",
            Error::NotNormalized { .. } => "NotNormalized",
            Error::NonFinite => "NonFinite",
            Error::NonUnitaryWithoutRenormalize { .. } => "NonUnitaryWithoutRenormalize",
            Error::ZeroResult => "ZeroResult",
            Error::EmptyKeepSet => "EmptyKeepSet",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotHermitian { .. } => "NotHermitian",
            Error::InvalidDensityMatrix(_) => "InvalidDensityMatrix",
            Error::OutOfRange(_) => "OutOfRange",
            Error::InvalidParams(_) => "InvalidParams",
            Error::NonzeroX { .. } => "NonzeroX",
            Error::SingularOperator { .. } => "SingularOperator",
            Error::NonUnitaryCertificate { .. } => "NonUnitaryCertificate",
            Error::InvalidWeights(_) => "InvalidWeights",
            Error::AngleConstraintViolated { .. } => "AngleConstraintViolated",
            Error::TooLarge { .. } => "TooLarge",
            Error::AmbiguousDegeneracy { .. } => "AmbiguousDegeneracy",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
