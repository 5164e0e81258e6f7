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

//! Dense complex linear algebra for n-qubit pure states and 2×2 local
//! operators.

mod mat2;
mod matrix;
mod state;

pub use mat2::{eig_herm2, ry, rz, Eigen2, Mat2};
pub use matrix::{CMatrix, DensityMatrix};
pub use state::{inner, make_state, PureState};

pub(crate) use state::{apply_gate_in_place, inner_amps};

/// Complex scalar used for all amplitudes and matrix entries.
pub type C64 = num_complex::Complex64;

/// Tolerance for invariants of values the library constructs itself.
pub const CONSTRUCTION_TOL: f64 = 1e-12;

/// Tolerance for validating caller-supplied values.
pub const INPUT_TOL: f64 = 1e-9;

/// Largest supported number of system qubits.
pub const MAX_SYSTEM_QUBITS: usize = 12;

/// Largest register (system plus ancillas) any state may occupy.
pub const MAX_REGISTER_QUBITS: usize = 2 * MAX_SYSTEM_QUBITS;
