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

//! Deciding, certifying and numerically probing whether W-type multiqubit
//! states are locally maximally entangleable (LME).
//!
//! * [`qcore`]: pure states, 2×2 operators, partial traces.
//! * [`wtype`]: W states, canonical W-type states, SLOCC maps.
//! * [`spectra`]: closed-form single-qubit reduced states, trace decompositions.
//! * [`lme`]: certificates, the three-qubit construction, the n ≥ 4
//!   obstruction and the ancilla protocol.
//! * [`search`]: seeded multi-start simplex search for certificates.
//! * [`json`]: the JSON wire formats.

pub mod error;
pub mod json;
pub mod lme;
pub mod qcore;
pub mod search;
pub mod spectra;
pub mod wtype;

pub use error::{Error, Result};
