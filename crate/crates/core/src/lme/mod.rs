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

//! Locally maximally entangleable states: certificates, the explicit
//! three-qubit construction, the obstruction for four or more qubits, and
//! the ancilla protocol used as an independent check.

mod certificate;
mod construct;
mod obstruction;
mod protocol;

pub use certificate::{gram_matrix, generated_state, verify_certificate, CertificateCheck, LmeCertificate};
pub use construct::{construct_certificate_3q, eq13_states, forced_unitary, overlap_closed_form};
pub use obstruction::{
    degeneracy_census, prop1_obstruction, prop1_obstruction_with_tol, ObstructionCase, ObstructionTrace,
    OverlapBasis, PairOverlap, QubitSpectrum, Trilemma, Verdict,
};
pub use protocol::{is_max_entangleable_via, protocol_state, ProtocolCheck, MAX_PROTOCOL_QUBITS};

pub(crate) use certificate::gram_defect_sqr;
