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

//! Certificates and the orthonormal-basis criterion.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qcore::{apply_gate_in_place, inner_amps, CMatrix, Mat2, PureState, C64, INPUT_TOL};

/// One unitary per qubit. The certificate generates the `2^n` states
/// `Ψ_b = (U_1^{b_1} ⊗ … ⊗ U_n^{b_n}) |s⟩`, `b_l ∈ {0, 1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LmeCertificate {
    unitaries: Vec<Mat2>,
}

impl LmeCertificate {
    pub fn new(unitaries: Vec<Mat2>) -> Result<Self> {
        if unitaries.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        for (idx, u) in unitaries.iter().enumerate() {
            if !u.is_finite() {
                return Err(Error::NonFinite);
            }
            let defect = u.unitarity_defect();
            if defect >= INPUT_TOL {
                return Err(Error::NonUnitaryCertificate { qubit: idx + 1, defect });
            }
        }
        Ok(LmeCertificate { unitaries })
    }

    pub fn identity(n: usize) -> Self {
        LmeCertificate { unitaries: vec![Mat2::IDENTITY; n] }
    }

    pub fn n(&self) -> usize {
        self.unitaries.len()
    }

    pub fn unitaries(&self) -> &[Mat2] {
        &self.unitaries
    }

    /// `{V_l U_l V_l†}`, the certificate for `(⊗ V_l) |s⟩` when `self`
    /// certifies `|s⟩`.
    pub fn conjugated(&self, local: &[Mat2]) -> Result<Self> {
        if local.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: local.len() });
        }
        let unitaries = self
            .unitaries
            .iter()
            .zip(local)
            .map(|(u, v)| *v * *u * v.adjoint())
            .collect();
        LmeCertificate::new(unitaries)
    }

    /// Reorder qubits: entry `i` of the result is the unitary of qubit
    /// `order[i]` (1-based) of `self`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let unitaries = order
            .iter()
            .map(|&q| {
                self.unitaries
                    .get(q.wrapping_sub(1))
                    .copied()
                    .ok_or(Error::IndexOutOfRange { index: q, n: self.n() })
            })
            .collect::<Result<Vec<_>>>()?;
        LmeCertificate::new(unitaries)
    }
}

fn check_dims(s: &PureState, unitaries: &[Mat2]) -> Result<()> {
    if s.n_qubits() != unitaries.len() {
        return Err(Error::DimensionMismatch { expected: s.n_qubits(), found: unitaries.len() });
    }
    Ok(())
}

/// All `Ψ_b` in binary order of `b` (qubit 1 = most significant bit).
///
/// Each `Ψ_b` is built from `Ψ_{b'}` with `b'` = `b` minus its lowest set
/// bit, applying one more gate.
pub(crate) fn generated_states(s: &PureState, unitaries: &[Mat2]) -> Vec<Vec<C64>> {
    let n = s.n_qubits();
    let count = 1usize << n;
    let mut out: Vec<Vec<C64>> = Vec::with_capacity(count);
    out.push(s.amps().to_vec());
    for b in 1..count {
        let low = b & b.wrapping_neg();
        let qubit = n - low.trailing_zeros() as usize;
        let mut amps = out[b ^ low].clone();
        apply_gate_in_place(&mut amps, n, qubit, &unitaries[qubit - 1]);
        out.push(amps);
    }
    out
}

/// The generated state `Ψ_b` for a single exponent string `b`.
pub fn generated_state(s: &PureState, cert: &LmeCertificate, b: usize) -> Result<PureState> {
    check_dims(s, cert.unitaries())?;
    let n = s.n_qubits();
    if b >= 1 << n {
        return Err(Error::OutOfRange(format!("exponent string {b} for {n} qubits")));
    }
    let ops: Vec<Option<Mat2>> = (1..=n)
        .map(|l| (b >> (n - l) & 1 == 1).then(|| cert.unitaries()[l - 1]))
        .collect();
    s.apply_local(&ops, false)
}

/// Gram matrix `G_{ab} = ⟨Ψ_a | Ψ_b⟩` of the certificate-generated states.
///
/// Rows are filled in parallel; every entry is computed by the same
/// sequential inner product, so the result does not depend on scheduling.
pub fn gram_matrix(s: &PureState, cert: &LmeCertificate) -> Result<CMatrix> {
    check_dims(s, cert.unitaries())?;
    let states = generated_states(s, cert.unitaries());
    let rows: Vec<Vec<C64>> = states
        .par_iter()
        .map(|a| states.iter().map(|b| inner_amps(a, b)).collect())
        .collect();
    CMatrix::from_rows(rows)
}

/// `‖G − I‖_F²` without materializing `G`.
pub(crate) fn gram_defect_sqr(s: &PureState, unitaries: &[Mat2]) -> f64 {
    let states = generated_states(s, unitaries);
    let mut off = 0.0;
    let mut diag = 0.0;
    for (a, psi_a) in states.iter().enumerate() {
        diag += (inner_amps(psi_a, psi_a) - 1.0).norm_sqr();
        for psi_b in &states[a + 1..] {
            off += inner_amps(psi_a, psi_b).norm_sqr();
        }
    }
    diag + 2.0 * off
}

/// Result of checking a certificate against the orthonormal-basis criterion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertificateCheck {
    pub valid: bool,
    /// `‖G − I‖_F`.
    pub residual: f64,
}

/// The certificate is valid when its generated states form an orthonormal
/// basis, i.e. `‖G − I‖_F < tol`.
pub fn verify_certificate(s: &PureState, cert: &LmeCertificate, tol: f64) -> Result<CertificateCheck> {
    if !(tol > 0.0) {
        return Err(Error::OutOfRange(format!("tolerance {tol} must be positive")));
    }
    check_dims(s, cert.unitaries())?;
    let residual = gram_defect_sqr(s, cert.unitaries()).sqrt();
    Ok(CertificateCheck { valid: residual < tol, residual })
}
