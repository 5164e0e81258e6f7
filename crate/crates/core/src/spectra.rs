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

//! Single-qubit reduced states of canonical W-type states in closed form,
//! and trace decompositions of arbitrary states.

use crate::error::{Error, Result};
use crate::qcore::{eig_herm2, CMatrix, DensityMatrix, Mat2, PureState};
use crate::wtype::WTypeParams;

/// Default tolerance for deciding `D_l ∝ I`.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// `[[x + Σ_{r≠l} c_r, √(x c_l)], [√(x c_l), c_l]]` for raw weights.
///
/// No normalization or length requirement is imposed on `c`; this is the
/// formula itself, usable for any number of qubits.
pub fn closed_form_matrix(x: f64, c: &[f64], l: usize) -> Result<Mat2> {
    if l == 0 || l > c.len() {
        return Err(Error::IndexOutOfRange { index: l, n: c.len() });
    }
    let cl = c[l - 1];
    let rest: f64 = c.iter().enumerate().filter(|&(r, _)| r != l - 1).map(|(_, v)| v).sum();
    let off = (x * cl).sqrt();
    Ok(Mat2::from_real([[x + rest, off], [off, cl]]))
}

/// `c_l · Σ_{r≠l} c_r` for raw weights.
pub fn closed_form_det(c: &[f64], l: usize) -> Result<f64> {
    if l == 0 || l > c.len() {
        return Err(Error::IndexOutOfRange { index: l, n: c.len() });
    }
    let rest: f64 = c.iter().enumerate().filter(|&(r, _)| r != l - 1).map(|(_, v)| v).sum();
    Ok(c[l - 1] * rest)
}

/// Reduced state `ρ_l` of `canonical_state(p)`.
pub fn reduced_closed_form(p: &WTypeParams, l: usize) -> Result<DensityMatrix> {
    let m = closed_form_matrix(p.x(), p.c(), l)?;
    let rows = (0..2).map(|r| (0..2).map(|c| m.get(r, c)).collect()).collect();
    Ok(DensityMatrix::from_matrix_unchecked(CMatrix::from_rows(rows)?))
}

/// `det ρ_l = c_l Σ_{r≠l} c_r`.
pub fn reduced_det(p: &WTypeParams, l: usize) -> Result<f64> {
    closed_form_det(p.c(), l)
}

/// `λ1 − λ2` of `ρ_l`, i.e. `√((1 − 2c_l)² + 4 x c_l)`.
pub fn eigen_gap(p: &WTypeParams, l: usize) -> Result<f64> {
    let cl = p.c_of(l)?;
    let d = 1.0 - 2.0 * cl;
    Ok((d * d + 4.0 * p.x() * cl).sqrt())
}

/// `D_l ∝ I`, which holds exactly when `x = 0` and `c_l = 1/2`.
pub fn is_degenerate(p: &WTypeParams, l: usize, tol: f64) -> Result<bool> {
    let cl = p.c_of(l)?;
    Ok(p.x().abs() < tol && (cl - 0.5).abs() < tol)
}

/// A state rotated so every single-qubit reduced state is diagonal with
/// descending eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceDecomposition {
    /// `U_l` with `U_l ρ_l U_l† = diag(λ1, λ2)`.
    pub rotations: Vec<Mat2>,
    /// `(U_1 ⊗ … ⊗ U_n) |original⟩`.
    pub state: PureState,
    /// `(λ1, λ2)` per qubit.
    pub spectra: Vec<(f64, f64)>,
}

pub fn trace_decomposition(s: &PureState) -> Result<TraceDecomposition> {
    let n = s.n_qubits();
    let mut rotations = Vec::with_capacity(n);
    let mut spectra = Vec::with_capacity(n);
    for l in 1..=n {
        let rho = s.partial_trace(&[l])?.to_mat2().expect("single-qubit reduced state");
        let eig = eig_herm2(&rho)?;
        rotations.push(eig.u);
        spectra.push((eig.lambda1, eig.lambda2));
    }
    let ops: Vec<Option<Mat2>> = rotations.iter().copied().map(Some).collect();
    let state = s.apply_local(&ops, false)?;
    Ok(TraceDecomposition { rotations, state, spectra })
}

impl TraceDecomposition {
    /// Largest off-diagonal magnitude over the single-qubit reduced states of
    /// the rotated state; zero for an exact decomposition.
    pub fn off_diagonal_defect(&self) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for l in 1..=self.state.n_qubits() {
            worst = worst.max(self.state.partial_trace(&[l])?.matrix().max_off_diagonal());
        }
        Ok(worst)
    }
}
