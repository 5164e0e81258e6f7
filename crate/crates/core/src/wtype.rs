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

//! W states, canonical W-type states and the diagonal SLOCC map between them.

use crate::error::{Error, Result};
use crate::qcore::{inner, Mat2, PureState, C64, CONSTRUCTION_TOL, INPUT_TOL, MAX_SYSTEM_QUBITS};

/// Parameters of the canonical W-type form
/// `√x |0…0⟩ + Σ_l √c_l |0…1_l…0⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct WTypeParams {
    x: f64,
    c: Vec<f64>,
}

impl WTypeParams {
    /// Validates `n = c.len() ≥ 3`, `x ≥ 0`, every `c_l > 0`, and
    /// `x + Σ c_l = 1` within `1e-12`.
    pub fn new(x: f64, c: Vec<f64>) -> Result<Self> {
        let n = c.len();
        if !(3..=MAX_SYSTEM_QUBITS).contains(&n) {
            return Err(Error::InvalidParams(format!(
                "n = {n} outside 3..={MAX_SYSTEM_QUBITS}"
            )));
        }
        if !x.is_finite() || c.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        if x < 0.0 {
            return Err(Error::InvalidParams(format!("x = {x} is negative")));
        }
        if let Some((l, v)) = c.iter().enumerate().find(|(_, &v)| v <= 0.0) {
            return Err(Error::InvalidParams(format!("c_{} = {v} is not positive", l + 1)));
        }
        let total = x + c.iter().sum::<f64>();
        if (total - 1.0).abs() > CONSTRUCTION_TOL {
            return Err(Error::InvalidParams(format!("x + Σc = {total}, expected 1")));
        }
        Ok(WTypeParams { x, c })
    }

    /// Like [`WTypeParams::new`] with an explicit qubit count, which must
    /// match `c.len()`.
    pub fn with_n(n: usize, x: f64, c: Vec<f64>) -> Result<Self> {
        if n != c.len() {
            return Err(Error::InvalidParams(format!("n = {n} but {} weights given", c.len())));
        }
        Self::new(x, c)
    }

    /// Normalizes nonnegative `x` and positive weights so they sum to one.
    pub fn normalized(x: f64, c: Vec<f64>) -> Result<Self> {
        let total = x + c.iter().sum::<f64>();
        if !(total > 0.0) {
            return Err(Error::InvalidParams("weights sum to zero".into()));
        }
        Self::new(x / total, c.into_iter().map(|v| v / total).collect())
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn c(&self) -> &[f64] {
        &self.c
    }

    /// Weight of qubit `l` (1-based).
    pub fn c_of(&self, l: usize) -> Result<f64> {
        self.check_qubit(l)?;
        Ok(self.c[l - 1])
    }

    pub(crate) fn check_qubit(&self, l: usize) -> Result<()> {
        if l == 0 || l > self.n() {
            Err(Error::IndexOutOfRange { index: l, n: self.n() })
        } else {
            Ok(())
        }
    }
}

/// Index of the weight-one basis string with the 1 on qubit `l` (1-based).
#[inline]
pub fn weight_one_index(n: usize, l: usize) -> usize {
    1 << (n - l)
}

/// `|W_n⟩ = (1/√n) Σ_l |0…1_l…0⟩`.
pub fn w_state(n: usize) -> Result<PureState> {
    if !(3..=MAX_SYSTEM_QUBITS).contains(&n) {
        return Err(Error::OutOfRange(format!("W state needs 3 ≤ n ≤ {MAX_SYSTEM_QUBITS}, got {n}")));
    }
    let amp = C64::new(1.0 / (n as f64).sqrt(), 0.0);
    let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
    for l in 1..=n {
        amps[weight_one_index(n, l)] = amp;
    }
    Ok(PureState::from_amps_unchecked(n, amps))
}

/// The canonical W-type state for `p`, with real nonnegative amplitudes.
pub fn canonical_state(p: &WTypeParams) -> PureState {
    let n = p.n();
    let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
    amps[0] = C64::new(p.x.sqrt(), 0.0);
    for (l, &cl) in p.c.iter().enumerate() {
        amps[weight_one_index(n, l + 1)] = C64::new(cl.sqrt(), 0.0);
    }
    PureState::from_amps_unchecked(n, amps)
}

/// Diagonal invertible operators `A_l = diag(1, t_l)` taking the `x = 0`
/// canonical state to `|W_n⟩`.
///
/// `t_l = 1 / √(n c_l)` makes every weight-one amplitude `1/√n`, so the
/// image is already normalized.
pub fn slocc_to_w(p: &WTypeParams) -> Result<Vec<Mat2>> {
    if p.x >= CONSTRUCTION_TOL {
        return Err(Error::NonzeroX { x: p.x });
    }
    let n = p.n() as f64;
    Ok(p.c
        .iter()
        .map(|&cl| Mat2::diag(C64::new(1.0, 0.0), C64::new(1.0 / (n * cl).sqrt(), 0.0)))
        .collect())
}

/// Outcome of an SLOCC equivalence check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SloccCheck {
    pub equivalent: bool,
    /// `1 − |⟨target | A s⟩|` after renormalizing `A s`.
    pub residual: f64,
}

/// Does `(A_1 ⊗ … ⊗ A_n) s`, renormalized, equal `target` up to global
/// phase within `1e-9`?
pub fn verify_slocc_equiv(s: &PureState, ops: &[Mat2], target: &PureState) -> Result<SloccCheck> {
    if s.n_qubits() != target.n_qubits() {
        return Err(Error::DimensionMismatch { expected: s.n_qubits(), found: target.n_qubits() });
    }
    if ops.len() != s.n_qubits() {
        return Err(Error::DimensionMismatch { expected: s.n_qubits(), found: ops.len() });
    }
    for (idx, op) in ops.iter().enumerate() {
        if !op.is_invertible(INPUT_TOL) {
            return Err(Error::SingularOperator { qubit: idx + 1, det: op.det().norm() });
        }
    }
    let opts: Vec<Option<Mat2>> = ops.iter().copied().map(Some).collect();
    let image = s.apply_local(&opts, true)?;
    let residual = (1.0 - inner(target, &image)?.norm()).max(0.0);
    Ok(SloccCheck { equivalent: residual < INPUT_TOL, residual })
}
