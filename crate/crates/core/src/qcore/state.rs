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

//! Normalized pure states of n qubits.
//!
//! Basis index convention: qubit 1 is the most significant bit, so the
//! amplitude of `|q_1 q_2 … q_n⟩` lives at index `q_1 q_2 … q_n` read as a
//! binary number.

use crate::error::{Error, Result};
use crate::qcore::{CMatrix, DensityMatrix, Mat2, C64, CONSTRUCTION_TOL, INPUT_TOL, MAX_REGISTER_QUBITS};

/// A normalized vector of `2^n` complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n: usize,
    amps: Vec<C64>,
}

/// Build a state from raw amplitudes.
///
/// With `normalize` set the amplitudes are rescaled by `1 / norm`; otherwise
/// the norm must already be within `1e-9` of one.
pub fn make_state(n: usize, amps: Vec<C64>, normalize: bool) -> Result<PureState> {
    if n == 0 || n > MAX_REGISTER_QUBITS {
        return Err(Error::TooLarge { qubits: n, limit: MAX_REGISTER_QUBITS });
    }
    let expected = 1usize << n;
    if amps.len() != expected {
        return Err(Error::DimensionMismatch { expected, found: amps.len() });
    }
    if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let norm = norm_of(&amps);
    if normalize {
        if norm <= CONSTRUCTION_TOL {
            return Err(Error::ZeroVector);
        }
        let s = 1.0 / norm;
        Ok(PureState { n, amps: amps.into_iter().map(|z| z * s).collect() })
    } else if (norm - 1.0).abs() > INPUT_TOL {
        Err(Error::NotNormalized { norm })
    } else {
        Ok(PureState { n, amps })
    }
}

fn norm_of(amps: &[C64]) -> f64 {
    amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `Σ conj(a_i) b_i`.
pub fn inner(a: &PureState, b: &PureState) -> Result<C64> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch { expected: a.n, found: b.n });
    }
    Ok(inner_amps(&a.amps, &b.amps))
}

#[inline]
pub(crate) fn inner_amps(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Apply `m` to `qubit` (1-based) of an `n`-qubit amplitude vector.
pub(crate) fn apply_gate_in_place(amps: &mut [C64], n: usize, qubit: usize, m: &Mat2) {
    let stride = 1usize << (n - qubit);
    let [[m00, m01], [m10, m11]] = m.0;
    for block in amps.chunks_mut(2 * stride) {
        let (lo, hi) = block.split_at_mut(stride);
        for (a0, a1) in lo.iter_mut().zip(hi.iter_mut()) {
            let (x, y) = (*a0, *a1);
            *a0 = m00 * x + m01 * y;
            *a1 = m10 * x + m11 * y;
        }
    }
}

/// Apply `m` to `target` on the subspace where `control` is `|1⟩`.
pub(crate) fn apply_controlled_in_place(
    amps: &mut [C64],
    n: usize,
    control: usize,
    target: usize,
    m: &Mat2,
) {
    let cmask = 1usize << (n - control);
    let tmask = 1usize << (n - target);
    let [[m00, m01], [m10, m11]] = m.0;
    for i in 0..amps.len() {
        if i & cmask != 0 && i & tmask == 0 {
            let j = i | tmask;
            let (x, y) = (amps[i], amps[j]);
            amps[i] = m00 * x + m01 * y;
            amps[j] = m10 * x + m11 * y;
        }
    }
}

impl PureState {
    /// Computational basis state `|index⟩`.
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        if n == 0 || n > MAX_REGISTER_QUBITS {
            return Err(Error::TooLarge { qubits: n, limit: MAX_REGISTER_QUBITS });
        }
        if index >= 1 << n {
            return Err(Error::OutOfRange(format!("basis index {index} for {n} qubits")));
        }
        let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
        amps[index] = C64::new(1.0, 0.0);
        Ok(PureState { n, amps })
    }

    /// Product state `|+⟩^{⊗n}`.
    pub fn plus(n: usize) -> Result<Self> {
        let dim = 1usize << n;
        make_state(n, vec![C64::new(1.0, 0.0); dim], true)
    }

    pub(crate) fn from_amps_unchecked(n: usize, amps: Vec<C64>) -> Self {
        debug_assert_eq!(amps.len(), 1 << n);
        PureState { n, amps }
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    #[inline]
    pub fn amps(&self) -> &[C64] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> C64 {
        self.amps[index]
    }

    pub fn norm(&self) -> f64 {
        norm_of(&self.amps)
    }

    /// `self ⊗ other`, with `self` on the leading qubits.
    pub fn tensor(&self, other: &PureState) -> Result<PureState> {
        let n = self.n + other.n;
        if n > MAX_REGISTER_QUBITS {
            return Err(Error::TooLarge { qubits: n, limit: MAX_REGISTER_QUBITS });
        }
        let mut amps = Vec::with_capacity(1 << n);
        for a in &self.amps {
            amps.extend(other.amps.iter().map(|b| a * b));
        }
        Ok(PureState { n, amps })
    }

    /// `(O_1 ⊗ … ⊗ O_n) |self⟩`, where `None` entries are the identity.
    ///
    /// Without `renormalize` every operator must be unitary within `1e-9`.
    /// With it, arbitrary (invertible) operators are allowed and the result
    /// is rescaled to unit norm.
    pub fn apply_local(&self, ops: &[Option<Mat2>], renormalize: bool) -> Result<PureState> {
        if ops.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: ops.len() });
        }
        for (idx, op) in ops.iter().enumerate() {
            if let Some(m) = op {
                if !m.is_finite() {
                    return Err(Error::NonFinite);
                }
                if !renormalize && m.unitarity_defect() >= INPUT_TOL {
                    return Err(Error::NonUnitaryWithoutRenormalize { qubit: idx + 1 });
                }
            }
        }
        let mut amps = self.amps.clone();
        for (idx, op) in ops.iter().enumerate() {
            if let Some(m) = op {
                apply_gate_in_place(&mut amps, self.n, idx + 1, m);
            }
        }
        if renormalize {
            let norm = norm_of(&amps);
            if norm <= CONSTRUCTION_TOL {
                return Err(Error::ZeroResult);
            }
            let s = 1.0 / norm;
            amps.iter_mut().for_each(|z| *z *= s);
        }
        Ok(PureState { n: self.n, amps })
    }

    /// Apply a single-qubit unitary controlled on another qubit.
    pub fn apply_controlled(&self, control: usize, target: usize, m: &Mat2) -> Result<PureState> {
        for q in [control, target] {
            if q == 0 || q > self.n {
                return Err(Error::IndexOutOfRange { index: q, n: self.n });
            }
        }
        if control == target {
            return Err(Error::OutOfRange("control and target coincide".into()));
        }
        if !m.is_unitary(INPUT_TOL) {
            return Err(Error::NonUnitaryWithoutRenormalize { qubit: target });
        }
        let mut amps = self.amps.clone();
        apply_controlled_in_place(&mut amps, self.n, control, target, m);
        Ok(PureState { n: self.n, amps })
    }

    /// Reduced density matrix on the qubits in `keep` (1-based).
    ///
    /// Kept qubits are ordered ascending in the result, with the lowest
    /// index as the most significant bit.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        if keep.is_empty() {
            return Err(Error::EmptyKeepSet);
        }
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&q| q == 0 || q > self.n) {
            return Err(Error::IndexOutOfRange { index: bad, n: self.n });
        }
        let n = self.n;
        let k = keep.len();
        let env_bits = n - k;
        let kdim = 1usize << k;
        let edim = 1usize << env_bits;

        // Reshape into a kdim × edim matrix M, then ρ = M M†.
        let mut reshaped = vec![C64::new(0.0, 0.0); kdim * edim];
        let kept_mask: Vec<usize> = keep.iter().map(|&q| 1usize << (n - q)).collect();
        let env_mask: Vec<usize> = (1..=n)
            .filter(|q| !keep.contains(q))
            .map(|q| 1usize << (n - q))
            .collect();
        for (idx, amp) in self.amps.iter().enumerate() {
            let kidx = gather_bits(idx, &kept_mask);
            let eidx = gather_bits(idx, &env_mask);
            reshaped[kidx * edim + eidx] = *amp;
        }
        let mut rho = CMatrix::zeros(kdim);
        for r in 0..kdim {
            let row_r = &reshaped[r * edim..(r + 1) * edim];
            for c in r..kdim {
                let row_c = &reshaped[c * edim..(c + 1) * edim];
                let v: C64 = row_r.iter().zip(row_c).map(|(a, b)| a * b.conj()).sum();
                rho.set(r, c, v);
                rho.set(c, r, v.conj());
            }
            let d = rho.get(r, r);
            rho.set(r, r, C64::new(d.re, 0.0));
        }
        Ok(DensityMatrix::from_matrix_unchecked(rho))
    }

    /// `1 − |⟨self|other⟩|`; zero iff the states agree up to global phase.
    pub fn phase_insensitive_distance(&self, other: &PureState) -> Result<f64> {
        Ok((1.0 - inner(self, other)?.norm()).max(0.0))
    }

    /// Amplitude-wise equality after aligning the global phase on `other`.
    pub fn equals_up_to_phase(&self, other: &PureState, tol: f64) -> bool {
        if self.n != other.n {
            return false;
        }
        let ov = inner_amps(&other.amps, &self.amps);
        let phase = if ov.norm() > 0.0 { ov / ov.norm() } else { C64::new(1.0, 0.0) };
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b * phase).norm_sqr())
            .sum::<f64>()
            .sqrt()
            < tol
    }

    /// Maximum amplitude-wise difference, phase-sensitive.
    pub fn max_abs_diff(&self, other: &PureState) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Pack the bits of `idx` selected by `masks` (most significant first).
#[inline]
fn gather_bits(idx: usize, masks: &[usize]) -> usize {
    masks.iter().fold(0usize, |acc, &m| (acc << 1) | usize::from(idx & m != 0))
}
