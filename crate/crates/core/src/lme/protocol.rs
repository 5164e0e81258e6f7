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

//! Simulation of the ancilla protocol: each system qubit gets an ancilla in
//! `|+⟩` and a gate `C_l = Σ_j U_l^j ⊗ |j⟩⟨j|` controlled by it.

use crate::error::{Error, Result};
use crate::lme::LmeCertificate;
use crate::qcore::{PureState, MAX_REGISTER_QUBITS};

/// Largest system size the protocol simulation accepts.
pub const MAX_PROTOCOL_QUBITS: usize = 10;

/// `C_1 ⊗ … ⊗ C_n (|s⟩ ⊗ |+⟩^{⊗n})` on `2n` qubits laid out as
/// `[system 1..n, ancilla 1..n]`.
pub fn protocol_state(s: &PureState, cert: &LmeCertificate) -> Result<PureState> {
    let n = s.n_qubits();
    if n > MAX_PROTOCOL_QUBITS || 2 * n > MAX_REGISTER_QUBITS {
        return Err(Error::TooLarge { qubits: n, limit: MAX_PROTOCOL_QUBITS });
    }
    if cert.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: cert.n() });
    }
    let mut joint = s.tensor(&PureState::plus(n)?)?;
    for (l, u) in cert.unitaries().iter().enumerate() {
        joint = joint.apply_controlled(n + l + 1, l + 1, u)?;
    }
    Ok(joint)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtocolCheck {
    pub maximally_entangled: bool,
    /// `‖ρ_sys − I/2^n‖_F`.
    pub flatness: f64,
}

/// Run the protocol and test whether the system's reduced state is
/// maximally mixed within `tol`.
pub fn is_max_entangleable_via(s: &PureState, cert: &LmeCertificate, tol: f64) -> Result<ProtocolCheck> {
    if !(tol > 0.0) {
        return Err(Error::OutOfRange(format!("tolerance {tol} must be positive")));
    }
    let joint = protocol_state(s, cert)?;
    let system: Vec<usize> = (1..=s.n_qubits()).collect();
    let flatness = joint.partial_trace(&system)?.distance_to_maximally_mixed();
    Ok(ProtocolCheck { maximally_entangled: flatness < tol, flatness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lme::{construct_certificate_3q, eq13_states, forced_unitary};
    use crate::qcore::{Mat2, C64};
    use crate::wtype::{canonical_state, w_state, WTypeParams};
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn identity_certificate_leaves_product() {
        let s = w_state(3).unwrap();
        let out = protocol_state(&s, &LmeCertificate::identity(3)).unwrap();
        let want = s.tensor(&PureState::plus(3).unwrap()).unwrap();
        assert!(out.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn protocol_expands_into_generated_basis() {
        let (c1, a1, a2) = (0.25, FRAC_PI_2, 0.0);
        let s = canonical_state(&WTypeParams::new(0.0, vec![c1, 0.5 - c1, 0.5]).unwrap());
        let cert = construct_certificate_3q(c1, 0.5 - c1, a1, a2).unwrap();
        let out = protocol_state(&s, &cert).unwrap();
        // 2^{-3/2} Σ_b Ψ_b ⊗ |b⟩
        let psi = eq13_states(c1, a1, a2).unwrap();
        let scale = 2f64.powf(-1.5);
        for sys in 0..8 {
            for (b, state) in psi.iter().enumerate() {
                let want = state.amp(sys) * scale;
                assert!((out.amp(sys * 8 + b) - want).norm() < 1e-15);
            }
        }
        assert!((out.norm() - 1.0).abs() < 1e-15);
        let check = is_max_entangleable_via(&s, &cert, 1e-9).unwrap();
        assert!(check.maximally_entangled && check.flatness < 1e-12);
    }

    #[test]
    fn single_qubit_cnot_gives_bell_pair() {
        let s = PureState::basis(1, 0).unwrap();
        let cert = LmeCertificate::new(vec![Mat2::X]).unwrap();
        let out = protocol_state(&s, &cert).unwrap();
        let h = C64::new(0.5f64.sqrt(), 0.0);
        assert!((out.amp(0b00) - h).norm() < 1e-15 && (out.amp(0b11) - h).norm() < 1e-15);
        assert!(is_max_entangleable_via(&s, &cert, 1e-12).unwrap().maximally_entangled);
    }

    #[test]
    fn product_state_with_identity_is_not_entangled() {
        let s = PureState::basis(3, 0).unwrap();
        let check = is_max_entangleable_via(&s, &LmeCertificate::identity(3), 1e-9).unwrap();
        assert!(!check.maximally_entangled);
        // ‖|0⟩⟨0| − I/8‖_F = √(7/8)
        assert!((check.flatness - (7.0f64 / 8.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn w4_fails_on_forced_form_grid() {
        // Common shifts of all angles only rephase |W_4⟩, so α_1 = 0 is fixed.
        let s = w_state(4).unwrap();
        let grid: Vec<f64> = (0..20).map(|i| 2.0 * PI * i as f64 / 20.0).collect();
        let mut worst_case = f64::INFINITY;
        for &a2 in &grid {
            for &a3 in &grid {
                for &a4 in &grid {
                    let cert = LmeCertificate::new(
                        [0.0, a2, a3, a4].iter().map(|&a| forced_unitary(a)).collect(),
                    )
                    .unwrap();
                    let check = is_max_entangleable_via(&s, &cert, 1e-9).unwrap();
                    assert!(!check.maximally_entangled);
                    worst_case = worst_case.min(check.flatness);
                }
            }
        }
        assert!(worst_case > 1e-2, "smallest flatness {worst_case}");
    }

    #[test]
    fn too_large_is_rejected() {
        let s = PureState::basis(11, 0).unwrap();
        assert!(matches!(
            protocol_state(&s, &LmeCertificate::identity(11)),
            Err(Error::TooLarge { .. })
        ));
    }
}
