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

//! The explicit three-qubit certificate and the closed forms used by the
//! impossibility argument for four or more qubits.

use crate::error::{Error, Result};
use crate::lme::LmeCertificate;
use crate::qcore::{Mat2, PureState, C64, CONSTRUCTION_TOL, INPUT_TOL};
use crate::wtype::WTypeParams;

/// `[[0, e^{iα}], [e^{-iα}, 0]] = rz(α) · X · rz(−α)`.
pub fn forced_unitary(alpha: f64) -> Mat2 {
    let zero = C64::new(0.0, 0.0);
    Mat2::new(zero, C64::from_polar(1.0, alpha), C64::from_polar(1.0, -alpha), zero)
}

fn check_weights(c1: f64, c2: f64) -> Result<()> {
    if !c1.is_finite() || !c2.is_finite() {
        return Err(Error::NonFinite);
    }
    if c1 <= 0.0 || c2 <= 0.0 {
        return Err(Error::InvalidWeights(format!("c1 = {c1} and c2 = {c2} must be positive")));
    }
    if (c1 + c2 - 0.5).abs() >= INPUT_TOL {
        return Err(Error::InvalidWeights(format!("c1 + c2 = {} must equal 1/2", c1 + c2)));
    }
    Ok(())
}

/// Certificate `[U(α1), U(α2), Z]` for
/// `√c1 |100⟩ + √c2 |010⟩ + √½ |001⟩`, valid when `cos(α1 − α2) = 0`.
pub fn construct_certificate_3q(c1: f64, c2: f64, alpha1: f64, alpha2: f64) -> Result<LmeCertificate> {
    check_weights(c1, c2)?;
    if !alpha1.is_finite() || !alpha2.is_finite() {
        return Err(Error::NonFinite);
    }
    let cos = (alpha1 - alpha2).cos().abs();
    if cos >= INPUT_TOL {
        return Err(Error::AngleConstraintViolated { cos });
    }
    LmeCertificate::new(vec![forced_unitary(alpha1), forced_unitary(alpha2), Mat2::Z])
}

/// The eight states `U_1^{b_1} U_2^{b_2} U_3^{b_3} |φ⟩` written out in
/// closed form, indexed by `b = b_1 b_2 b_3` in binary order, with
/// `c2 = 1/2 − c1`.
///
/// The expressions hold for any angles; they are orthonormal exactly when
/// `cos(α1 − α2) = 0`.
pub fn eq13_states(c1: f64, alpha1: f64, alpha2: f64) -> Result<Vec<PureState>> {
    let c2 = 0.5 - c1;
    check_weights(c1, c2)?;
    let s1 = c1.sqrt();
    let s2 = c2.sqrt();
    let h = 0.5f64.sqrt();
    let e = |theta: f64| C64::from_polar(1.0, theta);
    let real = |v: f64| C64::new(v, 0.0);

    let mut out = Vec::with_capacity(8);
    for b in 0..8usize {
        let (u1, u2, u3) = (b & 0b100 != 0, b & 0b010 != 0, b & 0b001 != 0);
        let z = if u3 { -1.0 } else { 1.0 };
        let mut amps = vec![C64::new(0.0, 0.0); 8];
        match (u1, u2) {
            (false, false) => {
                amps[0b100] = real(s1);
                amps[0b010] = real(s2);
                amps[0b001] = real(z * h);
            }
            (false, true) => {
                amps[0b110] = s1 * e(-alpha2);
                amps[0b000] = s2 * e(alpha2);
                amps[0b011] = z * h * e(-alpha2);
            }
            (true, false) => {
                amps[0b000] = s1 * e(alpha1);
                amps[0b110] = s2 * e(-alpha1);
                amps[0b101] = z * h * e(-alpha1);
            }
            (true, true) => {
                amps[0b010] = s1 * e(alpha1 - alpha2);
                amps[0b100] = s2 * e(-(alpha1 - alpha2));
                amps[0b111] = z * h * e(-(alpha1 + alpha2));
            }
        }
        out.push(PureState::from_amps_unchecked(3, amps));
    }
    Ok(out)
}

/// `⟨φ|U_j ⊗ U_k|φ⟩ = 2 √(c_j c_k) cos(α_j − α_k)` for an `x = 0`
/// canonical state and `U = forced_unitary(α)`.
pub fn overlap_closed_form(p: &WTypeParams, j: usize, k: usize, alpha_j: f64, alpha_k: f64) -> Result<f64> {
    p.check_qubit(j)?;
    p.check_qubit(k)?;
    if j == k {
        return Err(Error::OutOfRange(format!("qubits j = k = {j} must differ")));
    }
    if p.x() >= CONSTRUCTION_TOL {
        return Err(Error::NonzeroX { x: p.x() });
    }
    Ok(2.0 * (p.c()[j - 1] * p.c()[k - 1]).sqrt() * (alpha_j - alpha_k).cos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lme::{generated_state, verify_certificate};
    use crate::qcore::{inner, rz};
    use crate::wtype::canonical_state;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn forced_unitary_examples() {
        assert!(forced_unitary(0.0).distance(&Mat2::X) < 1e-15);
        // [[0, i], [−i, 0]] is −Y
        assert!(forced_unitary(FRAC_PI_2).distance(&-Mat2::Y) < 1e-15);
        for alpha in [0.1, 1.3, -2.2, 5.9] {
            let u = forced_unitary(alpha);
            assert!((u * u).distance(&Mat2::IDENTITY) < 1e-15);
            assert!(u.is_unitary(1e-15) && u.is_hermitian(1e-15));
            assert!(u.distance(&(rz(alpha) * Mat2::X * rz(-alpha))) < 1e-15);
        }
    }

    #[test]
    fn construct_examples() {
        let cert = construct_certificate_3q(0.25, 0.25, FRAC_PI_2, 0.0).unwrap();
        let u = cert.unitaries();
        let want_u1 = Mat2::new(c(0.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.0, 0.0));
        assert!(u[0].distance(&want_u1) < 1e-15);
        assert!(u[1].distance(&Mat2::X) < 1e-15);
        assert_eq!(u[2], Mat2::Z);
        for m in u {
            assert!(m.is_unitary(1e-12) && m.is_hermitian(1e-12));
        }

        let cert = construct_certificate_3q(0.3, 0.2, 3.0 * FRAC_PI_2, PI).unwrap();
        let s = canonical_state(&WTypeParams::new(0.0, vec![0.3, 0.2, 0.5]).unwrap());
        assert!(verify_certificate(&s, &cert, 1e-9).unwrap().residual < 1e-12);

        assert!(matches!(
            construct_certificate_3q(0.25, 0.25, 0.0, 0.0),
            Err(Error::AngleConstraintViolated { .. })
        ));
    }

    #[test]
    fn construct_rejects_bad_weights() {
        for (c1, c2) in [(0.0, 0.5), (0.3, 0.3), (-0.1, 0.6)] {
            assert!(matches!(
                construct_certificate_3q(c1, c2, FRAC_PI_2, 0.0),
                Err(Error::InvalidWeights(_))
            ));
        }
        assert!(eq13_states(0.5, 0.0, 0.0).is_err());
        assert!(eq13_states(0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn generated_basis_examples() {
        let (c1, a1, a2) = (0.2, 1.0 + FRAC_PI_2, 1.0);
        let states = eq13_states(c1, a1, a2).unwrap();
        let phi = canonical_state(&WTypeParams::new(0.0, vec![c1, 0.5 - c1, 0.5]).unwrap());
        assert!(states[0].max_abs_diff(&phi) < 1e-15);

        let s = &states[0b110];
        let d = a1 - a2;
        assert!((s.amp(0b010) - C64::from_polar(c1.sqrt(), d)).norm() < 1e-15);
        assert!((s.amp(0b100) - C64::from_polar((0.5 - c1).sqrt(), -d)).norm() < 1e-15);
        assert!((s.amp(0b111) - C64::from_polar(0.5f64.sqrt(), -(a1 + a2))).norm() < 1e-15);

        for a in 0..8 {
            for b in 0..8 {
                let g = inner(&states[a], &states[b]).unwrap();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((g - want).norm() < 1e-12, "entry ({a}, {b}) = {g}");
            }
        }
    }

    #[test]
    fn generated_basis_matches_operator_application() {
        let cert = construct_certificate_3q(0.2, 0.3, 1.0 + FRAC_PI_2, 1.0).unwrap();
        let phi = canonical_state(&WTypeParams::new(0.0, vec![0.2, 0.3, 0.5]).unwrap());
        let closed = eq13_states(0.2, 1.0 + FRAC_PI_2, 1.0).unwrap();
        for (b, want) in closed.iter().enumerate() {
            let got = generated_state(&phi, &cert, b).unwrap();
            assert!(got.max_abs_diff(want) < 1e-12);
        }
    }

    #[test]
    fn overlap_examples() {
        let p = WTypeParams::new(0.0, vec![0.25, 0.25, 0.5]).unwrap();
        assert!(overlap_closed_form(&p, 1, 2, FRAC_PI_2, 0.0).unwrap().abs() < 1e-15);
        assert!((overlap_closed_form(&p, 1, 2, 0.4, 0.4).unwrap() - 0.5).abs() < 1e-15);

        let third = 1.0 / 3.0;
        let w = WTypeParams::new(0.0, vec![third; 3]).unwrap();
        let closed = overlap_closed_form(&w, 1, 2, FRAC_PI_3, 0.0).unwrap();
        assert!((closed - third).abs() < 1e-15);
        let s = canonical_state(&w);
        let moved = s
            .apply_local(&[Some(forced_unitary(FRAC_PI_3)), Some(forced_unitary(0.0)), None], false)
            .unwrap();
        assert!((inner(&s, &moved).unwrap() - closed).norm() < 1e-12);
    }

    #[test]
    fn overlap_errors() {
        let p = WTypeParams::new(0.0, vec![0.25, 0.25, 0.5]).unwrap();
        assert!(overlap_closed_form(&p, 1, 1, 0.0, 0.0).is_err());
        assert!(matches!(overlap_closed_form(&p, 1, 4, 0.0, 0.0), Err(Error::IndexOutOfRange { .. })));
        let q = WTypeParams::new(0.1, vec![0.3; 3]).unwrap();
        assert!(matches!(overlap_closed_form(&q, 1, 2, 0.0, 0.0), Err(Error::NonzeroX { .. })));
    }

    #[test]
    fn trilemma_arithmetic() {
        // cos(a_j − a_k) = 0 and cos(a_k − a_l) = 0 force |cos(a_j − a_l)| = 1.
        for base in [0.0, 0.37, -1.9, 4.4] {
            for sj in [-1.0, 1.0] {
                for sl in [-1.0, 1.0] {
                    for kj in [-1.0, 0.0, 2.0] {
                        let ak = base;
                        let aj = ak + sj * FRAC_PI_2 + kj * PI;
                        let al = ak + sl * FRAC_PI_2;
                        assert!((aj - ak).cos().abs() < 1e-12);
                        assert!((ak - al).cos().abs() < 1e-12);
                        assert!(((aj - al).cos().abs() - 1.0).abs() < 1e-12);
                    }
                }
            }
        }
    }
}
