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

//! Euler-angle parametrization of U(2).

use crate::error::{Error, Result};
use crate::lme::LmeCertificate;
use crate::qcore::{ry, rz, Mat2, C64};

/// Angles `(δ, a, b, c)` for `e^{iδ} · rz(a) · ry(b) · rz(c)`.
pub type Angles = [f64; 4];

/// Angles reproducing Pauli X: `e^{iπ/2} rz(π) ry(π) rz(0) = X`.
pub const X_ANGLES: Angles = [std::f64::consts::FRAC_PI_2, std::f64::consts::PI, std::f64::consts::PI, 0.0];

pub fn unitary_from_params(angles: &Angles) -> Mat2 {
    let [delta, a, b, c] = *angles;
    (rz(a) * ry(b) * rz(c)).scale(C64::from_polar(1.0, delta))
}

/// Inverse of [`unitary_from_params`] for a unitary `u`.
pub fn params_from_unitary(u: &Mat2) -> Result<Angles> {
    if !u.is_unitary(1e-9) {
        return Err(Error::NonUnitaryCertificate { qubit: 0, defect: u.unitarity_defect() });
    }
    let delta = u.det().arg() / 2.0;
    let v = u.scale(C64::from_polar(1.0, -delta));
    // v = [[cos(b/2) e^{i(a+c)/2}, ·], [sin(b/2) e^{-i(a-c)/2}, ·]]
    let v00 = v.get(0, 0);
    let v10 = v.get(1, 0);
    let b = 2.0 * v10.norm().atan2(v00.norm());
    let sum = if v00.norm() > 1e-14 { 2.0 * v00.arg() } else { 0.0 };
    let diff = if v10.norm() > 1e-14 { -2.0 * v10.arg() } else { 0.0 };
    Ok([delta, 0.5 * (sum + diff), b, 0.5 * (sum - diff)])
}

/// One angle quadruple per qubit.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryParams {
    angles: Vec<Angles>,
}

impl UnitaryParams {
    pub fn new(angles: Vec<Angles>) -> Self {
        UnitaryParams { angles }
    }

    pub fn identity(n: usize) -> Self {
        UnitaryParams { angles: vec![[0.0; 4]; n] }
    }

    /// Groups a flat vector of `4n` values.
    pub fn from_flat(flat: &[f64]) -> Self {
        assert_eq!(flat.len() % 4, 0, "flat parameter vector length must be a multiple of 4");
        UnitaryParams {
            angles: flat.chunks(4).map(|c| [c[0], c[1], c[2], c[3]]).collect(),
        }
    }

    pub fn from_certificate(cert: &LmeCertificate) -> Result<Self> {
        Ok(UnitaryParams {
            angles: cert.unitaries().iter().map(params_from_unitary).collect::<Result<_>>()?,
        })
    }

    pub fn n(&self) -> usize {
        self.angles.len()
    }

    pub fn angles(&self) -> &[Angles] {
        &self.angles
    }

    pub fn flat(&self) -> Vec<f64> {
        self.angles.iter().flatten().copied().collect()
    }

    pub fn unitaries(&self) -> Vec<Mat2> {
        self.angles.iter().map(unitary_from_params).collect()
    }

    pub fn to_certificate(&self) -> Result<LmeCertificate> {
        LmeCertificate::new(self.unitaries())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lme::forced_unitary;

    #[test]
    fn zero_angles_are_identity() {
        assert!(unitary_from_params(&[0.0; 4]).distance(&Mat2::IDENTITY) < 1e-15);
    }

    #[test]
    fn pinned_x_angles() {
        assert!(unitary_from_params(&X_ANGLES).distance(&Mat2::X) < 1e-12);
    }

    #[test]
    fn round_trip_through_angles() {
        let samples = [
            Mat2::X,
            Mat2::Y,
            Mat2::Z,
            Mat2::IDENTITY,
            forced_unitary(0.7),
            unitary_from_params(&[0.3, -1.2, 2.4, 0.9]),
            unitary_from_params(&[5.0, 4.0, 6.0, -3.0]),
        ];
        for u in samples {
            let angles = params_from_unitary(&u).unwrap();
            assert!(unitary_from_params(&angles).distance(&u) < 1e-12, "{u:?}");
        }
    }
}
