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

//! 2×2 complex matrices: local operators, Pauli matrices, rotations and a
//! closed-form Hermitian eigensolver.

use std::ops::{Mul, Neg};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qcore::{C64, CONSTRUCTION_TOL, INPUT_TOL};

const ZERO: C64 = Complex64::new(0.0, 0.0);
const ONE: C64 = Complex64::new(1.0, 0.0);
const I_UNIT: C64 = Complex64::new(0.0, 1.0);

/// A 2×2 complex matrix stored row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2(pub [[C64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[ONE, ZERO], [ZERO, ONE]]);
    pub const X: Mat2 = Mat2([[ZERO, ONE], [ONE, ZERO]]);
    pub const Y: Mat2 = Mat2([
        [ZERO, Complex64::new(0.0, -1.0)],
        [I_UNIT, ZERO],
    ]);
    pub const Z: Mat2 = Mat2([[ONE, ZERO], [ZERO, Complex64::new(-1.0, 0.0)]]);

    pub const fn new(m00: C64, m01: C64, m10: C64, m11: C64) -> Self {
        Mat2([[m00, m01], [m10, m11]])
    }

    pub fn diag(d0: C64, d1: C64) -> Self {
        Mat2([[d0, ZERO], [ZERO, d1]])
    }

    pub fn from_real(m: [[f64; 2]; 2]) -> Self {
        Mat2([
            [C64::new(m[0][0], 0.0), C64::new(m[0][1], 0.0)],
            [C64::new(m[1][0], 0.0), C64::new(m[1][1], 0.0)],
        ])
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.0[row][col]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Mat2([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    pub fn scale(&self, s: C64) -> Self {
        let m = &self.0;
        Mat2([[m[0][0] * s, m[0][1] * s], [m[1][0] * s, m[1][1] * s]])
    }

    pub fn det(&self) -> C64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1]
    }

    /// Frobenius norm of `self - other`.
    pub fn distance(&self, other: &Mat2) -> f64 {
        let mut acc = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                acc += (self.0[r][c] - other.0[r][c]).norm_sqr();
            }
        }
        acc.sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Frobenius norm of `U U† - I`.
    pub fn unitarity_defect(&self) -> f64 {
        (*self * self.adjoint()).distance(&Mat2::IDENTITY)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.is_finite() && self.unitarity_defect() < tol
    }

    /// Frobenius norm of `M - M†`.
    pub fn hermiticity_defect(&self) -> f64 {
        self.distance(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_finite() && self.hermiticity_defect() < tol
    }

    pub fn is_invertible(&self, tol: f64) -> bool {
        self.is_finite() && self.det().norm() > tol
    }

    /// Apply to a column vector.
    #[inline]
    pub fn apply(&self, v: [C64; 2]) -> [C64; 2] {
        let m = &self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        let a = &self.0;
        let b = &rhs.0;
        let mut out = [[ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Mat2(out)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        self.scale(C64::new(-1.0, 0.0))
    }
}

/// `exp(i α Z / 2) = diag(e^{iα/2}, e^{-iα/2})`.
pub fn rz(alpha: f64) -> Mat2 {
    Mat2::diag(C64::from_polar(1.0, alpha / 2.0), C64::from_polar(1.0, -alpha / 2.0))
}

/// Real rotation `[[cos b/2, -sin b/2], [sin b/2, cos b/2]]`.
pub fn ry(beta: f64) -> Mat2 {
    let (s, c) = (beta / 2.0).sin_cos();
    Mat2::from_real([[c, -s], [s, c]])
}

/// Spectral data of a 2×2 Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigen2 {
    pub lambda1: f64,
    pub lambda2: f64,
    /// Unitary with `u · m · u† = diag(lambda1, lambda2)`. Its rows are the
    /// conjugated eigenvectors.
    pub u: Mat2,
}

/// Closed-form eigendecomposition of a Hermitian 2×2 matrix.
///
/// Eigenvalues are returned in descending order. Each eigenvector has its
/// first non-negligible component made real and positive. When the two
/// eigenvalues agree to within `1e-12` the identity is returned as the
/// diagonalizer.
pub fn eig_herm2(m: &Mat2) -> Result<Eigen2> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let defect = m.hermiticity_defect();
    if defect >= INPUT_TOL {
        return Err(Error::NotHermitian { defect });
    }
    let a = m.0[0][0].re;
    let d = m.0[1][1].re;
    // average the two off-diagonal estimates to absorb tiny asymmetry
    let b = (m.0[0][1] + m.0[1][0].conj()) * 0.5;

    let mean = 0.5 * (a + d);
    let half_diff = 0.5 * (a - d);
    let radius = half_diff.hypot(b.norm());
    let lambda1 = mean + radius;
    let lambda2 = mean - radius;

    if lambda1 - lambda2 < CONSTRUCTION_TOL {
        return Ok(Eigen2 { lambda1, lambda2, u: Mat2::IDENTITY });
    }

    // Two candidate eigenvectors for lambda1; take the better conditioned one.
    let cand_a = [b, C64::new(lambda1 - a, 0.0)];
    let cand_b = [C64::new(lambda1 - d, 0.0), b.conj()];
    let norm_a = (cand_a[0].norm_sqr() + cand_a[1].norm_sqr()).sqrt();
    let norm_b = (cand_b[0].norm_sqr() + cand_b[1].norm_sqr()).sqrt();
    let (v, norm) = if norm_a >= norm_b { (cand_a, norm_a) } else { (cand_b, norm_b) };
    let v1 = fix_phase([v[0] / norm, v[1] / norm]);
    let v2 = fix_phase([-v1[1].conj(), v1[0].conj()]);

    let u = Mat2::new(v1[0].conj(), v1[1].conj(), v2[0].conj(), v2[1].conj());
    Ok(Eigen2 { lambda1, lambda2, u })
}

fn fix_phase(v: [C64; 2]) -> [C64; 2] {
    // components at rounding level count as zero, so near-diagonal input maps to ~I
    let pivot = if v[0].norm() > CONSTRUCTION_TOL { v[0] } else { v[1] };
    let phase = pivot.conj() / pivot.norm();
    [v[0] * phase, v[1] * phase]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn pauli_algebra() {
        for p in [Mat2::X, Mat2::Y, Mat2::Z] {
            assert!((p * p).distance(&Mat2::IDENTITY) < 1e-15);
            assert!(p.is_unitary(1e-15) && p.is_hermitian(1e-15));
        }
        let iz = Mat2::Z.scale(c(0.0, 1.0));
        assert!((Mat2::X * Mat2::Y).distance(&iz) < 1e-15);
    }

    #[test]
    fn rz_examples() {
        assert!(rz(0.0).distance(&Mat2::IDENTITY) < 1e-15);
        assert!((rz(PI) * rz(-PI)).distance(&Mat2::IDENTITY) < 1e-15);
        let alpha = 0.731;
        let got = rz(alpha) * Mat2::X * rz(-alpha);
        let want = Mat2::new(ZERO, C64::from_polar(1.0, alpha), C64::from_polar(1.0, -alpha), ZERO);
        assert!(got.distance(&want) < 1e-15);
    }

    #[test]
    fn predicates() {
        let a = Mat2::diag(c(2.0, 0.0), c(0.5, 0.0));
        assert!(!a.is_unitary(1e-9));
        assert!(a.is_invertible(1e-9));
        assert!(!Mat2::diag(c(1.0, 0.0), ZERO).is_invertible(1e-9));
        assert!(!Mat2::new(ZERO, ONE, ZERO, ZERO).is_hermitian(1e-9));
    }

    fn check_reconstruction(m: &Mat2) -> Eigen2 {
        let e = eig_herm2(m).unwrap();
        assert!(e.lambda1 >= e.lambda2);
        assert!(e.u.is_unitary(1e-12));
        let diag = Mat2::diag(c(e.lambda1, 0.0), c(e.lambda2, 0.0));
        assert!((e.u * *m * e.u.adjoint()).distance(&diag) < 1e-12);
        assert!((e.u.adjoint() * diag * e.u).distance(m) < 1e-12);
        assert!((e.lambda1 + e.lambda2 - m.trace().re).abs() < 1e-12);
        e
    }

    #[test]
    fn eig_degenerate_identity_convention() {
        let e = check_reconstruction(&Mat2::IDENTITY.scale(c(0.5, 0.0)));
        assert_eq!((e.lambda1, e.lambda2), (0.5, 0.5));
        assert_eq!(e.u, Mat2::IDENTITY);
    }

    #[test]
    fn eig_permutation() {
        let e = check_reconstruction(&Mat2::from_real([[0.25, 0.0], [0.0, 0.75]]));
        assert_eq!((e.lambda1, e.lambda2), (0.75, 0.25));
        assert!(e.u.distance(&Mat2::X) < 1e-15);
    }

    #[test]
    fn eig_canonical_reduced_state() {
        // rho_1 of the x = 1/4, c = (1/4, 1/4, 1/4) canonical state
        let m = Mat2::from_real([[0.75, 0.25], [0.25, 0.25]]);
        let e = check_reconstruction(&m);
        // characteristic polynomial l^2 - l + 1/8
        let disc: f64 = 1.0 - 4.0 * 0.125;
        assert!((e.lambda1 - (1.0 + disc.sqrt()) / 2.0).abs() < 1e-15);
        assert!((e.lambda2 - (1.0 - disc.sqrt()) / 2.0).abs() < 1e-15);
        // phase convention: first component of each eigenvector real positive
        for row in 0..2 {
            let first = e.u.get(row, 0).conj();
            assert!(first.re > 0.0 && first.im.abs() < 1e-15);
        }
    }

    #[test]
    fn eig_complex_offdiagonal() {
        let m = Mat2::new(c(0.3, 0.0), c(0.1, -0.2), c(0.1, 0.2), c(0.7, 0.0));
        check_reconstruction(&m);
        let m = Mat2::new(c(0.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.0, 0.0));
        check_reconstruction(&m);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = Mat2::new(ONE, ONE, ZERO, ONE);
        assert!(matches!(eig_herm2(&m), Err(Error::NotHermitian { .. })));
    }
}
