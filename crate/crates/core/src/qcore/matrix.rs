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

//! Dense square complex matrices and density matrices.

use crate::error::{Error, Result};
use crate::qcore::{Mat2, C64, INPUT_TOL};

/// A dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    entries: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix { dim, entries: vec![C64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, C64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C64>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            entries.extend(row);
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(CMatrix { dim, entries })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, col: usize, value: C64) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[C64]> {
        self.entries.chunks(self.dim)
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Frobenius norm of `self - other`. Panics on a dimension mismatch.
    pub fn distance(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Squared Frobenius norm of `self - I`.
    pub fn identity_defect_sqr(&self) -> f64 {
        let mut acc = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                let z = self.get(r, c);
                acc += if r == c { (z - 1.0).norm_sqr() } else { z.norm_sqr() };
            }
        }
        acc
    }

    pub fn hermiticity_defect(&self) -> f64 {
        let mut acc = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                acc += (self.get(r, c) - self.get(c, r).conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Largest absolute off-diagonal entry.
    pub fn max_off_diagonal(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                if r != c {
                    worst = worst.max(self.get(r, c).norm());
                }
            }
        }
        worst
    }

    pub fn determinant(&self) -> C64 {
        // Gaussian elimination with partial pivoting.
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = C64::new(1.0, 0.0);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| a[i * n + col].norm().total_cmp(&a[j * n + col].norm()))
                .unwrap();
            if a[pivot * n + col].norm() == 0.0 {
                return C64::new(0.0, 0.0);
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det *= p;
            for row in col + 1..n {
                let f = a[row * n + col] / p;
                for k in col..n {
                    let v = a[col * n + k];
                    a[row * n + k] -= f * v;
                }
            }
        }
        det
    }
}

/// A density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(CMatrix);

impl DensityMatrix {
    /// Validate and wrap. Tolerances are the input tolerance (`1e-9`).
    pub fn new(m: CMatrix) -> Result<Self> {
        if !m.dim.is_power_of_two() {
            return Err(Error::InvalidDensityMatrix(format!(
                "dimension {} is not a power of two",
                m.dim
            )));
        }
        let herm = m.hermiticity_defect();
        if herm >= INPUT_TOL {
            return Err(Error::NotHermitian { defect: herm });
        }
        let tr = m.trace();
        if (tr - 1.0).norm() >= INPUT_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace {} differs from 1", tr.re)));
        }
        if !is_positive_semidefinite(&m, INPUT_TOL) {
            return Err(Error::InvalidDensityMatrix("matrix has a negative eigenvalue".into()));
        }
        Ok(DensityMatrix(m))
    }

    pub(crate) fn from_matrix_unchecked(m: CMatrix) -> Self {
        DensityMatrix(m)
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.0.get(row, col)
    }

    /// The 2×2 matrix of a single-qubit density matrix.
    pub fn to_mat2(&self) -> Option<Mat2> {
        (self.0.dim == 2).then(|| Mat2::new(self.get(0, 0), self.get(0, 1), self.get(1, 0), self.get(1, 1)))
    }

    /// Frobenius distance to the maximally mixed state `I / dim`.
    pub fn distance_to_maximally_mixed(&self) -> f64 {
        let d = self.0.dim;
        let mut mixed = CMatrix::identity(d);
        let s = 1.0 / d as f64;
        mixed.entries.iter_mut().for_each(|z| *z *= s);
        self.0.distance(&mixed)
    }
}

/// Cholesky factorization of `m + tol·I`; the shift admits eigenvalues down
/// to `-tol`.
fn is_positive_semidefinite(m: &CMatrix, tol: f64) -> bool {
    let n = m.dim;
    let mut l = vec![C64::new(0.0, 0.0); n * n];
    for j in 0..n {
        let mut diag = m.get(j, j).re + tol;
        for k in 0..j {
            diag -= l[j * n + k].norm_sqr();
        }
        if diag <= 0.0 {
            return false;
        }
        let ljj = diag.sqrt();
        l[j * n + j] = C64::new(ljj, 0.0);
        for i in j + 1..n {
            let mut acc = m.get(i, j);
            for k in 0..j {
                acc -= l[i * n + k] * l[j * n + k].conj();
            }
            l[i * n + j] = acc / ljj;
        }
    }
    true
}
