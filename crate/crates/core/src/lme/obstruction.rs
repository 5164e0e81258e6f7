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

//! Executable form of the impossibility argument for n ≥ 4 and the
//! three-qubit certified path.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::lme::{construct_certificate_3q, verify_certificate, LmeCertificate};
use crate::qcore::{eig_herm2, INPUT_TOL};
use crate::spectra::{closed_form_matrix, is_degenerate, DEGENERACY_TOL};
use crate::wtype::{canonical_state, WTypeParams};

/// Which branch of the case analysis applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionCase {
    /// No reduced state is proportional to the identity.
    AllNondegenerate,
    /// Exactly one qubit `t` has `D_t ∝ I`.
    UniqueDegenerate,
}

impl ObstructionCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            ObstructionCase::AllNondegenerate => "AllNondegenerate",
            ObstructionCase::UniqueDegenerate => "UniqueDegenerate",
        }
    }
}

/// Spectrum of one single-qubit reduced state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitSpectrum {
    pub qubit: usize,
    pub lambda1: f64,
    pub lambda2: f64,
    pub degenerate: bool,
}

/// `⟨φ|U_j ⊗ U_k|φ⟩ = amplitude · cos(α_j − α_k)` for one pair of the
/// witness triple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairOverlap {
    pub j: usize,
    pub k: usize,
    /// `2 √(c_j c_k)`, strictly positive.
    pub amplitude: f64,
}

/// The cos trilemma on the witness triple: the three pairwise overlaps
/// cannot all vanish, because `cos(α_j − α_k) = 0` and
/// `cos(α_k − α_l) = 0` imply `|cos(α_j − α_l)| = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trilemma {
    pub pairs: [PairOverlap; 3],
    pub premise: &'static str,
    pub conclusion: &'static str,
}

/// The basis in which the forced unitary form and the overlaps are taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverlapBasis {
    /// The canonical form itself, which is a trace decomposition (x = 0).
    CanonicalTraceDecomposition,
    /// The canonical form with x > 0, which is not a trace decomposition.
    Canonical,
}

impl OverlapBasis {
    pub fn as_str(&self) -> &'static str {
        match self {
            OverlapBasis::CanonicalTraceDecomposition => "canonical-trace-decomposition",
            OverlapBasis::Canonical => "canonical",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObstructionTrace {
    pub case: ObstructionCase,
    pub degenerate_qubit: Option<usize>,
    pub witness_triple: [usize; 3],
    pub census: Vec<QubitSpectrum>,
    pub trilemma: Trilemma,
    pub basis: OverlapBasis,
    pub degeneracy_tol: f64,
}

/// Outcome of classifying a W-type state.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    CertifiedLme {
        certificate: LmeCertificate,
        /// Gram residual `‖G − I‖_F` of the certificate.
        residual: f64,
        /// Qubit relabeling used by the construction: position `i` of the
        /// constructed layout holds original qubit `permutation[i]`.
        permutation: Option<Vec<usize>>,
    },
    Obstructed(ObstructionTrace),
    Inconclusive {
        /// Best Gram residual `‖G − I‖_F` found, when a search ran.
        residual: Option<f64>,
    },
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::CertifiedLme { .. } => "CertifiedLme",
            Verdict::Obstructed(_) => "Obstructed",
            Verdict::Inconclusive { .. } => "Inconclusive",
        }
    }
}

/// Degeneracy census of the closed-form reduced states.
pub fn degeneracy_census(p: &WTypeParams, tol: f64) -> Result<Vec<QubitSpectrum>> {
    (1..=p.n())
        .map(|l| {
            let eig = eig_herm2(&closed_form_matrix(p.x(), p.c(), l)?)?;
            Ok(QubitSpectrum {
                qubit: l,
                lambda1: eig.lambda1,
                lambda2: eig.lambda2,
                degenerate: is_degenerate(p, l, tol)?,
            })
        })
        .collect()
}

pub fn prop1_obstruction(p: &WTypeParams) -> Result<Verdict> {
    prop1_obstruction_with_tol(p, DEGENERACY_TOL)
}

/// Decide what the analytic results say about `canonical_state(p)`.
///
/// * n ≥ 4: always [`Verdict::Obstructed`].
/// * n = 3 with x = 0 and some c_l = 1/2: [`Verdict::CertifiedLme`] via the
///   explicit construction after moving that qubit to position 3.
/// * otherwise n = 3: [`Verdict::Inconclusive`].
pub fn prop1_obstruction_with_tol(p: &WTypeParams, tol: f64) -> Result<Verdict> {
    if !(tol > 0.0) {
        return Err(Error::OutOfRange(format!("degeneracy tolerance {tol} must be positive")));
    }
    let n = p.n();
    let census = degeneracy_census(p, tol)?;
    let degenerate: Vec<usize> = census.iter().filter(|q| q.degenerate).map(|q| q.qubit).collect();

    if n == 3 {
        return certify_three_qubits(p, &degenerate);
    }

    // x = 0 and c_t = 1/2 for two qubits would leave nothing for the rest.
    if degenerate.len() > 1 {
        return Err(Error::AmbiguousDegeneracy { qubits: degenerate });
    }
    let (case, degenerate_qubit) = match degenerate.first() {
        None => (ObstructionCase::AllNondegenerate, None),
        Some(&t) => (ObstructionCase::UniqueDegenerate, Some(t)),
    };
    let mut others = (1..=n).filter(|&q| Some(q) != degenerate_qubit);
    let triple = [others.next().unwrap(), others.next().unwrap(), others.next().unwrap()];
    let amp = |j: usize, k: usize| PairOverlap {
        j,
        k,
        amplitude: 2.0 * (p.c()[j - 1] * p.c()[k - 1]).sqrt(),
    };
    let [j, k, l] = triple;
    let trilemma = Trilemma {
        pairs: [amp(j, k), amp(k, l), amp(j, l)],
        premise: "cos(a_j - a_k) = 0 and cos(a_k - a_l) = 0",
        conclusion: "|cos(a_j - a_l)| = 1, so U_j U_l |phi> is not orthogonal to |phi>",
    };
    let basis = if p.x() < tol {
        OverlapBasis::CanonicalTraceDecomposition
    } else {
        OverlapBasis::Canonical
    };
    Ok(Verdict::Obstructed(ObstructionTrace {
        case,
        degenerate_qubit,
        witness_triple: triple,
        census,
        trilemma,
        basis,
        degeneracy_tol: tol,
    }))
}

fn certify_three_qubits(p: &WTypeParams, degenerate: &[usize]) -> Result<Verdict> {
    let Some(&t) = degenerate.first() else {
        return Ok(Verdict::Inconclusive { residual: None });
    };
    let mut permutation: Vec<usize> = (1..=3).filter(|&q| q != t).collect();
    permutation.push(t);
    let c1 = p.c()[permutation[0] - 1];
    let c2 = p.c()[permutation[1] - 1];
    let built = construct_certificate_3q(c1, c2, FRAC_PI_2, 0.0)?;

    // undo the relabeling so the certificate addresses the original qubits
    let mut order = [0usize; 3];
    for (pos, &q) in permutation.iter().enumerate() {
        order[q - 1] = pos + 1;
    }
    let certificate = built.permuted(&order)?;
    let check = verify_certificate(&canonical_state(p), &certificate, INPUT_TOL)?;
    if !check.valid {
        return Ok(Verdict::Inconclusive { residual: Some(check.residual) });
    }
    Ok(Verdict::CertifiedLme {
        certificate,
        residual: check.residual,
        permutation: Some(permutation),
    })
}
