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

//! JSON wire formats.
//!
//! Complex numbers are `[re, im]` pairs and 2×2 matrices are nested
//! row-major arrays of them. Every validated domain type implements
//! [`WireFormat`], so parsing goes through the same constructors as library
//! code.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lme::{
    LmeCertificate, ObstructionCase, ObstructionTrace, OverlapBasis, PairOverlap, QubitSpectrum, Trilemma, Verdict,
};
use crate::qcore::{make_state, CMatrix, DensityMatrix, Mat2, PureState, C64};
use crate::search::{SearchConfig, SearchResult, SimplexCoefficients, UnitaryParams};
use crate::spectra::TraceDecomposition;
use crate::wtype::WTypeParams;

pub type ComplexJson = [f64; 2];
pub type Mat2Json = [[ComplexJson; 2]; 2];

fn complex_to_json(z: C64) -> ComplexJson {
    [z.re, z.im]
}

fn complex_from_json(z: ComplexJson) -> C64 {
    C64::new(z[0], z[1])
}

pub fn mat2_to_json(m: &Mat2) -> Mat2Json {
    m.0.map(|row| row.map(complex_to_json))
}

pub fn mat2_from_json(m: Mat2Json) -> Mat2 {
    Mat2(m.map(|row| row.map(complex_from_json)))
}

/// A domain type with a JSON representation.
pub trait WireFormat: Sized {
    type Wire: Serialize + DeserializeOwned;

    fn to_wire(&self) -> Self::Wire;
    fn from_wire(wire: Self::Wire) -> Result<Self>;

    fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_wire()).expect("wire types serialize")
    }

    fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("wire types serialize")
    }

    fn from_json_str(text: &str) -> Result<Self> {
        let wire = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_wire(wire)
    }

    fn from_json_value(value: serde_json::Value) -> Result<Self> {
        let wire = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_wire(wire)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PureStateJson {
    pub n: usize,
    pub amps: Vec<ComplexJson>,
}

impl WireFormat for PureState {
    type Wire = PureStateJson;

    fn to_wire(&self) -> PureStateJson {
        PureStateJson { n: self.n_qubits(), amps: self.amps().iter().copied().map(complex_to_json).collect() }
    }

    fn from_wire(w: PureStateJson) -> Result<Self> {
        make_state(w.n, w.amps.into_iter().map(complex_from_json).collect(), false)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensityMatrixJson {
    pub dim: usize,
    pub rows: Vec<Vec<ComplexJson>>,
}

impl WireFormat for DensityMatrix {
    type Wire = DensityMatrixJson;

    fn to_wire(&self) -> DensityMatrixJson {
        DensityMatrixJson {
            dim: self.dim(),
            rows: self.matrix().rows().map(|r| r.iter().copied().map(complex_to_json).collect()).collect(),
        }
    }

    fn from_wire(w: DensityMatrixJson) -> Result<Self> {
        if w.rows.len() != w.dim {
            return Err(Error::DimensionMismatch { expected: w.dim, found: w.rows.len() });
        }
        let rows = w.rows.into_iter().map(|r| r.into_iter().map(complex_from_json).collect()).collect();
        DensityMatrix::new(CMatrix::from_rows(rows)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WTypeParamsJson {
    pub n: usize,
    pub x: f64,
    pub c: Vec<f64>,
}

impl WireFormat for WTypeParams {
    type Wire = WTypeParamsJson;

    fn to_wire(&self) -> WTypeParamsJson {
        WTypeParamsJson { n: self.n(), x: self.x(), c: self.c().to_vec() }
    }

    fn from_wire(w: WTypeParamsJson) -> Result<Self> {
        WTypeParams::with_n(w.n, w.x, w.c)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub n: usize,
    pub unitaries: Vec<Mat2Json>,
}

impl WireFormat for LmeCertificate {
    type Wire = CertificateJson;

    fn to_wire(&self) -> CertificateJson {
        CertificateJson { n: self.n(), unitaries: self.unitaries().iter().map(mat2_to_json).collect() }
    }

    fn from_wire(w: CertificateJson) -> Result<Self> {
        if w.unitaries.len() != w.n {
            return Err(Error::DimensionMismatch { expected: w.n, found: w.unitaries.len() });
        }
        LmeCertificate::new(w.unitaries.into_iter().map(mat2_from_json).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QubitSpectrumJson {
    pub qubit: usize,
    pub lambda1: f64,
    pub lambda2: f64,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairOverlapJson {
    pub j: usize,
    pub k: usize,
    pub amplitude: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrilemmaJson {
    pub pairs: Vec<PairOverlapJson>,
    pub premise: String,
    pub conclusion: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionJson {
    pub case: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degenerate_qubit: Option<usize>,
    pub witness_triple: [usize; 3],
    pub census: Vec<QubitSpectrumJson>,
    pub trilemma: TrilemmaJson,
    pub basis: String,
    pub degeneracy_tol: f64,
}

const PREMISE: &str = "cos(a_j - a_k) = 0 and cos(a_k - a_l) = 0";
const CONCLUSION: &str = "|cos(a_j - a_l)| = 1, so U_j U_l |phi> is not orthogonal to |phi>";

impl WireFormat for ObstructionTrace {
    type Wire = ObstructionJson;

    fn to_wire(&self) -> ObstructionJson {
        ObstructionJson {
            case: self.case.as_str().to_owned(),
            degenerate_qubit: self.degenerate_qubit,
            witness_triple: self.witness_triple,
            census: self
                .census
                .iter()
                .map(|q| QubitSpectrumJson {
                    qubit: q.qubit,
                    lambda1: q.lambda1,
                    lambda2: q.lambda2,
                    degenerate: q.degenerate,
                })
                .collect(),
            trilemma: TrilemmaJson {
                pairs: self
                    .trilemma
                    .pairs
                    .iter()
                    .map(|p| PairOverlapJson { j: p.j, k: p.k, amplitude: p.amplitude })
                    .collect(),
                premise: self.trilemma.premise.to_owned(),
                conclusion: self.trilemma.conclusion.to_owned(),
            },
            basis: self.basis.as_str().to_owned(),
            degeneracy_tol: self.degeneracy_tol,
        }
    }

    fn from_wire(w: ObstructionJson) -> Result<Self> {
        let case = match w.case.as_str() {
            "AllNondegenerate" => ObstructionCase::AllNondegenerate,
            "UniqueDegenerate" => ObstructionCase::UniqueDegenerate,
            other => return Err(Error::Parse(format!("unknown obstruction case {other:?}"))),
        };
        let basis = match w.basis.as_str() {
            "canonical-trace-decomposition" => OverlapBasis::CanonicalTraceDecomposition,
            "canonical" => OverlapBasis::Canonical,
            other => return Err(Error::Parse(format!("unknown basis {other:?}"))),
        };
        if (case == ObstructionCase::UniqueDegenerate) != w.degenerate_qubit.is_some() {
            return Err(Error::Parse("degenerate_qubit must be present exactly for UniqueDegenerate".into()));
        }
        if case == ObstructionCase::UniqueDegenerate && w.census.len() < 4 {
            return Err(Error::Parse("UniqueDegenerate needs at least four qubits".into()));
        }
        let pairs: [PairOverlapJson; 3] = w
            .trilemma
            .pairs
            .try_into()
            .map_err(|_| Error::Parse("trilemma needs exactly three pairs".into()))?;
        Ok(ObstructionTrace {
            case,
            degenerate_qubit: w.degenerate_qubit,
            witness_triple: w.witness_triple,
            census: w
                .census
                .into_iter()
                .map(|q| QubitSpectrum { qubit: q.qubit, lambda1: q.lambda1, lambda2: q.lambda2, degenerate: q.degenerate })
                .collect(),
            trilemma: Trilemma {
                pairs: pairs.map(|p| PairOverlap { j: p.j, k: p.k, amplitude: p.amplitude }),
                premise: PREMISE,
                conclusion: CONCLUSION,
            },
            basis,
            degeneracy_tol: w.degeneracy_tol,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
}

impl WireFormat for Verdict {
    type Wire = VerdictJson;

    fn to_wire(&self) -> VerdictJson {
        let mut w = VerdictJson {
            kind: self.kind().to_owned(),
            residual: None,
            obstruction: None,
            certificate: None,
            permutation: None,
        };
        match self {
            Verdict::CertifiedLme { certificate, residual, permutation } => {
                w.residual = Some(*residual);
                w.certificate = Some(certificate.to_wire());
                w.permutation = permutation.clone();
            }
            Verdict::Obstructed(trace) => w.obstruction = Some(trace.to_wire()),
            Verdict::Inconclusive { residual } => w.residual = *residual,
        }
        w
    }

    fn from_wire(w: VerdictJson) -> Result<Self> {
        match w.kind.as_str() {
            "CertifiedLme" => {
                let certificate = w
                    .certificate
                    .ok_or_else(|| Error::Parse("CertifiedLme verdict without certificate".into()))?;
                let residual = w.residual.ok_or_else(|| Error::Parse("CertifiedLme verdict without residual".into()))?;
                Ok(Verdict::CertifiedLme {
                    certificate: LmeCertificate::from_wire(certificate)?,
                    residual,
                    permutation: w.permutation,
                })
            }
            "Obstructed" => {
                let trace = w
                    .obstruction
                    .ok_or_else(|| Error::Parse("Obstructed verdict without obstruction".into()))?;
                Ok(Verdict::Obstructed(ObstructionTrace::from_wire(trace)?))
            }
            "Inconclusive" => Ok(Verdict::Inconclusive { residual: w.residual }),
            other => Err(Error::Parse(format!("unknown verdict kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceDecompositionJson {
    pub rotations: Vec<Mat2Json>,
    pub spectra: Vec<[f64; 2]>,
    pub state: PureStateJson,
}

impl WireFormat for TraceDecomposition {
    type Wire = TraceDecompositionJson;

    fn to_wire(&self) -> TraceDecompositionJson {
        TraceDecompositionJson {
            rotations: self.rotations.iter().map(mat2_to_json).collect(),
            spectra: self.spectra.iter().map(|&(a, b)| [a, b]).collect(),
            state: self.state.to_wire(),
        }
    }

    fn from_wire(w: TraceDecompositionJson) -> Result<Self> {
        let state = PureState::from_wire(w.state)?;
        if w.rotations.len() != state.n_qubits() || w.spectra.len() != state.n_qubits() {
            return Err(Error::DimensionMismatch { expected: state.n_qubits(), found: w.rotations.len() });
        }
        Ok(TraceDecomposition {
            rotations: w.rotations.into_iter().map(mat2_from_json).collect(),
            spectra: w.spectra.into_iter().map(|[a, b]| (a, b)).collect(),
            state,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SearchConfigJson {
    pub restarts: usize,
    pub seed: u64,
    pub max_iters: usize,
    pub objective_tol: f64,
    pub simplex: SimplexCoefficients,
    pub initial_step: f64,
}

impl Default for SearchConfigJson {
    fn default() -> Self {
        SearchConfig::default().to_wire()
    }
}

impl WireFormat for SearchConfig {
    type Wire = SearchConfigJson;

    fn to_wire(&self) -> SearchConfigJson {
        SearchConfigJson {
            restarts: self.restarts,
            seed: self.seed,
            max_iters: self.max_iters,
            objective_tol: self.objective_tol,
            simplex: self.simplex,
            initial_step: self.initial_step,
        }
    }

    fn from_wire(w: SearchConfigJson) -> Result<Self> {
        let cfg = SearchConfig {
            restarts: w.restarts,
            seed: w.seed,
            max_iters: w.max_iters,
            objective_tol: w.objective_tol,
            simplex: w.simplex,
            initial_step: w.initial_step,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResultJson {
    pub best_residual: f64,
    pub best_params: Vec<[f64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    pub iters_used: usize,
    pub restarts_run: usize,
    pub per_restart_residuals: Vec<f64>,
}

impl WireFormat for SearchResult {
    type Wire = SearchResultJson;

    fn to_wire(&self) -> SearchResultJson {
        SearchResultJson {
            best_residual: self.best_residual,
            best_params: self.best_params.angles().to_vec(),
            certificate: self.certificate.as_ref().map(|c| c.to_wire()),
            iters_used: self.iters_used,
            restarts_run: self.restarts_run,
            per_restart_residuals: self.per_restart_residuals.clone(),
        }
    }

    fn from_wire(w: SearchResultJson) -> Result<Self> {
        if w.per_restart_residuals.len() != w.restarts_run {
            return Err(Error::DimensionMismatch { expected: w.restarts_run, found: w.per_restart_residuals.len() });
        }
        let min = w.per_restart_residuals.iter().copied().fold(f64::INFINITY, f64::min);
        if min != w.best_residual {
            return Err(Error::Parse("best_residual is not the minimum of per_restart_residuals".into()));
        }
        Ok(SearchResult {
            best_residual: w.best_residual,
            best_params: UnitaryParams::new(w.best_params),
            certificate: w.certificate.map(LmeCertificate::from_wire).transpose()?,
            iters_used: w.iters_used,
            restarts_run: w.restarts_run,
            per_restart_residuals: w.per_restart_residuals,
        })
    }
}

/// Parses a comma-separated list of decimal reals such as `0.25,0.25,0.5`.
pub fn parse_real_list(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|item| {
            let item = item.trim();
            let v: f64 = item.parse().map_err(|_| Error::Parse(format!("not a real number: {item:?}")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::NonFinite)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lme::{construct_certificate_3q, prop1_obstruction};
    use crate::wtype::w_state;

    #[test]
    fn state_json_shape() {
        let s = PureState::basis(1, 1).unwrap();
        assert_eq!(s.to_json_string(), r#"{"n":1,"amps":[[0.0,0.0],[1.0,0.0]]}"#);
        assert_eq!(PureState::from_json_str(&s.to_json_string()).unwrap(), s);
    }

    #[test]
    fn state_json_rejects_invalid() {
        assert!(matches!(
            PureState::from_json_str(r#"{"n":1,"amps":[[2.0,0.0],[0.0,0.0]]}"#),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            PureState::from_json_str(r#"{"n":2,"amps":[[1.0,0.0]]}"#),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(PureState::from_json_str("{"), Err(Error::Parse(_))));
        assert!(PureState::from_json_str(r#"{"n":64,"amps":[]}"#).is_err());
    }

    #[test]
    fn params_and_certificate_round_trip() {
        let p = WTypeParams::from_json_str(r#"{"n":3,"x":0,"c":[0.25,0.25,0.5]}"#).unwrap();
        assert_eq!(p.c(), &[0.25, 0.25, 0.5]);
        assert!(WTypeParams::from_json_str(r#"{"n":4,"x":0,"c":[0.25,0.25,0.5]}"#).is_err());
        let cert = construct_certificate_3q(0.25, 0.25, 1.0, 1.0 + std::f64::consts::FRAC_PI_2).unwrap();
        let back = LmeCertificate::from_json_str(&cert.to_json_string()).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn verdict_round_trip() {
        for c in [vec![0.25; 4], vec![0.5, 0.125, 0.125, 0.125, 0.125]] {
            let v = prop1_obstruction(&WTypeParams::new(0.0, c).unwrap()).unwrap();
            assert_eq!(Verdict::from_json_str(&v.to_json_string()).unwrap(), v);
        }
        let v = prop1_obstruction(&WTypeParams::new(0.0, vec![0.25, 0.25, 0.5]).unwrap()).unwrap();
        let json = v.to_json_value();
        assert_eq!(json["kind"], "CertifiedLme");
        assert_eq!(json["permutation"], serde_json::json!([1, 2, 3]));
        assert_eq!(Verdict::from_json_value(json).unwrap(), v);
    }

    #[test]
    fn density_matrix_round_trip() {
        let rho = w_state(3).unwrap().partial_trace(&[1]).unwrap();
        let back = DensityMatrix::from_json_str(&rho.to_json_string()).unwrap();
        assert_eq!(back, rho);
        assert!(DensityMatrix::from_json_str(r#"{"dim":2,"rows":[[[1,0],[0,0]],[[0,0],[1,0]]]}"#).is_err());
    }

    #[test]
    fn search_config_defaults_fill_missing_fields() {
        let cfg = SearchConfig::from_json_str(r#"{"restarts":3,"seed":9}"#).unwrap();
        assert_eq!(cfg.restarts, 3);
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.objective_tol, SearchConfig::default().objective_tol);
        assert!(SearchConfig::from_json_str(r#"{"restarts":0}"#).is_err());
    }

    #[test]
    fn real_list_parsing() {
        assert_eq!(parse_real_list("0.25, 0.25,0.5").unwrap(), vec![0.25, 0.25, 0.5]);
        assert!(parse_real_list("0.25,,0.5").is_err());
        assert!(parse_real_list("inf").is_err());
        assert!(parse_real_list("NaN").is_err());
    }
}
