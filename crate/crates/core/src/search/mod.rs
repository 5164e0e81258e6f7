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

//! Multi-start derivative-free search for certificates.
//!
//! The objective is the squared Gram defect `‖G − I‖_F²` over `4n` Euler
//! angles. Restarts draw their start points from independent ChaCha
//! streams indexed by restart number, so results do not depend on how the
//! restarts are scheduled.

mod params;
mod simplex;

pub use params::{params_from_unitary, unitary_from_params, Angles, UnitaryParams, X_ANGLES};
pub use simplex::SimplexCoefficients;

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lme::{gram_defect_sqr, prop1_obstruction, verify_certificate, LmeCertificate, Verdict};
use crate::qcore::PureState;
use crate::wtype::{canonical_state, WTypeParams};

/// Largest state the search accepts.
pub const MAX_SEARCH_QUBITS: usize = 6;

/// Restarts run in fixed-size batches; the search stops after the first
/// batch that produces a certificate.
pub const RESTART_BATCH: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub restarts: usize,
    pub seed: u64,
    /// Simplex iterations per restart.
    pub max_iters: usize,
    /// A certificate is reported when the squared residual drops below this.
    pub objective_tol: f64,
    pub simplex: SimplexCoefficients,
    /// Edge length of the initial simplex, in radians.
    pub initial_step: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            restarts: 50,
            seed: 0,
            max_iters: 20_000,
            objective_tol: 1e-8,
            simplex: SimplexCoefficients::default(),
            initial_step: 0.6,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::InvalidConfig("restarts must be at least 1".into()));
        }
        if !(self.objective_tol > 0.0) || !self.objective_tol.is_finite() {
            return Err(Error::InvalidConfig("objective_tol must be positive".into()));
        }
        if !self.simplex.is_valid() {
            return Err(Error::InvalidConfig("simplex coefficients out of range".into()));
        }
        if !(self.initial_step > 0.0) || !self.initial_step.is_finite() {
            return Err(Error::InvalidConfig("initial_step must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub best_residual: f64,
    pub best_params: UnitaryParams,
    pub certificate: Option<LmeCertificate>,
    pub iters_used: usize,
    pub restarts_run: usize,
    pub per_restart_residuals: Vec<f64>,
}

/// Squared Gram defect of the certificate generated by `params`.
pub fn residual(s: &PureState, params: &UnitaryParams) -> Result<f64> {
    if params.n() != s.n_qubits() {
        return Err(Error::DimensionMismatch { expected: s.n_qubits(), found: params.n() });
    }
    Ok(gram_defect_sqr(s, &params.unitaries()))
}

struct RestartOutcome {
    residual: f64,
    point: Vec<f64>,
    iters: usize,
}

fn run_restart(s: &PureState, cfg: &SearchConfig, index: usize) -> RestartOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let dim = 4 * s.n_qubits();
    let start: Vec<f64> = (0..dim).map(|_| rng.gen_range(0.0..TAU)).collect();
    // Polish until the Frobenius defect itself is below the tolerance, so a
    // reported certificate also passes `verify_certificate` at that tolerance.
    let target = cfg.objective_tol * cfg.objective_tol;
    let objective = |flat: &[f64]| gram_defect_sqr(s, &UnitaryParams::from_flat(flat).unitaries());
    let m = simplex::minimize(objective, &start, cfg.initial_step, &cfg.simplex, target, cfg.max_iters);
    RestartOutcome { residual: m.value, point: m.point, iters: m.iters }
}

/// Seeded multi-start simplex search for a certificate of `s`.
pub fn search_certificate(s: &PureState, cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    if s.n_qubits() > MAX_SEARCH_QUBITS {
        return Err(Error::TooLarge { qubits: s.n_qubits(), limit: MAX_SEARCH_QUBITS });
    }
    let mut outcomes: Vec<RestartOutcome> = Vec::with_capacity(cfg.restarts);
    let mut next = 0;
    while next < cfg.restarts {
        let end = (next + RESTART_BATCH).min(cfg.restarts);
        let batch: Vec<RestartOutcome> = (next..end).into_par_iter().map(|i| run_restart(s, cfg, i)).collect();
        outcomes.extend(batch);
        next = end;
        if outcomes.iter().any(|o| o.residual < cfg.objective_tol) {
            break;
        }
    }

    // first minimum wins, independent of scheduling
    let best = outcomes
        .iter()
        .enumerate()
        .min_by(|(i, a), (j, b)| a.residual.total_cmp(&b.residual).then(i.cmp(j)))
        .map(|(_, o)| o)
        .expect("at least one restart");
    let best_params = UnitaryParams::from_flat(&best.point);
    let certificate = if best.residual < cfg.objective_tol {
        Some(best_params.to_certificate()?)
    } else {
        None
    };
    Ok(SearchResult {
        best_residual: best.residual,
        best_params,
        certificate,
        iters_used: outcomes.iter().map(|o| o.iters).sum(),
        restarts_run: outcomes.len(),
        per_restart_residuals: outcomes.iter().map(|o| o.residual).collect(),
    })
}

/// Analytic decision first, numerical search when that is inconclusive.
///
/// Search failure yields [`Verdict::Inconclusive`]; only the analytic
/// argument yields [`Verdict::Obstructed`].
pub fn classify(p: &WTypeParams, cfg: &SearchConfig) -> Result<Verdict> {
    let analytic = prop1_obstruction(p)?;
    if !matches!(analytic, Verdict::Inconclusive { .. }) {
        return Ok(analytic);
    }
    let s = canonical_state(p);
    let found = search_certificate(&s, cfg)?;
    if let Some(cert) = found.certificate {
        let check = verify_certificate(&s, &cert, cfg.objective_tol)?;
        if check.valid {
            return Ok(Verdict::CertifiedLme { certificate: cert, residual: check.residual, permutation: None });
        }
    }
    Ok(Verdict::Inconclusive { residual: Some(found.best_residual.sqrt()) })
}
