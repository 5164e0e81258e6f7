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

#![allow(dead_code)]

use lme_core::qcore::{make_state, Mat2, PureState, C64};
use lme_core::wtype::WTypeParams;
use rand::Rng;

/// Unitary `e^{iφ} [[a, −b̄], [b, ā]]` from a random point on the 3-sphere.
pub fn random_unitary<R: Rng>(rng: &mut R) -> Mat2 {
    let g: Vec<f64> = (0..4).map(|_| gaussian(rng)).collect();
    let norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
    let a = C64::new(g[0], g[1]) / norm;
    let b = C64::new(g[2], g[3]) / norm;
    let phase = C64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
    Mat2::new(a, -b.conj(), b, a.conj()).scale(phase)
}

pub fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    // Box–Muller
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

pub fn random_state<R: Rng>(rng: &mut R, n: usize) -> PureState {
    let amps = (0..1usize << n).map(|_| C64::new(gaussian(rng), gaussian(rng))).collect();
    make_state(n, amps, true).unwrap()
}

/// Positive weights summing to `1 − x`.
pub fn random_params<R: Rng>(rng: &mut R, n: usize, x: f64) -> WTypeParams {
    let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = raw.iter().sum();
    let c: Vec<f64> = raw.iter().map(|v| v * (1.0 - x) / total).collect();
    WTypeParams::normalized(x, c).unwrap()
}
