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

//! Nelder–Mead simplex descent.

use serde::{Deserialize, Serialize};

/// Reflection, expansion, contraction and shrink coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimplexCoefficients {
    pub reflection: f64,
    pub expansion: f64,
    pub contraction: f64,
    pub shrink: f64,
}

impl Default for SimplexCoefficients {
    fn default() -> Self {
        SimplexCoefficients { reflection: 1.0, expansion: 2.0, contraction: 0.5, shrink: 0.5 }
    }
}

impl SimplexCoefficients {
    pub fn is_valid(&self) -> bool {
        self.reflection > 0.0
            && self.expansion > self.reflection.max(1.0)
            && self.contraction > 0.0
            && self.contraction < 1.0
            && self.shrink > 0.0
            && self.shrink < 1.0
    }
}

pub(crate) struct Minimum {
    pub point: Vec<f64>,
    pub value: f64,
    pub iters: usize,
}

/// Minimize `f` from `start` until `f < target` or `max_iters` iterations.
///
/// When the simplex collapses before reaching `target` it is rebuilt around
/// the best vertex with the initial step. The descent ends early once a
/// rebuild fails to lower the best value by a relative `1e-10`.
pub(crate) fn minimize<F>(
    f: F,
    start: &[f64],
    step: f64,
    coeffs: &SimplexCoefficients,
    target: f64,
    max_iters: usize,
) -> Minimum
where
    F: Fn(&[f64]) -> f64,
{
    let dim = start.len();
    let mut simplex = build_simplex(start, step);
    let mut values: Vec<f64> = simplex.iter().map(|x| f(x)).collect();
    let mut iters = 0;
    let mut at_last_rebuild = f64::INFINITY;

    while iters < max_iters {
        sort_simplex(&mut simplex, &mut values);
        if values[0] < target {
            break;
        }
        if collapsed(&simplex, &values) {
            if values[0] > at_last_rebuild * (1.0 - 1e-10) {
                break;
            }
            at_last_rebuild = values[0];
            let best = simplex[0].clone();
            simplex = build_simplex(&best, step);
            values = simplex.iter().map(|x| f(x)).collect();
            iters += 1;
            continue;
        }
        iters += 1;

        let worst = dim;
        let mut centroid = vec![0.0; dim];
        for x in &simplex[..worst] {
            for (c, v) in centroid.iter_mut().zip(x) {
                *c += v;
            }
        }
        centroid.iter_mut().for_each(|c| *c /= dim as f64);

        let along = |t: f64, towards: &[f64]| -> Vec<f64> {
            centroid.iter().zip(towards).map(|(c, w)| c + t * (w - c)).collect()
        };

        let reflected = along(-coeffs.reflection, &simplex[worst]);
        let f_reflected = f(&reflected);

        if f_reflected < values[0] {
            let expanded = along(-coeffs.reflection * coeffs.expansion, &simplex[worst]);
            let f_expanded = f(&expanded);
            if f_expanded < f_reflected {
                simplex[worst] = expanded;
                values[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            }
            continue;
        }
        if f_reflected < values[worst - 1] {
            simplex[worst] = reflected;
            values[worst] = f_reflected;
            continue;
        }

        let (contracted, bound) = if f_reflected < values[worst] {
            (along(-coeffs.reflection * coeffs.contraction, &simplex[worst]), f_reflected)
        } else {
            (along(coeffs.contraction, &simplex[worst]), values[worst])
        };
        let f_contracted = f(&contracted);
        if f_contracted < bound {
            simplex[worst] = contracted;
            values[worst] = f_contracted;
            continue;
        }

        let best = simplex[0].clone();
        for (x, v) in simplex.iter_mut().zip(values.iter_mut()).skip(1) {
            for (xi, bi) in x.iter_mut().zip(&best) {
                *xi = bi + coeffs.shrink * (*xi - bi);
            }
            *v = f(x);
        }
    }

    sort_simplex(&mut simplex, &mut values);
    Minimum { point: simplex.swap_remove(0), value: values[0], iters }
}

fn build_simplex(start: &[f64], step: f64) -> Vec<Vec<f64>> {
    let mut simplex = Vec::with_capacity(start.len() + 1);
    simplex.push(start.to_vec());
    for i in 0..start.len() {
        let mut v = start.to_vec();
        v[i] += step;
        simplex.push(v);
    }
    simplex
}

fn sort_simplex(simplex: &mut Vec<Vec<f64>>, values: &mut Vec<f64>) {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    *simplex = order.iter().map(|&i| std::mem::take(&mut simplex[i])).collect();
    *values = order.iter().map(|&i| values[i]).collect();
}

fn collapsed(simplex: &[Vec<f64>], values: &[f64]) -> bool {
    let spread = values[values.len() - 1] - values[0];
    let size = simplex[1..]
        .iter()
        .flat_map(|x| x.iter().zip(&simplex[0]).map(|(a, b)| (a - b).abs()))
        .fold(0.0, f64::max);
    size < 1e-9 || spread <= 1e-15 * values[0].abs().max(1e-300)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_quadratic_minimum() {
        let f = |x: &[f64]| (x[0] - 1.0).powi(2) + 3.0 * (x[1] + 2.0).powi(2);
        let m = minimize(f, &[0.0, 0.0], 0.5, &SimplexCoefficients::default(), 1e-20, 10_000);
        assert!(m.value < 1e-20);
        assert!((m.point[0] - 1.0).abs() < 1e-9 && (m.point[1] + 2.0).abs() < 1e-9);
    }

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let m = minimize(f, &[-1.2, 1.0], 0.1, &SimplexCoefficients::default(), 1e-16, 20_000);
        assert!(m.value < 1e-12, "value {}", m.value);
    }

    #[test]
    fn respects_iteration_budget() {
        let f = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>();
        let m = minimize(f, &[3.0; 6], 0.5, &SimplexCoefficients::default(), 0.0, 25);
        assert_eq!(m.iters, 25);
    }

    #[test]
    fn default_coefficients_are_valid() {
        assert!(SimplexCoefficients::default().is_valid());
        let bad = SimplexCoefficients { contraction: 1.5, ..Default::default() };
        assert!(!bad.is_valid());
    }
}
