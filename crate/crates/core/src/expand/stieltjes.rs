//! Numeric orthogonalization of `{1, u, u², …}` under a family's measure.
//!
//! The measure is discretized once (composite Kronrod nodes on `[0, X]` plus
//! the point masses) and the monic orthogonal polynomials are generated by
//! the Stieltjes procedure, i.e. Gram–Schmidt applied to `u · P_k`. Nothing
//! here uses the closed-form tables or recurrences of the families.

use std::f64::consts::PI;

use serde::Serialize;

use super::quadrature::KronrodRule;
use crate::error::Result;
use crate::wilson::{WeightFunction, WilsonFamily};

/// A positive discrete measure on the `u = x²` line.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl DiscreteMeasure {
    /// Discretize the measure of `family` with `panels_per_unit` Kronrod panels
    /// per unit length in `x` on `[0, cutoff]`.
    pub fn from_family(family: &WilsonFamily, cutoff: f64, panels_per_unit: usize) -> Result<Self> {
        let weight = WeightFunction::new(family)?;
        let rule = KronrodRule::for_order(21)?;
        let panels = ((cutoff * panels_per_unit as f64).ceil() as usize).max(1);
        let h = cutoff / panels as f64;
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for k in 0..panels {
            for (x, wq) in rule.nodes(k as f64 * h, (k + 1) as f64 * h) {
                let w = weight.eval(x) * wq;
                if w > 0.0 {
                    nodes.push(x * x);
                    weights.push(w);
                }
            }
        }
        for m in weight.discrete_masses() {
            nodes.push(m.u);
            weights.push(m.mass);
        }
        Ok(DiscreteMeasure { nodes, weights })
    }

    /// A cutoff that leaves `e^{-2πX} X^{4n+5}` negligible for degree `n` polynomials.
    pub fn default_cutoff(n_max: usize) -> f64 {
        let p = (4 * n_max + 5) as f64;
        // solve 2πX - p ln X ≥ 40 ln 10 by fixed-point iteration
        let mut x = 20.0f64;
        for _ in 0..50 {
            x = (40.0 * std::f64::consts::LN_10 + p * x.ln()) / (2.0 * PI);
        }
        x + 2.0
    }
}

/// Recurrence coefficients of the monic orthogonal polynomials:
/// `P_{k+1} = (u - alpha_k) P_k - beta_k P_{k-1}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StieltjesResult {
    pub alpha: Vec<f64>,
    /// `beta[0]` is the total mass.
    pub beta: Vec<f64>,
}

impl StieltjesResult {
    /// Monomial coefficients of `P_0..P_n`, lowest power first.
    pub fn monic_coefficients(&self) -> Vec<Vec<f64>> {
        let n = self.alpha.len();
        let mut out: Vec<Vec<f64>> = vec![vec![1.0]];
        for k in 0..n {
            let prev = &out[k];
            let mut next = vec![0.0; prev.len() + 1];
            for (j, c) in prev.iter().enumerate() {
                next[j + 1] += c;
                next[j] -= self.alpha[k] * c;
            }
            if k >= 1 {
                for (j, c) in out[k - 1].iter().enumerate() {
                    next[j] -= self.beta[k] * c;
                }
            }
            out.push(next);
        }
        out
    }
}

/// Stieltjes procedure for `n` steps, giving `P_0..P_n`.
pub fn stieltjes(measure: &DiscreteMeasure, n: usize) -> StieltjesResult {
    let m = measure.nodes.len();
    let mut p_prev = vec![0.0; m];
    let mut p = vec![1.0; m];
    let mut alpha = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);
    let mut norm_prev = 1.0;
    for k in 0..n {
        let mut norm = 0.0;
        let mut first = 0.0;
        for i in 0..m {
            let w = measure.weights[i] * p[i] * p[i];
            norm += w;
            first += w * measure.nodes[i];
        }
        let a = first / norm;
        let b = if k == 0 { norm } else { norm / norm_prev };
        alpha.push(a);
        beta.push(b);
        let next: Vec<f64> = (0..m)
            .map(|i| (measure.nodes[i] - a) * p[i] - if k == 0 { 0.0 } else { b * p_prev[i] })
            .collect();
        p_prev = std::mem::replace(&mut p, next);
        norm_prev = norm;
    }
    StieltjesResult { alpha, beta }
}

/// Convenience: discretize with defaults and run `n` steps.
pub fn gram_schmidt_oracle(family: &WilsonFamily, n: usize) -> Result<StieltjesResult> {
    let measure = DiscreteMeasure::from_family(family, DiscreteMeasure::default_cutoff(n), 8)?;
    Ok(stieltjes(&measure, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_a_first_steps() {
        let r = gram_schmidt_oracle(&WilsonFamily::case_a(), 3).unwrap();
        assert!((r.beta[0] - 2.0 / 3.0).abs() < 1e-12);
        // P_1 = u - 3/4
        assert!((r.alpha[0] - 0.75).abs() < 1e-12);
        let c = r.monic_coefficients();
        assert!((c[2][1] + 3.5).abs() < 1e-10);
        assert!((c[2][0] - 117.0 / 80.0).abs() < 1e-10);
    }
}
