//! Pochhammer symbols and generalized hypergeometric series.
//!
//! [`hyp_pfq_terminating`] sums a series that stops because a numerator
//! parameter is a nonpositive integer; it runs on any [`Field`], so rational
//! inputs give exact results. [`hyp_pfq_series`] sums a convergent `p = q+1`
//! series at `|t| < 1` in complex double precision and reports a rigorous
//! tail-plus-rounding error bound alongside the value.

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::field::Field;
use crate::error::{Error, Result};

/// Rising factorial `a (a+1) ··· (a+k-1)`; `1` when `k = 0`.
pub fn pochhammer<T: Field>(a: &T, k: usize) -> T {
    let mut acc = T::one();
    for j in 0..k {
        acc = acc * (a.clone() + T::from_i64(j as i64));
    }
    acc
}

/// Terminating `pFq(num; den; arg)`.
///
/// Sums terms `k = 0, 1, …` until a numerator factor `(a_i + k)` vanishes,
/// which must happen by `k = terminate_at`. A vanishing denominator factor
/// before that point is a [`Error::DenominatorPole`].
pub fn hyp_pfq_terminating<T: Field>(num: &[T], den: &[T], arg: &T, terminate_at: usize) -> Result<T> {
    let mut sum = T::one();
    let mut term = T::one();
    for k in 0..=terminate_at {
        let kk = T::from_i64(k as i64);
        let mut ratio_num = T::one();
        for a in num {
            ratio_num = ratio_num * (a.clone() + kk.clone());
        }
        if ratio_num.is_zero() {
            return Ok(sum);
        }
        let mut ratio_den = T::from_i64(k as i64 + 1);
        for b in den {
            let f = b.clone() + kk.clone();
            if f.is_zero() {
                return Err(Error::DenominatorPole { term: k + 1 });
            }
            ratio_den = ratio_den * f;
        }
        term = term * ratio_num * arg.clone() / ratio_den;
        if !term.is_finite_value() {
            return Err(Error::NonFinite("hyp_pfq_terminating"));
        }
        sum = sum + term.clone();
    }
    Err(Error::NotTerminating { limit: terminate_at })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Absolute size below which a term counts as negligible.
    pub tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig { tol: 1e-17, max_terms: 10_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    /// Upper bound on `|value - exact|`: geometric tail bound plus rounding.
    pub error_bound: f64,
    pub terms: usize,
}

/// Number of consecutive sub-tolerance terms required before stopping.
const QUIET_TERMS: usize = 3;

/// Convergent `pFq` with `p = q + 1` and `|t| < 1`.
///
/// Stops after three consecutive terms below `cfg.tol`, provided the
/// term-ratio bound already certifies a geometric tail. The ratio of
/// consecutive terms is `|t| · Π|a_i + j| / (Π|b_i + j| · (j+1))`; pairing
/// `a_i` with `b_i` and the last `a` with `j+1` gives factors that are
/// nonincreasing in `j` once `j > max|b_i|`, so the bound evaluated at the
/// current index holds for the whole tail.
pub fn hyp_pfq_series(num: &[Complex64], den: &[Complex64], t: Complex64, cfg: &SeriesConfig) -> Result<SeriesValue> {
    if num.len() != den.len() + 1 {
        return Err(Error::InvalidParameter(format!(
            "convergent series needs p = q + 1, got p = {}, q = {}",
            num.len(),
            den.len()
        )));
    }
    let t_abs = t.norm();
    if !(t_abs < 1.0) {
        return Err(Error::InvalidParameter(format!("|t| = {t_abs} is not < 1")));
    }
    let max_b = den.iter().map(|b| b.norm()).fold(0.0f64, f64::max);
    let ops_per_term = (2 * (num.len() + den.len()) + 3) as f64;

    let mut sum = Complex64::one();
    let mut term = Complex64::one();
    let mut abs_sum = 1.0f64;
    let mut quiet = 0usize;
    for k in 0..cfg.max_terms {
        let kk = k as f64;
        let mut ratio = t / (kk + 1.0);
        let mut vanished = false;
        for a in num {
            let f = a + kk;
            if f.is_zero() {
                vanished = true;
            }
            ratio *= f;
        }
        if vanished {
            let rounding = rounding_bound(k + 1, ops_per_term, abs_sum);
            return Ok(SeriesValue { value: sum, error_bound: rounding, terms: k + 1 });
        }
        for b in den {
            let f = b + kk;
            if f.is_zero() {
                return Err(Error::DenominatorPole { term: k + 1 });
            }
            ratio /= f;
        }
        term *= ratio;
        if !(term.re.is_finite() && term.im.is_finite()) {
            return Err(Error::NonFinite("hyp_pfq_series"));
        }
        sum += term;
        let mag = term.norm();
        abs_sum += mag;
        quiet = if mag < cfg.tol { quiet + 1 } else { 0 };
        let j = kk + 1.0;
        if quiet >= QUIET_TERMS && j > max_b {
            let rho = ratio_bound(num, den, j, t_abs);
            if rho < 1.0 {
                let tail = mag * rho / (1.0 - rho);
                let rounding = rounding_bound(k + 2, ops_per_term, abs_sum);
                return Ok(SeriesValue { value: sum, error_bound: tail + rounding, terms: k + 2 });
            }
        }
    }
    Err(Error::NoConvergence { terms: cfg.max_terms })
}

fn ratio_bound(num: &[Complex64], den: &[Complex64], j: f64, t_abs: f64) -> f64 {
    let mut rho = t_abs;
    for (a, b) in num.iter().zip(den) {
        rho *= (a.norm() + j) / (j - b.norm());
    }
    let last = num.last().map_or(0.0, |a| a.norm());
    rho * ((last + j) / (j + 1.0)).max(1.0)
}

fn rounding_bound(terms: usize, ops_per_term: f64, abs_sum: f64) -> f64 {
    terms as f64 * ops_per_term * f64::EPSILON * abs_sum
}

/// Gauss `2F1(a, b; c; t)` for `|t| < 1`.
pub fn hyp_2f1_series(a: Complex64, b: Complex64, c: Complex64, t: Complex64, cfg: &SeriesConfig) -> Result<SeriesValue> {
    hyp_pfq_series(&[a, b], &[c], t, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::poly::rpoly;
    use crate::numcore::rational::{q, Rational};
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&q(2, 1), 3), q(24, 1));
        assert_eq!(pochhammer(&q(7, 3), 0), q(1, 1));
        assert_eq!(pochhammer(&q(-2, 1), 3), q(0, 1));
        assert_eq!(pochhammer(&c(0.5), 2), c(0.75));
    }

    proptest! {
        #[test]
        fn pochhammer_step(p in -40i64..40, d in 1i64..12, k in 0usize..50) {
            let a = q(p, d);
            let lhs = pochhammer(&a, k + 1);
            let rhs = pochhammer(&a, k) * (&a + Rational::from_integer(k as i64));
            prop_assert_eq!(lhs, rhs);
        }
    }

    fn case_a_4f3_args(z: &Rational) -> (Vec<Rational>, Vec<Rational>) {
        let h = Rational::half();
        (
            vec![q(-2, 1), q(5, 1), &h - z, &h + z],
            vec![q(1, 1), q(2, 1), q(2, 1)],
        )
    }

    #[test]
    fn terminating_examples() {
        let (num, den) = case_a_4f3_args(&Rational::half());
        assert_eq!(hyp_pfq_terminating(&num, &den, &q(1, 1), 2).unwrap(), q(1, 1));

        let zero_first = [q(0, 1), q(3, 7), q(9, 2), q(-5, 3)];
        assert_eq!(
            hyp_pfq_terminating(&zero_first, &[q(1, 3), q(2, 1), q(5, 2)], &q(1, 1), 0).unwrap(),
            q(1, 1)
        );

        // 12/5 · 4F3(-2, 5, 1/2 - z, 1/2 + z; 1, 2, 2; 1) at z = 1 equals g₃(1)
        let (num, den) = case_a_4f3_args(&q(1, 1));
        let f = hyp_pfq_terminating(&num, &den, &q(1, 1), 2).unwrap();
        let g3 = rpoly(&[(117, 80), (7, 2), (1, 1)]);
        assert_eq!(q(12, 5) * f, g3.eval(&q(1, 1)));
        assert_eq!(g3.eval(&q(1, 1)), q(1, 1) + q(7, 2) + q(117, 80));
    }

    #[test]
    fn terminating_errors() {
        let err = hyp_pfq_terminating(&[q(-3, 1), q(1, 1)], &[q(-1, 1)], &q(1, 1), 3).unwrap_err();
        assert_eq!(err, Error::DenominatorPole { term: 2 });
        let err = hyp_pfq_terminating(&[q(1, 2), q(1, 1)], &[q(3, 1)], &q(1, 2), 4).unwrap_err();
        assert_eq!(err, Error::NotTerminating { limit: 4 });
    }

    #[test]
    fn two_f_one_examples() {
        let cfg = SeriesConfig { tol: 1e-16, max_terms: 10_000 };
        let v = hyp_2f1_series(c(0.3), c(-2.5), c(1.7), c(0.0), &cfg).unwrap();
        assert_eq!(v.value, c(1.0));
        let v = hyp_2f1_series(c(1.0), c(1.0), c(1.0), c(0.5), &cfg).unwrap();
        assert!((v.value - c(2.0)).norm() <= 1e-14);
        assert!((v.value - c(2.0)).norm() <= v.error_bound.max(1e-15));
    }

    #[test]
    fn rejects_outside_disk() {
        let cfg = SeriesConfig::default();
        assert!(matches!(
            hyp_2f1_series(c(1.0), c(1.0), c(1.0), c(1.0), &cfg),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            hyp_2f1_series(c(1.0), c(1.0), c(-2.0), c(0.5), &cfg),
            Err(Error::DenominatorPole { .. })
        ));
        let tight = SeriesConfig { tol: 1e-300, max_terms: 20 };
        assert!(matches!(
            hyp_2f1_series(c(1.0), c(1.0), c(1.0), c(0.9), &tight),
            Err(Error::NoConvergence { terms: 20 })
        ));
    }
}
