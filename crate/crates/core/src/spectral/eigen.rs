//! Eigenvalues `ell1 = 2n + 1` and the entire eigenfunctions `f_n` of both
//! special cases, built from the hypergeometric forms of the `g_n`.

use std::f64::consts::PI;

use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numcore::{BParamPolynomial, Complex, Field, Poly, Rational, RationalPolynomial};
use crate::wilson::{case_a_hypergeometric, case_b_hypergeometric_symbolic, to_g_variable, to_g_variable_symbolic, WilsonFamily};

/// `(ell1, alpha)` with `ell1 = 2n + 1` and `alpha = (ell1² - 1)/3`.
pub fn eigenvalue(n: usize) -> (u64, Rational) {
    let ell1 = 2 * n as u64 + 1;
    let alpha = Rational::from_integer((ell1 * ell1 - 1) as i64) / Rational::from_integer(3);
    (ell1, alpha)
}

/// The case B parameter as carried by a record.
#[derive(Debug, Clone, PartialEq)]
pub enum BValue {
    Symbolic,
    Exact(Rational),
}

#[derive(Debug, Clone, PartialEq)]
pub enum RecordCase {
    A,
    B(BValue),
}

/// The `g` function of a difference equation in the variable `z`.
#[derive(Debug, Clone, PartialEq)]
pub enum GFunction {
    /// `1/(z² - 1/4)`: the case A ground state, which is not a polynomial.
    Reciprocal,
    /// Polynomial in `z²`.
    Poly(RationalPolynomial),
}

impl GFunction {
    pub fn eval<F: Field>(&self, z: &F) -> Result<F> {
        let z2 = z.clone() * z.clone();
        match self {
            GFunction::Poly(p) => Ok(p.eval_in(&z2)),
            GFunction::Reciprocal => {
                let d = z2 - F::from_rational(&Rational::new(1, 4));
                if d.is_zero() {
                    return Err(Error::DomainPole { what: "g_0 at z = ±1/2".into() });
                }
                Ok(F::one() / d)
            }
        }
    }
}

/// Case A `g_n`: `g_0 = 1/(z² - 1/4)`, and `g_n(z) = (-1)^{n-1} P_{n-1}(-z²)` for `n ≥ 1`.
pub fn g_case_a(n: usize) -> GFunction {
    if n == 0 {
        GFunction::Reciprocal
    } else {
        GFunction::Poly(to_g_variable(n - 1, &case_a_hypergeometric(n - 1)))
    }
}

/// Case B `g_n(B, z) = (-1)^n P_n(-z²)` with `B` symbolic.
pub fn g_case_b_symbolic(n: usize) -> BParamPolynomial {
    to_g_variable_symbolic(n, &case_b_hypergeometric_symbolic(n))
}

/// Polynomial part of `f_n`, i.e. `f_n` divided by its exponential prefactor.
#[derive(Debug, Clone, PartialEq)]
pub enum PolynomialPart {
    /// `f_0` of case A is the bare prefactor; its `g_0` is the rational `1/(z² - 1/4)`.
    PrefactorOnly,
    InW(RationalPolynomial),
    /// Coefficient of `W^k` is a polynomial in `B`.
    InWB(BParamPolynomial),
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenpairRecord {
    pub n: usize,
    pub ell1: u64,
    pub alpha: Rational,
    pub case: RecordCase,
    pub part: PolynomialPart,
    pub prefactor: &'static str,
}

const PREFACTOR_A: &str = "exp(i*pi*sqrt(W+1/4))";
const PREFACTOR_B: &str = "exp(i*pi*sqrt(W+B+1/4))";

/// `f_n` of case A. For `n ≥ 1` the polynomial part is `W · g_n(sqrt(W + 1/4))`.
pub fn eigenfunction_case_a(n: usize) -> EigenpairRecord {
    let (ell1, alpha) = eigenvalue(n);
    let part = match g_case_a(n) {
        GFunction::Reciprocal => PolynomialPart::PrefactorOnly,
        GFunction::Poly(g) => {
            let z2 = Poly::new(vec![Rational::new(1, 4), Rational::one()]);
            PolynomialPart::InW(&Poly::var() * &g.compose(&z2))
        }
    };
    EigenpairRecord { n, ell1, alpha, case: RecordCase::A, part, prefactor: PREFACTOR_A }
}

/// `f_n(B, W) = e^{iπz} g_n(B, z)` with `z² = W + B + 1/4`.
///
/// A numeric `B` with `sqrt(B+1) ∈ {1, …, n}` is rejected since the
/// hypergeometric normalization vanishes there; use the symbolic record and
/// [`EigenpairRecord::at_b`] for the limiting polynomial.
pub fn eigenfunction_case_b(n: usize, b: &BValue) -> Result<EigenpairRecord> {
    let (ell1, alpha) = eigenvalue(n);
    let g = g_case_b_symbolic(n);
    let z2: BParamPolynomial = Poly::new(vec![Poly::new(vec![Rational::new(1, 4), Rational::one()]), Poly::one()]);
    let in_wb = g.compose(&z2);
    let part = match b {
        BValue::Symbolic => PolynomialPart::InWB(in_wb),
        BValue::Exact(bv) => {
            WilsonFamily::case_b(bv.clone())?.require_nondegenerate_up_to(n)?;
            PolynomialPart::InW(in_wb.at_param(bv))
        }
    };
    Ok(EigenpairRecord { n, ell1, alpha, case: RecordCase::B(b.clone()), part, prefactor: PREFACTOR_B })
}

impl EigenpairRecord {
    /// Substitute an exact `B` into a symbolic record. Works at degenerate `B`.
    pub fn at_b(&self, b: &Rational) -> Option<EigenpairRecord> {
        match &self.part {
            PolynomialPart::InWB(p) => Some(EigenpairRecord {
                case: RecordCase::B(BValue::Exact(b.clone())),
                part: PolynomialPart::InW(p.at_param(b)),
                ..self.clone()
            }),
            _ => None,
        }
    }

    /// Polynomial part as an exact polynomial in `W` (`1` for the prefactor-only record).
    pub fn polynomial(&self) -> Option<RationalPolynomial> {
        match &self.part {
            PolynomialPart::PrefactorOnly => Some(Poly::one()),
            PolynomialPart::InW(p) => Some(p.clone()),
            PolynomialPart::InWB(_) => None,
        }
    }

    /// A numeric evaluator `W ↦ f_n(W)`. `b` is used only for symbolic case B
    /// records (and ignored for case A). The principal root is used and a
    /// negative radicand yields NaN, which the residual evaluators reject.
    pub fn evaluator(&self, b: f64) -> impl Fn(f64) -> Complex {
        let coeffs: Vec<f64> = match &self.part {
            PolynomialPart::PrefactorOnly => vec![1.0],
            PolynomialPart::InW(p) => p.to_f64_coeffs(),
            PolynomialPart::InWB(p) => p.coeffs().iter().map(|c| c.eval_in(&b)).collect(),
        };
        let shift = match &self.case {
            RecordCase::A => 0.0,
            RecordCase::B(BValue::Exact(bv)) => bv.to_f64(),
            RecordCase::B(BValue::Symbolic) => b,
        };
        move |w: f64| {
            let poly = coeffs.iter().rev().fold(0.0, |acc, c| acc * w + c);
            let z = (w + shift + 0.25).sqrt();
            Complex::from_polar(1.0, PI * z) * poly
        }
    }

    pub fn to_json(&self) -> Value {
        let (case, b) = match &self.case {
            RecordCase::A => ("A", Value::Null),
            RecordCase::B(BValue::Symbolic) => ("B", json!("symbolic")),
            RecordCase::B(BValue::Exact(b)) => ("B", json!(b)),
        };
        let poly = match &self.part {
            PolynomialPart::PrefactorOnly => Value::Null,
            PolynomialPart::InW(p) => json!(p.coeffs()),
            PolynomialPart::InWB(p) => json!(p.coeffs().iter().map(|c| c.coeffs().to_vec()).collect::<Vec<_>>()),
        };
        let mut v = json!({
            "n": self.n,
            "ell1": self.ell1,
            "alpha": self.alpha,
            "case": case,
            "B": b,
            "poly": poly,
            "prefactor": self.prefactor,
        });
        if self.part == PolynomialPart::PrefactorOnly {
            v["g"] = json!("1/(z^2-1/4)");
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::{q, rpoly};
    use num_traits::Zero;

    #[test]
    fn eigenvalues() {
        assert_eq!(eigenvalue(0), (1, q(0, 1)));
        assert_eq!(eigenvalue(1), (3, q(8, 3)));
        assert_eq!(eigenvalue(3), (7, q(16, 1)));
    }

    #[test]
    fn case_a_parts() {
        assert_eq!(eigenfunction_case_a(0).part, PolynomialPart::PrefactorOnly);
        assert_eq!(eigenfunction_case_a(2).polynomial().unwrap(), rpoly(&[(0, 1), (1, 1), (1, 1)]));
        assert_eq!(eigenfunction_case_a(3).polynomial().unwrap(), rpoly(&[(0, 1), (12, 5), (4, 1), (1, 1)]));
        for n in 1..8 {
            let p = eigenfunction_case_a(n).polynomial().unwrap();
            assert!(p.coeff(0).is_zero() && p.is_monic() && p.degree() == Some(n));
        }
    }

    #[test]
    fn case_b_parts() {
        let r1 = eigenfunction_case_b(1, &BValue::Symbolic).unwrap();
        let PolynomialPart::InWB(p) = &r1.part else { panic!() };
        // B/2 + W
        assert_eq!(p.coeff(0), rpoly(&[(0, 1), (1, 2)]));
        assert_eq!(p.coeff(1), Poly::one());
        let r2 = eigenfunction_case_b(2, &BValue::Symbolic).unwrap();
        let PolynomialPart::InWB(p) = &r2.part else { panic!() };
        // B²/6 + B(W + 1/2) + W(W + 1)
        assert_eq!(p.coeff(0), rpoly(&[(0, 1), (1, 2), (1, 6)]));
        assert_eq!(p.coeff(1), rpoly(&[(1, 1), (1, 1)]));
        assert_eq!(p.coeff(2), Poly::one());
    }

    #[test]
    fn b_zero_reduces_to_case_a() {
        for n in 0..7 {
            let b = eigenfunction_case_b(n, &BValue::Symbolic).unwrap().at_b(&q(0, 1)).unwrap();
            assert_eq!(b.polynomial(), eigenfunction_case_a(n).polynomial());
        }
    }

    #[test]
    fn degenerate_numeric_b_rejected() {
        assert!(matches!(eigenfunction_case_b(2, &BValue::Exact(q(0, 1))), Err(Error::DegenerateFamily { .. })));
        assert!(eigenfunction_case_b(0, &BValue::Exact(q(0, 1))).is_ok());
        assert!(eigenfunction_case_b(3, &BValue::Exact(q(3, 2))).is_ok());
    }

    #[test]
    fn eigen_json_shape() {
        let v = eigenfunction_case_a(2).to_json();
        assert_eq!(v["ell1"], 5);
        assert_eq!(v["alpha"], "8");
        assert_eq!(v["poly"], json!(["0", "1", "1"]));
    }
}
