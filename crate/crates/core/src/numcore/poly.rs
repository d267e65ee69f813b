//! Dense univariate polynomials over a [`Ring`].
//!
//! Every polynomial in this crate is stored in a squared variable (`x²`,
//! `z²`) or in `W`; the caller decides which. `Poly<Rational>` is the exact
//! rational polynomial and `Poly<Poly<Rational>>` carries coefficients that
//! are themselves polynomials in the parameter `B`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::field::{Field, Ring};
use super::rational::Rational;

/// Coefficients are indexed by power; the last one is nonzero unless the
/// polynomial is zero (then the list is empty).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "R: Serialize", deserialize = "R: Deserialize<'de> + Ring"))]
#[serde(from = "Vec<R>", into = "Vec<R>")]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
}

pub type RationalPolynomial = Poly<Rational>;
pub type BParamPolynomial = Poly<Poly<Rational>>;

impl<R: Ring> From<Vec<R>> for Poly<R> {
    fn from(coeffs: Vec<R>) -> Self {
        Poly::new(coeffs)
    }
}

impl<R: Ring> From<Poly<R>> for Vec<R> {
    fn from(p: Poly<R>) -> Self {
        p.coeffs
    }
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial `u`.
    pub fn var() -> Self {
        Poly::new(vec![R::zero(), R::one()])
    }

    /// `u + c`.
    pub fn shifted_var(c: R) -> Self {
        Poly::new(vec![c, R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `u^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `p(-u)`: flips the sign of odd-power coefficients.
    pub fn reflect(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Horner evaluation in the coefficient ring.
    pub fn eval(&self, u: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * u.clone() + c.clone())
    }

    /// Composition `self(inner(v))`.
    pub fn compose(&self, inner: &Poly<R>) -> Poly<R> {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * inner) + &Poly::constant(c.clone()))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<Rational> {
    /// Exact division by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn to_monic(&self) -> Self {
        match self.leading() {
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Horner evaluation at a point of any [`Field`], coefficients converted on the fly.
    pub fn eval_in<F: Field>(&self, u: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * u.clone() + F::from_rational(c))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(Rational::to_f64).collect()
    }
}

impl Poly<Poly<Rational>> {
    /// Substitute a value for the inner parameter.
    pub fn at_param(&self, b: &Rational) -> Poly<Rational> {
        self.map(|c| c.eval(b))
    }

    /// Lift a rational polynomial to constant-in-`B` coefficients.
    pub fn from_rational(p: &Poly<Rational>) -> Self {
        p.map(|c| Poly::constant(c.clone()))
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(R::one())
    }
}

impl<R: Ring> Add<&Poly<R>> for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<R: Ring> Sub<&Poly<R>> for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<R: Ring> Mul<&Poly<R>> for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Poly<R>) -> Poly<R> {
        &self + &rhs
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Poly<R>) -> Poly<R> {
        &self - &rhs
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        &self * &rhs
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<R: Ring + fmt::Debug> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// Build a rational polynomial from `(numerator, denominator)` pairs, lowest power first.
pub fn rpoly(coeffs: &[(i64, i64)]) -> RationalPolynomial {
    Poly::new(coeffs.iter().map(|&(p, d)| Rational::new(p, d)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::rational::q;
    use num_complex::Complex64;

    #[test]
    fn normalizes_trailing_zeros() {
        let p = rpoly(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(rpoly(&[(0, 1)]).degree(), None);
    }

    #[test]
    fn horner_examples() {
        // x² − 3/4 at x² = 1
        let p1 = rpoly(&[(-3, 4), (1, 1)]);
        assert_eq!(p1.eval(&q(1, 1)), q(1, 4));
        // g₂ = z² + 3/4 at z² = 1
        let g2 = rpoly(&[(3, 4), (1, 1)]);
        assert_eq!(g2.eval_in(&Complex64::new(1.0, 0.0)), Complex64::new(1.75, 0.0));
        assert_eq!(RationalPolynomial::zero().eval(&q(5, 3)), q(0, 1));
        assert_eq!(RationalPolynomial::zero().eval_in(&2.5f64), 0.0);
    }

    #[test]
    fn compose_and_reflect() {
        // (u + 1)² composed with u − 1 is u²
        let p = rpoly(&[(1, 1), (2, 1), (1, 1)]);
        let inner = Poly::shifted_var(q(-1, 1));
        assert_eq!(p.compose(&inner), rpoly(&[(0, 1), (0, 1), (1, 1)]));
        assert_eq!(p.reflect(), rpoly(&[(1, 1), (-2, 1), (1, 1)]));
    }

    #[test]
    fn nested_coefficients() {
        // (u + B)(u − B) = u² − B²
        let b = Poly::<Rational>::var();
        let a = BParamPolynomial::new(vec![b.clone(), Poly::one()]);
        let c = BParamPolynomial::new(vec![-b, Poly::one()]);
        let prod = &a * &c;
        assert_eq!(prod.coeff(0), rpoly(&[(0, 1), (0, 1), (-1, 1)]));
        assert_eq!(prod.coeff(1), Poly::zero());
        assert!(prod.is_monic());
        assert_eq!(prod.at_param(&q(3, 1)), rpoly(&[(-9, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn json_shape() {
        let p = rpoly(&[(-3, 4), (1, 1)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["-3/4","1"]"#);
        let back: RationalPolynomial = serde_json::from_str(r#"["-3/4","1","0"]"#).unwrap();
        assert_eq!(back, p);
    }
}
