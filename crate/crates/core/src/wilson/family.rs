use std::f64::consts::PI;
use std::fmt;

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numcore::{Complex, Rational};

/// Which specialization of the Wilson parameters `(a, b, c, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WilsonCase {
    /// `a = b = 1/2`, `c = d = 3/2`.
    A,
    /// `a = b = 1/2`, `c = 1/2 - sqrt(B+1)`, `d = 1/2 + sqrt(B+1)`.
    B(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WilsonFamily {
    case: WilsonCase,
}

/// Numeric Wilson parameters of a family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WilsonParameters {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl WilsonFamily {
    pub fn case_a() -> Self {
        WilsonFamily { case: WilsonCase::A }
    }

    /// Case B with an exact parameter; requires `B > -1`.
    pub fn case_b(b: Rational) -> Result<Self> {
        if b <= Rational::from_integer(-1) {
            return Err(Error::InvalidParameter(format!("B = {b} must exceed -1")));
        }
        Ok(WilsonFamily { case: WilsonCase::B(b) })
    }

    /// Case B from a double, taken at its exact binary value.
    pub fn case_b_f64(b: f64) -> Result<Self> {
        let exact = Rational::from_f64(b).ok_or_else(|| Error::InvalidParameter(format!("B = {b} is not finite")))?;
        WilsonFamily::case_b(exact)
    }

    pub fn case(&self) -> &WilsonCase {
        &self.case
    }

    pub fn is_case_a(&self) -> bool {
        matches!(self.case, WilsonCase::A)
    }

    pub fn b_exact(&self) -> Option<&Rational> {
        match &self.case {
            WilsonCase::A => None,
            WilsonCase::B(b) => Some(b),
        }
    }

    /// `B` as a double; zero for case A (which is the `B = 0` reduction of the master equation).
    pub fn b_value(&self) -> f64 {
        self.b_exact().map_or(0.0, Rational::to_f64)
    }

    /// `sqrt(B+1)` for case B.
    pub fn root(&self) -> Option<f64> {
        self.b_exact().map(|b| (b.to_f64() + 1.0).sqrt())
    }

    pub fn parameters(&self) -> WilsonParameters {
        match self.root() {
            None => WilsonParameters { a: 0.5, b: 0.5, c: 1.5, d: 1.5 },
            Some(s) => WilsonParameters { a: 0.5, b: 0.5, c: 0.5 - s, d: 0.5 + s },
        }
    }

    /// `Some(k)` when `sqrt(B+1) = k` is a positive integer.
    pub fn degenerate_root(&self) -> Option<u64> {
        let b = self.b_exact()?;
        let r = (b + Rational::one()).sqrt_exact()?;
        if r.is_integer() && r.is_positive() {
            r.numer().to_u64()
        } else {
            None
        }
    }

    /// Error unless the Gamma-factor normalization of the family is finite and nonzero.
    pub fn require_nondegenerate(&self) -> Result<()> {
        match self.degenerate_root() {
            Some(root) => Err(Error::DegenerateFamily { root }),
            None => Ok(()),
        }
    }

    /// Error when `sqrt(B+1)` is one of `1, …, n`, where `(1 - sqrt(B+1))_n` vanishes.
    pub fn require_nondegenerate_up_to(&self, n: usize) -> Result<()> {
        match self.degenerate_root() {
            Some(root) if root as usize <= n => Err(Error::DegenerateFamily { root }),
            _ => Ok(()),
        }
    }

    /// `Π_{j=1..n} (j² - 1 - B) = (1 - s)_n (1 + s)_n` for case B, exactly.
    pub fn shifted_pochhammer_product(&self, n: usize) -> Option<Rational> {
        let b = self.b_exact()?;
        Some(
            (1..=n as i64)
                .map(|j| Rational::from_integer(j * j - 1) - b)
                .product(),
        )
    }

    /// `Γ(1 - s) Γ(1 + s) = π s / sin(π s)` for case B.
    pub fn reflection_factor(&self) -> Option<f64> {
        self.root().map(|s| PI * s / (PI * s).sin())
    }

    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for WilsonFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.case {
            WilsonCase::A => write!(f, "A"),
            WilsonCase::B(b) => write!(f, "B(B={b})"),
        }
    }
}

/// A point mass of the orthogonality measure, located at `x² = u = -z²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassPoint {
    pub u: f64,
    /// `z = sqrt(-u) > 0`.
    pub z: f64,
    pub mass: f64,
}

/// The orthogonality measure of a family: an absolutely continuous weight on
/// `(0, ∞)` plus, for case B with `c < 0`, finitely many point masses on the
/// negative `x²` axis. The `π²/4` and `4π²` prefactors are folded in.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightFunction {
    family: WilsonFamily,
    cos_two_pi_s: f64,
    masses: Vec<MassPoint>,
}

impl WeightFunction {
    pub fn new(family: &WilsonFamily) -> Result<Self> {
        family.require_nondegenerate()?;
        let (cos_two_pi_s, masses) = match family.root() {
            None => (0.0, Vec::new()),
            Some(s) => {
                let sin_pi_s = (PI * s).sin();
                let scale = 2.0 * PI * PI / (sin_pi_s * sin_pi_s);
                // c + k < 0 for k < s - 1/2; the mass telescopes to 2π²(s-1/2-k)/sin²(πs).
                let masses = (0..)
                    .map(|k| s - 0.5 - k as f64)
                    .take_while(|&z| z > 0.0)
                    .map(|z| MassPoint { u: -z * z, z, mass: scale * z })
                    .collect();
                ((2.0 * PI * s).cos(), masses)
            }
        };
        Ok(WeightFunction { family: family.clone(), cos_two_pi_s, masses })
    }

    pub fn family(&self) -> &WilsonFamily {
        &self.family
    }

    /// Density at `x > 0`.
    pub fn eval(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let e = (-2.0 * PI * x).exp();
        if self.family.is_case_a() {
            // sinh/cosh³ = tanh·sech², sech² = 4e/(1+e)²
            let one_plus = 1.0 + 4.0 * x * x;
            let tanh = (1.0 - e) / (1.0 + e);
            let sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
            PI * PI / 4.0 * x * one_plus * one_plus * tanh * sech2
        } else {
            let tanh = (1.0 - e) / (1.0 + e);
            // 1/(cos 2πs + cosh 2πx) = 2e / (1 + 2 cos(2πs) e + e²)
            let inv = 2.0 * e / (1.0 + 2.0 * self.cos_two_pi_s * e + e * e);
            4.0 * PI * PI * x * tanh * inv
        }
    }

    pub fn discrete_masses(&self) -> &[MassPoint] {
        &self.masses
    }

    /// Exponential decay rate of the density: `w(x) ~ C x^p e^{-2πx}`.
    pub fn decay_rate(&self) -> f64 {
        2.0 * PI
    }

    /// Power `p` in the large-`x` envelope of the density.
    pub fn envelope_power(&self) -> i32 {
        if self.family.is_case_a() {
            5
        } else {
            1
        }
    }
}

/// Squared norm `⟨P_n, P_n⟩` split into an exact rational factor and a
/// transcendental factor (one for case A, `(π s / sin π s)²` for case B).
#[derive(Debug, Clone, PartialEq)]
pub struct NormValue {
    pub rational_factor: Rational,
    pub transcendental_factor: f64,
    pub value: f64,
}

impl NormValue {
    fn exact(r: Rational) -> Self {
        let value = r.to_f64();
        NormValue { rational_factor: r, transcendental_factor: 1.0, value }
    }

    pub fn exact_value(&self) -> Option<&Rational> {
        (self.transcendental_factor == 1.0).then_some(&self.rational_factor)
    }
}

fn fact(n: usize) -> Rational {
    Rational::factorial(n as u64)
}

/// `⟨P_n, P_n⟩` under the family's full measure.
///
/// Case A: `2 (n!)² ((n+1)!)⁴ ((n+2)!)² / ((2n+2)! (2n+3)!)`.
/// Case B: `(n!)⁴ Γ²(n+1-s) Γ²(n+1+s) / ((2n)! (2n+1)!)`, with the Gamma
/// factors rewritten as `(1-s)_n (1+s)_n · π s / sin π s`.
pub fn squared_norm(family: &WilsonFamily, n: usize) -> Result<NormValue> {
    match family.case() {
        WilsonCase::A => {
            let r = Rational::from_integer(2) * fact(n).pow(2) * fact(n + 1).pow(4) * fact(n + 2).pow(2)
                / (fact(2 * n + 2) * fact(2 * n + 3));
            Ok(NormValue::exact(r))
        }
        WilsonCase::B(_) => {
            family.require_nondegenerate()?;
            let poch = family.shifted_pochhammer_product(n).unwrap_or_else(Rational::one);
            let r = fact(n).pow(4) * poch.pow(2) / (fact(2 * n) * fact(2 * n + 1));
            let refl = family.reflection_factor().unwrap_or(1.0);
            let t = refl * refl;
            Ok(NormValue { value: r.to_f64() * t, rational_factor: r, transcendental_factor: t })
        }
    }
}

/// The right-hand side of the orthogonality relation exactly as printed.
///
/// For case A the printed expression is
/// `(n!)² ((n+1)!)⁴ ((n+2)!)⁴ / (((2n+2)!)² (2n+3)!)`, which agrees with
/// [`squared_norm`] only at `n = 0`. For case B the printed expression is
/// the same as [`squared_norm`] (it holds once the point masses are part of
/// the measure).
pub fn printed_squared_norm(family: &WilsonFamily, n: usize) -> Result<NormValue> {
    match family.case() {
        WilsonCase::A => {
            let r = fact(n).pow(2) * fact(n + 1).pow(4) * fact(n + 2).pow(4)
                / (fact(2 * n + 2).pow(2) * fact(2 * n + 3));
            Ok(NormValue::exact(r))
        }
        WilsonCase::B(_) => squared_norm(family, n),
    }
}

/// Weight and squared norm together.
pub fn weight_and_norm(family: &WilsonFamily, n: usize) -> Result<(WeightFunction, NormValue)> {
    Ok((WeightFunction::new(family)?, squared_norm(family, n)?))
}

/// Numeric three-term recurrence `P_n = (u + β_n) P_{n-1} - γ_n P_{n-2}` of the
/// monic family, used to evaluate `P_0..P_N` at a point in floating point.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericRecurrence {
    beta: Vec<f64>,
    gamma: Vec<f64>,
}

impl NumericRecurrence {
    pub fn new(family: &WilsonFamily, n_max: usize) -> Self {
        let mut beta = vec![0.0];
        let mut gamma = vec![0.0];
        for n in 1..=n_max {
            let (b, g) = super::tables::corrected_coefficients(family.case(), n);
            beta.push(b.to_f64());
            gamma.push(g.to_f64());
        }
        NumericRecurrence { beta, gamma }
    }

    pub fn n_max(&self) -> usize {
        self.beta.len() - 1
    }

    /// `[P_0(u), …, P_{n_max}(u)]`.
    pub fn eval_all(&self, u: f64) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.beta.len());
        out.push(1.0);
        for n in 1..self.beta.len() {
            let prev2 = if n >= 2 { out[n - 2] } else { 0.0 };
            out.push((u + self.beta[n]) * out[n - 1] - self.gamma[n] * prev2);
        }
        out
    }

    pub fn eval_all_complex(&self, u: Complex) -> Vec<Complex> {
        let mut out = Vec::with_capacity(self.beta.len());
        out.push(Complex::one());
        for n in 1..self.beta.len() {
            let prev = out[n - 1];
            let prev2 = if n >= 2 { out[n - 2] } else { Complex::zero() };
            out.push((u + self.beta[n]) * prev - prev2 * self.gamma[n]);
        }
        out
    }
}

/// Whether `B + 1` is the square of a positive integer.
pub fn is_square_minus_one(b: &Rational) -> bool {
    (b + Rational::one())
        .sqrt_exact()
        .is_some_and(|r| r.is_integer() && r.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::q;

    #[test]
    fn case_a_norm_at_zero_is_two_thirds() {
        let n0 = squared_norm(&WilsonFamily::case_a(), 0).unwrap();
        assert_eq!(n0.exact_value(), Some(&q(2, 3)));
        let printed = printed_squared_norm(&WilsonFamily::case_a(), 0).unwrap();
        assert_eq!(printed.rational_factor, q(2, 3));
    }

    #[test]
    fn printed_case_a_norm_differs_from_n_one() {
        let fam = WilsonFamily::case_a();
        assert_eq!(squared_norm(&fam, 1).unwrap().rational_factor, q(2, 5));
        assert_eq!(printed_squared_norm(&fam, 1).unwrap().rational_factor, q(3, 10));
        for n in 1..8 {
            assert_ne!(
                squared_norm(&fam, n).unwrap().rational_factor,
                printed_squared_norm(&fam, n).unwrap().rational_factor
            );
        }
    }

    #[test]
    fn case_a_weight_positive() {
        let w = WeightFunction::new(&WilsonFamily::case_a()).unwrap();
        for x in [1e-6, 0.1, 0.5, 1.0, 3.0, 10.0, 40.0] {
            assert!(w.eval(x) > 0.0, "w({x})");
        }
        assert!(w.discrete_masses().is_empty());
    }

    #[test]
    fn case_b_weight_matches_direct_formula() {
        let fam = WilsonFamily::case_b(q(3, 2)).unwrap();
        let w = WeightFunction::new(&fam).unwrap();
        let s = 2.5f64.sqrt();
        for x in [0.2, 0.9, 2.5] {
            let direct = 4.0 * PI * PI * x * (PI * x).tanh() / ((2.0 * PI * s).cos() + (2.0 * PI * x).cosh());
            assert!((w.eval(x) - direct).abs() <= 1e-14 * direct);
        }
    }

    #[test]
    fn case_b_masses() {
        // B = -0.9: c = 1/2 - sqrt(0.1) > 0, no masses
        let w = WeightFunction::new(&WilsonFamily::case_b(q(-9, 10)).unwrap()).unwrap();
        assert!(w.discrete_masses().is_empty());
        // B = 1.5: two masses
        let w = WeightFunction::new(&WilsonFamily::case_b(q(3, 2)).unwrap()).unwrap();
        let m = w.discrete_masses();
        assert_eq!(m.len(), 2);
        assert!((m[0].mass - 22.789_835_964_522_31).abs() < 1e-9);
        assert!((m[1].u + 0.006_583_509_747_431_002).abs() < 1e-12);
        // B = 7.3: three masses
        let w = WeightFunction::new(&WilsonFamily::case_b(q(73, 10)).unwrap()).unwrap();
        assert_eq!(w.discrete_masses().len(), 3);
    }

    #[test]
    fn degenerate_b_rejected_for_norms() {
        for b in [0, 3, 8, 15] {
            let fam = WilsonFamily::case_b(q(b, 1)).unwrap();
            assert!(matches!(weight_and_norm(&fam, 0), Err(Error::DegenerateFamily { .. })));
            assert!(is_square_minus_one(&q(b, 1)));
        }
        assert!(WilsonFamily::case_b(q(-1, 1)).is_err());
        assert!(WilsonFamily::case_b(q(3, 2)).unwrap().require_nondegenerate().is_ok());
        let fam = WilsonFamily::case_b(q(8, 1)).unwrap();
        assert!(fam.require_nondegenerate_up_to(2).is_ok());
        assert!(fam.require_nondegenerate_up_to(3).is_err());
    }

    #[test]
    fn case_b_norm_against_gamma_values() {
        // B = 1.5, n = 0: Γ(1-s)²Γ(1+s)² with s = sqrt(2.5); reference from a
        // 30-digit evaluation of the printed Gamma form.
        let fam = WilsonFamily::case_b(q(3, 2)).unwrap();
        let n0 = squared_norm(&fam, 0).unwrap();
        assert!((n0.value - 26.349_340_309_453_64).abs() < 1e-10);
        let n3 = squared_norm(&fam, 3).unwrap();
        assert!((n3.value - 2.012_813_166_830_976).abs() < 1e-12);
    }
}
