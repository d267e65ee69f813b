use std::f64::consts::PI;

use num_traits::{One, Zero};
use serde::Serialize;

use super::family::{WilsonCase, WilsonFamily};
use super::tables::corrected_coefficients;
use crate::error::{Error, Result};
use crate::numcore::{complex, hyp_2f1_series, hyp_pfq_series, Complex, Rational, SeriesConfig, SeriesValue};

/// The generating-function identities of the two families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratingIdentity {
    /// `Σ 2(2n+2)! P_n tⁿ / ((n!)² ((n+2)!)²)` as a product of two `2F1`.
    A1,
    /// `Σ (2n+2)! P_n tⁿ / (n! ((n+1)!)² (n+2)!)` as a product of two `2F1`.
    A2,
    /// `Σ (2n+2)! P_n tⁿ / ((n!)² ((n+1)!)²)` as a `4F3` in `4t/(1+t)²`.
    A3,
    /// `Σ (2n)! P_n tⁿ / (n!)⁴` as a product of two `2F1`.
    B4,
    /// `Σ (2n)! P_n tⁿ / ((n!)² Γ(n+1-s) Γ(n+1+s))` as a product of two `2F1`.
    B5Product,
    /// The same sum as a `4F3` in `4t/(1+t)²`.
    B5Hypergeometric,
}

impl GeneratingIdentity {
    pub const ALL: [GeneratingIdentity; 6] = [
        GeneratingIdentity::A1,
        GeneratingIdentity::A2,
        GeneratingIdentity::A3,
        GeneratingIdentity::B4,
        GeneratingIdentity::B5Product,
        GeneratingIdentity::B5Hypergeometric,
    ];

    pub fn is_case_a(self) -> bool {
        matches!(self, GeneratingIdentity::A1 | GeneratingIdentity::A2 | GeneratingIdentity::A3)
    }

    pub fn id(self) -> &'static str {
        match self {
            GeneratingIdentity::A1 => "A4.1",
            GeneratingIdentity::A2 => "A4.2",
            GeneratingIdentity::A3 => "A4.3",
            GeneratingIdentity::B4 => "B4",
            GeneratingIdentity::B5Product => "B5.1",
            GeneratingIdentity::B5Hypergeometric => "B5.2",
        }
    }
}

/// Which reading of an identity to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityForm {
    /// A4.1 with the second `2F1` having lower parameter 3, and A4.3 with
    /// the left side halved. The other identities are unchanged.
    Corrected,
    AsPrinted,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratingCheck {
    pub identity: GeneratingIdentity,
    pub form: IdentityForm,
    pub x: f64,
    pub t: f64,
    pub terms: usize,
    #[serde(with = "crate::numcore::complex_json")]
    pub lhs: Complex,
    #[serde(with = "crate::numcore::complex_json")]
    pub rhs: Complex,
    pub difference: f64,
    /// `|S_{2N} - S_N|`, an estimate of the truncation error of the left side.
    pub truncation_bound: f64,
    /// Certified error bound of the right-hand series.
    pub rhs_error_bound: f64,
    pub tol: f64,
    pub passed: bool,
}

fn fact(n: usize) -> Rational {
    Rational::factorial(n as u64)
}

fn lhs_coefficient(identity: GeneratingIdentity, form: IdentityForm, family: &WilsonFamily, n: usize) -> Rational {
    match identity {
        GeneratingIdentity::A1 => Rational::from_integer(2) * fact(2 * n + 2) / (fact(n).pow(2) * fact(n + 2).pow(2)),
        GeneratingIdentity::A2 => fact(2 * n + 2) / (fact(n) * fact(n + 1).pow(2) * fact(n + 2)),
        GeneratingIdentity::A3 => {
            let c = fact(2 * n + 2) / (fact(n).pow(2) * fact(n + 1).pow(2));
            match form {
                IdentityForm::AsPrinted => c,
                IdentityForm::Corrected => c * Rational::half(),
            }
        }
        GeneratingIdentity::B4 => fact(2 * n) / fact(n).pow(4),
        GeneratingIdentity::B5Product | GeneratingIdentity::B5Hypergeometric => {
            let poch = family.shifted_pochhammer_product(n).expect("case B family");
            fact(2 * n) / (fact(n).pow(2) * poch)
        }
    }
}

/// Partial sums `Σ_{n≤N} c_n P_n(x²) tⁿ` for `N = short` and `N = long`,
/// exact at the binary values of `x` and `t`. `P_n(x²)` comes from the exact
/// scalar three-term recurrence at the point.
/// The shortest decimal that rounds to `x`, as an exact rational. Keeps
/// denominators small; differs from `x` by less than half an ulp.
fn short_rational(x: f64) -> Option<Rational> {
    format!("{x}").parse().ok().or_else(|| Rational::from_f64(x))
}

fn lhs_partial_sums(
    identity: GeneratingIdentity,
    form: IdentityForm,
    family: &WilsonFamily,
    x: f64,
    t: f64,
    short: usize,
    long: usize,
) -> Result<(Rational, Rational)> {
    let xr = short_rational(x).ok_or(Error::NonFinite("x"))?;
    let tr = short_rational(t).ok_or(Error::NonFinite("t"))?;
    let u = &xr * &xr;
    let mut sum = Rational::zero();
    let mut short_sum = Rational::zero();
    let mut tn = Rational::one();
    let (mut p_prev, mut p) = (Rational::zero(), Rational::one());
    for n in 0..=long {
        if n > 0 {
            let (beta, gamma) = corrected_coefficients(family.case(), n);
            let next = (&u + &beta) * &p - gamma * &p_prev;
            p_prev = std::mem::replace(&mut p, next);
        }
        sum += &(lhs_coefficient(identity, form, family, n) * &p * &tn);
        tn = tn * &tr;
        if n == short {
            short_sum = sum.clone();
        }
    }
    Ok((short_sum, sum))
}

fn product(a: SeriesValue, b: SeriesValue) -> (Complex, f64) {
    let err = a.value.norm() * b.error_bound + b.value.norm() * a.error_bound + a.error_bound * b.error_bound;
    (a.value * b.value, err)
}

fn rhs_value(
    identity: GeneratingIdentity,
    form: IdentityForm,
    s: f64,
    x: f64,
    t: f64,
    cfg: &SeriesConfig,
) -> Result<(Complex, f64)> {
    let ix = complex(0.0, x);
    let h = complex(0.5, 0.0);
    let one = complex(1.0, 0.0);
    let mt = complex(-t, 0.0);
    let zeta = complex(4.0 * t / ((1.0 + t) * (1.0 + t)), 0.0);
    let sc = complex(s, 0.0);
    match identity {
        GeneratingIdentity::A1 => {
            let c2 = match form {
                IdentityForm::Corrected => 3.0,
                IdentityForm::AsPrinted => 1.0,
            };
            let f1 = hyp_2f1_series(h + ix, h + ix, one, mt, cfg)?;
            let f2 = hyp_2f1_series(1.5 - ix, 1.5 - ix, complex(c2, 0.0), mt, cfg)?;
            Ok(product(f1, f2))
        }
        GeneratingIdentity::A2 => {
            let f1 = hyp_2f1_series(h + ix, 1.5 + ix, complex(2.0, 0.0), mt, cfg)?;
            let f2 = hyp_2f1_series(h - ix, 1.5 - ix, complex(2.0, 0.0), mt, cfg)?;
            Ok(product(f1, f2))
        }
        GeneratingIdentity::A3 => {
            let f = hyp_pfq_series(
                &[complex(1.5, 0.0), complex(2.0, 0.0), h + ix, h - ix],
                &[one, complex(2.0, 0.0), complex(2.0, 0.0)],
                zeta,
                cfg,
            )?;
            let scale = (1.0 + t).powi(-3);
            Ok((f.value * scale, f.error_bound * scale))
        }
        GeneratingIdentity::B4 => {
            let f1 = hyp_2f1_series(h + ix, h + ix, one, mt, cfg)?;
            let f2 = hyp_2f1_series(h - sc - ix, h + sc - ix, one, mt, cfg)?;
            Ok(product(f1, f2))
        }
        GeneratingIdentity::B5Product => {
            let f1 = hyp_2f1_series(h + ix, h - sc + ix, one - sc, mt, cfg)?;
            let f2 = hyp_2f1_series(h - ix, h + sc - ix, one + sc, mt, cfg)?;
            Ok(product(f1, f2))
        }
        GeneratingIdentity::B5Hypergeometric => {
            let f = hyp_pfq_series(&[h, one, h + ix, h - ix], &[one, one - sc, one + sc], zeta, cfg)?;
            let scale = 1.0 / (1.0 + t);
            Ok((f.value * scale, f.error_bound * scale))
        }
    }
}

/// Compare the truncated left-hand sum with the closed-form right side of a
/// generating-function identity.
///
/// For the two B5 forms both sides carry the factor `sin(π s)/(π s)`, where
/// `s = sqrt(B+1)`; the left coefficients are then the rationals
/// `(2n)! / ((n!)² Π_{j≤n}(j² - 1 - B))`.
pub fn generating_function_check(
    family: &WilsonFamily,
    identity: GeneratingIdentity,
    form: IdentityForm,
    x: f64,
    t: f64,
    n_terms: usize,
    tol: f64,
) -> Result<GeneratingCheck> {
    if !(t.abs() <= 0.3) || !x.is_finite() {
        return Err(Error::InvalidParameter(format!("need |t| <= 0.3 and finite x, got x = {x}, t = {t}")));
    }
    if identity.is_case_a() != family.is_case_a() {
        return Err(Error::InvalidParameter(format!("identity {} does not belong to family {family}", identity.id())));
    }
    family.require_nondegenerate()?;
    let s = family.root().unwrap_or(0.0);
    let kappa = match family.case() {
        WilsonCase::B(_) if matches!(identity, GeneratingIdentity::B5Product | GeneratingIdentity::B5Hypergeometric) => {
            (PI * s).sin() / (PI * s)
        }
        _ => 1.0,
    };

    let (short, long) = lhs_partial_sums(identity, form, family, x, t, n_terms, 2 * n_terms.max(1))?;
    let truncation_bound = (&long - &short).abs().to_f64() * kappa.abs();
    let lhs = complex(short.to_f64() * kappa, 0.0);

    let cfg = SeriesConfig { tol: (tol * 1e-3).max(1e-18), ..SeriesConfig::default() };
    let (rhs, rhs_err) = rhs_value(identity, form, s, x, t, &cfg)?;
    let rhs = rhs * kappa;
    let rhs_error_bound = rhs_err * kappa.abs();

    let difference = (lhs - rhs).norm();
    let passed = difference <= tol + truncation_bound + rhs_error_bound;
    Ok(GeneratingCheck {
        identity,
        form,
        x,
        t,
        terms: n_terms,
        lhs,
        rhs,
        difference,
        truncation_bound,
        rhs_error_bound,
        tol,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::q;

    #[test]
    fn t_zero_gives_first_term() {
        let fam = WilsonFamily::case_a();
        let c = generating_function_check(&fam, GeneratingIdentity::A2, IdentityForm::Corrected, 0.5, 0.0, 5, 1e-12).unwrap();
        assert!((c.lhs.re - 1.0).abs() < 1e-15);
        assert!(c.passed);
    }

    #[test]
    fn printed_a1_fails_corrected_passes() {
        let fam = WilsonFamily::case_a();
        let good = generating_function_check(&fam, GeneratingIdentity::A1, IdentityForm::Corrected, 0.5, 0.1, 25, 1e-10).unwrap();
        assert!(good.passed, "{good:?}");
        let bad = generating_function_check(&fam, GeneratingIdentity::A1, IdentityForm::AsPrinted, 0.5, 0.1, 25, 1e-10).unwrap();
        assert!(!bad.passed);
    }

    #[test]
    fn degenerate_rejected() {
        let fam = WilsonFamily::case_b(q(3, 1)).unwrap();
        let err = generating_function_check(&fam, GeneratingIdentity::B4, IdentityForm::Corrected, 0.3, 0.1, 25, 1e-10);
        assert!(matches!(err, Err(Error::DegenerateFamily { root: 2 })));
    }
}
