//! Exact monic tables by the hypergeometric and recurrence routes, and the
//! audit of the recurrences as printed.

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use super::family::{WilsonCase, WilsonFamily};
use crate::error::Result;
use crate::numcore::{pochhammer, BParamPolynomial, Poly, Rational, RationalPolynomial};

fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn b_var() -> RationalPolynomial {
    Poly::var()
}

fn cst(c: Rational) -> RationalPolynomial {
    Poly::constant(c)
}

/// `Π_{j<k} ((a+j)² + u)`, i.e. `(a + ix)_k (a - ix)_k` with `u = x²`.
fn shifted_square_product(a: &Rational, k: usize) -> RationalPolynomial {
    (0..k).fold(RationalPolynomial::one(), |acc, j| {
        let c = a + r(j as i64);
        &acc * &Poly::shifted_var(&c * &c)
    })
}

/// Unnormalized Wilson polynomial `W_n(x²; a, b, c, d)` in `u = x²` for rational parameters.
pub fn wilson_polynomial(params: [&Rational; 4], n: usize) -> RationalPolynomial {
    let [a, b, c, d] = params;
    let ab = a + b;
    let ac = a + c;
    let ad = a + d;
    let top = r(n as i64) + a + b + c + d - Rational::one();
    let minus_n = r(-(n as i64));
    let mut sum = RationalPolynomial::zero();
    for k in 0..=n {
        let coef = pochhammer(&minus_n, k) * pochhammer(&top, k)
            / (pochhammer(&ab, k) * pochhammer(&ac, k) * pochhammer(&ad, k) * Rational::factorial(k as u64));
        sum = &sum + &shifted_square_product(a, k).scale(&coef);
    }
    sum.scale(&(pochhammer(&ab, n) * pochhammer(&ac, n) * pochhammer(&ad, n)))
}

fn sign(n: usize) -> Rational {
    if n % 2 == 0 {
        r(1)
    } else {
        r(-1)
    }
}

/// Case A monic polynomial `P_n = (-1)^n (n+2)!/(2n+2)! · W_n(x²; 1/2, 1/2, 3/2, 3/2)`.
pub fn case_a_hypergeometric(n: usize) -> RationalPolynomial {
    let h = Rational::half();
    let t = Rational::new(3, 2);
    let w = wilson_polynomial([&h, &h, &t, &t], n);
    let pref = sign(n) * Rational::factorial(n as u64 + 2) / Rational::factorial(2 * n as u64 + 2);
    w.scale(&pref)
}

/// Case B monic polynomial with `B` as an indeterminate.
///
/// With `s = sqrt(B+1)`, the factor `(1-s)_n (1+s)_n / ((1-s)_k (1+s)_k)`
/// of the Wilson sum equals `Π_{m=k+1..n} (m² - 1 - B)`, so every
/// coefficient is a polynomial in `B`:
/// `P_n = (-1)^n (n!)²/(2n)! Σ_k (-n)_k (n+1)_k/(k!)² Π_{m>k} (m²-1-B) Π_{j<k} ((j+1/2)² + u)`.
pub fn case_b_hypergeometric_symbolic(n: usize) -> BParamPolynomial {
    let h = Rational::half();
    let minus_n = r(-(n as i64));
    let top = r(n as i64 + 1);
    let pref = sign(n) * Rational::factorial(n as u64).pow(2) / Rational::factorial(2 * n as u64);
    let mut sum = BParamPolynomial::zero();
    for k in 0..=n {
        let kf = Rational::factorial(k as u64);
        let coef = pochhammer(&minus_n, k) * pochhammer(&top, k) / (&kf * &kf) * &pref;
        let b_part = ((k + 1)..=n).fold(cst(coef), |acc, m| {
            let m = m as i64;
            &acc * &Poly::new(vec![r(m * m - 1), r(-1)])
        });
        let u_part = BParamPolynomial::from_rational(&shifted_square_product(&h, k));
        let term = u_part.map(|c| c * &b_part);
        sum = &sum + &term;
    }
    sum
}

/// Monic `P_n` of a family from the terminating hypergeometric form.
pub fn monic_from_hypergeometric(family: &WilsonFamily, n: usize) -> Result<RationalPolynomial> {
    match family.case() {
        WilsonCase::A => Ok(case_a_hypergeometric(n)),
        WilsonCase::B(b) => {
            family.require_nondegenerate_up_to(n)?;
            Ok(case_b_hypergeometric_symbolic(n).at_param(b))
        }
    }
}

/// How to read the three-term recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecurrenceForm {
    /// The recurrence re-derived from the standard monic Wilson recurrence.
    Corrected,
    /// The coefficients and seeds exactly as printed.
    AsPrinted,
}

/// Coefficients `(β_n, γ_n)` in `P_n = (u + β_n) P_{n-1} - γ_n P_{n-2}`, as polynomials in `B`.
fn coefficients_symbolic(is_case_a: bool, form: RecurrenceForm, n: usize) -> (RationalPolynomial, RationalPolynomial) {
    let ni = n as i64;
    if is_case_a {
        let delta = Rational::new((ni - 1).pow(2) * ni.pow(2) * (ni + 1).pow(2), 4 * (2 * ni - 1) * (2 * ni + 1));
        match form {
            RecurrenceForm::Corrected => (cst(Rational::new(-ni * (ni + 1), 2) + Rational::new(1, 4)), cst(delta)),
            RecurrenceForm::AsPrinted => (cst(Rational::new(-ni * (ni + 1), 2)), cst(-delta)),
        }
    } else {
        let half_b = b_var().scale(&Rational::half());
        match form {
            RecurrenceForm::Corrected => {
                let beta = &half_b + &cst(Rational::new(1, 4) - Rational::new(ni * (ni - 1), 2));
                let inner = Poly::new(vec![r(ni * ni - 2 * ni), r(-1)]);
                let gamma = (&inner * &inner).scale(&Rational::new((ni - 1).pow(2), 4 * (2 * ni - 3) * (2 * ni - 1)));
                (beta, gamma)
            }
            RecurrenceForm::AsPrinted => {
                let beta = &(-half_b) + &cst(Rational::new(ni * (ni + 1), 2) - Rational::new(1, 4));
                let inner = Poly::new(vec![r(1 - ni * ni), r(1)]);
                let gamma = (&inner * &inner).scale(&Rational::new(-ni * ni, 4 * (2 * ni - 1) * (2 * ni + 1)));
                (beta, gamma)
            }
        }
    }
}

/// Corrected recurrence coefficients for a concrete family.
pub(crate) fn corrected_coefficients(case: &WilsonCase, n: usize) -> (Rational, Rational) {
    let (beta, gamma) = coefficients_symbolic(matches!(case, WilsonCase::A), RecurrenceForm::Corrected, n);
    let b = match case {
        WilsonCase::A => Rational::zero(),
        WilsonCase::B(b) => b.clone(),
    };
    (beta.eval(&b), gamma.eval(&b))
}

/// Seed `P_1` as printed.
fn printed_seed(is_case_a: bool) -> BParamPolynomial {
    let c0 = if is_case_a {
        cst(Rational::new(-3, 4))
    } else {
        &b_var().scale(&Rational::half()) + &cst(Rational::new(1, 4))
    };
    BParamPolynomial::new(vec![c0, RationalPolynomial::one()])
}

fn apply_step(
    beta: &RationalPolynomial,
    gamma: &RationalPolynomial,
    prev: &BParamPolynomial,
    prev2: &BParamPolynomial,
) -> BParamPolynomial {
    let factor = BParamPolynomial::new(vec![beta.clone(), RationalPolynomial::one()]);
    let tail = prev2.map(|c| c * gamma);
    &(&factor * prev) - &tail
}

/// `P_0..P_{n_max}` as polynomials in `u` with coefficients in `B`.
///
/// `Corrected` starts from `P_{-1} = 0, P_0 = 1`. `AsPrinted` uses the printed
/// seeds `P_0, P_1` and applies the printed recurrence from `n = 2`.
pub fn recurrence_table_symbolic(is_case_a: bool, form: RecurrenceForm, n_max: usize) -> Vec<BParamPolynomial> {
    let mut out = vec![BParamPolynomial::one()];
    for n in 1..=n_max {
        let next = if form == RecurrenceForm::AsPrinted && n == 1 {
            printed_seed(is_case_a)
        } else {
            let (beta, gamma) = coefficients_symbolic(is_case_a, form, n);
            let prev2 = if n >= 2 { out[n - 2].clone() } else { BParamPolynomial::zero() };
            apply_step(&beta, &gamma, &out[n - 1], &prev2)
        };
        out.push(next);
    }
    out
}

/// Monic table of a family from the three-term recurrence.
///
/// The recurrence has no singular coefficients, so unlike the hypergeometric
/// route this accepts every `B > -1`, including `sqrt(B+1)` integer.
pub fn monic_from_recurrence(family: &WilsonFamily, n_max: usize, form: RecurrenceForm) -> Result<MonicTable> {
    let b = family.b_exact().cloned().unwrap_or_else(Rational::zero);
    let polys = recurrence_table_symbolic(family.is_case_a(), form, n_max)
        .iter()
        .map(|p| p.at_param(&b))
        .collect();
    Ok(MonicTable::Exact { family: family.clone(), polys })
}

/// Symbolic case B table from the corrected recurrence.
pub fn symbolic_case_b_table(n_max: usize) -> MonicTable {
    MonicTable::SymbolicB { polys: recurrence_table_symbolic(false, RecurrenceForm::Corrected, n_max) }
}

/// A table of monic polynomials in `u = x²`, indexed from `n = 0`.
#[derive(Debug, Clone, PartialEq)]
pub enum MonicTable {
    Exact { family: WilsonFamily, polys: Vec<RationalPolynomial> },
    /// Case B with `B` left as an indeterminate.
    SymbolicB { polys: Vec<BParamPolynomial> },
}

impl MonicTable {
    pub fn len(&self) -> usize {
        match self {
            MonicTable::Exact { polys, .. } => polys.len(),
            MonicTable::SymbolicB { polys } => polys.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn exact(&self) -> Option<&[RationalPolynomial]> {
        match self {
            MonicTable::Exact { polys, .. } => Some(polys),
            MonicTable::SymbolicB { .. } => None,
        }
    }

    pub fn symbolic(&self) -> Option<&[BParamPolynomial]> {
        match self {
            MonicTable::SymbolicB { polys } => Some(polys),
            MonicTable::Exact { .. } => None,
        }
    }

    /// Every entry has leading coefficient exactly one and degree equal to its index.
    pub fn is_monic_table(&self) -> bool {
        match self {
            MonicTable::Exact { polys, .. } => polys.iter().enumerate().all(|(n, p)| p.is_monic() && p.degree() == Some(n)),
            MonicTable::SymbolicB { polys } => polys.iter().enumerate().all(|(n, p)| p.is_monic() && p.degree() == Some(n)),
        }
    }

    pub fn to_json(&self) -> Value {
        let (case, b) = match self {
            MonicTable::Exact { family, .. } => match family.case() {
                WilsonCase::A => ("A", Value::Null),
                WilsonCase::B(b) => ("B", Value::String(b.to_string())),
            },
            MonicTable::SymbolicB { .. } => ("B", Value::Null),
        };
        let entries: Vec<Value> = match self {
            MonicTable::Exact { polys, .. } => polys
                .iter()
                .enumerate()
                .map(|(n, p)| json!({"n": n, "coeffs": p}))
                .collect(),
            MonicTable::SymbolicB { polys } => polys
                .iter()
                .enumerate()
                .map(|(n, p)| json!({"n": n, "coeffs": p}))
                .collect(),
        };
        json!({"case": case, "B": b, "entries": entries})
    }

    /// One row per `(n, power)`; symbolic tables add the power of `B`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match self {
            MonicTable::Exact { polys, .. } => {
                out.push_str("n,power,coeff\n");
                for (n, p) in polys.iter().enumerate() {
                    for (k, c) in p.coeffs().iter().enumerate() {
                        out.push_str(&format!("{n},{k},{c}\n"));
                    }
                }
            }
            MonicTable::SymbolicB { polys } => {
                out.push_str("n,power,b_power,coeff\n");
                for (n, p) in polys.iter().enumerate() {
                    for (k, c) in p.coeffs().iter().enumerate() {
                        for (j, cj) in c.coeffs().iter().enumerate() {
                            out.push_str(&format!("{n},{k},{j},{cj}\n"));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Comparison of the printed coefficients with the corrected recurrence
/// reflected `u → -u` (a recurrence for `(-1)^n P_n(-u)`) and shifted by `shift` in `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflectionComparison {
    pub shift: usize,
    pub diagonal_matches: bool,
    pub off_diagonal_matches: bool,
    pub off_diagonal_matches_up_to_sign: bool,
}

/// The outcome of checking the printed recurrence against the hypergeometric oracle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecurrenceAudit {
    pub case: &'static str,
    pub n_max: usize,
    /// Whether the printed recurrence at `n = 1` (with `P_{-1} = 0`) reproduces the printed seed `P_1`.
    pub seed_consistent: bool,
    /// `P_1` produced by the printed recurrence at `n = 1`.
    pub printed_step_at_one: BParamPolynomial,
    /// First index where the table built from the printed seeds and printed recurrence differs from the oracle.
    pub first_table_mismatch: Option<usize>,
    pub printed_at_mismatch: Option<BParamPolynomial>,
    pub oracle_at_mismatch: Option<BParamPolynomial>,
    /// Whether the corrected recurrence matches the oracle for every `n ≤ n_max`.
    pub corrected_matches: bool,
    pub reflections: Vec<ReflectionComparison>,
}

impl RecurrenceAudit {
    /// Smallest index at which the printed recurrence is caught: the seed step or the table.
    pub fn first_failure(&self) -> Option<usize> {
        if !self.seed_consistent {
            Some(1)
        } else {
            self.first_table_mismatch
        }
    }
}

fn oracle_symbolic(is_case_a: bool, n: usize) -> BParamPolynomial {
    if is_case_a {
        BParamPolynomial::from_rational(&case_a_hypergeometric(n))
    } else {
        case_b_hypergeometric_symbolic(n)
    }
}

/// Audit the printed recurrence of case A (`is_case_a`) or symbolic case B against the hypergeometric route.
pub fn audit_recurrence(is_case_a: bool, n_max: usize) -> RecurrenceAudit {
    let n_max = n_max.max(2);
    let oracle: Vec<_> = (0..=n_max).map(|n| oracle_symbolic(is_case_a, n)).collect();

    let (beta1, gamma1) = coefficients_symbolic(is_case_a, RecurrenceForm::AsPrinted, 1);
    let step1 = apply_step(&beta1, &gamma1, &BParamPolynomial::one(), &BParamPolynomial::zero());
    let seed_consistent = step1 == printed_seed(is_case_a);

    let printed = recurrence_table_symbolic(is_case_a, RecurrenceForm::AsPrinted, n_max);
    let first_table_mismatch = (0..=n_max).find(|&n| printed[n] != oracle[n]);
    let corrected = recurrence_table_symbolic(is_case_a, RecurrenceForm::Corrected, n_max);
    let corrected_matches = corrected == oracle;

    let reflections = (0..=1)
        .map(|shift| {
            let mut diagonal_matches = true;
            let mut off_diagonal_matches = true;
            let mut up_to_sign = true;
            for n in 2..=n_max {
                let (bp, gp) = coefficients_symbolic(is_case_a, RecurrenceForm::AsPrinted, n);
                let (bc, gc) = coefficients_symbolic(is_case_a, RecurrenceForm::Corrected, n + shift);
                diagonal_matches &= bp == -bc;
                off_diagonal_matches &= gp == gc;
                up_to_sign &= gp == gc || gp == -gc.clone();
            }
            ReflectionComparison { shift, diagonal_matches, off_diagonal_matches, off_diagonal_matches_up_to_sign: up_to_sign }
        })
        .collect();

    RecurrenceAudit {
        case: if is_case_a { "A" } else { "B" },
        n_max,
        seed_consistent,
        printed_step_at_one: step1,
        first_table_mismatch,
        printed_at_mismatch: first_table_mismatch.map(|n| printed[n].clone()),
        oracle_at_mismatch: first_table_mismatch.map(|n| oracle[n].clone()),
        corrected_matches,
        reflections,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::{q, rpoly};

    #[test]
    fn case_a_low_order() {
        assert_eq!(case_a_hypergeometric(0), rpoly(&[(1, 1)]));
        assert_eq!(case_a_hypergeometric(1), rpoly(&[(-3, 4), (1, 1)]));
        assert_eq!(case_a_hypergeometric(2), rpoly(&[(117, 80), (-7, 2), (1, 1)]));
    }

    #[test]
    fn case_b_low_order() {
        let p1 = case_b_hypergeometric_symbolic(1);
        assert_eq!(p1.coeff(0), rpoly(&[(1, 4), (1, 2)]));
        assert!(p1.is_monic());
        let p2 = case_b_hypergeometric_symbolic(2);
        assert_eq!(p2.coeff(1), rpoly(&[(-1, 2), (1, 1)]));
        assert_eq!(p2.coeff(0), rpoly(&[(-3, 16), (-1, 4), (1, 6)]));
    }

    #[test]
    fn b_zero_first_entry() {
        let fam = WilsonFamily::case_b(q(0, 1)).unwrap();
        let t = monic_from_recurrence(&fam, 1, RecurrenceForm::Corrected).unwrap();
        assert_eq!(t.exact().unwrap()[1], rpoly(&[(1, 4), (1, 1)]));
    }

    #[test]
    fn printed_case_a_p2() {
        let t = monic_from_recurrence(&WilsonFamily::case_a(), 2, RecurrenceForm::AsPrinted).unwrap();
        assert_eq!(t.exact().unwrap()[2], rpoly(&[(57, 20), (-15, 4), (1, 1)]));
    }

    #[test]
    fn audits() {
        let a = audit_recurrence(true, 10);
        assert_eq!(a.first_table_mismatch, Some(2));
        assert!(!a.seed_consistent);
        assert!(a.corrected_matches);
        let b = audit_recurrence(false, 10);
        assert!(!b.seed_consistent);
        assert_eq!(b.first_failure(), Some(1));
        assert!(b.corrected_matches);
        let shifted = &b.reflections[1];
        assert!(shifted.diagonal_matches);
        assert!(!shifted.off_diagonal_matches);
        assert!(shifted.off_diagonal_matches_up_to_sign);
    }

    #[test]
    fn json_shape() {
        let t = monic_from_recurrence(&WilsonFamily::case_a(), 1, RecurrenceForm::Corrected).unwrap();
        let v = t.to_json();
        assert_eq!(v["case"], "A");
        assert!(v["B"].is_null());
        assert_eq!(v["entries"][1]["coeffs"][0], "-3/4");
    }
}
