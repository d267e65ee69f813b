use std::f64::consts::PI;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use super::quadrature::{integrate_semiinfinite, QuadratureConfig, TailModel};
use crate::error::{Error, Result};
use crate::numcore::{complex, Complex, Rational, RationalPolynomial};
use crate::wilson::{squared_norm, MassPoint, NumericRecurrence, WeightFunction, WilsonCase, WilsonFamily};

type OnAxis = Arc<dyn Fn(f64) -> Complex + Send + Sync>;
type AtMass = Arc<dyn Fn(&MassPoint) -> Complex + Send + Sync>;

/// A function on the support of a family's measure: values for `x > 0` and
/// at the point masses (located at `x² = u < 0`).
#[derive(Clone)]
pub struct ProjectionTarget {
    label: String,
    on_axis: OnAxis,
    at_mass: AtMass,
    /// `|F(x)| = O(x^growth)` as `x → ∞`.
    growth: f64,
}

impl std::fmt::Debug for ProjectionTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ProjectionTarget").field("label", &self.label).field("growth", &self.growth).finish()
    }
}

impl ProjectionTarget {
    pub fn new(
        label: impl Into<String>,
        growth: f64,
        on_axis: impl Fn(f64) -> Complex + Send + Sync + 'static,
        at_mass: impl Fn(&MassPoint) -> Complex + Send + Sync + 'static,
    ) -> Self {
        ProjectionTarget { label: label.into(), on_axis: Arc::new(on_axis), at_mass: Arc::new(at_mass), growth }
    }

    /// A polynomial in `u = x²`, evaluated at the masses through `u` directly.
    pub fn polynomial(p: &RationalPolynomial) -> Self {
        let coeffs = p.to_f64_coeffs();
        let c2 = coeffs.clone();
        let horner = move |c: &[f64], u: f64| c.iter().rev().fold(0.0, |acc, a| acc * u + a);
        let degree = coeffs.len().saturating_sub(1) as f64;
        ProjectionTarget::new(
            "polynomial",
            2.0 * degree,
            move |x| complex(horner(&coeffs, x * x), 0.0),
            move |m| complex(horner(&c2, m.u), 0.0),
        )
    }

    /// Case A parity target `-4(e^{-πx} + i)/(1 + 4x²)`.
    pub fn parity_case_a() -> Self {
        ProjectionTarget::new(
            "parity-A",
            0.0,
            |x| complex((-PI * x).exp(), 1.0) * (-4.0 / (1.0 + 4.0 * x * x)),
            |m| complex((-PI * m.z).cos(), (-PI * m.z).sin() + 1.0) * (-4.0 / (1.0 - 4.0 * m.z * m.z)),
        )
    }

    /// Case B parity target `e^{-πx}`; at a mass point `x = i z` it is `e^{-iπz}`.
    pub fn parity_case_b() -> Self {
        ProjectionTarget::new("parity-B", 0.0, |x| complex((-PI * x).exp(), 0.0), |m| complex((PI * m.z).cos(), -(PI * m.z).sin()))
    }

    pub fn parity(family: &WilsonFamily) -> Self {
        if family.is_case_a() {
            ProjectionTarget::parity_case_a()
        } else {
            ProjectionTarget::parity_case_b()
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, x: f64) -> Complex {
        (self.on_axis)(x)
    }

    pub fn eval_at_mass(&self, m: &MassPoint) -> Complex {
        (self.at_mass)(m)
    }
}

/// `∫ w F G dx + Σ m_k F G` with the integrand product assembled by the caller.
fn measure_integral(
    weight: &WeightFunction,
    power: f64,
    on_axis: impl Fn(f64) -> Complex,
    at_mass: impl Fn(&MassPoint) -> Complex,
    cfg: &QuadratureConfig,
) -> Result<(Complex, f64)> {
    let tail = TailModel::new(weight.decay_rate(), power + weight.envelope_power() as f64);
    let r = integrate_semiinfinite(|x| on_axis(x) * weight.eval(x), &tail, cfg)?;
    let discrete: Complex = weight.discrete_masses().iter().map(|m| at_mass(m) * m.mass).sum();
    Ok((r.value + discrete, r.error))
}

/// One coefficient with its propagated quadrature error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoefficientEntry {
    pub n: usize,
    #[serde(with = "crate::numcore::complex_json")]
    pub value: Complex,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientTable {
    pub family: WilsonFamily,
    pub entries: Vec<CoefficientEntry>,
}

impl CoefficientTable {
    pub fn values(&self) -> Vec<Complex> {
        self.entries.iter().map(|e| e.value).collect()
    }

    pub fn get(&self, n: usize) -> Option<&CoefficientEntry> {
        self.entries.iter().find(|e| e.n == n)
    }

    pub fn to_json(&self) -> Value {
        let (case, b) = match self.family.case() {
            WilsonCase::A => ("A", Value::Null),
            WilsonCase::B(b) => ("B", Value::String(b.to_string())),
        };
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| json!({"n": e.n, "re": e.value.re, "im": e.value.im, "err": e.error}))
            .collect();
        json!({"case": case, "B": b, "entries": entries})
    }
}

/// `a_n = ⟨F, P_n⟩ / ⟨P_n, P_n⟩` for `n = 0..=n_max` under the family's full measure.
pub fn project(target: &ProjectionTarget, family: &WilsonFamily, n_max: usize, cfg: &QuadratureConfig) -> Result<CoefficientTable> {
    let weight = WeightFunction::new(family)?;
    let rec = NumericRecurrence::new(family, n_max);
    let mut entries = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let h = squared_norm(family, n)?.value;
        let (ip, err) = measure_integral(
            &weight,
            target.growth + 2.0 * n as f64,
            |x| target.eval(x) * rec.eval_all(x * x)[n],
            |m| target.eval_at_mass(m) * rec.eval_all(m.u)[n],
            cfg,
        )?;
        entries.push(CoefficientEntry { n, value: ip / h, error: err / h });
    }
    Ok(CoefficientTable { family: family.clone(), entries })
}

/// Which normalization to put in front of the closed-form coefficient integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientConvention {
    /// Case A: the prefactor built from the printed norm. Case B: the printed
    /// formula, whose integral covers the continuous weight only.
    Printed,
    /// Case A: the prefactor built from the exact norm. Case B: the printed
    /// formula plus the point-mass contributions.
    Corrected,
}

fn fact(n: usize) -> Rational {
    Rational::factorial(n as u64)
}

fn sign(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Prefactor of the case A closed-form integral for `c_n`, `n ≥ 1`.
pub fn case_a_prefactor(n: usize, convention: CoefficientConvention) -> Rational {
    assert!(n >= 1);
    match convention {
        CoefficientConvention::Printed => {
            fact(2 * n).pow(2) * fact(2 * n + 1) / (fact(n - 1).pow(2) * fact(n).pow(4) * fact(n + 1).pow(4))
        }
        CoefficientConvention::Corrected => {
            fact(2 * n) * fact(2 * n + 1) / (Rational::from_integer(2) * fact(n - 1).pow(2) * fact(n).pow(4) * fact(n + 1).pow(2))
        }
    }
}

/// `c_0..c_{n_max}` of the parity reconstruction.
///
/// Case A: `c_0 = -i` exactly; for `n ≥ 1`,
/// `c_n = π² (-1)ⁿ K_n ∫ x(1+4x²)(e^{-πx}+i) sinh(πx)/cosh³(πx) P_{n-1}(x²) dx`.
/// Case B: `c_n = 4π²(-1)ⁿ (2n)!(2n+1)! / ((n!)⁴ Γ²(n+1-s) Γ²(n+1+s))
/// ∫ x e^{-πx} tanh(πx)/(cos 2πs + cosh 2πx) P_n(x²) dx`, plus (corrected)
/// `(-1)ⁿ/h_n Σ_k m_k e^{-iπ z_k} P_n(-z_k²)`.
pub fn parity_coefficients(
    family: &WilsonFamily,
    n_max: usize,
    convention: CoefficientConvention,
    cfg: &QuadratureConfig,
) -> Result<CoefficientTable> {
    let weight = WeightFunction::new(family)?;
    let mut entries = Vec::with_capacity(n_max + 1);
    if family.is_case_a() {
        entries.push(CoefficientEntry { n: 0, value: complex(0.0, -1.0), error: 0.0 });
        let rec = NumericRecurrence::new(family, n_max.saturating_sub(1));
        for n in 1..=n_max {
            let k = case_a_prefactor(n, convention).to_f64() * PI * PI * sign(n);
            let tail = TailModel::new(2.0 * PI, 3.0 + 2.0 * (n - 1) as f64);
            let r = integrate_semiinfinite(
                |x| {
                    let e = (-2.0 * PI * x).exp();
                    let tanh = (1.0 - e) / (1.0 + e);
                    let sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
                    complex((-PI * x).exp(), 1.0) * (x * (1.0 + 4.0 * x * x) * tanh * sech2 * rec.eval_all(x * x)[n - 1])
                },
                &tail,
                cfg,
            )?;
            entries.push(CoefficientEntry { n, value: r.value * k, error: r.error * k.abs() });
        }
    } else {
        let rec = NumericRecurrence::new(family, n_max);
        let cos2 = (2.0 * PI * family.root().unwrap_or(0.0)).cos();
        for n in 0..=n_max {
            let h = squared_norm(family, n)?.value;
            let k = 4.0 * PI * PI * sign(n) / h;
            let tail = TailModel::new(3.0 * PI, 1.0 + 2.0 * n as f64);
            let r = integrate_semiinfinite(
                |x| {
                    let e = (-2.0 * PI * x).exp();
                    let tanh = (1.0 - e) / (1.0 + e);
                    let inv = 2.0 * e / (1.0 + 2.0 * cos2 * e + e * e);
                    complex(x * (-PI * x).exp() * tanh * inv * rec.eval_all(x * x)[n], 0.0)
                },
                &tail,
                cfg,
            )?;
            let mut value = r.value * k;
            if convention == CoefficientConvention::Corrected {
                let target = ProjectionTarget::parity_case_b();
                let discrete: Complex = weight
                    .discrete_masses()
                    .iter()
                    .map(|m| target.eval_at_mass(m) * rec.eval_all(m.u)[n] * m.mass)
                    .sum();
                value += discrete * (sign(n) / h);
            }
            entries.push(CoefficientEntry { n, value, error: r.error * k.abs() });
        }
    }
    Ok(CoefficientTable { family: family.clone(), entries })
}

/// Coefficient of `P_n` in the expansion of the parity target: `(-1)ⁿ c_{n+1}`
/// for case A and `(-1)ⁿ c_n` for case B.
pub fn expansion_coefficient(family: &WilsonFamily, table: &CoefficientTable, n: usize) -> Option<Complex> {
    let idx = if family.is_case_a() { n + 1 } else { n };
    table.get(idx).map(|e| e.value * sign(n))
}

/// Agreement of the closed-form coefficient against generic projection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DualRouteEntry {
    pub n: usize,
    #[serde(with = "crate::numcore::complex_json")]
    pub closed_form: Complex,
    #[serde(with = "crate::numcore::complex_json")]
    pub projected: Complex,
    pub difference: f64,
    pub error_sum: f64,
    pub agree: bool,
}

/// Compare `c_n` from [`parity_coefficients`] with the generic projection of the
/// parity target, for the `c_n` with `n ≤ n_max` that the projection determines.
pub fn dual_route(
    family: &WilsonFamily,
    n_max: usize,
    convention: CoefficientConvention,
    cfg: &QuadratureConfig,
) -> Result<Vec<DualRouteEntry>> {
    let closed = parity_coefficients(family, n_max, convention, cfg)?;
    let proj = project(&ProjectionTarget::parity(family), family, n_max, cfg)?;
    let (first, shift) = if family.is_case_a() { (1, 1) } else { (0, 0) };
    let mut out = Vec::new();
    for n in first..=n_max {
        let c = closed.get(n).ok_or(Error::InvalidParameter("missing coefficient".into()))?;
        let p = proj.get(n - shift).ok_or(Error::InvalidParameter("missing projection".into()))?;
        let projected = p.value * sign(n - shift);
        let difference = (c.value - projected).norm();
        let error_sum = c.error + p.error;
        out.push(DualRouteEntry {
            n,
            closed_form: c.value,
            projected,
            difference,
            error_sum,
            agree: difference <= 2.0 * error_sum,
        });
    }
    Ok(out)
}

/// Weighted-`L²` residuals `‖F - Σ_{n≤N} a_n P_n‖` for `N = 0..=n_max`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReconstructionReport {
    pub family: WilsonFamily,
    pub residuals: Vec<f64>,
    /// Error estimate of each residual from the quadrature of its square.
    pub errors: Vec<f64>,
}

impl ReconstructionReport {
    /// Whether no residual exceeds its predecessor by more than the combined error estimates.
    pub fn is_nonincreasing(&self) -> bool {
        self.residuals
            .windows(2)
            .zip(self.errors.windows(2))
            .all(|(r, e)| r[1] <= r[0] + e[0] + e[1])
    }

    pub fn drop_ratio(&self) -> f64 {
        match (self.residuals.first(), self.residuals.last()) {
            (Some(a), Some(b)) => a / b,
            _ => f64::NAN,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("N,residual,error\n");
        for (n, (r, e)) in self.residuals.iter().zip(&self.errors).enumerate() {
            out.push_str(&format!("{n},{r:.17e},{e:.17e}\n"));
        }
        out
    }
}

/// Residual of the parity reconstruction for truncations `0..=n_max`, with the
/// coefficients of [`parity_coefficients`] under `convention`.
pub fn reconstruction_residual(
    family: &WilsonFamily,
    n_max: usize,
    convention: CoefficientConvention,
    cfg: &QuadratureConfig,
) -> Result<ReconstructionReport> {
    let coeffs = parity_coefficients(family, n_max + usize::from(family.is_case_a()), convention, cfg)?;
    let a: Vec<Complex> = (0..=n_max)
        .map(|n| expansion_coefficient(family, &coeffs, n).expect("coefficient present"))
        .collect();
    residuals_for(&ProjectionTarget::parity(family), family, &a, cfg)
}

/// `‖F - Σ_{n≤N} a_n P_n‖` for each prefix of `a`.
pub fn residuals_for(
    target: &ProjectionTarget,
    family: &WilsonFamily,
    a: &[Complex],
    cfg: &QuadratureConfig,
) -> Result<ReconstructionReport> {
    let weight = WeightFunction::new(family)?;
    let n_max = a.len().saturating_sub(1);
    let rec = NumericRecurrence::new(family, n_max);
    let partial = |u: f64, n: usize| -> Complex {
        let p = rec.eval_all(u);
        a.iter().zip(&p).take(n + 1).map(|(c, pk)| c * pk).sum()
    };
    let mut residuals = Vec::with_capacity(a.len());
    let mut errors = Vec::with_capacity(a.len());
    for n in 0..a.len() {
        let (sq, err) = measure_integral(
            &weight,
            (2.0 * target.growth).max(4.0 * n as f64),
            |x| {
                let d = target.eval(x) - partial(x * x, n);
                complex(d.norm_sqr(), 0.0)
            },
            |m| complex((target.eval_at_mass(m) - partial(m.u, n)).norm_sqr(), 0.0),
            cfg,
        )?;
        let res = sq.re.max(0.0).sqrt();
        residuals.push(res);
        errors.push(if res > 0.0 { err / (2.0 * res) } else { err.sqrt() });
    }
    Ok(ReconstructionReport { family: family.clone(), residuals, errors })
}

/// Quadrature of `⟨P_n, P_m⟩` under the full measure.
pub fn gram_entry(family: &WilsonFamily, n: usize, m: usize, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    let weight = WeightFunction::new(family)?;
    let rec = NumericRecurrence::new(family, n.max(m));
    let (v, err) = measure_integral(
        &weight,
        2.0 * (n + m) as f64,
        |x| {
            let p = rec.eval_all(x * x);
            complex(p[n] * p[m], 0.0)
        },
        |mp| {
            let p = rec.eval_all(mp.u);
            complex(p[n] * p[m], 0.0)
        },
        cfg,
    )?;
    Ok((v.re, err))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::q;

    #[test]
    fn case_a_norm_by_quadrature() {
        let fam = WilsonFamily::case_a();
        let (v, err) = gram_entry(&fam, 0, 0, &QuadratureConfig::default()).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-12, "{v} ± {err}");
        let (v, _) = gram_entry(&fam, 0, 1, &QuadratureConfig::default()).unwrap();
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn projection_of_basis_element() {
        let fam = WilsonFamily::case_a();
        let p2 = crate::wilson::case_a_hypergeometric(2);
        let t = project(&ProjectionTarget::polynomial(&p2), &fam, 4, &QuadratureConfig::default()).unwrap();
        for e in &t.entries {
            let expect = if e.n == 2 { 1.0 } else { 0.0 };
            assert!((e.value - complex(expect, 0.0)).norm() < 1e-10, "{e:?}");
        }
    }

    #[test]
    fn c0_exact() {
        let t = parity_coefficients(&WilsonFamily::case_a(), 0, CoefficientConvention::Corrected, &QuadratureConfig::default()).unwrap();
        assert_eq!(t.entries[0].value, complex(0.0, -1.0));
        assert_eq!(t.entries[0].error, 0.0);
    }

    #[test]
    fn case_b_projection_uses_masses() {
        let fam = WilsonFamily::case_b(q(3, 2)).unwrap();
        let cfg = QuadratureConfig::default();
        let (v, _) = gram_entry(&fam, 1, 2, &cfg).unwrap();
        assert!(v.abs() < 1e-10, "{v}");
        let routes = dual_route(&fam, 3, CoefficientConvention::Corrected, &cfg).unwrap();
        assert!(routes.iter().all(|r| r.agree), "{routes:?}");
    }

    #[test]
    fn json_shape() {
        let t = parity_coefficients(&WilsonFamily::case_a(), 1, CoefficientConvention::Corrected, &QuadratureConfig::default()).unwrap();
        let v = t.to_json();
        assert_eq!(v["case"], "A");
        assert_eq!(v["entries"][0]["im"], -1.0);
    }
}
