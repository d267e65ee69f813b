//! Adaptive Gauss–Kronrod quadrature on `(0, ∞)` for integrands bounded by
//! `C x^p e^{-a x}`.
//!
//! The half-line is cut at `X`; `[0, X]` is integrated by globally adaptive
//! bisection (worst panel first) and the tail beyond `X` is bounded from an
//! envelope fitted on `[X-1, X]`. The reported error is the sum of the panel
//! estimates `|K - G|`, a rounding floor, and the tail bound.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::LN_10;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numcore::Complex;

#[allow(clippy::excessive_precision)]
const XGK15: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK15: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG7: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

#[allow(clippy::excessive_precision)]
const XGK21: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK21: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];
#[allow(clippy::excessive_precision)]
const WG10: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

/// A Gauss–Kronrod pair: Kronrod nodes in `[0, 1]` (last is the centre),
/// Kronrod weights, and Gauss weights for the odd-indexed nodes (last one for
/// the centre when the Gauss rule has odd order).
#[derive(Debug, Clone, Copy)]
pub struct KronrodRule {
    xgk: &'static [f64],
    wgk: &'static [f64],
    wg: &'static [f64],
}

impl KronrodRule {
    pub fn order(&self) -> usize {
        2 * self.xgk.len() - 1
    }

    pub fn for_order(order: usize) -> Result<Self> {
        match order {
            15 => Ok(KronrodRule { xgk: &XGK15, wgk: &WGK15, wg: &WG7 }),
            21 => Ok(KronrodRule { xgk: &XGK21, wgk: &WGK21, wg: &WG10 }),
            _ => Err(Error::InvalidParameter(format!("panel order {order} is not one of 15, 21"))),
        }
    }

    /// Nodes and Kronrod weights mapped to `[a, b]`.
    pub fn nodes(&self, a: f64, b: f64) -> Vec<(f64, f64)> {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        let last = self.xgk.len() - 1;
        let mut out = Vec::with_capacity(self.order());
        for j in 0..last {
            out.push((c - h * self.xgk[j], h * self.wgk[j]));
            out.push((c + h * self.xgk[j], h * self.wgk[j]));
        }
        out.push((c, h * self.wgk[last]));
        out
    }

    fn apply(&self, f: &impl Fn(f64) -> Complex, a: f64, b: f64) -> PanelResult {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        let last = self.xgk.len() - 1;
        let fc = f(c);
        let mut kron = fc * self.wgk[last];
        let gauss_has_centre = self.wg.len() > last / 2;
        let mut gauss = if gauss_has_centre { fc * self.wg[self.wg.len() - 1] } else { Complex::zero() };
        let mut abs = fc.norm() * self.wgk[last];
        for j in 0..last {
            let f1 = f(c - h * self.xgk[j]);
            let f2 = f(c + h * self.xgk[j]);
            let sum = f1 + f2;
            kron += sum * self.wgk[j];
            abs += (f1.norm() + f2.norm()) * self.wgk[j];
            if j % 2 == 1 {
                gauss += sum * self.wg[j / 2];
            }
        }
        let value = kron * h;
        let abs_integral = abs * h.abs();
        let error = ((kron - gauss) * h).norm();
        let finite = value.re.is_finite() && value.im.is_finite();
        PanelResult { a, b, value, error, abs_integral, finite }
    }
}

#[derive(Debug, Clone, Copy)]
struct PanelResult {
    a: f64,
    b: f64,
    value: Complex,
    error: f64,
    abs_integral: f64,
    finite: bool,
}

impl PartialEq for PanelResult {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for PanelResult {}
impl PartialOrd for PanelResult {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for PanelResult {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Where to cut the half-line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cutoff {
    /// Start at `max(15, (p+6) ln10/(2π) + 5)` and extend until the tail bound is below the absolute tolerance.
    Auto,
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Kronrod points per panel: 15 or 21.
    pub panel_order: usize,
    pub cutoff: Cutoff,
    pub max_panels: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { rel_tol: 1e-13, abs_tol: 1e-15, panel_order: 15, cutoff: Cutoff::Auto, max_panels: 4000 }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<KronrodRule> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::InvalidParameter("quadrature tolerances must be positive".into()));
        }
        if self.max_panels == 0 {
            return Err(Error::InvalidParameter("max_panels must be positive".into()));
        }
        if let Cutoff::Fixed(x) = self.cutoff {
            if !(x > 0.0 && x.is_finite()) {
                return Err(Error::InvalidParameter(format!("cutoff {x} must be positive")));
            }
        }
        KronrodRule::for_order(self.panel_order)
    }
}

/// Envelope `|f(x)| ≤ C x^power e^{-decay x}` assumed beyond the cutoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailModel {
    pub decay: f64,
    pub power: f64,
}

impl TailModel {
    pub fn new(decay: f64, power: f64) -> Self {
        TailModel { decay, power }
    }

    fn envelope(&self, x: f64) -> f64 {
        x.powf(self.power) * (-self.decay * x).exp()
    }

    /// `∫_X^∞ x^p e^{-a x} dx / (X^p e^{-a X})`, bounded by `1/(a - p/X)` for `a X > p`.
    fn tail_factor(&self, x: f64) -> Option<f64> {
        let d = self.decay - self.power.max(0.0) / x;
        (d > 0.0).then(|| 1.0 / d)
    }

    /// Bound on `∫_X^∞ |f|` from the envelope constant fitted on `[X-1, X]`.
    pub fn tail_bound(&self, f: &impl Fn(f64) -> Complex, x: f64) -> Option<f64> {
        let factor = self.tail_factor(x)?;
        let lo = (x - 1.0).max(0.5 * x);
        let c = (0..=16)
            .map(|k| lo + (x - lo) * k as f64 / 16.0)
            .map(|t| f(t).norm() / self.envelope(t))
            .fold(0.0f64, f64::max);
        // slack for the envelope fitted over a finite window
        Some(4.0 * c * self.envelope(x) * factor)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Integral {
    #[serde(with = "crate::numcore::complex_json")]
    pub value: Complex,
    /// Panel error estimates plus rounding floor plus tail bound.
    pub error: f64,
    pub tail_bound: f64,
    pub cutoff: f64,
    pub panels: usize,
}

/// Rounding floor per unit of `∫|f|`.
const ROUNDING: f64 = 50.0 * f64::EPSILON;
const MAX_AUTO_CUTOFF: f64 = 1000.0;

/// Integrate `f` over `(0, ∞)`.
pub fn integrate_semiinfinite(f: impl Fn(f64) -> Complex, tail: &TailModel, cfg: &QuadratureConfig) -> Result<Integral> {
    let rule = cfg.validate()?;
    let (cutoff, tail_bound) = choose_cutoff(&f, tail, cfg)?;
    let initial = (cutoff.ceil() as usize).clamp(1, cfg.max_panels);
    let width = cutoff / initial as f64;
    let mut heap = BinaryHeap::new();
    for k in 0..initial {
        let a = k as f64 * width;
        let b = if k + 1 == initial { cutoff } else { a + width };
        heap.push(rule.apply(&f, a, b));
    }
    loop {
        let (value, err, abs) = totals(&heap);
        if !(value.re.is_finite() && value.im.is_finite()) || heap.iter().any(|p| !p.finite) {
            return Err(Error::NonFinite("integrand"));
        }
        let rounding = ROUNDING * abs;
        let target = cfg.abs_tol.max(cfg.rel_tol * value.norm()).max(10.0 * rounding);
        if err <= target {
            return Ok(Integral { value, error: err + rounding + tail_bound, tail_bound, cutoff, panels: heap.len() });
        }
        if heap.len() >= cfg.max_panels {
            return Err(Error::NoConvergence { terms: heap.len() });
        }
        let worst = heap.pop().expect("nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            return Err(Error::NoConvergence { terms: heap.len() + 1 });
        }
        heap.push(rule.apply(&f, worst.a, mid));
        heap.push(rule.apply(&f, mid, worst.b));
    }
}

/// Real-valued convenience wrapper.
pub fn integrate_real(f: impl Fn(f64) -> f64, tail: &TailModel, cfg: &QuadratureConfig) -> Result<Integral> {
    integrate_semiinfinite(|x| Complex::new(f(x), 0.0), tail, cfg)
}

fn totals(heap: &BinaryHeap<PanelResult>) -> (Complex, f64, f64) {
    // sorted by left endpoint so the sum is independent of heap layout
    let mut panels: Vec<&PanelResult> = heap.iter().collect();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    panels.iter().fold((Complex::zero(), 0.0, 0.0), |(v, e, s), p| (v + p.value, e + p.error, s + p.abs_integral))
}

fn choose_cutoff(f: &impl Fn(f64) -> Complex, tail: &TailModel, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    match cfg.cutoff {
        Cutoff::Fixed(x) => Ok((x, tail.tail_bound(f, x).unwrap_or(f64::INFINITY))),
        Cutoff::Auto => {
            let start = 15f64.max((tail.power + 6.0) * LN_10 / tail.decay + 5.0);
            let mut x = start;
            loop {
                if let Some(bound) = tail.tail_bound(f, x) {
                    if bound <= 0.1 * cfg.abs_tol {
                        return Ok((x, bound));
                    }
                }
                x += 5.0;
                if x > MAX_AUTO_CUTOFF {
                    return Err(Error::NoConvergence { terms: 0 });
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn exponential_moment() {
        let tail = TailModel::new(2.0 * PI, 1.0);
        let r = integrate_real(|x| x * (-2.0 * PI * x).exp(), &tail, &QuadratureConfig::default()).unwrap();
        let exact = 1.0 / (4.0 * PI * PI);
        assert!((r.value.re - exact).abs() <= r.error);
        assert!((r.value.re - exact).abs() < 1e-15);
    }

    #[test]
    fn twenty_one_point_rule() {
        let cfg = QuadratureConfig { panel_order: 21, ..QuadratureConfig::default() };
        let tail = TailModel::new(1.0, 3.0);
        let r = integrate_real(|x| x.powi(3) * (-x).exp(), &tail, &cfg).unwrap();
        assert!((r.value.re - 6.0).abs() < 1e-12);
        assert!((r.value.re - 6.0).abs() <= r.error);
    }

    #[test]
    fn rejects_bad_config() {
        let tail = TailModel::new(1.0, 0.0);
        let bad = QuadratureConfig { rel_tol: 0.0, ..QuadratureConfig::default() };
        assert!(integrate_real(|x| (-x).exp(), &tail, &bad).is_err());
        let bad = QuadratureConfig { panel_order: 7, ..QuadratureConfig::default() };
        assert!(integrate_real(|x| (-x).exp(), &tail, &bad).is_err());
    }

    #[test]
    fn panel_cap_reported() {
        let tail = TailModel::new(1.0, 0.0);
        let cfg = QuadratureConfig { max_panels: 3, rel_tol: 1e-15, abs_tol: 1e-300, ..QuadratureConfig::default() };
        let r = integrate_real(|x| (x - 0.3).abs().sqrt() * (-x).exp(), &tail, &cfg);
        assert!(matches!(r, Err(Error::NoConvergence { .. })));
    }
}
