//! The reported error of the half-line integrator covers the true error.

use std::f64::consts::PI;

use parity_wilson::expand::{integrate_real, QuadratureConfig, TailModel};

type Case = (String, Box<dyn Fn(f64) -> f64>, TailModel, f64);

fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}

#[test]
fn reported_error_is_honest() {
    let cfg = QuadratureConfig::default();
    let mut cases: Vec<Case> = Vec::new();
    for (k, a) in [(0u32, 1.0), (1, 1.0), (2, 2.0), (3, 0.5), (5, 3.0), (8, 2.0 * PI), (12, 4.0)] {
        cases.push((
            format!("x^{k} e^(-{a} x)"),
            Box::new(move |x: f64| x.powi(k as i32) * (-a * x).exp()),
            TailModel::new(a, f64::from(k)),
            factorial(k) / a.powi(k as i32 + 1),
        ));
    }
    // ∫ x^{s-1} / sinh(πx) = 2 (1 - 2^{-s}) Γ(s) ζ(s) / π^s
    for (k, exact) in [(0, 0.25), (1, 0.125), (2, 0.25)] {
        cases.push((
            format!("x^{} / sinh(pi x)", 2 * k + 1),
            Box::new(move |x: f64| if x == 0.0 { if k == 0 { 1.0 / PI } else { 0.0 } } else { x.powi(2 * k + 1) / (PI * x).sinh() }),
            TailModel::new(PI, f64::from(2 * k as u32 + 1)),
            exact,
        ));
    }
    // Gaussian moments
    for k in 0..4u32 {
        let exact = factorial(2 * k) / (factorial(k) * 4f64.powi(k as i32)) * PI.sqrt() / 2.0;
        cases.push((format!("x^{} e^(-x^2)", 2 * k), Box::new(move |x: f64| x.powi(2 * k as i32) * (-x * x).exp()), TailModel::new(1.0, f64::from(2 * k)), exact));
    }
    // ∫ e^{-a x} cos(b x) dx = a / (a² + b²)
    for (a, b) in [(1.0, 1.0), (0.5, 3.0), (2.0, 10.0)] {
        cases.push((format!("e^(-{a}x) cos({b}x)"), Box::new(move |x: f64| (-a * x).exp() * (b * x).cos()), TailModel::new(a, 0.0), a / (a * a + b * b)));
    }
    // ∫ x / cosh²(πx) dx = ln 2 / π²
    cases.push(("x sech^2(pi x)".into(), Box::new(|x: f64| x / (PI * x).cosh().powi(2)), TailModel::new(2.0 * PI, 1.0), 2f64.ln() / (PI * PI)));
    // ∫ 1 / (1 + e^{x}) dx = ln 2
    cases.push(("1/(1+e^x)".into(), Box::new(|x: f64| 1.0 / (1.0 + x.exp())), TailModel::new(1.0, 0.0), 2f64.ln()));
    // ∫ x / (e^{x} - 1) dx = π²/6
    cases.push(("x/(e^x-1)".into(), Box::new(|x: f64| if x == 0.0 { 1.0 } else { x / x.exp_m1() }), TailModel::new(1.0, 1.0), PI * PI / 6.0));
    assert_eq!(cases.len(), 20);

    for (name, f, tail, exact) in &cases {
        let r = integrate_real(f, tail, &cfg).unwrap();
        let err = (r.value.re - exact).abs();
        assert!(err <= r.error, "{name}: true error {err:e} > reported {:e}", r.error);
        assert!(r.error <= 1e-10 * exact.abs().max(1.0), "{name}: reported error {:e} too loose", r.error);
    }
}
