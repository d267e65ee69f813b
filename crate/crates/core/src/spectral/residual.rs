//! Residuals (left side minus right side) of the difference equations: the
//! master equation in `W`, its `M = 0` and `B = M = 0` specializations, and
//! the three-point equations for `g` in the variable `z`.

use crate::error::{Error, Result};
use crate::numcore::{Complex, Field, Rational};

/// Which three-point equation for `g`.
#[derive(Debug, Clone, PartialEq)]
pub enum GEquation<F> {
    /// `(2z+1)(2z+3)² g(z+1) − 4z(2z−1)(2z+1) g(z) + (2z−1)(2z−3)² g(z−1) = 8z(ℓ₁²−1) g(z)`.
    CaseA,
    /// The `B`-dependent equation, which divides by `2z`.
    CaseB(F),
}

/// Residual of the `g` equation at `z`. With exact rational inputs the result is exact.
pub fn residual_g<F: Field>(eq: &GEquation<F>, g: &dyn Fn(&F) -> Result<F>, ell1: &F, z: &F) -> Result<F> {
    let c = |n: i64| F::from_i64(n);
    let one = F::one();
    let gp = g(&(z.clone() + one.clone()))?;
    let g0 = g(z)?;
    let gm = g(&(z.clone() - one.clone()))?;
    let l2m1 = ell1.clone() * ell1.clone() - one;
    let tz = c(2) * z.clone();
    match eq {
        GEquation::CaseA => {
            let p3 = tz.clone() + c(3);
            let m3 = tz.clone() - c(3);
            let lhs = (tz.clone() + c(1)) * p3.clone() * p3 * gp
                - c(4) * z.clone() * (tz.clone() - c(1)) * (tz.clone() + c(1)) * g0.clone()
                + (tz.clone() - c(1)) * m3.clone() * m3 * gm;
            Ok(lhs - c(8) * z.clone() * l2m1 * g0)
        }
        GEquation::CaseB(b) => {
            if z.is_zero() {
                return Err(Error::DomainPole { what: "z = 0".into() });
            }
            let quarter = F::from_rational(&Rational::new(1, 4));
            let three_quarters = F::from_rational(&Rational::new(3, 4));
            let z2 = z.clone() * z.clone();
            let w = z2.clone() - b.clone() - quarter;
            let k = c(3) * z2 - b.clone() - three_quarters;
            let lhs = c(2) * w.clone() * g0.clone() - (k.clone() + tz.clone() * w.clone()) / tz.clone() * gp
                + (k - tz.clone() * w) / tz * gm;
            Ok(lhs + l2m1 * g0)
        }
    }
}

fn check_master_domain(b: f64, w: f64) -> Result<f64> {
    let radicand = 1.0 + 4.0 * b + 4.0 * w;
    if b + w == 0.0 {
        return Err(Error::DomainPole { what: format!("B + W = 0 at W = {w}") });
    }
    if !(radicand > 0.0) {
        return Err(Error::DomainPole { what: format!("1 + 4B + 4W = {radicand} <= 0") });
    }
    Ok(radicand.sqrt())
}

fn finite(v: Complex, what: &'static str) -> Result<Complex> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Master equation residual in `W` for given `B`, `M` and `ℓ₁`.
pub fn residual_master(f: &dyn Fn(f64) -> Complex, b: f64, m: f64, ell1: f64, w: f64) -> Result<Complex> {
    let s = check_master_domain(b, w)?;
    let ratio = m / (b + w);
    let c = w - ratio;
    let f0 = f(w);
    let fp = f(w + 1.0 + s);
    let fm = f(w + 1.0 - s);
    let lhs = 2.0 * (w + ratio) * f0 + ((2.0 * b + 4.0 * w + c * (s - 1.0)) * fp + (-2.0 * b - 4.0 * w + c * (s + 1.0)) * fm) / s;
    finite(lhs - (1.0 - ell1 * ell1) * f0, "master residual")
}

/// The `M = 0` equation in `W`, written out separately.
pub fn residual_m0(f: &dyn Fn(f64) -> Complex, b: f64, ell1: f64, w: f64) -> Result<Complex> {
    let s = check_master_domain(b, w)?;
    let f0 = f(w);
    let lhs = 2.0 * w * f0
        + ((2.0 * b + 3.0 * w + w * s) * f(w + 1.0 + s) - (2.0 * b + 3.0 * w - w * s) * f(w + 1.0 - s)) / s;
    finite(lhs - (1.0 - ell1 * ell1) * f0, "M = 0 residual")
}

/// The `B = M = 0` equation in `W`.
pub fn residual_b0m0(f: &dyn Fn(f64) -> Complex, ell1: f64, w: f64) -> Result<Complex> {
    let s = check_master_domain(0.0, w)?;
    let f0 = f(w);
    let lhs = 2.0 * w * f0 + (3.0 + s) * w / s * f(w + 1.0 + s) - (3.0 - s) * w / s * f(w + 1.0 - s);
    finite(lhs - (1.0 - ell1 * ell1) * f0, "B = M = 0 residual")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::q;
    use crate::spectral::{eigenfunction_case_a, eigenfunction_case_b, g_case_a, BValue, GFunction};

    fn poly_g(n: usize) -> impl Fn(&Rational) -> Result<Rational> {
        let g = g_case_a(n);
        move |z: &Rational| g.eval(z)
    }

    #[test]
    fn case_a_g_exact_zero() {
        for n in 0..8 {
            let g = poly_g(n);
            let ell1 = Rational::from_integer(2 * n as i64 + 1);
            for z in [q(2, 1), q(7, 3), q(-5, 7), q(11, 1)] {
                assert_eq!(residual_g(&GEquation::CaseA, &g, &ell1, &z).unwrap(), Rational::from_integer(0), "n={n}");
            }
        }
    }

    #[test]
    fn case_a_perturbed_eigenvalue() {
        let g = g_case_a(2);
        let gf = move |z: &f64| g.eval(z);
        let r = residual_g(&GEquation::CaseA, &gf, &(5.0 + 1e-3), &2.0).unwrap();
        assert!(r.abs() > 1e-6);
        // exactly -8z·g(z)·δ(ell1²) with g₂(2) = 19/4
        let d = (5.0f64 + 1e-3).powi(2) - 25.0;
        assert!((r + 16.0 * 4.75 * d).abs() < 1e-9);
    }

    #[test]
    fn case_b_constant_solution() {
        let one = |_: &f64| Ok(1.0);
        let r = residual_g(&GEquation::CaseB(0.4), &one, &1.0, &1.7).unwrap();
        assert!(r.abs() < 1e-14);
        assert!(residual_g(&GEquation::CaseB(0.4), &one, &1.0, &0.0).is_err());
    }

    #[test]
    fn case_b_g_exact_zero() {
        for n in 0..6 {
            let g = crate::spectral::g_case_b_symbolic(n).at_param(&q(3, 2));
            let gf = GFunction::Poly(g);
            let geval = move |z: &Rational| gf.eval(z);
            let ell1 = Rational::from_integer(2 * n as i64 + 1);
            for z in [q(5, 2), q(4, 3), q(-9, 4)] {
                assert_eq!(residual_g(&GEquation::CaseB(q(3, 2)), &geval, &ell1, &z).unwrap(), q(0, 1));
            }
        }
    }

    #[test]
    fn master_examples() {
        let f1 = eigenfunction_case_a(1).evaluator(0.0);
        assert!(residual_master(&f1, 0.0, 0.0, 3.0, 2.3).unwrap().norm() < 1e-12);
        assert!(residual_master(&f1, 0.0, 0.0, 3.01, 2.3).unwrap().norm() > 1e-3);
        let f2 = eigenfunction_case_b(2, &BValue::Exact(q(3, 2))).unwrap().evaluator(0.0);
        assert!(residual_master(&f2, 1.5, 0.0, 5.0, 1.1).unwrap().norm() < 1e-12);
        assert!(residual_master(&f2, 1.5, 0.0, 5.0, -1.5).is_err());
        assert!(residual_master(&f2, 1.5, 0.0, 5.0, -2.0).is_err());
    }
}
