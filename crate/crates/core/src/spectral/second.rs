//! Second solutions of the case A `g` equation by reduction of order,
//! `h_n = g_n u_n`, on an integer-step lattice `z₀, z₀+1, …`.

use serde::Serialize;

use super::eigen::{g_case_a, GFunction};
use crate::error::{Error, Result};
use num_traits::{One, Zero};

use crate::numcore::{Complex, Rational};

/// Values on the lattice `anchor + k`, `k = 0..len`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LatticeFunction {
    pub anchor: f64,
    #[serde(serialize_with = "ser_values")]
    pub values: Vec<Complex>,
}

fn ser_values<S: serde::Serializer>(v: &[Complex], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for z in v {
        seq.serialize_element(&serde_json::json!({"re": z.re, "im": z.im}))?;
    }
    seq.end()
}

impl LatticeFunction {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn point(&self, k: usize) -> f64 {
        self.anchor + k as f64
    }

    pub fn from_fn(anchor: f64, len: usize, f: impl Fn(f64) -> Complex) -> Self {
        LatticeFunction { anchor, values: (0..len).map(|k| f(anchor + k as f64)).collect() }
    }
}

fn lattice_pole(z: &Rational) -> Error {
    Error::LatticePole { z: z.to_f64() }
}

/// `u(z) - u(z-1)` for the lattice step ending at `z`.
fn increment(g: &GFunction, z: &Rational) -> Result<Rational> {
    let two = Rational::from_integer(2);
    let a = &two * z - Rational::from_integer(3);
    let b = &two * z - Rational::one();
    let c = &two * z + Rational::one();
    let gm = g_exact(g, &(z - Rational::one()))?;
    let g0 = g_exact(g, z)?;
    Ok((a.pow(2) * b.pow(3) * c.pow(2) * gm * g0).recip())
}

fn g_exact(g: &GFunction, z: &Rational) -> Result<Rational> {
    let v = g.eval(z).map_err(|_| lattice_pole(z))?;
    if v.is_zero() {
        return Err(lattice_pole(z));
    }
    Ok(v)
}

fn check_lattice_point(z: &Rational) -> Result<()> {
    let two_z = Rational::from_integer(2) * z;
    for bad in [-1, 1, 3] {
        if two_z == Rational::from_integer(bad) {
            return Err(lattice_pole(z));
        }
    }
    Ok(())
}

/// Exact `(u_n, h_n)` on `z0 + k`, `k = 0..length`, with `u_n(z0) = 0`.
pub fn second_solution_exact(n: usize, z0: &Rational, length: usize) -> Result<(Vec<Rational>, Vec<Rational>)> {
    if length < 4 {
        return Err(Error::InvalidParameter(format!("lattice length {length} < 4")));
    }
    let g = g_case_a(n);
    let mut u = Vec::with_capacity(length);
    let mut h = Vec::with_capacity(length);
    let mut acc = Rational::zero();
    for k in 0..length {
        let z = z0 + Rational::from_integer(k as i64);
        check_lattice_point(&z)?;
        if k > 0 {
            acc += &increment(&g, &z)?;
        }
        h.push(g_exact(&g, &z)? * acc.clone());
        u.push(acc.clone());
    }
    Ok((u, h))
}

/// `(u_n, h_n)` on `length` lattice points from `z0`. The anchor is taken at
/// its exact binary value, the sums are exact and only the output is rounded.
pub fn second_solution(n: usize, z0: f64, length: usize) -> Result<(LatticeFunction, LatticeFunction)> {
    let exact = Rational::from_f64(z0).ok_or_else(|| Error::InvalidParameter("non-finite lattice anchor".into()))?;
    let (u, h) = second_solution_exact(n, &exact, length)?;
    let lift = |v: Vec<Rational>| LatticeFunction { anchor: z0, values: v.iter().map(|r| Complex::new(r.to_f64(), 0.0)).collect() };
    Ok((lift(u), lift(h)))
}

/// Case A `g_n` sampled on the same lattice.
pub fn g_on_lattice(n: usize, z0: f64, length: usize) -> Result<LatticeFunction> {
    let g = g_case_a(n);
    let values = (0..length)
        .map(|k| g.eval(&(z0 + k as f64)).map(|v| Complex::new(v, 0.0)))
        .collect::<Result<Vec<_>>>()?;
    Ok(LatticeFunction { anchor: z0, values })
}

/// Case A three-point residual at interior lattice points, divided by the sum
/// of the magnitudes of its four terms. Returns `(z, scaled residual)`.
pub fn lattice_residuals(h: &LatticeFunction, ell1: f64) -> Vec<(f64, f64)> {
    (1..h.len().saturating_sub(1))
        .map(|k| {
            let z = h.point(k);
            let terms = [
                (2.0 * z + 1.0) * (2.0 * z + 3.0).powi(2) * h.values[k + 1],
                -4.0 * z * (2.0 * z - 1.0) * (2.0 * z + 1.0) * h.values[k],
                (2.0 * z - 1.0) * (2.0 * z - 3.0).powi(2) * h.values[k - 1],
                -8.0 * z * (ell1 * ell1 - 1.0) * h.values[k],
            ];
            let sum: Complex = terms.iter().sum();
            let scale: f64 = terms.iter().map(|t| t.norm()).sum();
            (z, if scale == 0.0 { 0.0 } else { sum.norm() / scale })
        })
        .collect()
}

/// Casoratian `g(z) h(z+1) - g(z+1) h(z)` at every lattice point but the last.
pub fn casoratian(g: &LatticeFunction, h: &LatticeFunction) -> Vec<(f64, Complex)> {
    (0..g.len().min(h.len()).saturating_sub(1))
        .map(|k| (g.point(k), g.values[k] * h.values[k + 1] - g.values[k + 1] * h.values[k]))
        .collect()
}

/// Checks the first-order equation for `u_n` by direct substitution at the
/// interior points of an exact lattice.
pub fn increment_ratio_holds(n: usize, z0: &Rational, u: &[Rational]) -> Result<bool> {
    let g = g_case_a(n);
    let two = Rational::from_integer(2);
    for k in 1..u.len().saturating_sub(1) {
        let z = z0 + Rational::from_integer(k as i64);
        let lhs = (&u[k + 1] - &u[k]) / (&u[k] - &u[k - 1]);
        let rhs = (&two * &z - Rational::one()) * (&two * &z - Rational::from_integer(3)).pow(2) * g_exact(&g, &(&z - Rational::one()))?
            / ((&two * &z + Rational::one()) * (&two * &z + Rational::from_integer(3)).pow(2) * g_exact(&g, &(&z + Rational::one()))?);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h0_matches_closed_form_up_to_g0() {
        let (_, h) = second_solution(0, 2.0, 8).unwrap();
        let closed = |z: f64| 1.0 / (z * z - 0.25).powi(2);
        let g0 = |z: f64| 1.0 / (z * z - 0.25);
        // fit h = α·closed + β·g0 on the first two points, check the rest
        let (z1, z2) = (h.point(1), h.point(2));
        let det = closed(z1) * g0(z2) - closed(z2) * g0(z1);
        let alpha = (h.values[1].re * g0(z2) - h.values[2].re * g0(z1)) / det;
        let beta = (closed(z1) * h.values[2].re - closed(z2) * h.values[1].re) / det;
        for k in 0..8 {
            let z = h.point(k);
            let fit = alpha * closed(z) + beta * g0(z);
            let scale = (alpha * closed(z)).abs() + (beta * g0(z)).abs();
            assert!((h.values[k].re - fit).abs() <= 1e-12 * scale, "z={z}");
        }
        assert!(alpha.abs() > 0.0);
    }

    #[test]
    fn second_solutions_satisfy_equation() {
        for n in 0..=4 {
            let (_, h) = second_solution(n, 2.0, 8).unwrap();
            let ell1 = (2 * n + 1) as f64;
            for (z, r) in lattice_residuals(&h, ell1) {
                assert!(r < 1e-12, "n={n} z={z} r={r}");
            }
            let g = g_on_lattice(n, 2.0, 8).unwrap();
            assert!(casoratian(&g, &h).iter().all(|(_, c)| c.norm() > 0.0));
            let (ux, _) = second_solution_exact(n, &Rational::from_integer(2), 8).unwrap();
            assert!(increment_ratio_holds(n, &Rational::from_integer(2), &ux).unwrap());
        }
    }

    #[test]
    fn lattice_poles() {
        assert!(matches!(second_solution(1, 0.5, 6), Err(Error::LatticePole { .. })));
        assert!(matches!(second_solution(0, 1.5, 6), Err(Error::LatticePole { .. })));
        assert!(second_solution(1, 2.0, 3).is_err());
    }
}
