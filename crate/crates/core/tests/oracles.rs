//! Series evaluators against exact rational sums.

use num_traits::{One, Zero};
use parity_wilson::numcore::{complex, hyp_2f1_series, hyp_pfq_terminating, Rational, SeriesConfig};
use parity_wilson::wilson::wilson_polynomial;
use proptest::prelude::*;

fn small_rational(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (-max_num..=max_num, 1..=max_den).prop_map(|(p, q)| Rational::new(p, q))
}

/// Lower parameter away from the poles at nonpositive integers.
fn lower_parameter() -> impl Strategy<Value = Rational> {
    small_rational(40, 6).prop_filter("c not a nonpositive integer", |c| !(c.is_integer() && !c.is_positive()))
}

/// First 200 terms in exact arithmetic.
fn exact_2f1(a: &Rational, b: &Rational, c: &Rational, t: &Rational) -> Rational {
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    for k in 0..200 {
        sum += &term;
        let kk = Rational::from_integer(k);
        let num = (a + &kk) * (b + &kk);
        if num.is_zero() {
            break;
        }
        term = term * num * t / ((c + &kk) * Rational::from_integer(k + 1));
    }
    sum
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn two_f_one_bound_covers_true_error(
        a in small_rational(30, 4),
        b in small_rational(30, 4),
        c in lower_parameter(),
        t in (-6i64..=6, 10i64..=20).prop_map(|(p, q)| Rational::new(p, q)),
    ) {
        let reference = exact_2f1(&a, &b, &c, &t).to_f64();
        let s = hyp_2f1_series(
            complex(a.to_f64(), 0.0),
            complex(b.to_f64(), 0.0),
            complex(c.to_f64(), 0.0),
            complex(t.to_f64(), 0.0),
            &SeriesConfig::default(),
        ).unwrap();
        // parameters are rounded to doubles before summation
        let input_rounding = 8.0 * f64::EPSILON * reference.abs();
        let err = (s.value.re - reference).abs();
        prop_assert!(s.value.im == 0.0);
        prop_assert!(err <= s.error_bound + input_rounding, "err {err:e} bound {:e}", s.error_bound);
    }

    #[test]
    fn terminating_4f3_matches_wilson_horner(
        n in 0usize..8,
        a in small_rational(5, 4).prop_filter("a > 0", |a| a.is_positive()),
        b in small_rational(5, 4).prop_filter("b > 0", |b| b.is_positive()),
        c in small_rational(5, 4).prop_filter("c > 0", |c| c.is_positive()),
        d in small_rational(5, 4).prop_filter("d > 0", |d| d.is_positive()),
        z in small_rational(20, 7),
    ) {
        // W_n(-z²) = (a+b)_n (a+c)_n (a+d)_n 4F3(-n, n+a+b+c+d-1, a-z, a+z; a+b, a+c, a+d; 1)
        let w = wilson_polynomial([&a, &b, &c, &d], n);
        let horner = w.eval(&-(&z * &z));
        let n_r = Rational::from_integer(n as i64);
        let num = [-n_r.clone(), &n_r + &a + &b + &c + &d - Rational::one(), &a - &z, &a + &z];
        let den = [&a + &b, &a + &c, &a + &d];
        let poch = |x: &Rational| (0..n).fold(Rational::one(), |acc, k| acc * (x + Rational::from_integer(k as i64)));
        let hyp = hyp_pfq_terminating(&num, &den, &Rational::one(), n).unwrap();
        prop_assert_eq!(horner, poch(&den[0]) * poch(&den[1]) * poch(&den[2]) * hyp);
    }
}

#[test]
fn two_f_one_closed_forms() {
    let cfg = SeriesConfig::default();
    // 2F1(1, 1; 2; t) = -ln(1-t)/t
    for t in [-0.9, -0.3, 0.2, 0.7] {
        let s = hyp_2f1_series(complex(1.0, 0.0), complex(1.0, 0.0), complex(2.0, 0.0), complex(t, 0.0), &cfg).unwrap();
        let exact = -(1.0f64 - t).ln() / t;
        assert!((s.value.re - exact).abs() <= s.error_bound + 4.0 * f64::EPSILON * exact.abs(), "t={t}");
    }
    // 2F1(a, b; b; t) = (1-t)^{-a}
    let s = hyp_2f1_series(complex(0.5, 0.0), complex(2.5, 0.0), complex(2.5, 0.0), complex(0.6, 0.0), &cfg).unwrap();
    assert!((s.value.re - 0.4f64.powf(-0.5)).abs() <= s.error_bound + 1e-15);
}
