use parity_wilson::expand::{gram_entry, QuadratureConfig};
use parity_wilson::numcore::Rational;
use parity_wilson::wilson::{squared_norm, WilsonFamily};

fn check(family: &WilsonFamily, n_max: usize) {
    let cfg = QuadratureConfig::default();
    let h: Vec<f64> = (0..=n_max).map(|n| squared_norm(family, n).unwrap().value).collect();
    for n in 0..=n_max {
        for m in 0..=n {
            let (v, err) = gram_entry(family, n, m, &cfg).unwrap();
            if n == m {
                assert!((v - h[n]).abs() <= 1e-8 * h[n], "{family} n={n}: {v} vs {}", h[n]);
                assert!(err <= 1e-8 * h[n]);
            } else {
                assert!(v.abs() <= 1e-8 * (h[n] * h[m]).sqrt(), "{family} ({n},{m}): {v}");
            }
        }
    }
}

#[test]
fn case_a_norms_and_cross_terms() {
    check(&WilsonFamily::case_a(), 6);
    let (v0, _) = gram_entry(&WilsonFamily::case_a(), 0, 0, &QuadratureConfig::default()).unwrap();
    assert!((v0 - 2.0 / 3.0).abs() < 1e-13);
}

#[test]
fn case_b_norms_and_cross_terms() {
    // with and without point masses, small and large B
    for b in [Rational::new(-1, 2), Rational::new(3, 2), Rational::new(73, 10), Rational::new(5, 4)] {
        check(&WilsonFamily::case_b(b).unwrap(), 6);
    }
}
