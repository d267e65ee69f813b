//! Hypergeometric, recurrence and numeric Gram–Schmidt constructions of the
//! monic families agree.

use parity_wilson::expand::gram_schmidt_oracle;
use parity_wilson::numcore::Rational;
use parity_wilson::wilson::{
    case_a_hypergeometric, case_b_hypergeometric_symbolic, monic_from_hypergeometric, monic_from_recurrence,
    recurrence_table_symbolic, RecurrenceForm, WilsonFamily,
};
use proptest::prelude::*;

const N: usize = 10;

#[test]
fn case_a_recurrence_matches_hypergeometric() {
    let rec = monic_from_recurrence(&WilsonFamily::case_a(), N, RecurrenceForm::Corrected).unwrap();
    let rec = rec.exact().unwrap();
    for (n, p) in rec.iter().enumerate() {
        assert_eq!(p, &case_a_hypergeometric(n), "n={n}");
    }
}

#[test]
fn symbolic_case_b_recurrence_matches_hypergeometric() {
    let rec = recurrence_table_symbolic(false, RecurrenceForm::Corrected, N);
    for (n, p) in rec.iter().enumerate() {
        assert_eq!(p, &case_b_hypergeometric_symbolic(n), "n={n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn numeric_case_b_routes_agree(p in -9i64..60, q in 1i64..10) {
        let b = Rational::new(p, q);
        prop_assume!(b > Rational::from_integer(-1));
        let family = WilsonFamily::case_b(b.clone()).unwrap();
        prop_assume!(family.degenerate_root().is_none());
        let rec = monic_from_recurrence(&family, 6, RecurrenceForm::Corrected).unwrap();
        for (n, p) in rec.exact().unwrap().iter().enumerate() {
            prop_assert_eq!(p, &monic_from_hypergeometric(&family, n).unwrap());
        }
    }
}

fn gram_schmidt_agrees(family: &WilsonFamily) {
    let gs = gram_schmidt_oracle(family, N).unwrap().monic_coefficients();
    let rec = monic_from_recurrence(family, N, RecurrenceForm::Corrected).unwrap();
    for (n, exact) in rec.exact().unwrap().iter().enumerate() {
        let exact = exact.to_f64_coeffs();
        let scale = exact.iter().map(|c| c.abs()).fold(0.0, f64::max);
        for (k, (a, b)) in gs[n].iter().zip(&exact).enumerate() {
            assert!((a - b).abs() <= 1e-8 * scale, "{family} n={n} k={k}: {a} vs {b}");
        }
    }
}

#[test]
fn gram_schmidt_case_a() {
    gram_schmidt_agrees(&WilsonFamily::case_a());
}

#[test]
fn gram_schmidt_case_b() {
    for b in [Rational::new(-1, 2), Rational::new(3, 2), Rational::new(73, 10), Rational::new(1, 3)] {
        gram_schmidt_agrees(&WilsonFamily::case_b(b).unwrap());
    }
}
