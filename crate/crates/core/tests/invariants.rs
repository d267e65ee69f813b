use num_traits::Zero;
use parity_wilson::lorentz::{algebra_audit, build_rep, n0_extraction, RepLabel, Spin};
use parity_wilson::numcore::Rational;
use parity_wilson::spectral::{eigenvalue, g_case_a, g_case_b_symbolic, residual_g, GEquation, GFunction};
use proptest::prelude::*;

fn rational(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (-max_num..=max_num, 1..=max_den).prop_map(|(p, q)| Rational::new(p, q))
}

fn half_integer_pole(z: &Rational) -> bool {
    let twice = z * Rational::from_integer(2);
    twice.is_integer() && !z.is_integer()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn case_a_g_solves_its_equation(n in 0usize..9, z in rational(60, 9)) {
        prop_assume!(!half_integer_pole(&z));
        let g = g_case_a(n);
        let ell1 = Rational::from_integer(eigenvalue(n).0 as i64);
        let r = residual_g(&GEquation::CaseA, &|x: &Rational| g.eval(x), &ell1, &z).unwrap();
        prop_assert!(r.is_zero());
    }

    #[test]
    fn case_a_wrong_eigenvalue_leaves_residual(n in 1usize..9, z in rational(60, 9), shift in 1i64..4) {
        prop_assume!(!half_integer_pole(&z) && !z.is_zero());
        let g = g_case_a(n);
        let ell1 = Rational::from_integer(eigenvalue(n).0 as i64 + shift);
        let value = g.eval(&z).unwrap();
        prop_assume!(!value.is_zero());
        let r = residual_g(&GEquation::CaseA, &|x: &Rational| g.eval(x), &ell1, &z).unwrap();
        prop_assert!(!r.is_zero());
    }

    #[test]
    fn case_b_g_solves_its_equation(n in 0usize..8, b in rational(40, 7), z in rational(60, 9)) {
        prop_assume!(!z.is_zero());
        let g = GFunction::Poly(g_case_b_symbolic(n).at_param(&b));
        let ell1 = Rational::from_integer(eigenvalue(n).0 as i64);
        let r = residual_g(&GEquation::CaseB(b), &|x: &Rational| g.eval(x), &ell1, &z).unwrap();
        prop_assert!(r.is_zero());
    }

    #[test]
    fn spin_labels_round_trip(a in 0u32..=30, b in 0u32..=30) {
        let label = RepLabel::Spin(Spin(a), Spin(b));
        let text = format!("{},{}", Spin(a), Spin(b));
        prop_assert_eq!(text.parse::<RepLabel>().unwrap(), label);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn spin_representations_close(a in 0u32..=4, b in 0u32..=4) {
        let rep = build_rep(RepLabel::Spin(Spin(a), Spin(b))).unwrap();
        let audit = algebra_audit(&rep);
        let scale = (1.0 + f64::from(a.max(b))).powi(4);
        for e in &audit.entries {
            prop_assert!(e.residual <= 1e-12 * scale, "{} {}: {:e}", audit.rep, e.id, e.residual);
        }
        let n0 = n0_extraction(&rep);
        prop_assert!(n0.residual_consistent <= 1e-12 * scale);
        prop_assert!(n0.n2_trace <= 1e-12 * scale);
    }
}

#[test]
fn vector_representation_closes() {
    let audit = algebra_audit(&build_rep(RepLabel::Vector).unwrap());
    assert!(audit.max_residual() <= 1e-12, "{audit:?}");
}
