//! Published coefficient tables, transcribed as exact rationals (lowest power first).

use crate::numcore::{rpoly, BParamPolynomial, Poly, RationalPolynomial};

/// Case A `g_1..g_5` in `z²`.
pub fn g_case_a() -> Vec<RationalPolynomial> {
    vec![
        rpoly(&[(1, 1)]),
        rpoly(&[(3, 4), (1, 1)]),
        rpoly(&[(117, 80), (7, 2), (1, 1)]),
        rpoly(&[(2385, 448), (1957, 112), (37, 4), (1, 1)]),
        rpoly(&[(55575, 1792), (2011, 16), (747, 8), (19, 1), (1, 1)]),
    ]
}

/// Case A polynomial parts of `f_1..f_5` in `W` (`f_0` has none).
pub fn f_case_a() -> Vec<RationalPolynomial> {
    vec![
        rpoly(&[(0, 1), (1, 1)]),
        rpoly(&[(0, 1), (1, 1), (1, 1)]),
        rpoly(&[(0, 1), (12, 5), (4, 1), (1, 1)]),
        rpoly(&[(0, 1), (72, 7), (156, 7), (10, 1), (1, 1)]),
        rpoly(&[(0, 1), (480, 7), (176, 1), (108, 1), (20, 1), (1, 1)]),
    ]
}

fn bp(rows: &[&[(i64, i64)]]) -> BParamPolynomial {
    Poly::new(rows.iter().map(|r| rpoly(r)).collect())
}

/// Case B `g_0..g_3(B, z)` in `z²`, each coefficient a polynomial in `B`.
pub fn g_case_b() -> Vec<BParamPolynomial> {
    vec![
        bp(&[&[(1, 1)]]),
        bp(&[&[(-1, 4), (-1, 2)], &[(1, 1)]]),
        bp(&[&[(-3, 16), (-1, 4), (1, 6)], &[(1, 2), (-1, 1)], &[(1, 1)]]),
        bp(&[
            &[(-117, 320), (-63, 160), (2, 5), (-1, 20)],
            &[(47, 80), (-57, 20), (3, 5)],
            &[(13, 4), (-3, 2)],
            &[(1, 1)],
        ]),
    ]
}

/// Case B polynomial parts of `f_0..f_3(B, W)` in `W`.
pub fn f_case_b() -> Vec<BParamPolynomial> {
    vec![
        bp(&[&[(1, 1)]]),
        bp(&[&[(0, 1), (1, 2)], &[(1, 1)]]),
        bp(&[&[(0, 1), (1, 2), (1, 6)], &[(1, 1), (1, 1)], &[(1, 1)]]),
        bp(&[&[(0, 1), (6, 5), (19, 20), (1, 20)], &[(12, 5), (22, 5), (3, 5)], &[(4, 1), (3, 2)], &[(1, 1)]]),
    ]
}

/// `P_2` produced by the printed case A recurrence from its printed seeds.
pub fn printed_recurrence_p2_case_a() -> RationalPolynomial {
    rpoly(&[(57, 20), (-15, 4), (1, 1)])
}
