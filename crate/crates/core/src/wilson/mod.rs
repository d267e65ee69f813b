//! The two monic Wilson families `a = b = 1/2`, `c = d = 3/2` (case A) and
//! `a = b = 1/2`, `c, d = 1/2 ∓ sqrt(B+1)` (case B).
//!
//! Polynomials are stored in `u = x²`. The `g` functions of the difference
//! equations are recovered by `u = -z²` with a sign `(-1)^n`.

mod family;
mod generating;
mod tables;

pub use family::{
    is_square_minus_one, printed_squared_norm, squared_norm, weight_and_norm, MassPoint, NormValue, NumericRecurrence,
    WeightFunction, WilsonCase, WilsonFamily, WilsonParameters,
};
pub use generating::{generating_function_check, GeneratingCheck, GeneratingIdentity, IdentityForm};
pub use tables::{
    audit_recurrence, case_a_hypergeometric, case_b_hypergeometric_symbolic, monic_from_hypergeometric,
    monic_from_recurrence, recurrence_table_symbolic, symbolic_case_b_table, wilson_polynomial, MonicTable,
    RecurrenceAudit, RecurrenceForm, ReflectionComparison,
};

use crate::numcore::{BParamPolynomial, RationalPolynomial};

/// `(-1)^n P_n(-z²)` as a polynomial in `z²`.
pub fn to_g_variable(n: usize, p: &RationalPolynomial) -> RationalPolynomial {
    let refl = p.reflect();
    if n % 2 == 1 {
        -refl
    } else {
        refl
    }
}

/// Symbolic-`B` version of [`to_g_variable`].
pub fn to_g_variable_symbolic(n: usize, p: &BParamPolynomial) -> BParamPolynomial {
    let refl = p.reflect();
    if n % 2 == 1 {
        -refl
    } else {
        refl
    }
}
