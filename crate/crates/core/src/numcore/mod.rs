//! Exact and floating-point arithmetic shared by every other module.

pub mod field;
pub mod hypergeometric;
pub mod poly;
pub mod rational;

pub use field::{Field, Ring};
pub use hypergeometric::{hyp_2f1_series, hyp_pfq_series, hyp_pfq_terminating, pochhammer, SeriesConfig, SeriesValue};
pub use poly::{rpoly, BParamPolynomial, Poly, RationalPolynomial};
pub use rational::{q, Rational};

/// Complex double used for every transcendental quantity.
pub type Complex = num_complex::Complex64;

pub fn complex(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// Serde helper writing a complex number as `{"re": …, "im": …}`.
pub mod complex_json {
    use serde::ser::SerializeStruct;
    use serde::Serializer;

    use super::Complex;

    pub fn serialize<S: Serializer>(z: &Complex, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Complex", 2)?;
        st.serialize_field("re", &z.re)?;
        st.serialize_field("im", &z.im)?;
        st.end()
    }
}
