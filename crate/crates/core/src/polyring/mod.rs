//! Exact arithmetic kernel: `q`-polynomials, Laurent polynomials in `x_1..x_n`,
//! truncated `q`-series, determinants and `q`-factorials.

mod determinant;
pub mod json;
mod laurent;
mod qfunctions;
mod qpoly;
mod series;

pub use determinant::determinant;
pub use laurent::{sum_all, ExponentVector, LaurentPolynomial, RingContext};
pub use qfunctions::{
    elementary_symmetric, elementary_table, gaussian_multinomial, inverse_euler_power,
    q_pochhammer, variables,
};
pub use qpoly::QPoly;
pub use series::{parse_rational, rational_text, Comparison, Mismatch, QSeries};
