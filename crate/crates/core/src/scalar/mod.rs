//! Exact scalars: rationals, cyclotomic fields Q(ζ_n), and dense linear algebra
//! over them. Nothing here uses floating point except the explicitly
//! approximate [`CycNumber::approx`].

mod cyclotomic;
mod matrix;
mod rational;

pub use cyclotomic::{cyclotomic_poly, totient, CycNumber, Scalar};
pub use matrix::DenseMatrix;
pub use rational::{ParseRationalError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("field mismatch (conductors {0} and {1})")]
    FieldMismatch(u32, u32),
    #[error("singular system")]
    Singular,
}

/// Parse a comma-separated list of power-basis coefficients, e.g. `1/2,0,-3`.
pub fn parse_scalar(conductor: u32, text: &str) -> Result<Scalar, ParseRationalError> {
    let coeffs = text
        .split(',')
        .map(|t| t.trim().parse::<Rational>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CycNumber::make(conductor, &coeffs))
}

/// Inverse of [`parse_scalar`]: trailing zero coefficients are dropped.
pub fn format_scalar_coeffs(x: &Scalar) -> String {
    let c = x.coeffs();
    let len = c.iter().rposition(|v| !v.is_zero()).map_or(1, |p| p + 1);
    c[..len].iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}
