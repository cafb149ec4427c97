use num_complex::Complex64;
use thiserror::Error;

use crate::model::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// The Laplace variable lies on the branch cut (closed negative real axis) or is not finite.
    #[error("Laplace variable s = {s} is outside the admissible domain")]
    Domain { s: Complex64 },

    #[error("degenerate denominator in layer {layer} at s = {s}")]
    DegenerateDenominator { layer: usize, s: Complex64 },

    #[error("zero pivot in row {row} of the interface system")]
    ZeroPivot { row: usize },

    #[error("interface system is singular at s = {s} (zero pivot in row {row})")]
    SingularInterfaceSystem { row: usize, s: Complex64 },

    #[error("non-finite Laplace-domain value at x = {x}, t = {t}, s = {s}")]
    Overflow { x: f64, t: f64, s: Complex64 },

    #[error("unsupported inversion order N = {0} (expected an even number in 2..=32)")]
    UnsupportedOrder(usize),

    #[error("unknown case id {0} (expected 1..=13)")]
    UnknownCase(u32),

    #[error("invalid problem: {}", format_violations(.0))]
    InvalidProblem(Vec<Violation>),

    #[error("position x = {x} lies outside [0, {length}]")]
    PositionOutOfRange { x: f64, length: f64 },

    #[error("time t = {0} must be positive and finite")]
    InvalidTime(f64),

    #[error("steady state is singular or not unique: {0}")]
    SingularSteadyState(String),

    #[error("grid of {n} nodes does not place a node on every interface; try n = {suggested}")]
    GridAlignment { n: usize, suggested: usize },

    #[error("time integration failed at t = {t}: {reason}")]
    Integrator { t: f64, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
