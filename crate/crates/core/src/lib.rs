//! Transport of a solute through a layered porous column.
//!
//! The crate solves the one-dimensional linear advection-dispersion-reaction
//! equation on a stack of homogeneous layers with three independent methods:
//!
//! - [`inversion`]: the semi-analytical route. Each layer is solved exactly in
//!   the Laplace domain ([`laplace`]) and the result is inverted numerically
//!   with a rational (Carathéodory–Fejér) quadrature.
//! - [`fvm`]: a vertex-centred finite-volume discretisation integrated with an
//!   adaptive L-stable scheme, used as an independent reference.
//! - [`steady`]: the exact long-time limit.
//!
//! [`model`] holds the problem description and a library of thirteen benchmark
//! problems; [`cli`] drives everything from the command line.

// Negated comparisons such as `!(x > 0.0)` deliberately reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod fvm;
pub mod inversion;
pub mod laplace;
pub mod model;
pub mod steady;

pub use error::{Error, Result};
pub use inversion::{cf_quadrature, invert_at, solve_grid, CfQuadrature, DEFAULT_ORDER};
pub use laplace::{laplace_concentration, LaplaceSolution};
pub use model::{
    case_library, validate, Layer, Problem, RobinBoundary, SolutionGrid, TransientSignal,
};
