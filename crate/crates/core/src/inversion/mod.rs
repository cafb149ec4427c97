//! Numerical Laplace inversion with Carathéodory–Fejér rational quadrature.
//!
//! With poles `z_k` and residues `w_k` of the best `(N, N)` rational
//! approximation to `e^z` on the negative real axis,
//!
//! ```text
//! f(t) ≈ −(2/t) Re Σ_k w_k F(z_k / t)
//! ```
//!
//! where the sum runs over one pole of each conjugate pair. The tables for
//! even `N ≤ 32` are generated offline by `tools/gen_cf_table.py`.
//!
//! Step boundary signals are not inverted directly: `exp(−t0 s)` overflows at
//! poles with negative real part once `t` is small. [`solve_grid`] instead
//! superposes constant-signal solutions shifted by the step time.

mod cf_table;

use log::warn;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laplace::LaplaceSolution;
use crate::model::{Problem, Provenance, SolutionGrid, TransientSignal};

/// Inversion order used by every catalogued result.
pub const DEFAULT_ORDER: usize = 14;

/// Layer Peclet number above which inversion accuracy is suspect.
pub const ADVECTION_WARNING_PECLET: f64 = 100.0;

/// Poles and residues for one inversion order `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct CfQuadrature {
    order: usize,
    /// `(z_k, w_k)` with `Im(z_k) > 0`, `N/2` entries.
    nodes: Vec<(Complex64, Complex64)>,
}

impl CfQuadrature {
    pub fn new(order: usize) -> Result<Self> {
        if !order.is_multiple_of(2) {
            return Err(Error::UnsupportedOrder(order));
        }
        let table = cf_table::table(order).ok_or(Error::UnsupportedOrder(order))?;
        let nodes = table
            .iter()
            .map(|&([zr, zi], [wr, wi])| (Complex64::new(zr, zi), Complex64::new(wr, wi)))
            .collect();
        Ok(Self { order, nodes })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nodes(&self) -> &[(Complex64, Complex64)] {
        &self.nodes
    }

    /// Nodes whose real part is not negative. The CF poles straddle the
    /// imaginary axis, so this is informational only.
    pub fn right_half_plane_poles(&self) -> usize {
        self.nodes.iter().filter(|(z, _)| z.re >= 0.0).count()
    }

    /// Laplace variables `s_k = z_k / t` sampled for time `t`.
    pub fn sample_points(&self, t: f64) -> impl Iterator<Item = Complex64> + '_ {
        self.nodes.iter().map(move |(z, _)| z / t)
    }

    /// `−(2/t) Re Σ w_k F(z_k/t)` for an arbitrary transform `F`.
    pub fn invert<F>(&self, t: f64, mut transform: F) -> Result<f64>
    where
        F: FnMut(Complex64) -> Result<Complex64>,
    {
        check_time(t)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for &(z, w) in &self.nodes {
            acc += w * transform(z / t)?;
        }
        Ok(-2.0 * acc.re / t)
    }
}

/// Quadrature for order `N` (even, 2..=32).
pub fn cf_quadrature(order: usize) -> Result<CfQuadrature> {
    CfQuadrature::new(order)
}

fn check_time(t: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::InvalidTime(t));
    }
    Ok(())
}

fn weighted_sum(quad: &CfQuadrature, samples: &[LaplaceSolution], x: f64, t: f64) -> Result<f64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for (sol, &(_, w)) in samples.iter().zip(quad.nodes()) {
        let value = sol.eval(x);
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(Error::Overflow { x, t, s: sol.s() });
        }
        acc += w * value;
    }
    let c = -2.0 * acc.re / t;
    if !c.is_finite() {
        return Err(Error::Overflow {
            x,
            t,
            s: samples
                .first()
                .map_or(Complex64::new(0.0, 0.0), LaplaceSolution::s),
        });
    }
    Ok(c)
}

fn laplace_samples(problem: &Problem, quad: &CfQuadrature, t: f64) -> Result<Vec<LaplaceSolution>> {
    quad.sample_points(t)
        .map(|s| LaplaceSolution::new(problem, s))
        .collect()
}

/// Direct inversion at one point. Boundary signals are transformed as given,
/// so step signals may overflow for small `t`; see [`solve_grid`].
pub fn invert_at(problem: &Problem, quad: &CfQuadrature, x: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    problem.check_position(x)?;
    let samples = laplace_samples(problem, quad, t)?;
    weighted_sum(quad, &samples, x, t)
}

/// One term of the step superposition: `sign · c_term(x, t − shift)`.
#[derive(Debug, Clone)]
struct Component {
    problem: Problem,
    shift: f64,
    sign: f64,
}

/// Splits a problem with step boundary signals into constant-signal pieces.
fn superposition(problem: &Problem) -> Vec<Component> {
    let as_constant = |sig: TransientSignal| match sig {
        TransientSignal::HeavisideStep { c0, .. } => TransientSignal::Constant { c0 },
        other => other,
    };
    let mut out = vec![Component {
        problem: problem.with_signals(
            as_constant(problem.inlet.signal),
            as_constant(problem.outlet.signal),
        ),
        shift: 0.0,
        sign: 1.0,
    }];
    let bare = problem.without_sources();
    if let TransientSignal::HeavisideStep { c0, t0 } = problem.inlet.signal {
        out.push(Component {
            problem: bare.with_signals(TransientSignal::Constant { c0 }, TransientSignal::Zero),
            shift: t0,
            sign: -1.0,
        });
    }
    if let TransientSignal::HeavisideStep { c0, t0 } = problem.outlet.signal {
        out.push(Component {
            problem: bare.with_signals(TransientSignal::Zero, TransientSignal::Constant { c0 }),
            shift: t0,
            sign: -1.0,
        });
    }
    out
}

fn row_at_time(
    problem: &Problem,
    components: &[Component],
    quad: &CfQuadrature,
    xs: &[f64],
    t: f64,
) -> Result<Vec<f64>> {
    if t == 0.0 {
        return Ok(xs.iter().map(|&x| problem.initial_at(x)).collect());
    }
    let mut row = vec![0.0; xs.len()];
    for comp in components {
        // Left-continuous at the switching time.
        let tau = t - comp.shift;
        if comp.shift > 0.0 && tau <= 0.0 {
            continue;
        }
        let samples = laplace_samples(&comp.problem, quad, tau)?;
        for (out, &x) in row.iter_mut().zip(xs) {
            *out += comp.sign * weighted_sum(quad, &samples, x, tau)?;
        }
    }
    Ok(row)
}

/// Semi-analytical solution on a Cartesian grid, evaluated in parallel over
/// times. Step signals are handled by superposition; `t = 0` returns the
/// initial condition.
pub fn solve_grid(
    problem: &Problem,
    quad: &CfQuadrature,
    x_values: &[f64],
    t_values: &[f64],
) -> Result<SolutionGrid> {
    problem.check()?;
    for &x in x_values {
        problem.check_position(x)?;
    }
    for &t in t_values {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::InvalidTime(t));
        }
    }
    let peclet = problem.peclet_indicator();
    if peclet > ADVECTION_WARNING_PECLET {
        warn!(
            "layer Peclet number {peclet:.1} exceeds {ADVECTION_WARNING_PECLET}: \
             Laplace inversion can be unreliable for advection-dominated transport"
        );
    }
    let components = superposition(problem);
    let values = t_values
        .par_iter()
        .map(|&t| row_at_time(problem, &components, quad, x_values, t))
        .collect::<Result<Vec<_>>>()?;
    SolutionGrid::new(
        x_values.to_vec(),
        t_values.to_vec(),
        values,
        Provenance::SemiAnalytical,
    )
}

/// Single-point evaluation with the same routing as [`solve_grid`].
pub fn concentration(problem: &Problem, quad: &CfQuadrature, x: f64, t: f64) -> Result<f64> {
    Ok(solve_grid(problem, quad, &[x], &[t])?.value(0, 0))
}
