//! Laplace-domain solution of the layered problem.
//!
//! Each layer is solved in isolation with the unknown interface fluxes
//! `G_i(s) = θ_i D_i C_i'(ℓ_i, s)` as boundary data, giving
//!
//! ```text
//! C_i(x,s) = A_i(x,s) G_{i-1}(s) + B_i(x,s) G_i(s) + P_i(x,s)
//! ```
//!
//! (with `G_0`, `G_m` replaced by the transformed boundary signals). Imposing
//! concentration continuity at the `m − 1` interfaces yields a tridiagonal
//! system for the interface fluxes.
//!
//! The exponentials are anchored so that `Ψ_{i,1}(x) = exp(λ_1 (x − ℓ_i))` and
//! `Ψ_{i,2}(x) = exp(λ_2 (x − ℓ_{i-1}))` never grow inside their layer.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{check_laplace_domain, Layer, Problem};

const DEGENERATE: f64 = 1e-300;

/// Roots `(λ_1, λ_2)` of `D λ² − v λ − (R s + μ) = 0`, using the principal
/// branch of the square root so that `Re(λ_1) ≥ Re(λ_2)`.
pub fn lambda_roots(layer: &Layer, s: Complex64) -> Result<(Complex64, Complex64)> {
    check_laplace_domain(s)?;
    let Layer {
        dispersion: d,
        velocity: v,
        retardation: r,
        decay: mu,
        ..
    } = *layer;
    let root = (v * v + 4.0 * d * (r * s + mu)).sqrt();
    Ok(((v + root) / (2.0 * d), (v - root) / (2.0 * d)))
}

/// Where a layer sits in the stack, carrying the Robin coefficients of the
/// outer boundary for the end layers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StackPosition {
    First { a: f64, b: f64 },
    Middle,
    Last { a: f64, b: f64 },
}

/// The per-layer functions `P_i`, `A_i`, `B_i` at a fixed `s`.
#[derive(Debug, Clone, Copy)]
pub struct LayerLaplaceCoeffs {
    pub layer: Layer,
    pub position: StackPosition,
    pub s: Complex64,
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    pub beta: Complex64,
    /// `Ψ_i(s) = (γ/s + R f) / (μ + R s)`.
    pub psi: Complex64,
    flux_scale: f64,
}

impl LayerLaplaceCoeffs {
    /// `Ψ_{i,1}(x,s) = exp(λ_1 (x − ℓ_i))`.
    pub fn psi1(&self, x: f64) -> Complex64 {
        (self.lambda1 * (x - self.layer.x_right)).exp()
    }

    /// `Ψ_{i,2}(x,s) = exp(λ_2 (x − ℓ_{i-1}))`.
    pub fn psi2(&self, x: f64) -> Complex64 {
        (self.lambda2 * (x - self.layer.x_left)).exp()
    }

    pub fn p(&self, x: f64) -> Complex64 {
        let (l1, l2) = (self.lambda1, self.lambda2);
        match self.position {
            StackPosition::First { a, .. } => {
                let right = self.layer.x_right;
                self.psi
                    + a / self.beta
                        * (l1 * self.psi2(x) - l2 * self.psi2(right) * self.psi1(x))
                        * self.psi
            }
            StackPosition::Middle => self.psi,
            StackPosition::Last { a, .. } => {
                let left = self.layer.x_left;
                self.psi
                    + a / self.beta
                        * (l2 * self.psi1(x) - l1 * self.psi1(left) * self.psi2(x))
                        * self.psi
            }
        }
    }

    /// Coefficient of the left flux (`G_0` for the first layer, `G_{i-1}` otherwise).
    pub fn a(&self, x: f64) -> Complex64 {
        let (l1, l2) = (self.lambda1, self.lambda2);
        let right = self.layer.x_right;
        match self.position {
            StackPosition::First { .. } => {
                (l2 * self.psi2(right) * self.psi1(x) - l1 * self.psi2(x)) / self.beta
            }
            StackPosition::Middle => {
                (l2 * self.psi2(right) * self.psi1(x) - l1 * self.psi2(x))
                    / (self.flux_scale * self.beta)
            }
            StackPosition::Last { a, b } => {
                ((a + b * l2) * self.psi2(right) * self.psi1(x) - (a + b * l1) * self.psi2(x))
                    / (self.flux_scale * self.beta)
            }
        }
    }

    /// Coefficient of the right flux (`G_i`, or `G_L` for the last layer).
    pub fn b(&self, x: f64) -> Complex64 {
        let (l1, l2) = (self.lambda1, self.lambda2);
        let left = self.layer.x_left;
        match self.position {
            StackPosition::First { a, b } => {
                ((a - b * l1) * self.psi1(left) * self.psi2(x) - (a - b * l2) * self.psi1(x))
                    / (self.flux_scale * self.beta)
            }
            StackPosition::Middle => {
                (l1 * self.psi1(left) * self.psi2(x) - l2 * self.psi1(x))
                    / (self.flux_scale * self.beta)
            }
            StackPosition::Last { .. } => {
                (l1 * self.psi1(left) * self.psi2(x) - l2 * self.psi1(x)) / self.beta
            }
        }
    }

    /// `C_i(x,s)` given the left and right flux data.
    pub fn concentration(&self, x: f64, left: Complex64, right: Complex64) -> Complex64 {
        self.a(x) * left + self.b(x) * right + self.p(x)
    }
}

/// Builds the `P`, `A`, `B` evaluators for one layer.
pub fn layer_coeffs(
    layer: &Layer,
    position: StackPosition,
    s: Complex64,
) -> Result<LayerLaplaceCoeffs> {
    let (l1, l2) = lambda_roots(layer, s)?;
    let width = layer.width();
    let decay = (-(l1 - l2) * width).exp();
    let beta = match position {
        StackPosition::First { a, b } => (a - b * l1) * l2 * decay - (a - b * l2) * l1,
        StackPosition::Middle => l1 * l2 * (decay - 1.0),
        StackPosition::Last { a, b } => (a + b * l2) * l1 * decay - (a + b * l1) * l2,
    };
    if !(beta.norm() >= DEGENERATE) {
        return Err(Error::DegenerateDenominator { layer: 0, s });
    }
    let psi = (layer.production / s + layer.retardation * layer.initial)
        / (layer.decay + layer.retardation * s);
    Ok(LayerLaplaceCoeffs {
        layer: *layer,
        position,
        s,
        lambda1: l1,
        lambda2: l2,
        beta,
        psi,
        flux_scale: layer.water_content * layer.dispersion,
    })
}

/// Tridiagonal system `A x = b` for the interface fluxes `G_1 … G_{m-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct InterfaceSystem {
    /// `a_{i,i-1}` for rows `1..order` (length `order − 1`).
    pub lower: Vec<Complex64>,
    pub diag: Vec<Complex64>,
    /// `a_{i,i+1}` for rows `0..order-1` (length `order − 1`).
    pub upper: Vec<Complex64>,
    pub rhs: Vec<Complex64>,
}

impl InterfaceSystem {
    pub fn order(&self) -> usize {
        self.diag.len()
    }

    /// `A x` for residual checks.
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.order();
        (0..n)
            .map(|i| {
                let mut acc = self.diag[i] * x[i];
                if i > 0 {
                    acc += self.lower[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    acc += self.upper[i] * x[i + 1];
                }
                acc
            })
            .collect()
    }
}

fn stack_coeffs(problem: &Problem, s: Complex64) -> Result<Vec<LayerLaplaceCoeffs>> {
    let m = problem.num_layers();
    problem
        .layers
        .iter()
        .enumerate()
        .map(|(i, layer)| {
            let position = if i == 0 {
                StackPosition::First {
                    a: problem.inlet.a,
                    b: problem.inlet.b,
                }
            } else if i + 1 == m {
                StackPosition::Last {
                    a: problem.outlet.a,
                    b: problem.outlet.b,
                }
            } else {
                StackPosition::Middle
            };
            layer_coeffs(layer, position, s).map_err(|e| match e {
                Error::DegenerateDenominator { s, .. } => {
                    Error::DegenerateDenominator { layer: i, s }
                }
                other => other,
            })
        })
        .collect()
}

fn assemble(coeffs: &[LayerLaplaceCoeffs], g0: Complex64, gl: Complex64) -> InterfaceSystem {
    let order = coeffs.len() - 1;
    let mut sys = InterfaceSystem {
        lower: Vec::with_capacity(order.saturating_sub(1)),
        diag: Vec::with_capacity(order),
        upper: Vec::with_capacity(order.saturating_sub(1)),
        rhs: Vec::with_capacity(order),
    };
    for i in 0..order {
        let (here, next) = (&coeffs[i], &coeffs[i + 1]);
        let x = here.layer.x_right;
        if i > 0 {
            sys.lower.push(here.a(x));
        }
        sys.diag.push(here.b(x) - next.a(x));
        if i + 1 < order {
            sys.upper.push(-next.b(x));
        }
        let mut rhs = next.p(x) - here.p(x);
        if i == 0 {
            rhs -= here.a(x) * g0;
        }
        if i + 1 == order {
            rhs += next.b(x) * gl;
        }
        sys.rhs.push(rhs);
    }
    sys
}

/// Assembles the interface system for `m ≥ 3` layers.
pub fn assemble_interface_system(
    problem: &Problem,
    s: Complex64,
    g0: Complex64,
    gl: Complex64,
) -> Result<InterfaceSystem> {
    if problem.num_layers() < 3 {
        return Err(Error::InvalidArgument(
            "the interface system needs at least three layers; two-layer problems use the closed form".into(),
        ));
    }
    Ok(assemble(&stack_coeffs(problem, s)?, g0, gl))
}

/// Thomas algorithm (no pivoting).
pub fn solve_tridiagonal(system: &InterfaceSystem) -> Result<Vec<Complex64>> {
    let n = system.order();
    if system.rhs.len() != n
        || system.lower.len() + 1 != n.max(1)
        || system.upper.len() + 1 != n.max(1)
    {
        return Err(Error::InvalidArgument(
            "malformed tridiagonal system".into(),
        ));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut c_prime = vec![Complex64::new(0.0, 0.0); n];
    let mut d_prime = vec![Complex64::new(0.0, 0.0); n];

    let mut pivot = system.diag[0];
    check_pivot(pivot, 0)?;
    if n > 1 {
        c_prime[0] = system.upper[0] / pivot;
    }
    d_prime[0] = system.rhs[0] / pivot;
    for i in 1..n {
        let l = system.lower[i - 1];
        pivot = system.diag[i] - l * c_prime[i - 1];
        check_pivot(pivot, i)?;
        if i + 1 < n {
            c_prime[i] = system.upper[i] / pivot;
        }
        d_prime[i] = (system.rhs[i] - l * d_prime[i - 1]) / pivot;
    }
    let mut x = d_prime;
    for i in (0..n - 1).rev() {
        let next = x[i + 1];
        x[i] -= c_prime[i] * next;
    }
    Ok(x)
}

fn check_pivot(p: Complex64, row: usize) -> Result<()> {
    if !(p.norm() >= DEGENERATE) || !p.re.is_finite() || !p.im.is_finite() {
        return Err(Error::ZeroPivot { row });
    }
    Ok(())
}

/// Laplace-domain solution at one `s`: per-layer coefficients and all
/// interface fluxes, ready for evaluation at any `x`.
#[derive(Debug, Clone)]
pub struct LaplaceSolution {
    coeffs: Vec<LayerLaplaceCoeffs>,
    /// `[G_0, G_1, …, G_{m-1}, G_L]`.
    fluxes: Vec<Complex64>,
}

impl LaplaceSolution {
    pub fn new(problem: &Problem, s: Complex64) -> Result<Self> {
        problem.check()?;
        let g0 = problem.inlet.signal.laplace(s)?;
        let gl = problem.outlet.signal.laplace(s)?;
        let coeffs = stack_coeffs(problem, s)?;
        let interior = if coeffs.len() == 2 {
            let (first, last) = (&coeffs[0], &coeffs[1]);
            let x = first.layer.x_right;
            let denom = first.b(x) - last.a(x);
            if !(denom.norm() >= DEGENERATE) {
                return Err(Error::SingularInterfaceSystem { row: 0, s });
            }
            vec![(last.p(x) - first.p(x) - first.a(x) * g0 + last.b(x) * gl) / denom]
        } else {
            solve_tridiagonal(&assemble(&coeffs, g0, gl)).map_err(|e| match e {
                Error::ZeroPivot { row } => Error::SingularInterfaceSystem { row, s },
                other => other,
            })?
        };
        let mut fluxes = Vec::with_capacity(coeffs.len() + 1);
        fluxes.push(g0);
        fluxes.extend(interior);
        fluxes.push(gl);
        Ok(Self { coeffs, fluxes })
    }

    pub fn s(&self) -> Complex64 {
        self.coeffs[0].s
    }

    pub fn coeffs(&self) -> &[LayerLaplaceCoeffs] {
        &self.coeffs
    }

    /// `[G_0, G_1, …, G_{m-1}, G_L]`.
    pub fn fluxes(&self) -> &[Complex64] {
        &self.fluxes
    }

    /// `C_i(x,s)` using layer `layer`'s expression (no range check on `x`).
    pub fn eval_in_layer(&self, layer: usize, x: f64) -> Complex64 {
        self.coeffs[layer].concentration(x, self.fluxes[layer], self.fluxes[layer + 1])
    }

    /// `C(x,s)` in the layer holding `x` (left layer at interfaces).
    pub fn eval(&self, x: f64) -> Complex64 {
        let idx = self
            .coeffs
            .iter()
            .position(|c| x <= c.layer.x_right)
            .unwrap_or(self.coeffs.len() - 1);
        self.eval_in_layer(idx, x)
    }
}

/// `C(x, s)` for the layered problem.
pub fn laplace_concentration(problem: &Problem, x: f64, s: Complex64) -> Result<Complex64> {
    problem.check_position(x)?;
    Ok(LaplaceSolution::new(problem, s)?.eval(x))
}
