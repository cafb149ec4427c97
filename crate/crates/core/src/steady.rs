//! Exact steady state of the layered problem.
//!
//! With the time derivative dropped each layer satisfies
//! `D c'' − v c' − μ c + γ = 0`, whose general solution is a particular
//! solution plus two homogeneous modes. The `2m` amplitudes follow from the
//! two end conditions (signals at their terminal values) and the `2(m − 1)`
//! interface conditions, solved as one dense system.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::model::{Layer, Problem, Provenance, SolutionGrid};

const SINGULAR_RATIO: f64 = 1e-13;

/// Homogeneous solutions of `D r² − v r − μ = 0` for one layer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Modes {
    /// `exp(r_j (x − anchor_j))`; each mode is anchored at the end of the
    /// layer where it is largest, so both stay in `[0, 1]`.
    Exponential { roots: [f64; 2], anchors: [f64; 2] },
    /// Double root `r`: `exp(r ξ)` and `ξ exp(r ξ)`, `ξ = x − x_left`.
    Repeated { root: f64 },
    /// Complex pair `α ± iω` (negative decay only).
    Oscillatory { alpha: f64, omega: f64 },
}

/// Particular solution of `D c'' − v c' − μ c = −γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Particular {
    Constant(f64),
    /// `slope · ξ`
    Linear(f64),
    /// `curvature · ξ²`
    Quadratic(f64),
}

/// Steady solution on one layer: `particular + Σ amplitudes[j] · mode_j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyLayer {
    pub layer: Layer,
    pub modes: Modes,
    pub particular: Particular,
    pub amplitudes: [f64; 2],
}

impl SteadyLayer {
    fn new(layer: Layer) -> Self {
        let Layer {
            dispersion: d,
            velocity: v,
            decay: mu,
            production: gamma,
            ..
        } = layer;
        let disc = v * v + 4.0 * d * mu;
        let scale = v * v + 4.0 * d * mu.abs();
        let modes = if disc.abs() <= 1e-14 * scale {
            Modes::Repeated {
                root: v / (2.0 * d),
            }
        } else if disc > 0.0 {
            let sq = disc.sqrt();
            let roots = [(v + sq) / (2.0 * d), (v - sq) / (2.0 * d)];
            let anchor = |r: f64| {
                if r >= 0.0 {
                    layer.x_right
                } else {
                    layer.x_left
                }
            };
            Modes::Exponential {
                roots,
                anchors: [anchor(roots[0]), anchor(roots[1])],
            }
        } else {
            Modes::Oscillatory {
                alpha: v / (2.0 * d),
                omega: (-disc).sqrt() / (2.0 * d),
            }
        };
        let particular = if mu != 0.0 {
            Particular::Constant(gamma / mu)
        } else if v != 0.0 {
            Particular::Linear(gamma / v)
        } else {
            Particular::Quadratic(-gamma / (2.0 * d))
        };
        Self {
            layer,
            modes,
            particular,
            amplitudes: [0.0; 2],
        }
    }

    /// Values and first derivatives of both modes at `x`.
    fn mode_values(&self, x: f64) -> [(f64, f64); 2] {
        let xi = x - self.layer.x_left;
        match self.modes {
            Modes::Exponential { roots, anchors } => {
                let m = |j: usize| {
                    let e = (roots[j] * (x - anchors[j])).exp();
                    (e, roots[j] * e)
                };
                [m(0), m(1)]
            }
            Modes::Repeated { root } => {
                let e = (root * xi).exp();
                [(e, root * e), (xi * e, e + root * xi * e)]
            }
            Modes::Oscillatory { alpha, omega } => {
                let e = (alpha * xi).exp();
                let (s, c) = (omega * xi).sin_cos();
                [
                    (e * c, e * (alpha * c - omega * s)),
                    (e * s, e * (alpha * s + omega * c)),
                ]
            }
        }
    }

    fn particular_values(&self, x: f64) -> (f64, f64, f64) {
        let xi = x - self.layer.x_left;
        match self.particular {
            Particular::Constant(p) => (p, 0.0, 0.0),
            Particular::Linear(k) => (k * xi, k, 0.0),
            Particular::Quadratic(k) => (k * xi * xi, 2.0 * k * xi, 2.0 * k),
        }
    }

    pub fn value(&self, x: f64) -> f64 {
        let [m0, m1] = self.mode_values(x);
        self.particular_values(x).0 + self.amplitudes[0] * m0.0 + self.amplitudes[1] * m1.0
    }

    pub fn derivative(&self, x: f64) -> f64 {
        let [m0, m1] = self.mode_values(x);
        self.particular_values(x).1 + self.amplitudes[0] * m0.1 + self.amplitudes[1] * m1.1
    }

    fn mode_second_derivatives(&self, x: f64) -> [f64; 2] {
        let xi = x - self.layer.x_left;
        match self.modes {
            Modes::Exponential { roots, anchors } => {
                let m = |j: usize| roots[j] * roots[j] * (roots[j] * (x - anchors[j])).exp();
                [m(0), m(1)]
            }
            Modes::Repeated { root } => {
                let e = (root * xi).exp();
                [root * root * e, (2.0 * root + root * root * xi) * e]
            }
            Modes::Oscillatory { alpha, omega } => {
                let e = (alpha * xi).exp();
                let (s, c) = (omega * xi).sin_cos();
                let (a2, w2, aw) = (alpha * alpha, omega * omega, 2.0 * alpha * omega);
                [e * ((a2 - w2) * c - aw * s), e * ((a2 - w2) * s + aw * c)]
            }
        }
    }

    pub fn second_derivative(&self, x: f64) -> f64 {
        let [m0, m1] = self.mode_second_derivatives(x);
        self.particular_values(x).2 + self.amplitudes[0] * m0 + self.amplitudes[1] * m1
    }

    /// `D c'' − v c' − μ c + γ`.
    pub fn residual(&self, x: f64) -> f64 {
        let l = &self.layer;
        l.dispersion * self.second_derivative(x)
            - l.velocity * self.derivative(x)
            - l.decay * self.value(x)
            + l.production
    }
}

/// Piecewise steady profile `x ↦ c_∞(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SteadyProfile {
    pub layers: Vec<SteadyLayer>,
}

impl SteadyProfile {
    fn layer_at(&self, x: f64) -> &SteadyLayer {
        self.layers
            .iter()
            .find(|l| x <= l.layer.x_right)
            .unwrap_or_else(|| self.layers.last().expect("at least one layer"))
    }

    pub fn value(&self, x: f64) -> f64 {
        self.layer_at(x).value(x)
    }

    pub fn derivative(&self, x: f64) -> f64 {
        self.layer_at(x).derivative(x)
    }

    /// The same profile repeated at every requested time.
    pub fn to_grid(&self, x_values: &[f64], t_values: &[f64]) -> Result<SolutionGrid> {
        let row: Vec<f64> = x_values.iter().map(|&x| self.value(x)).collect();
        SolutionGrid::new(
            x_values.to_vec(),
            t_values.to_vec(),
            vec![row; t_values.len()],
            Provenance::SteadyState,
        )
    }
}

/// Solves the steady problem; fails if the steady state is not unique.
pub fn solve_steady(problem: &Problem) -> Result<SteadyProfile> {
    problem.check()?;
    let mut layers: Vec<SteadyLayer> = problem
        .layers
        .iter()
        .copied()
        .map(SteadyLayer::new)
        .collect();
    let m = layers.len();
    let n = 2 * m;
    let mut mat = DMatrix::<f64>::zeros(n, n);
    let mut rhs = DVector::<f64>::zeros(n);

    // Inlet: a c(0) − b c'(0) = g0(∞)
    {
        let first = &layers[0];
        let x = first.layer.x_left;
        let modes = first.mode_values(x);
        let (cp, dcp, _) = first.particular_values(x);
        let (a, b) = (problem.inlet.a, problem.inlet.b);
        for j in 0..2 {
            mat[(0, j)] = a * modes[j].0 - b * modes[j].1;
        }
        rhs[0] = problem.inlet.signal.terminal_value() - (a * cp - b * dcp);
    }
    // Interfaces: continuity of c and of θ D c'.
    for i in 0..m - 1 {
        let (left, right) = (&layers[i], &layers[i + 1]);
        let x = left.layer.x_right;
        let ml = left.mode_values(x);
        let mr = right.mode_values(x);
        let pl = left.particular_values(x);
        let pr = right.particular_values(x);
        let kl = left.layer.water_content * left.layer.dispersion;
        let kr = right.layer.water_content * right.layer.dispersion;
        let (row_c, row_f) = (1 + 2 * i, 2 + 2 * i);
        for j in 0..2 {
            mat[(row_c, 2 * i + j)] = ml[j].0;
            mat[(row_c, 2 * i + 2 + j)] = -mr[j].0;
            mat[(row_f, 2 * i + j)] = kl * ml[j].1;
            mat[(row_f, 2 * i + 2 + j)] = -kr * mr[j].1;
        }
        rhs[row_c] = pr.0 - pl.0;
        rhs[row_f] = kr * pr.1 - kl * pl.1;
    }
    // Outlet: a c(L) + b c'(L) = gL(∞)
    {
        let last = &layers[m - 1];
        let x = last.layer.x_right;
        let modes = last.mode_values(x);
        let (cp, dcp, _) = last.particular_values(x);
        let (a, b) = (problem.outlet.a, problem.outlet.b);
        for j in 0..2 {
            mat[(n - 1, n - 2 + j)] = a * modes[j].0 + b * modes[j].1;
        }
        rhs[n - 1] = problem.outlet.signal.terminal_value() - (a * cp + b * dcp);
    }

    for r in 0..n {
        let scale = mat.row(r).amax();
        if scale == 0.0 {
            return Err(Error::SingularSteadyState(format!("equation {r} is empty")));
        }
        mat.row_mut(r).scale_mut(1.0 / scale);
        rhs[r] /= scale;
    }
    let lu = mat.lu();
    let diag = lu.u().diagonal().abs();
    let (lo, hi) = (diag.min(), diag.max());
    if !(lo > SINGULAR_RATIO * hi) {
        return Err(Error::SingularSteadyState(format!(
            "pivot ratio {:.3e} (the problem has no unique steady state)",
            lo / hi
        )));
    }
    let amplitudes = lu
        .solve(&rhs)
        .ok_or_else(|| Error::SingularSteadyState("LU solve failed".into()))?;
    for (i, l) in layers.iter_mut().enumerate() {
        l.amplitudes = [amplitudes[2 * i], amplitudes[2 * i + 1]];
    }
    Ok(SteadyProfile { layers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{case_library, RobinBoundary, TransientSignal};
    use approx::assert_abs_diff_eq;

    fn uniform(mu: f64, gamma: f64, v: f64) -> Problem {
        let base = Layer {
            x_left: 0.0,
            x_right: 5.0,
            retardation: 1.0,
            dispersion: 2.0,
            velocity: v,
            decay: mu,
            production: gamma,
            water_content: 0.3,
            initial: 0.0,
        };
        Problem::new(
            vec![
                base,
                Layer {
                    x_left: 5.0,
                    x_right: 12.0,
                    ..base
                },
            ],
            RobinBoundary::zero_gradient(),
            RobinBoundary::zero_gradient(),
        )
        .unwrap()
    }

    #[test]
    fn source_decay_balance() {
        let sol = solve_steady(&uniform(0.5, 2.0, 0.0)).unwrap();
        for x in [0.0, 3.0, 5.0, 9.0, 12.0] {
            assert_abs_diff_eq!(sol.value(x), 4.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn pure_neumann_diffusion_is_singular() {
        assert!(matches!(
            solve_steady(&uniform(0.0, 0.0, 0.0)),
            Err(Error::SingularSteadyState(_))
        ));
    }

    #[test]
    fn case1_inlet_condition_holds() {
        let p = case_library(1).unwrap().problem;
        let sol = solve_steady(&p).unwrap();
        let v = p.layers[0].velocity;
        let d = p.layers[0].dispersion;
        let lhs = v * sol.value(0.0) - d * sol.derivative(0.0);
        assert_abs_diff_eq!(lhs, v, epsilon = 1e-10 * v);
    }

    #[test]
    fn zero_decay_with_production_has_polynomial_particular() {
        for v in [0.0, 1.5] {
            let mut p = uniform(0.0, 1.0, v);
            p.inlet = RobinBoundary::concentration(TransientSignal::Constant { c0: 1.0 });
            p.outlet = RobinBoundary::concentration(TransientSignal::Zero);
            let sol = solve_steady(&p).unwrap();
            for l in &sol.layers {
                for k in 0..5 {
                    let x = l.layer.x_left + l.layer.width() * (k as f64 + 0.5) / 5.0;
                    assert!(l.residual(x).abs() < 1e-9, "residual {}", l.residual(x));
                }
            }
            assert_abs_diff_eq!(sol.value(0.0), 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(sol.value(12.0), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn step_signal_uses_terminal_value() {
        let p = case_library(2).unwrap().problem;
        let q = p.with_signals(TransientSignal::Zero, p.outlet.signal);
        let (a, b) = (solve_steady(&p).unwrap(), solve_steady(&q).unwrap());
        for x in [0.0, 7.5, 10.0, 30.0] {
            assert_eq!(a.value(x), b.value(x));
        }
    }
}
