//! Vertex-centred finite-volume reference solver.
//!
//! A uniform grid of `n` nodes with a node on every interface. Between nodes
//! the dispersive-advective flux of layer `i` is
//!
//! ```text
//! J_{i,k} = D_i (c_k − c_{k−1}) / h − v_i (c_{k−1} + c_k) / 2
//! ```
//!
//! and each node balances the fluxes through its half-cells. The resulting
//! system `M c' = F(c, t)` is linear and tridiagonal. Rows with `b = 0` are
//! algebraic; they are eliminated by substituting `c = g(t)/a` into the
//! neighbouring row and reconstructed at output times. The remaining ODE is
//! integrated with adaptive TR-BDF2, restarting at every step-signal switch.

use crate::error::{Error, Result};
use crate::model::{Problem, Provenance, RobinBoundary, SolutionGrid, TransientSignal};

/// Node count used for every catalogued comparison.
pub const DEFAULT_NODES: usize = 601;
pub const RTOL: f64 = 1e-8;
pub const ATOL: f64 = 1e-10;

const MAX_STEPS: usize = 2_000_000;

/// Uniform grid `x_k = k h`, `k = 0..n`, aligned with every interface.
#[derive(Debug, Clone, PartialEq)]
pub struct FvmGrid {
    pub n: usize,
    pub h: f64,
    pub nodes: Vec<f64>,
    /// Layer of each node; interface nodes carry the layer on their left.
    pub node_layer: Vec<usize>,
    /// `(node, left layer)` for every interface node.
    pub interface_nodes: Vec<(usize, usize)>,
}

impl FvmGrid {
    pub fn new(problem: &Problem, n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "at least 3 nodes are required, got {n}"
            )));
        }
        let interface_nodes = aligned_interfaces(problem, n).ok_or(Error::GridAlignment {
            n,
            suggested: Self::suggest_nodes(problem, n),
        })?;
        let length = problem.length();
        let h = length / (n - 1) as f64;
        let mut nodes: Vec<f64> = (0..n).map(|k| k as f64 * h).collect();
        nodes[n - 1] = length;
        let mut node_layer = vec![0; n];
        let mut layer = 0;
        let mut next = interface_nodes.iter().peekable();
        for (k, slot) in node_layer.iter_mut().enumerate() {
            *slot = layer;
            if next.peek().is_some_and(|&&(node, _)| node == k) {
                next.next();
                layer += 1;
            }
        }
        Ok(Self {
            n,
            h,
            nodes,
            node_layer,
            interface_nodes,
        })
    }

    /// Smallest node count `≥ n` that places a node on every interface.
    pub fn suggest_nodes(problem: &Problem, n: usize) -> usize {
        (n.max(3)..n.max(3) + 1_000_000)
            .find(|&k| aligned_interfaces(problem, k).is_some())
            .unwrap_or(n)
    }

    fn interface_at(&self, k: usize) -> Option<usize> {
        self.interface_nodes
            .iter()
            .find(|&&(node, _)| node == k)
            .map(|&(_, layer)| layer)
    }
}

fn aligned_interfaces(problem: &Problem, n: usize) -> Option<Vec<(usize, usize)>> {
    let length = problem.length();
    let h = length / (n - 1) as f64;
    problem
        .interfaces()
        .iter()
        .enumerate()
        .map(|(i, &l)| {
            let k = (l / h).round();
            ((k * h - l).abs() <= 1e-12 * length && k >= 1.0 && (k as usize) < n - 1)
                .then_some((k as usize, i))
        })
        .collect()
}

/// Which rows of the mass matrix are zero (algebraic boundary rows).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MassMatrix {
    Identity,
    DropFirst,
    DropLast,
    DropBoth,
}

impl MassMatrix {
    pub fn for_problem(problem: &Problem) -> Self {
        match (problem.inlet.b == 0.0, problem.outlet.b == 0.0) {
            (false, false) => MassMatrix::Identity,
            (true, false) => MassMatrix::DropFirst,
            (false, true) => MassMatrix::DropLast,
            (true, true) => MassMatrix::DropBoth,
        }
    }

    pub fn first_is_algebraic(self) -> bool {
        matches!(self, MassMatrix::DropFirst | MassMatrix::DropBoth)
    }

    pub fn last_is_algebraic(self) -> bool {
        matches!(self, MassMatrix::DropLast | MassMatrix::DropBoth)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FvmState {
    pub grid: FvmGrid,
    pub c: Vec<f64>,
    pub mass: MassMatrix,
    pub t: f64,
}

/// Nodal initial condition; interface nodes take the mean of both layers.
pub fn fvm_initial(problem: &Problem, n: usize) -> Result<FvmState> {
    problem.check()?;
    let grid = FvmGrid::new(problem, n)?;
    let mut c: Vec<f64> = grid
        .node_layer
        .iter()
        .map(|&i| problem.layers[i].initial)
        .collect();
    for &(k, i) in &grid.interface_nodes {
        c[k] = 0.5 * (problem.layers[i].initial + problem.layers[i + 1].initial);
    }
    Ok(FvmState {
        grid,
        c,
        mass: MassMatrix::for_problem(problem),
        t: 0.0,
    })
}

/// `F = T c + constant + inlet_gain g0(t) + outlet_gain gL(t)`, row by row.
#[derive(Debug, Clone, PartialEq)]
struct Operator {
    lower: Vec<f64>,
    diag: Vec<f64>,
    upper: Vec<f64>,
    constant: Vec<f64>,
    inlet_gain: Vec<f64>,
    outlet_gain: Vec<f64>,
}

impl Operator {
    fn zeros(n: usize) -> Self {
        Self {
            lower: vec![0.0; n],
            diag: vec![0.0; n],
            upper: vec![0.0; n],
            constant: vec![0.0; n],
            inlet_gain: vec![0.0; n],
            outlet_gain: vec![0.0; n],
        }
    }

    fn len(&self) -> usize {
        self.diag.len()
    }

    /// `row += w J_{layer}` on the face between nodes `face − 1` and `face`.
    fn add_flux(&mut self, row: usize, face: usize, d: f64, v: f64, h: f64, w: f64) {
        let (p, q) = (-d / h - v / 2.0, d / h - v / 2.0);
        if face == row + 1 {
            self.diag[row] += w * p;
            self.upper[row] += w * q;
        } else {
            debug_assert_eq!(face, row);
            self.lower[row] += w * p;
            self.diag[row] += w * q;
        }
    }

    fn add_source(&mut self, row: usize, mu: f64, gamma: f64, w: f64) {
        self.diag[row] -= w * mu;
        self.constant[row] += w * gamma;
    }

    fn scale_row(&mut self, row: usize, s: f64) {
        for v in [
            &mut self.lower,
            &mut self.diag,
            &mut self.upper,
            &mut self.constant,
            &mut self.inlet_gain,
            &mut self.outlet_gain,
        ] {
            v[row] *= s;
        }
    }

    fn apply(&self, c: &[f64], g0: f64, gl: f64, out: &mut [f64]) {
        let n = self.len();
        for k in 0..n {
            let mut f = self.diag[k] * c[k]
                + self.constant[k]
                + self.inlet_gain[k] * g0
                + self.outlet_gain[k] * gl;
            if k > 0 {
                f += self.lower[k] * c[k - 1];
            }
            if k + 1 < n {
                f += self.upper[k] * c[k + 1];
            }
            out[k] = f;
        }
    }
}

fn build_operator(problem: &Problem, grid: &FvmGrid) -> Operator {
    let n = grid.n;
    let h = grid.h;
    let mut op = Operator::zeros(n);
    let layers = &problem.layers;

    let RobinBoundary { a: a0, b: b0, .. } = problem.inlet;
    let first = &layers[0];
    if b0 == 0.0 {
        op.diag[0] = a0;
        op.inlet_gain[0] = -1.0;
    } else {
        op.add_flux(0, 1, first.dispersion, first.velocity, h, 1.0);
        op.inlet_gain[0] += first.dispersion / b0;
        op.diag[0] += first.velocity - first.dispersion * a0 / b0;
        op.add_source(0, first.decay, first.production, h / 2.0);
        op.scale_row(0, 2.0 / (h * first.retardation));
    }

    for k in 1..n - 1 {
        if let Some(i) = grid.interface_at(k) {
            let (l, r) = (&layers[i], &layers[i + 1]);
            op.add_flux(k, k + 1, r.dispersion, r.velocity, h, r.water_content);
            op.add_flux(k, k, l.dispersion, l.velocity, h, -l.water_content);
            op.add_source(k, l.decay, l.production, h / 2.0 * l.water_content);
            op.add_source(k, r.decay, r.production, h / 2.0 * r.water_content);
            let denom =
                h / 2.0 * (l.water_content * l.retardation + r.water_content * r.retardation);
            op.scale_row(k, 1.0 / denom);
        } else {
            let l = &layers[grid.node_layer[k]];
            op.add_flux(k, k + 1, l.dispersion, l.velocity, h, 1.0);
            op.add_flux(k, k, l.dispersion, l.velocity, h, -1.0);
            op.add_source(k, l.decay, l.production, h);
            op.scale_row(k, 1.0 / (h * l.retardation));
        }
    }

    let RobinBoundary { a: al, b: bl, .. } = problem.outlet;
    let last = &layers[layers.len() - 1];
    let k = n - 1;
    if bl == 0.0 {
        op.diag[k] = al;
        op.outlet_gain[k] = -1.0;
    } else {
        op.outlet_gain[k] += last.dispersion / bl;
        op.diag[k] -= last.velocity + last.dispersion * al / bl;
        op.add_flux(k, k, last.dispersion, last.velocity, h, -1.0);
        op.add_source(k, last.decay, last.production, h / 2.0);
        op.scale_row(k, 2.0 / (h * last.retardation));
    }
    op
}

/// Right-hand side `F(c, t)` of `M c' = F`, including algebraic rows.
pub fn fvm_rhs(problem: &Problem, grid: &FvmGrid, c: &[f64], t: f64) -> Vec<f64> {
    assert_eq!(c.len(), grid.n, "state length must equal the node count");
    let op = build_operator(problem, grid);
    let mut out = vec![0.0; grid.n];
    op.apply(
        c,
        problem.inlet.signal.eval(t),
        problem.outlet.signal.eval(t),
        &mut out,
    );
    out
}

/// Trapezoid-weighted `Σ θ R c h`, the quantity the zero-flux scheme conserves.
pub fn discrete_mass(problem: &Problem, grid: &FvmGrid, c: &[f64]) -> f64 {
    let h = grid.h;
    let n = grid.n;
    (0..n)
        .map(|k| {
            let capacity = if let Some(i) = grid.interface_at(k) {
                let (l, r) = (&problem.layers[i], &problem.layers[i + 1]);
                0.5 * (l.water_content * l.retardation + r.water_content * r.retardation)
            } else {
                let l = &problem.layers[grid.node_layer[k]];
                let w = if k == 0 || k == n - 1 { 0.5 } else { 1.0 };
                w * l.water_content * l.retardation
            };
            capacity * h * c[k]
        })
        .sum()
}

/// Boundary value on a segment that starts at `seg_start`; segments never
/// straddle a step switch, so steps are constant on each.
fn segment_signal(signal: &TransientSignal, t: f64, seg_start: f64) -> f64 {
    match *signal {
        TransientSignal::HeavisideStep { c0, t0 } => {
            if seg_start >= t0 {
                0.0
            } else {
                c0
            }
        }
        other => other.eval(t),
    }
}

/// Differential rows only, with algebraic neighbours folded into the gains.
struct Reduced {
    op: Operator,
    offset: usize,
    inlet: TransientSignal,
    outlet: TransientSignal,
}

impl Reduced {
    fn new(problem: &Problem, full: &Operator, mass: MassMatrix) -> Self {
        let n = full.len();
        let lo = usize::from(mass.first_is_algebraic());
        let hi = n - usize::from(mass.last_is_algebraic());
        let slice = |v: &Vec<f64>| v[lo..hi].to_vec();
        let mut op = Operator {
            lower: slice(&full.lower),
            diag: slice(&full.diag),
            upper: slice(&full.upper),
            constant: slice(&full.constant),
            inlet_gain: slice(&full.inlet_gain),
            outlet_gain: slice(&full.outlet_gain),
        };
        let last = op.len() - 1;
        if lo == 1 {
            op.inlet_gain[0] += op.lower[0] / problem.inlet.a;
        }
        if hi == n - 1 {
            op.outlet_gain[last] += op.upper[last] / problem.outlet.a;
        }
        op.lower[0] = 0.0;
        op.upper[last] = 0.0;
        Self {
            op,
            offset: lo,
            inlet: problem.inlet.signal,
            outlet: problem.outlet.signal,
        }
    }

    fn rhs(&self, t: f64, seg_start: f64, y: &[f64], out: &mut [f64]) {
        let g0 = segment_signal(&self.inlet, t, seg_start);
        let gl = segment_signal(&self.outlet, t, seg_start);
        self.op.apply(y, g0, gl, out);
    }

    /// Solves `(I − α T) x = rhs` in place.
    fn solve_shifted(&self, alpha: f64, rhs: &mut [f64], scratch: &mut [f64]) -> Result<()> {
        let n = rhs.len();
        let op = &self.op;
        let mut pivot = 1.0 - alpha * op.diag[0];
        for k in 0..n {
            if k > 0 {
                let lower = -alpha * op.lower[k];
                pivot = 1.0 - alpha * op.diag[k] - lower * scratch[k - 1];
                rhs[k] -= lower * rhs[k - 1];
            }
            if !(pivot.abs() > 1e-300) {
                return Err(Error::Integrator {
                    t: f64::NAN,
                    reason: format!("zero pivot in row {k} of the implicit stage"),
                });
            }
            scratch[k] = -alpha * op.upper[k] / pivot;
            rhs[k] /= pivot;
        }
        for k in (0..n - 1).rev() {
            rhs[k] -= scratch[k] * rhs[k + 1];
        }
        Ok(())
    }
}

const GAMMA: f64 = 2.0 - std::f64::consts::SQRT_2;

/// Adaptive TR-BDF2 from `t` to `t_end` on one smooth segment.
fn integrate(
    sys: &Reduced,
    y: &mut [f64],
    t_start: f64,
    t_end: f64,
    seg_start: f64,
    h_init: f64,
) -> Result<f64> {
    let n = y.len();
    let d = GAMMA / 2.0;
    let w_g = 1.0 / (GAMMA * (2.0 - GAMMA));
    let w_n = (1.0 - GAMMA).powi(2) / (GAMMA * (2.0 - GAMMA));
    let err_const = (-3.0 * GAMMA * GAMMA + 4.0 * GAMMA - 2.0) / (12.0 * (2.0 - GAMMA));

    let mut f0 = vec![0.0; n];
    let mut fg = vec![0.0; n];
    let mut f1 = vec![0.0; n];
    let mut yg = vec![0.0; n];
    let mut y1 = vec![0.0; n];
    let mut est = vec![0.0; n];
    let mut scratch = vec![0.0; n];

    let mut t = t_start;
    let mut h = h_init.min(t_end - t_start);
    sys.rhs(t, seg_start, y, &mut f0);
    let mut steps = 0;
    while t < t_end {
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::Integrator {
                t,
                reason: format!("exceeded {MAX_STEPS} steps"),
            });
        }
        let last = t + h >= t_end * (1.0 - 4.0 * f64::EPSILON);
        let step = if last { t_end - t } else { h };
        let dh = d * step;

        sys.rhs(t + GAMMA * step, seg_start, &vec![0.0; n], &mut fg);
        for k in 0..n {
            yg[k] = y[k] + dh * (f0[k] + fg[k]);
        }
        sys.solve_shifted(dh, &mut yg, &mut scratch)
            .map_err(|_| Error::Integrator {
                t,
                reason: "singular trapezoidal stage".into(),
            })?;
        sys.rhs(t + GAMMA * step, seg_start, &yg, &mut fg);

        sys.rhs(t + step, seg_start, &vec![0.0; n], &mut f1);
        for k in 0..n {
            y1[k] = w_g * yg[k] - w_n * y[k] + dh * f1[k];
        }
        sys.solve_shifted(dh, &mut y1, &mut scratch)
            .map_err(|_| Error::Integrator {
                t,
                reason: "singular BDF2 stage".into(),
            })?;
        sys.rhs(t + step, seg_start, &y1, &mut f1);

        for k in 0..n {
            est[k] = err_const
                * 2.0
                * step
                * (f0[k] / GAMMA - fg[k] / (GAMMA * (1.0 - GAMMA)) + f1[k] / (1.0 - GAMMA));
        }
        sys.solve_shifted(dh, &mut est, &mut scratch)
            .map_err(|_| Error::Integrator {
                t,
                reason: "singular error filter".into(),
            })?;
        let err = (est
            .iter()
            .zip(y.iter().zip(&y1))
            .map(|(e, (a, b))| (e / (ATOL + RTOL * a.abs().max(b.abs()))).powi(2))
            .sum::<f64>()
            / n as f64)
            .sqrt();
        if !err.is_finite() {
            return Err(Error::Integrator {
                t,
                reason: "non-finite error estimate".into(),
            });
        }
        let factor = if err == 0.0 {
            5.0
        } else {
            (0.9 * err.powf(-1.0 / 3.0)).clamp(0.2, 5.0)
        };
        if err <= 1.0 {
            t = if last { t_end } else { t + step };
            y.copy_from_slice(&y1);
            f0.copy_from_slice(&f1);
            if !last || step >= h {
                h *= factor;
            }
        } else {
            h = step * factor;
            if h < 1e-14 * t_end.abs().max(1.0) {
                return Err(Error::Integrator {
                    t,
                    reason: format!("step size {h:.3e} underflow"),
                });
            }
        }
    }
    Ok(h)
}

/// Nodal solution at each requested time (ascending, `t ≥ 0`).
pub fn fvm_solve(problem: &Problem, n: usize, t_values: &[f64]) -> Result<SolutionGrid> {
    let state = fvm_initial(problem, n)?;
    if let Some(&t) = t_values.iter().find(|t| !(**t >= 0.0) || !t.is_finite()) {
        return Err(Error::InvalidTime(t));
    }
    if t_values.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidArgument(
            "output times must be ascending".into(),
        ));
    }
    let full = build_operator(problem, &state.grid);
    let sys = Reduced::new(problem, &full, state.mass);
    let lo = sys.offset;
    let hi = lo + sys.op.len();

    let mut switches: Vec<f64> = [problem.inlet.signal, problem.outlet.signal]
        .iter()
        .filter_map(|s| match *s {
            TransientSignal::HeavisideStep { t0, .. } => Some(t0),
            _ => None,
        })
        .collect();
    switches.sort_by(f64::total_cmp);
    switches.dedup();

    let horizon = t_values.last().copied().unwrap_or(0.0);
    let mut y = state.c[lo..hi].to_vec();
    let mut t = 0.0;
    let mut seg_start = 0.0;
    let fresh_step = |from: f64| 1e-8 * horizon.max(from).max(1.0);
    let mut h = fresh_step(0.0);
    let mut values = Vec::with_capacity(t_values.len());
    for &target in t_values {
        while t < target {
            let next_switch = switches.iter().copied().find(|&s| s > t && s < target);
            let stop = next_switch.unwrap_or(target);
            h = integrate(&sys, &mut y, t, stop, seg_start, h)?;
            t = stop;
            if next_switch.is_some() {
                seg_start = stop;
                h = fresh_step(stop);
            }
        }
        if target == 0.0 {
            values.push(state.c.clone());
            continue;
        }
        if switches.contains(&target) {
            // The next segment starts after the switch.
            seg_start = target;
            h = fresh_step(target);
        }
        let mut row = vec![0.0; n];
        row[lo..hi].copy_from_slice(&y);
        if lo == 1 {
            row[0] = problem.inlet.signal.eval(target) / problem.inlet.a;
        }
        if hi == n - 1 {
            row[n - 1] = problem.outlet.signal.eval(target) / problem.outlet.a;
        }
        values.push(row);
    }
    SolutionGrid::new(
        state.grid.nodes,
        t_values.to_vec(),
        values,
        Provenance::FiniteVolume,
    )
}

/// [`fvm_solve`] linearly interpolated to arbitrary positions.
pub fn fvm_solve_at(
    problem: &Problem,
    n: usize,
    x_values: &[f64],
    t_values: &[f64],
) -> Result<SolutionGrid> {
    for &x in x_values {
        problem.check_position(x)?;
    }
    let nodal = fvm_solve(problem, n, t_values)?;
    let h = nodal.x_values[1] - nodal.x_values[0];
    let values = nodal
        .values
        .iter()
        .map(|row| {
            x_values
                .iter()
                .map(|&x| {
                    let s = x / h;
                    let k = s.round();
                    if (s - k).abs() < 1e-9 {
                        return row[k as usize];
                    }
                    let k = (s.floor() as usize).min(n - 2);
                    let w = s - k as f64;
                    (1.0 - w) * row[k] + w * row[k + 1]
                })
                .collect()
        })
        .collect();
    SolutionGrid::new(
        x_values.to_vec(),
        t_values.to_vec(),
        values,
        Provenance::FiniteVolume,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{case_library, Layer};
    use approx::assert_abs_diff_eq;

    fn diffusion_pair(v: f64, mu: f64, gamma: f64) -> Problem {
        let base = Layer {
            x_left: 0.0,
            x_right: 1.0,
            retardation: 1.0,
            dispersion: 0.5,
            velocity: v,
            decay: mu,
            production: gamma,
            water_content: 0.4,
            initial: 0.0,
        };
        let right = Layer {
            x_left: 1.0,
            x_right: 2.0,
            retardation: 2.0,
            dispersion: 0.2,
            water_content: 0.3,
            initial: 1.0,
            ..base
        };
        Problem::new(
            vec![base, right],
            RobinBoundary::zero_gradient(),
            RobinBoundary::zero_gradient(),
        )
        .unwrap()
    }

    #[test]
    fn grid_places_node_on_interfaces() {
        let p = case_library(5).unwrap().problem;
        let g = FvmGrid::new(&p, DEFAULT_NODES).unwrap();
        assert_eq!(g.interface_nodes, vec![(200, 0)]);
        assert_eq!(g.node_layer[200], 0);
        assert_eq!(g.node_layer[201], 1);
        match FvmGrid::new(&p, 600) {
            Err(Error::GridAlignment { n: 600, suggested }) => {
                assert!(FvmGrid::new(&p, suggested).is_ok())
            }
            other => panic!("expected alignment error, got {other:?}"),
        }
    }

    #[test]
    fn initial_condition_averages_at_interfaces() {
        let s = fvm_initial(&case_library(12).unwrap().problem, DEFAULT_NODES).unwrap();
        let at = |x: f64| s.c[(x / s.grid.h).round() as usize];
        assert_eq!(at(14.0), 0.5);
        assert_eq!(at(18.0), 0.5);
        assert_eq!(at(16.0), 1.0);
        assert_eq!(at(13.0), 0.0);
        let pair = fvm_initial(&diffusion_pair(0.0, 0.0, 0.0), 11).unwrap();
        assert_eq!(pair.c[5], 0.5);
    }

    #[test]
    fn mass_descriptor_follows_boundary_types() {
        let mut p = diffusion_pair(0.0, 0.0, 0.0);
        assert_eq!(MassMatrix::for_problem(&p), MassMatrix::Identity);
        p.inlet = RobinBoundary::concentration(TransientSignal::Constant { c0: 1.0 });
        assert_eq!(MassMatrix::for_problem(&p), MassMatrix::DropFirst);
        p.outlet = RobinBoundary::concentration(TransientSignal::Zero);
        assert_eq!(MassMatrix::for_problem(&p), MassMatrix::DropBoth);
    }

    #[test]
    fn uniform_state_is_discrete_steady_state() {
        let p = diffusion_pair(0.0, 0.0, 0.0);
        let g = FvmGrid::new(&p, 21).unwrap();
        let f = fvm_rhs(&p, &g, &[0.7; 21], 0.3);
        assert!(f.iter().all(|v| v.abs() < 1e-12), "{f:?}");
    }

    #[test]
    fn linear_profile_has_no_interior_diffusion() {
        let p = diffusion_pair(0.0, 0.0, 0.0);
        let g = FvmGrid::new(&p, 21).unwrap();
        let c: Vec<f64> = g.nodes.iter().map(|x| 1.0 + 0.25 * x).collect();
        let f = fvm_rhs(&p, &g, &c, 0.0);
        for k in (1..20).filter(|&k| k != 10) {
            assert_abs_diff_eq!(f[k], 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn constant_signal_dirichlet_rows_hold_exactly() {
        let mut p = diffusion_pair(0.3, 0.1, 0.0);
        p.inlet = RobinBoundary::new(2.0, 0.0, TransientSignal::Constant { c0: 1.0 });
        p.outlet = RobinBoundary::new(1.0, 0.0, TransientSignal::Zero);
        let g = fvm_solve(&p, 41, &[0.1, 1.0]).unwrap();
        for row in &g.values {
            assert_abs_diff_eq!(2.0 * row[0], 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(row[40], 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn zero_flux_diffusion_conserves_mass() {
        let p = diffusion_pair(0.0, 0.0, 0.0);
        let s = fvm_initial(&p, 41).unwrap();
        let m0 = discrete_mass(&p, &s.grid, &s.c);
        let g = fvm_solve(&p, 41, &[1.0, 10.0]).unwrap();
        for row in &g.values {
            let m = discrete_mass(&p, &s.grid, row);
            assert!(((m - m0) / m0).abs() < 1e-6, "{m} vs {m0}");
        }
    }

    #[test]
    fn scalar_decay_converges() {
        // Uniform state under pure decay: dc/dt = −μ c + γ. Local error control
        // at 1e-8 accumulates to about 1e-6 globally.
        let mut p = diffusion_pair(0.0, 1.0, 0.5);
        for l in &mut p.layers {
            l.initial = 2.0;
            l.retardation = 1.0;
        }
        let g = fvm_solve(&p, 11, &[0.5, 3.0]).unwrap();
        for (row, t) in g.values.iter().zip([0.5f64, 3.0]) {
            let exact = 0.5 + 1.5 * (-t).exp();
            for v in row {
                assert_abs_diff_eq!(*v, exact, epsilon = 2e-6);
            }
        }
    }

    #[test]
    fn interpolation_hits_nodes_exactly() {
        let p = case_library(5).unwrap().problem;
        let nodal = fvm_solve(&p, 121, &[0.2]).unwrap();
        let at = fvm_solve_at(
            &p,
            121,
            &[
                nodal.x_values[7],
                0.5 * (nodal.x_values[7] + nodal.x_values[8]),
            ],
            &[0.2],
        )
        .unwrap();
        assert_eq!(at.values[0][0], nodal.values[0][7]);
        assert_abs_diff_eq!(
            at.values[0][1],
            0.5 * (nodal.values[0][7] + nodal.values[0][8]),
            epsilon = 1e-15
        );
    }
}
