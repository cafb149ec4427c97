//! Problem description for one-dimensional advection-dispersion-reaction in a
//! layered medium.
//!
//! In layer `i` the concentration obeys
//!
//! ```text
//! R_i ∂c/∂t = D_i ∂²c/∂x² − v_i ∂c/∂x − μ_i c + γ_i,      ℓ_{i-1} < x < ℓ_i
//! ```
//!
//! with concentration and dispersive flux `θ_i D_i ∂c/∂x` continuous across
//! every interface, a constant initial value `f_i` per layer and Robin
//! conditions at both ends:
//!
//! ```text
//! a_0 c(0,t) − b_0 ∂c/∂x(0,t) = g_0(t)
//! a_L c(L,t) + b_L ∂c/∂x(L,t) = g_L(t)
//! ```
//!
//! Units are cm, day and kg/cm³ throughout. The built-in cases use `c0 = 1`,
//! so every computed value is a relative concentration `c/c0`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// One homogeneous slab of the medium.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Layer {
    pub x_left: f64,
    pub x_right: f64,
    /// Retardation factor `R` (dimensionless).
    pub retardation: f64,
    /// Dispersion coefficient `D` (cm²/day).
    pub dispersion: f64,
    /// Pore-water velocity `v` (cm/day).
    pub velocity: f64,
    /// First-order decay rate `μ` (1/day).
    pub decay: f64,
    /// Zero-order production rate `γ` (kg cm⁻³ day⁻¹).
    pub production: f64,
    /// Volumetric water content `θ` (dimensionless).
    pub water_content: f64,
    /// Initial concentration `f` (kg/cm³).
    pub initial: f64,
}

impl Layer {
    pub fn width(&self) -> f64 {
        self.x_right - self.x_left
    }

    /// Cell Peclet-like number `v (ℓ_i − ℓ_{i-1}) / D`.
    pub fn peclet(&self) -> f64 {
        self.velocity.abs() * self.width() / self.dispersion
    }

    fn with_extent(mut self, x_left: f64, x_right: f64) -> Self {
        self.x_left = x_left;
        self.x_right = x_right;
        self
    }
}

/// Time-dependent boundary data with a closed-form Laplace transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TransientSignal {
    Zero,
    Constant {
        c0: f64,
    },
    /// `c0` for `t < t0`, zero afterwards.
    HeavisideStep {
        c0: f64,
        t0: f64,
    },
    /// `c0 α t exp(−β t)`.
    RampExp {
        c0: f64,
        alpha: f64,
        beta: f64,
    },
}

impl TransientSignal {
    /// Time-domain value. At the switching time of a step the pre-switch value
    /// is returned.
    pub fn eval(&self, t: f64) -> f64 {
        match *self {
            TransientSignal::Zero => 0.0,
            TransientSignal::Constant { c0 } => c0,
            TransientSignal::HeavisideStep { c0, t0 } => {
                if t <= t0 {
                    c0
                } else {
                    0.0
                }
            }
            TransientSignal::RampExp { c0, alpha, beta } => c0 * alpha * t * (-beta * t).exp(),
        }
    }

    /// Exact Laplace transform `G(s)`.
    pub fn laplace(&self, s: Complex64) -> Result<Complex64> {
        check_laplace_domain(s)?;
        Ok(match *self {
            TransientSignal::Zero => Complex64::new(0.0, 0.0),
            TransientSignal::Constant { c0 } => c0 / s,
            TransientSignal::HeavisideStep { c0, t0 } => c0 * (-t0 * s).exp() / s,
            TransientSignal::RampExp { c0, alpha, beta } => {
                let q = s + beta;
                c0 * alpha / (q * q)
            }
        })
    }

    /// `lim_{t→∞} g(t)`.
    pub fn terminal_value(&self) -> f64 {
        match *self {
            TransientSignal::Constant { c0 } => c0,
            TransientSignal::Zero
            | TransientSignal::HeavisideStep { .. }
            | TransientSignal::RampExp { .. } => 0.0,
        }
    }

    /// Amplitude `c0` of the signal (zero for [`TransientSignal::Zero`]).
    pub fn amplitude(&self) -> f64 {
        match *self {
            TransientSignal::Zero => 0.0,
            TransientSignal::Constant { c0 }
            | TransientSignal::HeavisideStep { c0, .. }
            | TransientSignal::RampExp { c0, .. } => c0,
        }
    }
}

/// Convenience wrapper around [`TransientSignal::laplace`].
pub fn laplace_of_signal(signal: &TransientSignal, s: Complex64) -> Result<Complex64> {
    signal.laplace(s)
}

/// Rejects Laplace variables on the closed negative real axis (the branch cut
/// of the square root in the layer exponents, which also holds the `s = 0`
/// pole of every constant source) and non-finite values.
///
/// The inversion contour samples points with negative real part away from the
/// real axis, so the half-plane `Re(s) > 0` alone is too strict.
pub fn check_laplace_domain(s: Complex64) -> Result<()> {
    if !s.re.is_finite() || !s.im.is_finite() || (s.im == 0.0 && s.re <= 0.0) {
        return Err(Error::Domain { s });
    }
    Ok(())
}

/// Robin condition `a c ∓ b ∂c/∂x = g(t)` (minus at the inlet, plus at the outlet).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobinBoundary {
    pub a: f64,
    pub b: f64,
    pub signal: TransientSignal,
}

impl RobinBoundary {
    pub fn new(a: f64, b: f64, signal: TransientSignal) -> Self {
        Self { a, b, signal }
    }

    /// `c = c0(t)`.
    pub fn concentration(signal: TransientSignal) -> Self {
        Self::new(1.0, 0.0, signal)
    }

    /// Flux-type inlet `v c − D ∂c/∂x = v c0(t)`. `signal` carries `c0(t)`;
    /// it is scaled by `v` here.
    pub fn flux(velocity: f64, dispersion: f64, signal: TransientSignal) -> Self {
        let scaled = match signal {
            TransientSignal::Zero => TransientSignal::Zero,
            TransientSignal::Constant { c0 } => TransientSignal::Constant { c0: velocity * c0 },
            TransientSignal::HeavisideStep { c0, t0 } => TransientSignal::HeavisideStep {
                c0: velocity * c0,
                t0,
            },
            TransientSignal::RampExp { c0, alpha, beta } => TransientSignal::RampExp {
                c0: velocity * c0,
                alpha,
                beta,
            },
        };
        Self::new(velocity, dispersion, scaled)
    }

    /// `∂c/∂x = 0`.
    pub fn zero_gradient() -> Self {
        Self::new(0.0, 1.0, TransientSignal::Zero)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

/// One broken invariant reported by [`validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub severity: Severity,
    /// Layer index (zero-based), if the violation concerns a layer.
    pub layer: Option<usize>,
    /// Short field key, e.g. `D`, `x_left`, `inlet.b`.
    pub field: &'static str,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.layer {
            Some(i) => write!(f, "layers[{i}].{}: {}", self.field, self.message),
            None => write!(f, "{}: {}", self.field, self.message),
        }
    }
}

/// Ordered stack of layers tiling `[0, L]` plus the two end conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub layers: Vec<Layer>,
    pub inlet: RobinBoundary,
    pub outlet: RobinBoundary,
}

impl Problem {
    /// Builds a problem and rejects it if any hard invariant is violated.
    pub fn new(layers: Vec<Layer>, inlet: RobinBoundary, outlet: RobinBoundary) -> Result<Self> {
        let p = Self {
            layers,
            inlet,
            outlet,
        };
        p.check()?;
        Ok(p)
    }

    /// `Err(InvalidProblem)` if [`validate`] reports any error-level violation.
    pub fn check(&self) -> Result<()> {
        let errors: Vec<_> = validate(self)
            .into_iter()
            .filter(|v| v.severity == Severity::Error)
            .collect();
        if errors.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidProblem(errors))
        }
    }

    pub fn num_layers(&self) -> usize {
        self.layers.len()
    }

    pub fn length(&self) -> f64 {
        self.layers.last().map_or(0.0, |l| l.x_right)
    }

    /// Interior interface positions `ℓ_1, …, ℓ_{m-1}`.
    pub fn interfaces(&self) -> Vec<f64> {
        self.layers[..self.layers.len().saturating_sub(1)]
            .iter()
            .map(|l| l.x_right)
            .collect()
    }

    /// Index of the layer holding `x`; at an interface the left layer wins.
    pub fn layer_index(&self, x: f64) -> usize {
        self.layers
            .iter()
            .position(|l| x <= l.x_right)
            .unwrap_or(self.layers.len() - 1)
    }

    pub fn check_position(&self, x: f64) -> Result<()> {
        let length = self.length();
        if !x.is_finite() || x < 0.0 || x > length {
            return Err(Error::PositionOutOfRange { x, length });
        }
        Ok(())
    }

    /// Largest layer Peclet number `v (ℓ_i − ℓ_{i-1}) / D`.
    pub fn peclet_indicator(&self) -> f64 {
        self.layers.iter().map(Layer::peclet).fold(0.0, f64::max)
    }

    /// Splits layer `index` at `x` into two layers with identical coefficients.
    pub fn split_layer(&self, index: usize, x: f64) -> Result<Self> {
        let layer = *self
            .layers
            .get(index)
            .ok_or_else(|| Error::InvalidArgument(format!("no layer with index {index}")))?;
        if !(x > layer.x_left && x < layer.x_right) {
            return Err(Error::InvalidArgument(format!(
                "split point {x} is not inside layer {index} ({}, {})",
                layer.x_left, layer.x_right
            )));
        }
        let mut layers = self.layers.clone();
        layers.splice(
            index..=index,
            [
                layer.with_extent(layer.x_left, x),
                layer.with_extent(x, layer.x_right),
            ],
        );
        Ok(Self {
            layers,
            ..self.clone()
        })
    }

    /// Same medium with different boundary signals.
    pub fn with_signals(&self, inlet: TransientSignal, outlet: TransientSignal) -> Self {
        let mut p = self.clone();
        p.inlet.signal = inlet;
        p.outlet.signal = outlet;
        p
    }

    /// Same medium with zero initial concentration and no production.
    pub fn without_sources(&self) -> Self {
        let mut p = self.clone();
        for l in &mut p.layers {
            l.initial = 0.0;
            l.production = 0.0;
        }
        p
    }

    /// Initial concentration at `x` (left layer at interfaces).
    pub fn initial_at(&self, x: f64) -> f64 {
        self.layers[self.layer_index(x)].initial
    }
}

/// Every broken invariant of `problem`; empty iff the problem is well formed.
pub fn validate(problem: &Problem) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut push = |severity, layer, field, message: String| {
        out.push(Violation {
            severity,
            layer,
            field,
            message,
        })
    };

    if problem.layers.len() < 2 {
        push(
            Severity::Error,
            None,
            "layers",
            format!(
                "at least two layers are required, got {} (split a single medium into two identical layers)",
                problem.layers.len()
            ),
        );
    }

    let mut expected_left = 0.0;
    for (i, l) in problem.layers.iter().enumerate() {
        let fields = [
            ("R", l.retardation),
            ("D", l.dispersion),
            ("v", l.velocity),
            ("mu", l.decay),
            ("gamma", l.production),
            ("theta", l.water_content),
            ("f", l.initial),
            ("x_left", l.x_left),
            ("x_right", l.x_right),
        ];
        for (name, value) in fields {
            if !value.is_finite() {
                push(
                    Severity::Error,
                    Some(i),
                    name,
                    format!("{value} is not finite"),
                );
            }
        }
        if l.x_left != expected_left {
            let what = if l.x_left > expected_left {
                "gap"
            } else {
                "overlap"
            };
            push(
                Severity::Error,
                Some(i),
                "x_left",
                format!(
                    "{what}: layer starts at {} but the previous layer ends at {expected_left}",
                    l.x_left
                ),
            );
        }
        if !(l.x_left < l.x_right) {
            push(
                Severity::Error,
                Some(i),
                "x_right",
                format!(
                    "layer must have positive width ({} .. {})",
                    l.x_left, l.x_right
                ),
            );
        }
        if !(l.retardation > 0.0) {
            push(
                Severity::Error,
                Some(i),
                "R",
                format!("retardation must be positive, got {}", l.retardation),
            );
        }
        if !(l.dispersion > 0.0) {
            push(
                Severity::Error,
                Some(i),
                "D",
                format!("dispersion must be positive, got {}", l.dispersion),
            );
        }
        if !(l.water_content > 0.0) {
            push(
                Severity::Error,
                Some(i),
                "theta",
                format!("water content must be positive, got {}", l.water_content),
            );
        }
        if l.decay < 0.0 {
            push(
                Severity::Warning,
                Some(i),
                "mu",
                format!("negative decay rate {}", l.decay),
            );
        }
        if l.production < 0.0 {
            push(
                Severity::Warning,
                Some(i),
                "gamma",
                format!("negative production rate {}", l.production),
            );
        }
        expected_left = l.x_right;
    }

    for (name, bc) in [("inlet", &problem.inlet), ("outlet", &problem.outlet)] {
        let (fa, fb) = if name == "inlet" {
            ("inlet.a", "inlet.b")
        } else {
            ("outlet.a", "outlet.b")
        };
        if !bc.a.is_finite() || !bc.b.is_finite() {
            push(
                Severity::Error,
                None,
                fa,
                "boundary coefficients must be finite".into(),
            );
        }
        if bc.b < 0.0 {
            push(
                Severity::Error,
                None,
                fb,
                format!("must be non-negative, got {}", bc.b),
            );
        }
        if bc.a == 0.0 && bc.b == 0.0 {
            push(
                Severity::Error,
                None,
                fa,
                "a and b cannot both be zero".into(),
            );
        }
        if let TransientSignal::HeavisideStep { t0, .. } = bc.signal {
            if !(t0 > 0.0) {
                push(
                    Severity::Error,
                    None,
                    if name == "inlet" {
                        "inlet.signal.t0"
                    } else {
                        "outlet.signal.t0"
                    },
                    format!("step duration must be positive, got {t0}"),
                );
            }
        }
    }
    out
}

/// Which solver produced a [`SolutionGrid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    SemiAnalytical,
    FiniteVolume,
    SteadyState,
}

impl Provenance {
    pub fn label(&self) -> &'static str {
        match self {
            Provenance::SemiAnalytical => "salt",
            Provenance::FiniteVolume => "fvm",
            Provenance::SteadyState => "steady",
        }
    }
}

/// Concentrations on a Cartesian `(x, t)` grid, stored as `values[time][position]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionGrid {
    pub x_values: Vec<f64>,
    pub t_values: Vec<f64>,
    pub values: Vec<Vec<f64>>,
    pub provenance: Provenance,
}

impl SolutionGrid {
    pub fn new(
        x_values: Vec<f64>,
        t_values: Vec<f64>,
        values: Vec<Vec<f64>>,
        provenance: Provenance,
    ) -> Result<Self> {
        if values.len() != t_values.len() || values.iter().any(|row| row.len() != x_values.len()) {
            return Err(Error::InvalidArgument(format!(
                "solution matrix does not match a {}x{} grid",
                t_values.len(),
                x_values.len()
            )));
        }
        for (j, row) in values.iter().enumerate() {
            if let Some(k) = row.iter().position(|v| !v.is_finite()) {
                return Err(Error::InvalidArgument(format!(
                    "non-finite concentration at x = {}, t = {}",
                    x_values[k], t_values[j]
                )));
            }
        }
        Ok(Self {
            x_values,
            t_values,
            values,
            provenance,
        })
    }

    pub fn value(&self, time_index: usize, x_index: usize) -> f64 {
        self.values[time_index][x_index]
    }

    /// Max absolute difference per time between two grids on the same points.
    pub fn max_abs_diff_per_time(&self, other: &SolutionGrid) -> Result<Vec<f64>> {
        if self.x_values != other.x_values || self.t_values != other.t_values {
            return Err(Error::InvalidArgument(
                "solution grids are defined on different points".into(),
            ));
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| {
                a.iter()
                    .zip(b)
                    .map(|(p, q)| (p - q).abs())
                    .fold(0.0, f64::max)
            })
            .collect())
    }
}

/// A catalogued test case with its suggested evaluation grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub id: u32,
    pub problem: Problem,
    pub x_values: Vec<f64>,
    pub t_values: Vec<f64>,
    /// Reference inlet concentration; values are relative to it.
    pub c0: f64,
}

const C0: f64 = 1.0;

/// Pulse duration of cases 2 and 4.
pub const SHORT_PULSE: f64 = 0.5;
/// Pulse duration of cases 10 and 13.
pub const LONG_PULSE: f64 = 3.0;
/// Ramp parameters of case 11's inlet `c0 α t exp(−β t)`.
pub const RAMP_ALPHA: f64 = 1.0;
pub const RAMP_BETA: f64 = 1.0;

#[allow(clippy::too_many_arguments)]
fn layer(
    x_left: f64,
    x_right: f64,
    r: f64,
    d: f64,
    v: f64,
    mu: f64,
    gamma: f64,
    theta: f64,
    f: f64,
) -> Layer {
    Layer {
        x_left,
        x_right,
        retardation: r,
        dispersion: d,
        velocity: v,
        decay: mu,
        production: gamma,
        water_content: theta,
        initial: f,
    }
}

fn sand(x_left: f64, x_right: f64) -> Layer {
    layer(x_left, x_right, 4.25, 7.0, 10.0, 0.0, 0.0, 0.4, 0.0)
}

fn clay(x_left: f64, x_right: f64) -> Layer {
    layer(x_left, x_right, 14.0, 18.0, 8.0, 0.0, 0.0, 0.5, 0.0)
}

fn steps(start: f64, step: f64, stop: f64) -> Vec<f64> {
    let n = ((stop - start) / step).round() as usize;
    (0..=n).map(|k| start + k as f64 * step).collect()
}

/// The thirteen catalogued benchmark problems.
pub fn case_library(case_id: u32) -> Result<Case> {
    let outlet = RobinBoundary::zero_gradient();
    let constant = TransientSignal::Constant { c0: C0 };
    let short_pulse = TransientSignal::HeavisideStep {
        c0: C0,
        t0: SHORT_PULSE,
    };
    let long_pulse = TransientSignal::HeavisideStep {
        c0: C0,
        t0: LONG_PULSE,
    };

    let homogeneous = || {
        vec![
            layer(0.0, 10.0, 1.0, 50.0, 75.0, 2.0, 1.0, 0.4, 0.0),
            layer(10.0, 30.0, 1.0, 50.0, 75.0, 2.0, 1.0, 0.4, 0.0),
        ]
    };
    let five_layer = || {
        vec![
            sand(0.0, 10.0),
            clay(10.0, 12.0),
            sand(12.0, 20.0),
            clay(20.0, 22.0),
            sand(22.0, 30.0),
        ]
    };

    let table_times = vec![0.2, 0.4, 0.6, 0.8];
    let homogeneous_times = vec![1e-3, 0.1, 0.6, 1.0, 2.0, 4.0];
    let multilayer_times = vec![2.0, 4.0, 6.0, 8.0, 10.0];

    let (layers, inlet, x_values, t_values) = match case_id {
        1..=4 => {
            let layers = homogeneous();
            let (v, d) = (layers[0].velocity, layers[0].dispersion);
            let inlet = match case_id {
                1 => RobinBoundary::flux(v, d, constant),
                2 => RobinBoundary::flux(v, d, short_pulse),
                3 => RobinBoundary::concentration(constant),
                _ => RobinBoundary::concentration(short_pulse),
            };
            (layers, inlet, steps(0.0, 2.0, 20.0), homogeneous_times)
        }
        5..=7 => {
            let layers = match case_id {
                5 => vec![
                    layer(0.0, 10.0, 1.0, 50.0, 25.0, 0.0, 0.0, 0.4, 0.0),
                    layer(10.0, 30.0, 1.0, 20.0, 40.0, 0.0, 0.0, 0.25, 0.0),
                ],
                // Dispersion coefficients of case 5 exchanged between the layers.
                6 => vec![
                    layer(0.0, 10.0, 1.0, 20.0, 25.0, 0.0, 0.0, 0.4, 0.0),
                    layer(10.0, 30.0, 1.0, 50.0, 40.0, 0.0, 0.0, 0.25, 0.0),
                ],
                // Case 5 with the layer coefficients in reverse order.
                _ => vec![
                    layer(0.0, 10.0, 1.0, 20.0, 40.0, 0.0, 0.0, 0.25, 0.0),
                    layer(10.0, 30.0, 1.0, 50.0, 25.0, 0.0, 0.0, 0.4, 0.0),
                ],
            };
            let (v, d) = (layers[0].velocity, layers[0].dispersion);
            (
                layers,
                RobinBoundary::flux(v, d, constant),
                steps(0.0, 2.0, 20.0),
                table_times.clone(),
            )
        }
        8 => {
            let layers = vec![
                layer(0.0, 10.0, 3.0, 50.0, 25.0, 3.0, 0.0, 0.4, 0.0),
                layer(10.0, 20.0, 2.0, 20.0, 40.0, 4.0, 0.0, 0.25, 0.0),
            ];
            let (v, d) = (layers[0].velocity, layers[0].dispersion);
            let mut times = table_times.clone();
            times.push(1e3);
            (
                layers,
                RobinBoundary::flux(v, d, constant),
                steps(0.0, 1.0, 20.0),
                times,
            )
        }
        9..=11 => {
            let layers = five_layer();
            let (v, d) = (layers[0].velocity, layers[0].dispersion);
            let inlet = match case_id {
                9 => RobinBoundary::flux(v, d, constant),
                10 => RobinBoundary::flux(v, d, long_pulse),
                _ => RobinBoundary::concentration(TransientSignal::RampExp {
                    c0: C0,
                    alpha: RAMP_ALPHA,
                    beta: RAMP_BETA,
                }),
            };
            (
                layers,
                inlet,
                steps(0.0, 1.0, 30.0),
                multilayer_times.clone(),
            )
        }
        12 => {
            let mut slug = sand(14.0, 18.0);
            slug.initial = C0;
            let layers = vec![
                sand(0.0, 10.0),
                clay(10.0, 12.0),
                sand(12.0, 14.0),
                slug,
                sand(18.0, 20.0),
                clay(20.0, 22.0),
                sand(22.0, 30.0),
            ];
            let inlet = RobinBoundary::new(0.0, 1.0, TransientSignal::Zero);
            (
                layers,
                inlet,
                steps(0.0, 1.0, 30.0),
                multilayer_times.clone(),
            )
        }
        13 => {
            let mut layers = five_layer();
            for l in &mut layers {
                if l.retardation == 4.25 {
                    l.decay = 3.0;
                    l.production = 2.0;
                } else {
                    l.decay = 2.0;
                    l.production = 4.0;
                }
            }
            layers[3].initial = C0;
            let (v, d) = (layers[0].velocity, layers[0].dispersion);
            (
                layers,
                RobinBoundary::flux(v, d, long_pulse),
                steps(0.0, 1.0, 30.0),
                multilayer_times,
            )
        }
        other => return Err(Error::UnknownCase(other)),
    };

    Ok(Case {
        id: case_id,
        problem: Problem {
            layers,
            inlet,
            outlet,
        },
        x_values,
        t_values,
        c0: C0,
    })
}
