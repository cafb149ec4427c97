//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{random_problem, rel_diff};
use layered_transport::fvm::{discrete_mass, fvm_initial, fvm_solve, fvm_solve_at, DEFAULT_NODES};
use layered_transport::laplace::{lambda_roots, LaplaceSolution};
use layered_transport::model::{Layer, Problem, RobinBoundary, TransientSignal};
use layered_transport::steady::solve_steady;
use layered_transport::{
    case_library, cf_quadrature, solve_grid, CfQuadrature, SolutionGrid, DEFAULT_ORDER,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Published relative concentrations at t = 0.2, 0.4, 0.6, 0.8.
const GOLDEN: [(u32, f64, [f64; 4]); 33] = [
    (5, 0.0, [0.884, 0.963, 0.987, 0.995]),
    (5, 2.0, [0.742, 0.915, 0.969, 0.988]),
    (5, 4.0, [0.561, 0.841, 0.940, 0.977]),
    (5, 6.0, [0.375, 0.746, 0.901, 0.962]),
    (5, 8.0, [0.222, 0.645, 0.858, 0.945]),
    (5, 10.0, [0.142, 0.579, 0.829, 0.933]),
    (5, 12.0, [0.063, 0.480, 0.781, 0.914]),
    (5, 14.0, [0.021, 0.372, 0.722, 0.889]),
    (5, 16.0, [0.005, 0.264, 0.651, 0.858]),
    (5, 18.0, [0.001, 0.168, 0.567, 0.819]),
    (5, 20.0, [0.000, 0.094, 0.473, 0.770]),
    (6, 0.0, [0.978, 0.998, 1.000, 1.000]),
    (6, 2.0, [0.868, 0.984, 0.998, 1.000]),
    (6, 4.0, [0.634, 0.942, 0.991, 0.999]),
    (6, 6.0, [0.345, 0.849, 0.972, 0.995]),
    (6, 8.0, [0.131, 0.693, 0.930, 0.986]),
    (6, 10.0, [0.033, 0.496, 0.853, 0.966]),
    (6, 12.0, [0.011, 0.370, 0.784, 0.944]),
    (6, 14.0, [0.003, 0.257, 0.699, 0.913]),
    (6, 16.0, [0.001, 0.166, 0.601, 0.871]),
    (6, 18.0, [0.000, 0.098, 0.498, 0.817]),
    (6, 20.0, [0.000, 0.054, 0.395, 0.751]),
    (7, 0.0, [0.999, 1.000, 1.000, 1.000]),
    (7, 2.0, [0.988, 1.000, 1.000, 1.000]),
    (7, 4.0, [0.928, 0.999, 1.000, 1.000]),
    (7, 6.0, [0.764, 0.995, 1.000, 1.000]),
    (7, 8.0, [0.496, 0.976, 0.998, 0.999]),
    (7, 10.0, [0.152, 0.780, 0.940, 0.979]),
    (7, 12.0, [0.049, 0.600, 0.870, 0.952]),
    (7, 14.0, [0.013, 0.418, 0.773, 0.911]),
    (7, 16.0, [0.003, 0.262, 0.653, 0.851]),
    (7, 18.0, [0.000, 0.148, 0.522, 0.774]),
    (7, 20.0, [0.000, 0.075, 0.393, 0.681]),
];

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn quad() -> CfQuadrature {
    cf_quadrature(DEFAULT_ORDER).unwrap()
}

fn max_diff(a: &SolutionGrid, b: &SolutionGrid) -> f64 {
    a.max_abs_diff_per_time(b)
        .unwrap()
        .into_iter()
        .fold(0.0, f64::max)
}

fn golden_values() -> Outcome {
    let start = Instant::now();
    let q = quad();
    let (mut worst, mut failures, mut count) = (0.0f64, 0, 0);
    for id in [5, 6, 7] {
        let case = case_library(id).unwrap();
        let xs: Vec<f64> = (0..=10).map(|k| 2.0 * k as f64).collect();
        let ts = [0.2, 0.4, 0.6, 0.8];
        let grid = solve_grid(&case.problem, &q, &xs, &ts).unwrap();
        for &(_, x, expected) in GOLDEN.iter().filter(|g| g.0 == id) {
            let j = xs.iter().position(|&v| v == x).unwrap();
            for (i, want) in expected.iter().enumerate() {
                let err = (grid.values[i][j] / case.c0 - want).abs();
                worst = worst.max(err);
                count += 1;
                if err > 5e-4 {
                    failures += 1;
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(
        failures == 0 && count == 132 && secs < 5.0,
        format!(
            "{count} values, {failures} outside ±5e-4, worst {worst:.2e}, {secs:.2} s (limit 5 s)"
        ),
    )
}

fn split_equivalence() -> Outcome {
    let q = quad();
    let (mut split_worst, mut fvm_worst) = (0.0f64, 0.0f64);
    for id in 1..=4 {
        let case = case_library(id).unwrap();
        let three = case.problem.split_layer(0, 5.0).unwrap();
        let five = case
            .problem
            .split_layer(1, 20.0)
            .and_then(|p| p.split_layer(1, 15.0))
            .and_then(|p| p.split_layer(0, 4.0))
            .unwrap();
        assert_eq!((three.num_layers(), five.num_layers()), (3, 5));
        let base = solve_grid(&case.problem, &q, &case.x_values, &case.t_values).unwrap();
        for p in [&three, &five] {
            let other = solve_grid(p, &q, &case.x_values, &case.t_values).unwrap();
            split_worst = split_worst.max(max_diff(&base, &other));
        }
        let fvm =
            fvm_solve_at(&case.problem, DEFAULT_NODES, &case.x_values, &case.t_values).unwrap();
        fvm_worst = fvm_worst.max(max_diff(&base, &fvm));
    }
    check(
        split_worst <= 1e-9 && fvm_worst <= 2e-3,
        format!(
            "3/5-way split diff {split_worst:.2e} (≤1e-9), SALT vs FVM {fvm_worst:.2e} (≤2e-3)"
        ),
    )
}

fn steady_limit() -> Outcome {
    let case = case_library(8).unwrap();
    let xs: Vec<f64> = (0..=40).map(|k| 0.5 * k as f64).collect();
    let salt = solve_grid(&case.problem, &quad(), &xs, &[1e3]).unwrap();
    let steady = solve_steady(&case.problem)
        .unwrap()
        .to_grid(&xs, &[1e3])
        .unwrap();
    let d = max_diff(&salt, &steady);
    check(
        d <= 1e-6,
        format!("case 8 at t = 1e3 vs exact steady state: {d:.2e} (≤1e-6)"),
    )
}

fn multilayer_cross_checks() -> Outcome {
    let start = Instant::now();
    let q = quad();
    let mut parts = Vec::new();
    let mut worst = 0.0f64;
    for id in 9..=13 {
        let case = case_library(id).unwrap();
        let salt = solve_grid(&case.problem, &q, &case.x_values, &case.t_values).unwrap();
        let fvm =
            fvm_solve_at(&case.problem, DEFAULT_NODES, &case.x_values, &case.t_values).unwrap();
        let d = max_diff(&salt, &fvm);
        worst = worst.max(d);
        parts.push(format!("{id}:{d:.1e}"));
    }
    let secs = start.elapsed().as_secs_f64();
    check(
        worst <= 5e-3 && secs < 60.0,
        format!(
            "SALT vs FVM per case [{}] (≤5e-3), {secs:.1} s (limit 60 s)",
            parts.join(" ")
        ),
    )
}

fn inversion_battery() -> Outcome {
    type Pair = (fn(Complex64) -> Complex64, fn(f64) -> f64);
    let pairs: [Pair; 4] = [
        (|s| 1.0 / s, |_| 1.0),
        (|s| 1.0 / (s * s), |t| t),
        (|s| 1.0 / (s + 1.0), |t| (-t).exp()),
        (|s| 1.0 / ((s + 1.0) * (s + 1.0)), |t| t * (-t).exp()),
    ];
    let times = [0.1, 0.5, 1.0, 2.0, 10.0];
    let error = |order: usize| {
        let q = cf_quadrature(order).unwrap();
        let mut worst = 0.0f64;
        for (transform, exact) in pairs {
            for &t in &times {
                let v = q.invert(t, |s| Ok(transform(s))).unwrap();
                worst = worst.max((v - exact(t)).abs());
            }
        }
        worst
    };
    let errors: Vec<f64> = [6, 10, 14, 18].into_iter().map(error).collect();
    let monotone = errors.windows(2).all(|w| w[1] <= 10.0 * w[0]) && errors[3] < errors[0];
    let n14 = errors[2];
    check(
        n14 <= 1e-8 && monotone,
        format!(
            "N=14 worst {n14:.2e} (≤1e-8); N = 6/10/14/18: {}",
            errors
                .iter()
                .map(|e| format!("{e:.1e}"))
                .collect::<Vec<_>>()
                .join(" / ")
        ),
    )
}

fn continuity_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let q = quad();
    let (mut lap, mut jump, mut vieta) = (0.0f64, 0.0f64, 0.0f64);
    let mut sign_ok = true;
    let problems = 60;
    for _ in 0..problems {
        let m = rng.random_range(2..=8);
        let p = random_problem(&mut rng, m);
        let t = rng.random_range(0.1..10.0);
        let samples: Vec<LaplaceSolution> = q
            .sample_points(t)
            .map(|s| LaplaceSolution::new(&p, s).unwrap())
            .collect();
        for (i, l) in p.interfaces().into_iter().enumerate() {
            for sol in &samples {
                lap = lap.max(rel_diff(
                    sol.eval_in_layer(i, l),
                    sol.eval_in_layer(i + 1, l),
                ));
            }
            let side = |layer: usize| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (sol, &(_, w)) in samples.iter().zip(q.nodes()) {
                    acc += w * sol.eval_in_layer(layer, l);
                }
                -2.0 * acc.re / t
            };
            jump = jump.max((side(i) - side(i + 1)).abs());
        }
        for layer in &p.layers {
            let s = Complex64::new(rng.random_range(1e-3..20.0), rng.random_range(-20.0..20.0));
            let (l1, l2) = lambda_roots(layer, s).unwrap();
            let scale = l1.norm().max(l2.norm());
            vieta = vieta.max((l1 + l2 - layer.velocity / layer.dispersion).norm() / scale);
            vieta = vieta.max(rel_diff(
                l1 * l2,
                -(layer.retardation * s + layer.decay) / layer.dispersion,
            ));
            sign_ok &= l1.re > 0.0 && l2.re < 0.0;
        }
    }
    check(
        lap <= 1e-11 && jump <= 1e-8 && vieta <= 1e-13 && sign_ok,
        format!(
            "{problems} problems: Laplace continuity {lap:.1e} (≤1e-11), time jump {jump:.1e} (≤1e-8), \
             Vieta {vieta:.1e} (≤1e-13), Re λ1 > 0 > Re λ2 for Re s > 0: {sign_ok}"
        ),
    )
}

fn conservation() -> Outcome {
    let layer = |x_left, x_right, r, d, theta, f| Layer {
        x_left,
        x_right,
        retardation: r,
        dispersion: d,
        velocity: 0.0,
        decay: 0.0,
        production: 0.0,
        water_content: theta,
        initial: f,
    };
    let p = Problem::new(
        vec![
            layer(0.0, 1.0, 1.5, 0.05, 0.3, 0.0),
            layer(1.0, 2.0, 1.0, 0.02, 0.45, 1.0),
        ],
        RobinBoundary::zero_gradient(),
        RobinBoundary::zero_gradient(),
    )
    .unwrap();
    let times = [0.5, 1.0, 2.0, 5.0, 10.0];

    let state = fvm_initial(&p, 201).unwrap();
    let m0 = discrete_mass(&p, &state.grid, &state.c);
    let fvm = fvm_solve(&p, 201, &times).unwrap();
    let fvm_drift = fvm
        .values
        .iter()
        .map(|row| ((discrete_mass(&p, &state.grid, row) - m0) / m0).abs())
        .fold(0.0, f64::max);

    // 500 trapezoid points per layer, 1000 in total.
    let per_layer = 500;
    let xs: Vec<f64> = p
        .layers
        .iter()
        .flat_map(|l| {
            (0..per_layer).map(move |k| l.x_left + l.width() * k as f64 / (per_layer - 1) as f64)
        })
        .collect();
    let exact: f64 = p
        .layers
        .iter()
        .map(|l| l.water_content * l.retardation * l.initial * l.width())
        .sum();
    let salt = solve_grid(&p, &quad(), &xs, &times).unwrap();
    let salt_drift = salt
        .values
        .iter()
        .map(|row| {
            let mass: f64 = p
                .layers
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    let c = &row[i * per_layer..(i + 1) * per_layer];
                    let h = l.width() / (per_layer - 1) as f64;
                    let integral = h * (c.iter().sum::<f64>() - 0.5 * (c[0] + c[per_layer - 1]));
                    l.water_content * l.retardation * integral
                })
                .sum();
            ((mass - exact) / exact).abs()
        })
        .fold(0.0, f64::max);
    check(
        fvm_drift <= 1e-6 && salt_drift <= 1e-4,
        format!(
            "FVM mass drift {fvm_drift:.1e} (≤1e-6), SALT trapezoid drift {salt_drift:.1e} (≤1e-4)"
        ),
    )
}

fn step_superposition() -> Outcome {
    let q = quad();
    let (pulse, constant) = (case_library(2).unwrap(), case_library(1).unwrap());
    let TransientSignal::HeavisideStep { t0, .. } = pulse.problem.inlet.signal else {
        return check(false, "case 2 inlet is not a step".into());
    };
    let early: Vec<f64> = pulse.t_values.iter().copied().filter(|&t| t < t0).collect();
    let a = solve_grid(&pulse.problem, &q, &pulse.x_values, &early).unwrap();
    let b = solve_grid(&constant.problem, &q, &pulse.x_values, &early).unwrap();
    let before = max_diff(&a, &b);

    let late = [1.0, 2.0, 4.0];
    let salt = solve_grid(&pulse.problem, &q, &pulse.x_values, &late).unwrap();
    let fvm = fvm_solve_at(&pulse.problem, DEFAULT_NODES, &pulse.x_values, &late).unwrap();
    let after = max_diff(&salt, &fvm);

    let tiny = solve_grid(&pulse.problem, &q, &pulse.x_values, &[1e-3]);
    let finite = tiny
        .as_ref()
        .is_ok_and(|g| g.values[0].iter().all(|v| v.is_finite()));
    check(
        before <= 1e-15 && after <= 2e-3 && finite,
        format!(
            "t < t0 vs case 1: {before:.1e} (≤1e-15), t ∈ {{1,2,4}} vs FVM: {after:.1e} (≤2e-3), finite at t = 1e-3: {finite}"
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden profile values, cases 5-7", golden_values),
        (
            "homogeneous split equivalence, cases 1-4",
            split_equivalence,
        ),
        ("steady-state limit, case 8", steady_limit),
        (
            "multilayer cross-checks, cases 9-13",
            multilayer_cross_checks,
        ),
        ("inversion transform-pair battery", inversion_battery),
        ("randomized continuity properties", continuity_properties),
        ("mass conservation", conservation),
        ("step superposition, case 2", step_superposition),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {} [{tag}] {name}: {}", k + 1, outcome.detail);
        failed += usize::from(!outcome.pass);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
