mod common;

use common::{random_problem, rel_diff};
use layered_transport::laplace::{lambda_roots, LaplaceSolution};
use layered_transport::{cf_quadrature, solve_grid, Problem};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn problem_strategy() -> impl Strategy<Value = (Problem, ChaCha8Rng)> {
    (any::<u64>(), 2usize..=8).prop_map(|(seed, m)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (random_problem(&mut rng, m), rng)
    })
}

/// Laplace variables actually visited by the N=14 inversion at `t`.
fn inversion_points(t: f64) -> Vec<Complex64> {
    cf_quadrature(14).unwrap().sample_points(t).collect()
}

/// One-sided second-order derivative of `f` at `x`, stepping in direction `dir`.
fn one_sided(f: impl Fn(f64) -> Complex64, x: f64, delta: f64, dir: f64) -> Complex64 {
    let h = dir * delta;
    (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn concentration_is_continuous_at_interfaces((p, mut rng) in problem_strategy()) {
        let t = rng.random_range(0.1..10.0);
        for s in inversion_points(t) {
            let sol = LaplaceSolution::new(&p, s).unwrap();
            for (i, l) in p.interfaces().into_iter().enumerate() {
                let (left, right) = (sol.eval_in_layer(i, l), sol.eval_in_layer(i + 1, l));
                prop_assert!(rel_diff(left, right) <= 1e-11, "layer {i}: {left} vs {right}");
            }
        }
    }

    #[test]
    fn dispersive_flux_is_continuous_at_interfaces((p, mut rng) in problem_strategy()) {
        let t = rng.random_range(0.5..10.0);
        let s = inversion_points(t)[0];
        let sol = LaplaceSolution::new(&p, s).unwrap();
        for (i, l) in p.interfaces().into_iter().enumerate() {
            let (a, b) = (&p.layers[i], &p.layers[i + 1]);
            let delta = 1e-4 * a.width().min(b.width());
            let left = a.water_content * a.dispersion * one_sided(|x| sol.eval_in_layer(i, x), l, delta, -1.0);
            let right = b.water_content * b.dispersion * one_sided(|x| sol.eval_in_layer(i + 1, x), l, delta, 1.0);
            let scale = left.norm().max(right.norm()).max(sol.eval_in_layer(i, l).norm());
            prop_assert!((left - right).norm() <= 1e-5 * scale, "interface {i}: {left} vs {right}");
        }
    }

    #[test]
    fn boundary_conditions_hold_in_laplace_domain((p, mut rng) in problem_strategy()) {
        let s = inversion_points(rng.random_range(0.5..10.0))[1];
        let sol = LaplaceSolution::new(&p, s).unwrap();
        let m = p.num_layers();
        let length = p.length();
        let delta = 1e-4 * p.layers[0].width().min(p.layers[m - 1].width());
        let f = |x: f64| sol.eval(x);
        let inlet = p.inlet.a * f(0.0) - p.inlet.b * one_sided(f, 0.0, delta, 1.0);
        let outlet = p.outlet.a * f(length) + p.outlet.b * one_sided(f, length, delta, -1.0);
        let g0 = p.inlet.signal.laplace(s).unwrap();
        let gl = p.outlet.signal.laplace(s).unwrap();
        let scale = f(0.0).norm().max(g0.norm()).max(1.0 / s.norm());
        prop_assert!((inlet - g0).norm() <= 1e-5 * scale, "inlet {inlet} vs {g0}");
        prop_assert!((outlet - gl).norm() <= 1e-5 * scale, "outlet {outlet} vs {gl}");
    }

    #[test]
    fn splitting_a_layer_changes_nothing((p, mut rng) in problem_strategy()) {
        let idx = rng.random_range(0..p.num_layers());
        let layer = p.layers[idx];
        let cut = layer.x_left + layer.width() * rng.random_range(0.2..0.8);
        let split = p.split_layer(idx, cut).unwrap();
        let xs: Vec<f64> = (0..=8).map(|k| p.length() * k as f64 / 8.0).collect();
        let ts = [rng.random_range(0.1..1.0), rng.random_range(1.0..10.0)];
        let q = cf_quadrature(14).unwrap();
        let a = solve_grid(&p, &q, &xs, &ts).unwrap();
        let b = solve_grid(&split, &q, &xs, &ts).unwrap();
        for d in a.max_abs_diff_per_time(&b).unwrap() {
            prop_assert!(d <= 1e-9, "split changed the solution by {d}");
        }
    }

    #[test]
    fn roots_obey_vieta_and_sign_pattern((p, mut rng) in problem_strategy(), re in 1e-3f64..50.0, im in -50.0f64..50.0) {
        let layer = p.layers[rng.random_range(0..p.num_layers())];
        for s in [Complex64::new(re, im), inversion_points(rng.random_range(0.1..10.0))[2]] {
            let (l1, l2) = lambda_roots(&layer, s).unwrap();
            let (d, v) = (layer.dispersion, layer.velocity);
            let scale = l1.norm().max(l2.norm());
            prop_assert!((l1 + l2 - v / d).norm() <= 1e-13 * scale);
            let prod = -(layer.retardation * s + layer.decay) / d;
            prop_assert!(rel_diff(l1 * l2, prod) <= 1e-13);
            if s.re > 0.0 {
                prop_assert!(l1.re > 0.0 && l2.re < 0.0, "{l1} {l2} at {s}");
            }
        }
    }
}
