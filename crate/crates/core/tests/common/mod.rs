#![allow(dead_code)]

use layered_transport::model::{Layer, Problem, RobinBoundary, TransientSignal};
use num_complex::Complex64;
use rand::Rng;

/// Random well-posed stack with moderate Peclet numbers.
pub fn random_problem<R: Rng>(rng: &mut R, m: usize) -> Problem {
    let mut x = 0.0;
    let layers = (0..m)
        .map(|_| {
            let width = rng.random_range(0.5..4.0);
            let layer = Layer {
                x_left: x,
                x_right: x + width,
                retardation: rng.random_range(1.0..3.0),
                dispersion: rng.random_range(0.2..5.0),
                velocity: rng.random_range(0.0..2.0),
                decay: rng.random_range(0.0..0.5),
                production: rng.random_range(0.0..0.5),
                water_content: rng.random_range(0.1..0.5),
                initial: rng.random_range(0.0..1.0),
            };
            x += width;
            layer
        })
        .collect::<Vec<_>>();
    let c0 = TransientSignal::Constant { c0: 1.0 };
    let inlet = match rng.random_range(0..3) {
        0 => RobinBoundary::concentration(c0),
        1 => RobinBoundary::flux(layers[0].velocity.max(0.1), layers[0].dispersion, c0),
        _ => RobinBoundary::new(rng.random_range(0.5..2.0), rng.random_range(0.5..2.0), c0),
    };
    let outlet = match rng.random_range(0..2) {
        0 => RobinBoundary::zero_gradient(),
        _ => RobinBoundary::concentration(TransientSignal::Zero),
    };
    Problem::new(layers, inlet, outlet).expect("generated problem is valid")
}

pub fn rel_diff(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}
