use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Subspace;
use crate::primitives::{DualSphere, Point};
use crate::robot::Manipulator;
use crate::versors::{Motor, Versor};

pub const ALGEBRA_OPERATIONS: [&str; 9] = [
    "addition",
    "subtraction",
    "outer_product",
    "inner_product",
    "geometric_product",
    "reverse",
    "dual",
    "inverse",
    "sandwich",
];

pub const ROBOT_OPERATIONS: [&str; 4] =
    ["forward_kinematics", "geometric_jacobian", "inverse_dynamics", "forward_dynamics"];

pub const CSV_HEADER: [&str; 6] = ["suite", "operation", "n_samples", "mean_ns", "stddev_ns", "min_ns"];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub suite: String,
    pub operation: String,
    pub n_samples: usize,
    pub mean_ns: f64,
    pub stddev_ns: f64,
    pub min_ns: f64,
}

/// Times `f` over `samples` batches of `batch` calls and summarizes the
/// per-call time of each batch.
fn measure(suite: &str, operation: &str, samples: usize, batch: usize, mut f: impl FnMut()) -> BenchRow {
    for _ in 0..batch {
        f();
    }
    let times: Vec<f64> = (0..samples)
        .map(|_| {
            let start = Instant::now();
            for _ in 0..batch {
                f();
            }
            start.elapsed().as_nanos() as f64 / batch as f64
        })
        .collect();
    let n = times.len() as f64;
    let mean = times.iter().sum::<f64>() / n;
    let var = times.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / (n - 1.0).max(1.0);
    BenchRow {
        suite: suite.into(),
        operation: operation.into(),
        n_samples: samples,
        mean_ns: mean,
        stddev_ns: var.sqrt(),
        min_ns: times.iter().copied().fold(f64::INFINITY, f64::min),
    }
}

fn random_point(rng: &mut ChaCha8Rng) -> Point {
    Point::from_euclidean([0.0; 3].map(|_| rng.gen_range(-1.0..1.0)))
}

fn random_motor(rng: &mut ChaCha8Rng) -> Motor {
    let v = [0.0; 6].map(|_| rng.gen_range(-1.0..1.0));
    Motor::from_xyz_rpy([v[0], v[1], v[2]], [v[3], v[4], v[5]])
}

/// Products and unary operations of the algebra on primitive operands.
pub fn algebra_suite(samples: usize, seed: u64) -> Vec<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (p, q) = (random_point(&mut rng), random_point(&mut rng));
    let sphere = DualSphere::new([0.0; 3].map(|_| rng.gen_range(-1.0..1.0)), 0.5).expect("positive radius");
    let (m1, m2) = (random_motor(&mut rng), random_motor(&mut rng));
    let (pm, qm) = (p.to_multivector(), q.to_multivector());
    let sm = sphere.to_multivector();
    let (mm1, mm2) = (m1.to_multivector(), m2.to_multivector());
    let batch = 1000;
    let s = "algebra";
    vec![
        measure(s, "addition", samples, batch, || {
            black_box(black_box(&pm) + black_box(&qm));
        }),
        measure(s, "subtraction", samples, batch, || {
            black_box(black_box(&pm) - black_box(&qm));
        }),
        measure(s, "outer_product", samples, batch, || {
            black_box(black_box(&pm) ^ black_box(&qm));
        }),
        measure(s, "inner_product", samples, batch, || {
            black_box(black_box(&pm) | black_box(&sm));
        }),
        measure(s, "geometric_product", samples, batch, || {
            black_box(black_box(&mm1) * black_box(&mm2));
        }),
        measure(s, "reverse", samples, batch, || {
            black_box(black_box(&mm1).reverse());
        }),
        measure(s, "dual", samples, batch, || {
            black_box(black_box(&sm).dual());
        }),
        measure(s, "inverse", samples, batch, || {
            let _ = black_box(black_box(&mm1).inverse());
        }),
        measure(s, "sandwich", samples, batch, || {
            black_box(black_box(&m1).apply(black_box(&p)));
        }),
    ]
}

/// Kinematics and dynamics of `robot` at a random configuration.
pub fn robot_suite(robot: &Manipulator, samples: usize, seed: u64) -> Vec<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = robot.dof();
    let mut draw = || (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect::<Vec<f64>>();
    let (q, qd, qdd, tau) = (draw(), draw(), draw(), draw());
    let batch = 100;
    let s = "robot";
    vec![
        measure(s, "forward_kinematics", samples, batch, || {
            black_box(robot.forward_kinematics(black_box(&q)).expect("dof matches"));
        }),
        measure(s, "geometric_jacobian", samples, batch, || {
            black_box(robot.geometric_jacobian(black_box(&q)).expect("dof matches"));
        }),
        measure(s, "inverse_dynamics", samples, batch, || {
            black_box(robot.inverse_dynamics(black_box(&q), &qd, &qdd).expect("dof matches"));
        }),
        measure(s, "forward_dynamics", samples, batch, || {
            black_box(robot.forward_dynamics(black_box(&q), &qd, &tau).expect("model has mass"));
        }),
    ]
}

/// Writes `# seed: N` followed by the CSV table.
pub fn write_csv<W: Write>(out: W, seed: u64, rows: &[BenchRow]) -> Result<(), csv::Error> {
    let mut out = out;
    writeln!(out, "# seed: {seed}")?;
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
