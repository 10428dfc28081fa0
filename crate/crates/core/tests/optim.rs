mod common;

use cga_robotics::algebra::Subspace;
use cga_robotics::models;
use cga_robotics::optim::{gauss_newton_solve, Cost, MotorCost, Primitive, PrimitiveTargetCost, SolverConfig};
use cga_robotics::primitives::{Circle, DualPlane, DualSphere, Line, Point, PointPair};
use cga_robotics::robot::{Joint, Link, Manipulator, SystemBuilder};
use cga_robotics::versors::Motor;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_q(rng: &mut ChaCha8Rng, m: &Manipulator) -> Vec<f64> {
    m.system()
        .joints()
        .iter()
        .filter(|j| m.joint_names().contains(&j.name.as_str()))
        .map(|j| match j.limits {
            Some(l) => rng.gen_range(l.lower..l.upper),
            None => rng.gen_range(-3.0..3.0),
        })
        .collect()
}

/// The arm's usual home configuration.
fn home() -> Vec<f64> {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
    vec![0.0, -FRAC_PI_4, 0.0, -3.0 * FRAC_PI_4, 0.0, FRAC_PI_2, FRAC_PI_4]
}

fn planar_2r() -> Manipulator {
    let mut b = SystemBuilder::new();
    b.add_link(Link::massless("base"))
        .add_link(Link::massless("l1"))
        .add_link(Link::massless("l2"))
        .add_link(Link::massless("tool"))
        .add_joint(Joint::revolute("j1", "base", "l1", Motor::identity(), [0.0, 0.0, 1.0]))
        .add_joint(Joint::revolute("j2", "l1", "l2", Motor::from_xyz_rpy([1.0, 0.0, 0.0], [0.0; 3]), [0.0, 0.0, 1.0]))
        .add_joint(Joint::fixed("ee", "l2", "tool", Motor::from_xyz_rpy([1.0, 0.0, 0.0], [0.0; 3])));
    Manipulator::new(b.finalize().unwrap(), "ee").unwrap()
}

/// Central-difference gradient of the cost value.
fn fd_gradient(cost: &dyn Cost, q: &[f64]) -> Vec<f64> {
    let h = 1e-6;
    (0..q.len())
        .map(|i| {
            let (mut qp, mut qm) = (q.to_vec(), q.to_vec());
            qp[i] += h;
            qm[i] -= h;
            (cost.value(&qp).unwrap() - cost.value(&qm).unwrap()) / (2.0 * h)
        })
        .collect()
}

fn max_gradient_error(cost: &dyn Cost, q: &[f64]) -> f64 {
    let g = cost.gradient(q).unwrap();
    g.iter().zip(fd_gradient(cost, q)).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}

/// One target of each supported kind around the Franka workspace, with the
/// tool it is paired with.
fn table_pairs() -> Vec<(&'static str, Primitive, Primitive)> {
    let pt = |x: [f64; 3]| Point::from_euclidean(x);
    let tool_point = Primitive::Point(Point::origin());
    let tool_line = Primitive::Line(Line::from_point_direction([0.0; 3], [0.0, 0.0, 1.0]).unwrap());
    vec![
        ("point-point", tool_point, Primitive::Point(pt([0.4, 0.2, 0.5]))),
        ("point-line", tool_point, Primitive::Line(Line::from_point_direction([0.4, 0.0, 0.4], [0.0, 1.0, 0.0]).unwrap())),
        (
            "point-pointpair",
            tool_point,
            Primitive::PointPair(PointPair::from_points(&pt([0.4, -0.2, 0.5]), &pt([0.4, 0.2, 0.5])).unwrap()),
        ),
        (
            "point-circle",
            tool_point,
            Primitive::Circle(Circle::from_points(&pt([0.5, 0.0, 0.4]), &pt([0.4, 0.1, 0.4]), &pt([0.3, 0.0, 0.4])).unwrap()),
        ),
        ("point-plane", tool_point, Primitive::Plane(DualPlane::new([0.0, 0.0, 1.0], 0.3).unwrap().dual())),
        ("point-sphere", tool_point, Primitive::Sphere(DualSphere::new([0.3, 0.0, 0.5], 0.2).unwrap().dual())),
        ("line-point", tool_line, Primitive::Point(pt([0.4, 0.1, 0.3]))),
        ("line-line", tool_line, Primitive::Line(Line::from_point_direction([0.5, 0.0, 0.0], [0.0, 0.0, -1.0]).unwrap())),
    ]
}

#[test]
fn motor_cost_gradient_matches_finite_differences() {
    let m = models::franka_emika();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..100 {
        let target = m.forward_kinematics(&random_q(&mut rng, &m)).unwrap();
        let cost = MotorCost::new(&m, target);
        let q = random_q(&mut rng, &m);
        assert!(max_gradient_error(&cost, &q) < 1e-5);
    }
}

#[test]
fn primitive_cost_gradients_match_finite_differences() {
    let m = models::franka_emika();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for (name, tool, target) in table_pairs() {
        let cost = PrimitiveTargetCost::new(&m, tool, target).unwrap();
        for _ in 0..100 {
            let q = random_q(&mut rng, &m);
            let err = max_gradient_error(&cost, &q);
            assert!(err < 1e-5, "{name}: {err}");
        }
    }
}

#[test]
fn motor_cost_vanishes_at_target_and_is_invariant() {
    let m = models::franka_emika();
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let q = random_q(&mut rng, &m);
    let target = m.forward_kinematics(&q).unwrap();
    let cost = MotorCost::new(&m, target);
    assert!(cost.value(&q).unwrap() < 1e-24);
    assert!(cost.residual(&q).unwrap().norm() < 1e-12);

    let g = Motor::from_xyz_rpy([0.3, -1.0, 0.2], [0.4, -0.2, 2.0]);
    let moved = m.clone().with_base_motor(g * m.system().base_motor());
    let other = MotorCost::new(&moved, g * target);
    for _ in 0..10 {
        let q = random_q(&mut rng, &m);
        assert!((cost.value(&q).unwrap() - other.value(&q).unwrap()).abs() < 1e-10);
    }
}

#[test]
fn point_cost_is_invariant_under_rigid_motion() {
    let m = models::franka_emika();
    let g = Motor::from_xyz_rpy([0.3, -1.0, 0.2], [0.4, -0.2, 2.0]);
    let target = Point::new(0.4, 0.2, 0.5);
    let moved = m.clone().with_base_motor(g * m.system().base_motor());
    let a = PrimitiveTargetCost::new(&m, Primitive::Point(Point::origin()), Primitive::Point(target)).unwrap();
    let moved_target = cga_robotics::versors::Versor::apply(&g, &target);
    let b = PrimitiveTargetCost::new(&moved, Primitive::Point(Point::origin()), Primitive::Point(moved_target)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let q = random_q(&mut rng, &m);
        assert!((a.value(&q).unwrap() - b.value(&q).unwrap()).abs() < 1e-10);
    }
}

#[test]
fn point_cost_encodes_half_squared_distance() {
    let m = planar_2r();
    let target = Point::new(0.5, 0.5, 0.0);
    let cost = PrimitiveTargetCost::new(&m, Primitive::Point(Point::origin()), Primitive::Point(target)).unwrap();
    let q = [0.3, 0.4];
    let x = m.forward_kinematics(&q).unwrap().translation();
    let p = Point::from_euclidean(x);
    let d2 = p.distance_squared(&target);
    assert!(((-(p.to_multivector() | target.to_multivector()).scalar_part()) - 0.5 * d2).abs() < 1e-12);
    assert!(cost.value(&q).unwrap() > 0.0);
}

#[test]
fn planar_arm_reaches_point() {
    let m = planar_2r();
    let target = Point::new(1.0, 1.0, 0.0);
    let cost = PrimitiveTargetCost::new(&m, Primitive::Point(Point::origin()), Primitive::Point(target)).unwrap();
    let report = gauss_newton_solve(&cost, &[0.3, 0.5], &SolverConfig::default()).unwrap();
    assert!(report.converged);
    let x = m.forward_kinematics(&report.q).unwrap().translation();
    assert!((x[0] - 1.0).abs() < 1e-8 && (x[1] - 1.0).abs() < 1e-8);
    // one of the two elbow branches
    let elbow = report.q[1].rem_euclid(std::f64::consts::TAU);
    let half_pi = std::f64::consts::FRAC_PI_2;
    assert!((elbow - half_pi).abs() < 1e-6 || (elbow - 3.0 * half_pi).abs() < 1e-6);
}

#[test]
fn planar_arm_reaches_unit_sphere() {
    let m = planar_2r();
    let sphere = DualSphere::new([0.0; 3], 1.0).unwrap().dual();
    let cost = PrimitiveTargetCost::new(&m, Primitive::Point(Point::origin()), Primitive::Sphere(sphere)).unwrap();
    let report = gauss_newton_solve(&cost, &[0.1, 0.2], &SolverConfig::default()).unwrap();
    let x = m.forward_kinematics(&report.q).unwrap().translation();
    assert!(((x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt() - 1.0).abs() < 1e-6);
}

#[test]
fn already_optimal_start() {
    let m = models::franka_emika();
    let q = vec![0.1, -0.3, 0.2, -1.5, 0.1, 1.4, 0.3];
    let cost = MotorCost::new(&m, m.forward_kinematics(&q).unwrap());
    let report = gauss_newton_solve(&cost, &q, &SolverConfig::default()).unwrap();
    assert!(report.converged && report.iterations <= 1 && report.final_cost < 1e-12);
}

#[test]
fn reachable_motor_targets() {
    let m = models::franka_emika();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let q0 = home();
    let mut ok = 0;
    for _ in 0..100 {
        let target = m.forward_kinematics(&random_q(&mut rng, &m)).unwrap();
        let cost = MotorCost::new(&m, target);
        let report = gauss_newton_solve(&cost, &q0, &SolverConfig::default()).unwrap();
        assert!(report.iterations <= 100);
        if report.residual_norm() < 1e-6 {
            ok += 1;
        }
    }
    println!("{ok}/100 reachable targets solved");
    assert!(ok >= 95, "{ok}/100");
}

#[test]
fn every_pair_reaches_incidence() {
    let m = models::franka_emika();
    let q0 = home();
    for (name, tool, target) in table_pairs() {
        let cost = PrimitiveTargetCost::new(&m, tool, target).unwrap();
        let report = gauss_newton_solve(&cost, &q0, &SolverConfig::default()).unwrap();
        assert!(report.residual_norm() < 1e-6, "{name}: {report:?}");
        for w in report.residual_history.windows(2) {
            assert!(w[1] <= w[0], "{name}: cost increased");
        }
    }
}

#[test]
fn point_on_plane_incidence() {
    let m = models::franka_emika();
    let plane = DualPlane::new([0.0, 0.0, 1.0], 0.3).unwrap();
    let cost = PrimitiveTargetCost::new(&m, Primitive::Point(Point::origin()), Primitive::Plane(plane.dual())).unwrap();
    let report = gauss_newton_solve(&cost, &home(), &SolverConfig::default()).unwrap();
    let x = m.forward_kinematics(&report.q).unwrap().translation();
    assert!(plane.incidence(&Point::from_euclidean(x)).abs() < 1e-6);
}

#[test]
fn unsupported_pairs_are_rejected() {
    let m = planar_2r();
    let line = Primitive::Line(Line::from_point_direction([0.0; 3], [1.0, 0.0, 0.0]).unwrap());
    let plane = Primitive::Plane(DualPlane::new([0.0, 0.0, 1.0], 0.0).unwrap().dual());
    assert!(PrimitiveTargetCost::new(&m, line, plane).is_err());
    let zero = Primitive::Point(Point::from_coeffs(&[0.0; 5]));
    assert!(PrimitiveTargetCost::new(&m, zero, plane).is_err());
}

