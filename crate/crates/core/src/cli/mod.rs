//! The `cga` command line. The binary only forwards to [`run`].

pub mod bench;
pub mod target;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{blade_name, Subspace};
use crate::model_io;
use crate::models;
use crate::optim::{gauss_newton_solve, MotorCost, Primitive, PrimitiveTargetCost, SolverConfig};
use crate::primitives::{Line, Point};
use crate::robot::Manipulator;
use crate::versors::{Motor, MotorGenerator};
use target::{parse_target, Target, TARGET_HELP};

/// Directories searched for `--model NAME`, separated like `PATH`.
pub const MODEL_PATH_ENV: &str = "CGA_MODEL_PATH";
pub const DEFAULT_MODEL: &str = "franka_emika";
/// `ik` exits 0 only when the final residual norm is below this.
pub const IK_RESIDUAL_TOLERANCE: f64 = 1e-6;
pub const EXIT_IK_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cga", version, about = "Kinematics, dynamics and IK on conformal geometric algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// End-effector pose.
    Fk(RobotArgs),
    /// Jacobian columns, one per actuated joint.
    Jacobian {
        #[command(flatten)]
        robot: RobotArgs,
        #[arg(long, value_enum, default_value_t = JacobianKind::Geometric)]
        kind: JacobianKind,
    },
    /// Joint torques from positions, velocities and accelerations.
    Rnea {
        #[command(flatten)]
        robot: RobotArgs,
        #[arg(long)]
        qd: Option<String>,
        #[arg(long)]
        qdd: Option<String>,
    },
    /// Joint accelerations from positions, velocities and torques.
    Aba {
        #[command(flatten)]
        robot: RobotArgs,
        #[arg(long)]
        qd: Option<String>,
        #[arg(long)]
        tau: Option<String>,
    },
    /// Solve for a pose or a primitive incidence. `--q` is the initial guess.
    Ik {
        #[command(flatten)]
        robot: RobotArgs,
        #[arg(long, help = TARGET_HELP)]
        target: String,
        /// Primitive carried by the end effector, for primitive targets.
        #[arg(long, value_enum, default_value_t = Tool::Point)]
        tool: Tool,
        #[arg(long, default_value_t = 100)]
        max_iterations: usize,
    },
    /// Time algebra and robot operations and write CSV.
    Bench {
        #[arg(long)]
        model: Option<String>,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 50)]
        repetitions: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert a URDF file to the YAML model format.
    ConvertUrdf {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct RobotArgs {
    /// Model file, a name found in CGA_MODEL_PATH, or a builtin name.
    #[arg(long)]
    pub model: Option<String>,
    /// Comma-separated joint values, `zero` or `random`.
    #[arg(long, default_value = "zero", allow_hyphen_values = true)]
    pub q: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum JacobianKind {
    Geometric,
    Analytic,
    Frame,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Tool {
    /// The end-effector origin.
    Point,
    /// The end-effector z axis.
    Line,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Algebra,
    Robot,
    All,
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

type CliResult<T> = Result<T, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Resolves `--model`: an existing file, then `NAME` or `NAME.yaml` in each
/// `CGA_MODEL_PATH` directory, then a builtin. Returns the document's name
/// with the manipulator.
pub fn resolve_model(model: Option<&str>) -> CliResult<(String, Manipulator)> {
    let model = model.unwrap_or(DEFAULT_MODEL);
    let load_file = |path: &Path| -> CliResult<(String, Manipulator)> {
        let in_file = |e: &dyn std::fmt::Display| format!("{}: {e}", path.display());
        let text = std::fs::read_to_string(path).map_err(|e| in_file(&e))?;
        let doc = if path.extension().is_some_and(|e| e == "urdf") {
            model_io::convert_urdf(&text)
        } else {
            model_io::parse(&text)
        }
        .map_err(|e| in_file(&e))?;
        let robot = model_io::load_manipulator(&doc, None).map_err(|e| in_file(&e))?;
        Ok((doc.name, robot))
    };
    let direct = Path::new(model);
    if direct.is_file() {
        return load_file(direct);
    }
    if let Some(dirs) = std::env::var_os(MODEL_PATH_ENV) {
        for dir in std::env::split_paths(&dirs) {
            for candidate in [dir.join(model), dir.join(format!("{model}.yaml"))] {
                if candidate.is_file() {
                    return load_file(&candidate);
                }
            }
        }
    }
    match models::builtin_document(model) {
        Some(doc) => {
            let robot = model_io::load_manipulator(&doc, None).map_err(err)?;
            Ok((doc.name, robot))
        }
        None => Err(format!(
            "model `{model}` is not a file, not in {MODEL_PATH_ENV}, and not a builtin ({})",
            models::BUILTIN_NAMES.join(", ")
        )),
    }
}

/// Parses a joint vector: `zero`, `random` (within limits, else [-pi, pi]) or
/// comma-separated numbers.
pub fn parse_joint_vector(
    text: &str,
    robot: &Manipulator,
    what: &str,
    rng: &mut ChaCha8Rng,
) -> CliResult<Vec<f64>> {
    let n = robot.dof();
    match text.trim() {
        "zero" | "" => return Ok(vec![0.0; n]),
        "random" => {
            let chain: Vec<_> = robot
                .chain()
                .actuated()
                .iter()
                .map(|&i| &robot.system().joints()[i])
                .collect();
            return Ok(chain
                .iter()
                .map(|j| match j.limits {
                    Some(l) => rng.gen_range(l.lower..=l.upper),
                    None => rng.gen_range(-std::f64::consts::PI..=std::f64::consts::PI),
                })
                .collect());
        }
        _ => {}
    }
    let v: Vec<f64> = text
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("--{what}: bad number `{}`", t.trim())))
        .collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(format!("--{what} has {} values but the model has {n} degrees of freedom", v.len()));
    }
    Ok(v)
}

fn motor_json(m: &Motor) -> Value {
    let h = m.to_homogeneous();
    let blades: Vec<String> = Motor::BLADES.iter().map(blade_name).collect();
    json!({
        "blades": blades,
        "coefficients": m.coeffs(),
        "matrix": (0..4).map(|r| (0..4).map(|c| h[(r, c)]).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "position": m.translation(),
    })
}

fn motor_text(m: &Motor, out: &mut String) {
    let _ = writeln!(out, "motor:");
    for (b, c) in Motor::BLADES.iter().zip(m.coeffs()) {
        let _ = writeln!(out, "  {:>8} {c:+.12}", blade_name(b));
    }
    let h = m.to_homogeneous();
    let _ = writeln!(out, "matrix:");
    for r in 0..4 {
        let _ = writeln!(out, "  {:+.9} {:+.9} {:+.9} {:+.9}", h[(r, 0)], h[(r, 1)], h[(r, 2)], h[(r, 3)]);
    }
    let p = m.translation();
    let _ = writeln!(out, "position: {:+.9} {:+.9} {:+.9}", p[0], p[1], p[2]);
}

fn vector_text(label: &str, v: &[f64]) -> String {
    let cells: Vec<String> = v.iter().map(|x| format!("{x:+.12}")).collect();
    format!("{label}: {}\n", cells.join(" "))
}

fn emit(text: String, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(value: &Value, out: Option<&Path>) -> CliResult<()> {
    emit(serde_json::to_string_pretty(value).map_err(err)? + "\n", out)
}

struct Session {
    name: String,
    robot: Manipulator,
    q: Vec<f64>,
    rng: ChaCha8Rng,
}

impl Session {
    fn open(args: &RobotArgs) -> CliResult<Self> {
        let (name, robot) = resolve_model(args.model.as_deref())?;
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let q = parse_joint_vector(&args.q, &robot, "q", &mut rng)?;
        Ok(Session { name, robot, q, rng })
    }

    fn vector(&mut self, text: &Option<String>, what: &str) -> CliResult<Vec<f64>> {
        parse_joint_vector(text.as_deref().unwrap_or("zero"), &self.robot, what, &mut self.rng)
    }
}

fn execute(cmd: &Command) -> CliResult<i32> {
    match cmd {
        Command::Fk(args) => {
            let s = Session::open(args)?;
            let m = s.robot.forward_kinematics(&s.q).map_err(err)?;
            if args.json {
                emit_json(&json!({"model": s.name, "q": s.q, "pose": motor_json(&m)}), args.out.as_deref())?;
            } else {
                let mut text = vector_text("q", &s.q);
                motor_text(&m, &mut text);
                emit(text, args.out.as_deref())?;
            }
        }
        Command::Jacobian { robot: args, kind } => {
            let s = Session::open(args)?;
            let columns: Vec<Vec<f64>> = match kind {
                JacobianKind::Geometric => twist_columns(s.robot.geometric_jacobian(&s.q)),
                JacobianKind::Frame => twist_columns(s.robot.frame_jacobian(&s.q)),
                JacobianKind::Analytic => s
                    .robot
                    .analytic_jacobian(&s.q)
                    .map(|cols| cols.iter().map(|m| m.coeffs().to_vec()).collect())
                    .map_err(err),
            }?;
            let rows: Vec<String> = match kind {
                JacobianKind::Analytic => Motor::BLADES.iter().map(blade_name).collect(),
                _ => ["wx", "wy", "wz", "vx", "vy", "vz"].map(String::from).to_vec(),
            };
            if args.json {
                let kind = format!("{kind:?}").to_lowercase();
                emit_json(
                    &json!({"model": s.name, "q": s.q, "kind": kind, "rows": rows, "columns": columns}),
                    args.out.as_deref(),
                )?;
            } else {
                let mut text = vector_text("q", &s.q);
                for (r, label) in rows.iter().enumerate() {
                    let cells: Vec<String> = columns.iter().map(|c| format!("{:+.9}", c[r])).collect();
                    let _ = writeln!(text, "{label:>8} {}", cells.join(" "));
                }
                emit(text, args.out.as_deref())?;
            }
        }
        Command::Rnea { robot: args, qd, qdd } => {
            let mut s = Session::open(args)?;
            let (qd, qdd) = (s.vector(qd, "qd")?, s.vector(qdd, "qdd")?);
            let tau = s.robot.inverse_dynamics(&s.q, &qd, &qdd).map_err(err)?;
            if args.json {
                emit_json(
                    &json!({"model": s.name, "q": s.q, "qd": qd, "qdd": qdd, "tau": tau}),
                    args.out.as_deref(),
                )?;
            } else {
                emit(vector_text("tau", &tau), args.out.as_deref())?;
            }
        }
        Command::Aba { robot: args, qd, tau } => {
            let mut s = Session::open(args)?;
            let (qd, tau) = (s.vector(qd, "qd")?, s.vector(tau, "tau")?);
            let qdd = s.robot.forward_dynamics(&s.q, &qd, &tau).map_err(err)?;
            if args.json {
                emit_json(
                    &json!({"model": s.name, "q": s.q, "qd": qd, "tau": tau, "qdd": qdd}),
                    args.out.as_deref(),
                )?;
            } else {
                emit(vector_text("qdd", &qdd), args.out.as_deref())?;
            }
        }
        Command::Ik { robot: args, target, tool, max_iterations } => return ik(args, target, *tool, *max_iterations),
        Command::Bench { model, suite, repetitions, seed, out } => {
            if *repetitions < 2 {
                return Err("--repetitions must be at least 2".into());
            }
            let mut rows = Vec::new();
            if matches!(suite, Suite::Algebra | Suite::All) {
                rows.extend(bench::algebra_suite(*repetitions, *seed));
            }
            if matches!(suite, Suite::Robot | Suite::All) {
                let (_, robot) = resolve_model(model.as_deref())?;
                rows.extend(bench::robot_suite(&robot, *repetitions, *seed));
            }
            let mut buf = Vec::new();
            bench::write_csv(&mut buf, *seed, &rows).map_err(err)?;
            emit(String::from_utf8(buf).map_err(err)?, out.as_deref())?;
        }
        Command::ConvertUrdf { input, out } => {
            let text = std::fs::read_to_string(input).map_err(|e| format!("{}: {e}", input.display()))?;
            let (doc, warnings) =
                model_io::convert_urdf_with_warnings(&text).map_err(|e| format!("{}: {e}", input.display()))?;
            for w in warnings {
                eprintln!("warning: {w}");
            }
            model_io::load_system(&doc).map_err(|e| format!("{}: {e}", input.display()))?;
            emit(model_io::emit(&doc), out.as_deref())?;
        }
    }
    Ok(0)
}

fn twist_columns(
    cols: Result<Vec<MotorGenerator>, crate::robot::RobotError>,
) -> CliResult<Vec<Vec<f64>>> {
    Ok(cols.map_err(err)?.iter().map(|t| t.to_array().to_vec()).collect())
}

fn ik(args: &RobotArgs, target: &str, tool: Tool, max_iterations: usize) -> CliResult<i32> {
    let s = Session::open(args)?;
    let goal = parse_target(target)?;
    let config = SolverConfig { max_iterations, ..SolverConfig::default() };
    let report = match &goal {
        Target::Pose(m) => gauss_newton_solve(&MotorCost::new(&s.robot, *m), &s.q, &config),
        Target::Primitive(p) => {
            let tool = match tool {
                Tool::Point => Primitive::Point(Point::origin()),
                Tool::Line => Primitive::Line(
                    Line::from_point_direction([0.0; 3], [0.0, 0.0, 1.0]).map_err(err)?,
                ),
            };
            let cost = PrimitiveTargetCost::new(&s.robot, tool, *p).map_err(err)?;
            gauss_newton_solve(&cost, &s.q, &config)
        }
    }
    .map_err(err)?;
    let residual = report.residual_norm();
    let success = report.converged && residual <= IK_RESIDUAL_TOLERANCE;
    let pose = s.robot.forward_kinematics(&report.q).map_err(err)?;
    if args.json {
        emit_json(
            &json!({
                "model": s.name,
                "target": target,
                "q0": s.q,
                "q": report.q,
                "converged": report.converged,
                "success": success,
                "termination": format!("{:?}", report.termination),
                "iterations": report.iterations,
                "residual_norm": residual,
                "pose": motor_json(&pose),
            }),
            args.out.as_deref(),
        )?;
    } else {
        let mut text = vector_text("q", &report.q);
        let _ = writeln!(
            text,
            "termination: {:?} after {} iterations, residual {residual:.3e}",
            report.termination, report.iterations
        );
        motor_text(&pose, &mut text);
        emit(text, args.out.as_deref())?;
    }
    if !success {
        eprintln!("ik did not reach the target (residual {residual:.3e})");
        return Ok(EXIT_IK_FAILED);
    }
    Ok(0)
}
