use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nalgebra::{Matrix3, Rotation3};
use serde_json::Value;

const GOLDEN_TOLERANCE: f64 = 1e-12;

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn cga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cga"))
        .args(args)
        .env_remove("CGA_MODEL_PATH")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = cga(&all);
    assert!(out.status.success(), "{:?} failed: {}", args, stderr(&out));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn model(name: &str) -> String {
    manifest_dir().join("models").join(name).to_string_lossy().into_owned()
}

/// Same keys, same strings, numbers within tolerance.
fn assert_close(path: &str, got: &Value, want: &Value) {
    match (got, want) {
        (Value::Number(a), Value::Number(b)) => {
            let (a, b) = (a.as_f64().unwrap(), b.as_f64().unwrap());
            assert!((a - b).abs() <= GOLDEN_TOLERANCE, "{path}: {a} vs {b}");
        }
        (Value::Array(a), Value::Array(b)) => {
            assert_eq!(a.len(), b.len(), "{path}: length");
            for (i, (x, y)) in a.iter().zip(b).enumerate() {
                assert_close(&format!("{path}[{i}]"), x, y);
            }
        }
        (Value::Object(a), Value::Object(b)) => {
            let keys = |o: &serde_json::Map<String, Value>| o.keys().cloned().collect::<Vec<_>>();
            assert_eq!(keys(a), keys(b), "{path}: keys");
            for (k, v) in a {
                assert_close(&format!("{path}.{k}"), v, &b[k]);
            }
        }
        _ => assert_eq!(got, want, "{path}"),
    }
}

/// Compares against `tests/golden/<name>.json`; `CGA_UPDATE_GOLDEN=1`
/// rewrites the file instead.
fn golden(name: &str, args: &[&str]) {
    let got = json(args);
    let path = manifest_dir().join("tests/golden").join(format!("{name}.json"));
    if std::env::var_os("CGA_UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, serde_json::to_string_pretty(&got).unwrap() + "\n").unwrap();
        return;
    }
    let want: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_close(name, &got, &want);
}

const FRANKA_HOME: &str = "0,-0.785398163397,0,-2.356194490192,0,1.570796326795,0.785398163397";

#[test]
fn golden_outputs() {
    golden("fk_franka_zero", &["fk"]);
    golden("fk_ur5", &["fk", "--model", "ur5", "--q", "0.1,-0.5,0.9,0.2,-1.1,0.4"]);
    golden("jacobian_geometric_franka", &["jacobian", "--q", FRANKA_HOME]);
    golden("jacobian_analytic_two_link", &["jacobian", "--model", &model("two_link.yaml"), "--kind", "analytic", "--q", "0.3,-0.8"]);
    golden("jacobian_frame_ur5", &["jacobian", "--model", "ur5", "--kind", "frame", "--q", "random", "--seed", "4"]);
    golden("rnea_franka", &["rnea", "--q", FRANKA_HOME, "--qd", "0.1,0.2,0.3,0.4,0.5,0.6,0.7", "--qdd", "1,0,-1,0,1,0,-1"]);
    golden("aba_franka", &["aba", "--q", FRANKA_HOME, "--qd", "0.1,0.2,0.3,0.4,0.5,0.6,0.7", "--tau", "1,2,3,4,5,6,7"]);
    golden("ik_pose_franka", &["ik", "--q", FRANKA_HOME, "--target", "pose:0.4,0.1,0.5,3.14159,0,0"]);
}

#[test]
fn franka_zero_pose_is_frozen() {
    let v = json(&["fk"]);
    let m = &v["pose"]["matrix"];
    let frozen = [[1.0, 0.0, 0.0, 0.088], [0.0, -1.0, 0.0, 0.0], [0.0, 0.0, -1.0, 0.926], [0.0, 0.0, 0.0, 1.0]];
    for r in 0..4 {
        for c in 0..4 {
            assert!((m[r][c].as_f64().unwrap() - frozen[r][c]).abs() < 1e-12);
        }
    }
}

fn floats(v: &Value) -> Vec<f64> {
    v.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

#[test]
fn json_matches_text() {
    let args = ["fk", "--model", "ur5", "--q", "random", "--seed", "11"];
    let v = json(&args);
    let text = stdout(&cga(&args));
    let line = |label: &str| -> Vec<f64> {
        let l = text.lines().find(|l| l.starts_with(label)).unwrap();
        l[label.len()..].split_whitespace().map(|x| x.parse().unwrap()).collect()
    };
    let close = |a: &[f64], b: &[f64], tol: f64| a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol);
    assert!(close(&line("q:"), &floats(&v["q"]), 1e-11));
    assert!(close(&line("position:"), &floats(&v["pose"]["position"]), 1e-8));
    let coeffs = floats(&v["pose"]["coefficients"]);
    for (blade, c) in v["pose"]["blades"].as_array().unwrap().iter().zip(&coeffs) {
        let row = text.lines().find(|l| l.split_whitespace().next() == blade.as_str()).unwrap();
        let t: f64 = row.split_whitespace().nth(1).unwrap().parse().unwrap();
        assert!((t - c).abs() < 1e-11);
    }

    let tau = json(&["rnea", "--q", FRANKA_HOME]);
    let text = stdout(&cga(&["rnea", "--q", FRANKA_HOME]));
    let row: Vec<f64> = text["tau:".len()..].split_whitespace().map(|x| x.parse().unwrap()).collect();
    assert!(close(&row, &floats(&tau["tau"]), 1e-11));
}

#[test]
fn seeded_random_inputs_are_deterministic() {
    let a = stdout(&cga(&["fk", "--q", "random", "--seed", "9", "--json"]));
    let b = stdout(&cga(&["fk", "--q", "random", "--seed", "9", "--json"]));
    let c = stdout(&cga(&["fk", "--q", "random", "--seed", "10", "--json"]));
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn wrong_length_names_the_dof() {
    let out = cga(&["fk", "--q", "0.1,0.2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("7 degrees of freedom"), "{}", stderr(&out));
    let out = cga(&["rnea", "--model", "ur5", "--qd", "1,2,3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("6 degrees of freedom"));
}

#[test]
fn usage_and_model_errors_exit_one() {
    assert_eq!(cga(&["fk", "--model", "no_such_robot"]).status.code(), Some(1));
    assert_eq!(cga(&["teleport"]).status.code(), Some(1));
    assert_eq!(cga(&["ik", "--target", "cone:1,2"]).status.code(), Some(1));
    assert_eq!(cga(&["fk", "--q", "a,b,c,d,e,f,g"]).status.code(), Some(1));
}

fn rpy(m: &Value) -> [f64; 3] {
    let r = Matrix3::from_fn(|i, j| m[i][j].as_f64().unwrap());
    let (roll, pitch, yaw) = Rotation3::from_matrix_unchecked(r).euler_angles();
    [roll, pitch, yaw]
}

#[test]
fn ik_reaches_self_generated_pose() {
    let pose = json(&["fk", "--q", "0.3,-0.4,0.2,-2.0,0.1,1.8,0.5"]);
    let p = floats(&pose["pose"]["position"]);
    let a = rpy(&pose["pose"]["matrix"]);
    let target = format!("pose:{},{},{},{},{},{}", p[0], p[1], p[2], a[0], a[1], a[2]);
    let out = cga(&["ik", "--q", FRANKA_HOME, "--target", &target, "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["residual_norm"].as_f64().unwrap() < 1e-6);
    assert_eq!(v["success"], Value::Bool(true));
}

#[test]
fn ik_unreachable_point_exits_two() {
    let out = cga(&["ik", "--q", FRANKA_HOME, "--target", "point:5,0,0", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["success"], Value::Bool(false));
    assert!(v["residual_norm"].as_f64().unwrap() > 1.0);
}

#[test]
fn ik_point_on_plane() {
    let (n, d) = ([0.0, 0.6, 0.8], 0.35);
    let target = format!("plane:{},{},{},{d}", n[0], n[1], n[2]);
    let v = json(&["ik", "--q", FRANKA_HOME, "--target", &target]);
    let p = floats(&v["pose"]["position"]);
    let incidence = n[0] * p[0] + n[1] * p[1] + n[2] * p[2] - d;
    assert!(incidence.abs() < 1e-6, "{incidence}");
}

#[test]
fn ik_primitive_targets() {
    for (target, tool) in [
        ("line:0.3,0,0.4,0,1,0", "point"),
        ("sphere:0.4,0,0.5,0.1", "point"),
        ("circle:0.4,0,0.5,0,0,1,0.1", "point"),
        ("line:0.4,0,0.3,0,0,1", "line"),
        ("point:0.4,0.0,0.4", "line"),
    ] {
        let out = cga(&["ik", "--q", FRANKA_HOME, "--target", target, "--tool", tool]);
        assert_eq!(out.status.code(), Some(0), "{target}: {}", stderr(&out));
    }
}

fn bench_rows(args: &[&str]) -> (String, Vec<csv::StringRecord>) {
    let out = cga(args);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let first = text.lines().next().unwrap().to_string();
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, cga_robotics::cli::bench::CSV_HEADER);
    (first, reader.records().map(Result::unwrap).collect())
}

#[test]
fn bench_csv_schema() {
    let (seed_line, rows) = bench_rows(&["bench", "--repetitions", "3", "--seed", "42"]);
    assert_eq!(seed_line, "# seed: 42");
    let ops: Vec<(&str, &str)> = rows.iter().map(|r| (r.get(0).unwrap(), r.get(1).unwrap())).collect();
    let algebra: Vec<&str> = ops.iter().filter(|o| o.0 == "algebra").map(|o| o.1).collect();
    let robot: Vec<&str> = ops.iter().filter(|o| o.0 == "robot").map(|o| o.1).collect();
    assert_eq!(algebra, cga_robotics::cli::bench::ALGEBRA_OPERATIONS);
    assert_eq!(robot, cga_robotics::cli::bench::ROBOT_OPERATIONS);
    for r in &rows {
        assert_eq!(r.get(2), Some("3"));
        let nums: Vec<f64> = (3..6).map(|i| r.get(i).unwrap().parse().unwrap()).collect();
        assert!(nums.iter().all(|x| x.is_finite() && *x >= 0.0));
        assert!(nums[2] <= nums[0] + 1e-9);
    }

    let (_, rows) = bench_rows(&["bench", "--suite", "robot", "--repetitions", "2"]);
    assert_eq!(rows.len(), 4);
}

#[test]
fn bench_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bench.csv");
    let out = cga(&["bench", "--suite", "algebra", "--repetitions", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 2 + 9);
    let bad = dir.path().join("missing/dir/bench.csv");
    assert_eq!(cga(&["bench", "--suite", "algebra", "--repetitions", "2", "--out", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
#[ignore = "timing comparison; run on an idle machine"]
fn bench_repeat_is_stable() {
    let args = ["bench", "--suite", "robot", "--repetitions", "200"];
    let (_, a) = bench_rows(&args);
    let (_, b) = bench_rows(&args);
    for (x, y) in a.iter().zip(&b) {
        let f = |r: &csv::StringRecord, i: usize| r.get(i).unwrap().parse::<f64>().unwrap();
        assert!((f(y, 3) - f(x, 3)).abs() <= 3.0 * f(x, 4), "{}", x.get(1).unwrap());
    }
}

fn fk_matrix(model: &str, q: &str) -> Value {
    json(&["fk", "--model", model, "--q", q])["pose"]["matrix"].clone()
}

#[test]
fn convert_urdf_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let yaml = dir.path().join("converted.yaml");
    let out = cga(&["convert-urdf", &model("two_link.urdf"), "--out", yaml.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    for q in ["0,0", "0.7,-1.3", "-2.9,2.2"] {
        let a = fk_matrix(yaml.to_str().unwrap(), q);
        let b = fk_matrix(&model("two_link.yaml"), q);
        assert_close("fk", &a, &b);
        assert_close("fk", &fk_matrix(&model("two_link.urdf"), q), &b);
    }
}

#[test]
fn convert_urdf_rejects_planar() {
    let dir = tempfile::tempdir().unwrap();
    let src = std::fs::read_to_string(model("two_link.urdf")).unwrap();
    let planar = dir.path().join("planar.urdf");
    std::fs::write(&planar, src.replace("type=\"continuous\"", "type=\"planar\"")).unwrap();
    let out = cga(&["convert-urdf", planar.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unsupported type `planar`"), "{}", stderr(&out));
}

#[test]
fn model_search_path() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(model("two_link.yaml"), dir.path().join("arm2.yaml")).unwrap();
    let run = |path: &Path| {
        Command::new(env!("CARGO_BIN_EXE_cga"))
            .args(["fk", "--model", "arm2", "--q", "0,0"])
            .env("CGA_MODEL_PATH", path)
            .output()
            .unwrap()
    };
    let out = run(dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("position: +0.900000000 +0.000000000 +0.100000000"));
    assert_eq!(run(&manifest_dir().join("src")).status.code(), Some(1));
}
