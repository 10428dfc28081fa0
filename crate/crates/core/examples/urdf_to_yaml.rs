//! Converts a URDF file to the YAML model format.
//!
//! `cargo run --example urdf_to_yaml -- path/to/robot.urdf` prints YAML;
//! without an argument the bundled two-link arm is used.

use cga_robotics::model_io;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .map(std::path::PathBuf::from)
        .unwrap_or_else(|| std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("models/two_link.urdf"));
    let (doc, warnings) = model_io::convert_urdf_with_warnings(&std::fs::read_to_string(&path)?)?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    model_io::load_system(&doc)?;
    print!("{}", model_io::emit(&doc));
    Ok(())
}
