use cga_robotics::model_io;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("models/two_link.yaml");
    let doc = model_io::parse(&std::fs::read_to_string(&path)?)?;
    let system = model_io::load_system(&doc)?;

    println!("loaded `{}` from {}", doc.name, path.display());
    for link in system.links() {
        println!("  link {:<6} mass {:.2} com {:?}", link.name, link.mass, link.center_of_mass);
    }
    for joint in system.joints() {
        println!("  joint {:<10} {:?}", joint.name, joint.kind);
    }
    Ok(())
}
