fn main() {
    std::process::exit(cga_robotics::cli::run(std::env::args_os()));
}
