fn main() {
    std::process::exit(spinor_kinematics::cli::run());
}
