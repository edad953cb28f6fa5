//! Runs the full invariant suite for one (d, n) and prints the report.

use spinor_kinematics::analysis::{run_suite, Suite};

fn main() -> spinor_kinematics::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let d = args.next().unwrap_or(5);
    let n = args.next().unwrap_or(5);
    let rep = run_suite(Suite::All, d, n, 2, 7)?;
    print!("{rep}");
    Ok(())
}
