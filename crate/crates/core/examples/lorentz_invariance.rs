//! Brackets are unchanged when momenta and spinor parameters are moved by
//! the same one-parameter Lorentz transformation (floating point).

use spinor_kinematics::analysis::bracket_lorentz_invariance;

fn main() -> spinor_kinematics::Result<()> {
    for d in 3..=7 {
        let rep = bracket_lorentz_invariance(d, 5, 10, 1, 1e-8)?;
        let c = &rep.checks[0];
        println!("d = {d}: {} {}", if c.passed { "invariant" } else { "NOT invariant" }, c.witness.as_deref().unwrap_or(""));
    }
    Ok(())
}
