//! The bracket matrices S and T_j at d = 6, single brackets, and the
//! multilinear rank of the stacked tensor.

use spinor_kinematics::analysis::{check_bracket_tensor, sample_trial};
use spinor_kinematics::brackets::{bracket, build_bracket_tensor};

fn main() -> spinor_kinematics::Result<()> {
    let (cfg, params) = sample_trial(6, 5, 3, 0)?;
    let bt = build_bracket_tensor(&cfg, &params)?;
    println!("S is {}, T_j are {}", bt.symmetry.s, bt.symmetry.t);
    println!("⟨12⟩ = {}", bracket(&cfg, &params, &[1, 2])?);
    println!("⟨132⟩ = {}", bracket(&cfg, &params, &[1, 3, 2])?);
    println!("⟨1234⟩ = {}", bracket(&cfg, &params, &[1, 2, 3, 4])?);
    println!("multilinear rank of ST: {:?}", bt.tensor().multilinear_rank());
    let rep = check_bracket_tensor(&bt, cfg.conserves);
    for c in &rep.checks {
        println!("{} {:<28} {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.claim);
    }
    Ok(())
}
