//! Exact Tucker certificate for d = 3 and the multilinear ranks it implies.

use spinor_kinematics::analysis::{sample_trial, tucker_certify_d3};
use spinor_kinematics::brackets::build_bracket_tensor;

fn main() -> spinor_kinematics::Result<()> {
    for n in 4..=7 {
        let (cfg, params) = sample_trial(3, n, 2, 0)?;
        let rep = tucker_certify_d3(&cfg, &params)?;
        let ml = build_bracket_tensor(&cfg, &params)?.tensor().multilinear_rank();
        println!("n = {n}: multilinear rank {ml:?}, certificate {}/{}", rep.passed_count(), rep.checks.len());
    }
    Ok(())
}
