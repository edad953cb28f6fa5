//! Strassen's commutator bound over the 3 × 3 × 3 subtensors of a d = 5
//! bracket tensor.

use spinor_kinematics::analysis::{sample_trial, strassen_scan};
use spinor_kinematics::brackets::build_bracket_tensor;

fn main() -> spinor_kinematics::Result<()> {
    for seed in 0..3 {
        let (cfg, params) = sample_trial(5, 5, seed, 0)?;
        let st = build_bracket_tensor(&cfg, &params)?.tensor();
        let b = strassen_scan(&st)?;
        println!("seed {seed}: border rank ≥ {} via {:?}", b.bound, b.witness);
    }
    Ok(())
}
