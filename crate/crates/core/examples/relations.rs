//! Relation families at (d, n) = (3, 4) and (5, 5), and the secant checks.

use spinor_kinematics::analysis::{relation_residuals, sample_trial, secant_membership};

fn main() -> spinor_kinematics::Result<()> {
    for (d, n) in [(3, 4), (5, 5)] {
        let (cfg, params) = sample_trial(d, n, 11, 0)?;
        let mut rep = relation_residuals(&cfg, &params)?;
        rep.extend_prefixed("secant", secant_membership(&cfg, &params)?);
        println!("(d, n) = ({d}, {n}):");
        for c in &rep.checks {
            let w = c.witness.as_deref().unwrap_or("");
            println!("  {} {:<32} {w}", if c.passed { "ok  " } else { "FAIL" }, c.name);
        }
    }
    Ok(())
}
