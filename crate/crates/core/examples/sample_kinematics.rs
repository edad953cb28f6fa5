//! Exact massless configurations with momentum conservation, and their
//! Mandelstam matrix.

use spinor_kinematics::kinematics::{constraint_residuals, mandelstam_matrix, sample_configuration, substream, SamplerConfig};
use spinor_kinematics::linalg::rank;

fn main() -> spinor_kinematics::Result<()> {
    let mut rng = substream(7, 0);
    let cfg = sample_configuration(4, 5, true, &mut rng, &SamplerConfig::default())?;
    for (i, m) in cfg.momenta.iter().enumerate() {
        println!("p{} = {:?}", i + 1, m.p.iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    println!("all constraints exact: {}", constraint_residuals(&cfg).all_zero());
    let s = mandelstam_matrix(&cfg);
    println!("Mandelstam matrix (rank {}):\n{s}", rank(&s));
    println!("{}", cfg.to_json()?);
    Ok(())
}
