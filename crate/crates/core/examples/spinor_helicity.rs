//! Four-dimensional angle and square brackets: both matrices are skew of
//! rank 2 and their product vanishes under momentum conservation.

use spinor_kinematics::brackets::sh_product_check;
use spinor_kinematics::kinematics::{sample_configuration, substream, SamplerConfig};
use spinor_kinematics::linalg::rank;

fn main() -> spinor_kinematics::Result<()> {
    let cfg = sample_configuration(4, 6, true, &mut substream(5, 0), &SamplerConfig::default())?;
    let rep = sh_product_check(&cfg)?;
    println!("angle matrix, rank {}:\n{}", rank(&rep.angle), rep.angle);
    println!("square matrix, rank {}:\n{}", rank(&rep.square), rep.square);
    println!("product is zero: {}", rep.product_is_zero);
    Ok(())
}
