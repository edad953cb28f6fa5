//! Charge conjugation matrices and their structural classes for d = 2..12.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spinor_kinematics::clifford::build_dirac;
use spinor_kinematics::conjugation::{blocks, build_conjugation, verify_conjugation};

fn main() -> spinor_kinematics::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for d in 2..=12 {
        let cm = build_conjugation(d)?;
        let rep = verify_conjugation(&cm, &build_dirac(d)?, 5, &mut rng);
        println!(
            "d = {d:>2}: C {:<9} {:?}, blocks {:<9} checks {}/{}",
            cm.symmetry_class.label(),
            cm.block_shape,
            cm.block_symmetry.label(),
            rep.passed_count(),
            rep.checks.len()
        );
    }
    let (c1, c2) = blocks(&build_conjugation(6)?)?;
    println!("d = 6 blocks:\nC′ =\n{c1}\nC″ =\n{c2}");
    Ok(())
}
