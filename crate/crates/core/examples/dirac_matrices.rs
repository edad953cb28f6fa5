//! Dirac matrices for d = 5 and the momentum matrix of a null vector.

use spinor_kinematics::clifford::{build_dirac, momentum_dirac, verify_clifford};
use spinor_kinematics::linalg::rank;
use spinor_kinematics::GaussianRational as Q;

fn main() -> spinor_kinematics::Result<()> {
    let basis = build_dirac(5)?;
    for (i, g) in basis.gammas.iter().enumerate() {
        println!("Γ{} =\n{g}", i + 1);
    }
    let report = verify_clifford(&basis);
    println!("Clifford checks: {}/{}", report.passed_count(), report.checks.len());

    // (5, 3, 4, 0, 0) is null: −25 + 9 + 16 = 0.
    let p: Vec<Q> = [5, 3, 4, 0, 0].into_iter().map(Q::from_int).collect();
    let pm = momentum_dirac(&basis, &p)?;
    println!("P =\n{pm}");
    println!("P² = 0: {}, rank P = {}", pm.mul(&pm).is_zero(), rank(&pm));
    Ok(())
}
