//! Jacobian-rank dimensions of the kinematic varieties, exact and float.

use spinor_kinematics::analysis::{published_dimension, spinor_codim, variety_dimension, DimensionMode, VarietyId};

fn main() -> spinor_kinematics::Result<()> {
    for (d, n) in [(4, 4), (4, 5), (5, 5), (6, 5)] {
        let exact = variety_dimension(VarietyId::K3, d, n, 2, 1, DimensionMode::Exact)?;
        let float = variety_dimension(VarietyId::K3, d, n, 2, 1, DimensionMode::Float)?;
        println!("K3 ({d}, {n}): exact {}, float {}, table {:?}", exact.dim, float.dim, published_dimension(d, n));
    }
    for (d, n) in [(3, 6), (4, 6)] {
        println!("K2 ({d}, {n}): {}", variety_dimension(VarietyId::K2, d, n, 2, 1, DimensionMode::Auto)?.dim);
    }
    println!("Mandelstam (4, 6): {}", variety_dimension(VarietyId::Mandelstam, 4, 6, 2, 1, DimensionMode::Auto)?.dim);
    for d in [6, 8, 9] {
        println!("spinor image codimension at d = {d}: {}", spinor_codim(d, 2, 1)?);
    }
    Ok(())
}
