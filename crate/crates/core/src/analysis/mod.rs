//! Verification engine: invariant suites, relation families, Tucker and
//! Strassen certificates, Jacobian dimension probes.

pub mod dimension;
pub mod invariants;
pub mod lorentz;
pub mod relations;
pub mod strassen;

pub use dimension::{
    jacobian, published_dimension, reproduce_table, spinor_codim, spinor_coordinate_label, spinor_quadric_residual,
    variety_dimension, DimensionMode, JacobianProbe, TableCell, TableReport, VarietyId,
};
pub use invariants::{check_bracket_tensor, invariant_suite, run_suite, Suite};
pub use lorentz::bracket_lorentz_invariance;
pub use relations::{
    mixed_pfaffian_matrix, relation_residuals, secant_membership, slice_rank_report, tucker_certify_d3,
};
pub use strassen::{strassen_lower_bound, strassen_scan, StrassenBound};

use rand::Rng;

use crate::brackets::{make_spinor_params, SpinorParams};
use crate::error::Result;
use crate::kinematics::{sample_configuration, sample_isotropic_triple, substream, KinematicConfiguration, SamplerConfig};

/// A sampled point: conserving momenta (an isotropic triple when n = 3)
/// and random spinor parameters.
pub fn sample_point<R: Rng + ?Sized>(d: usize, n: usize, rng: &mut R, cfg: &SamplerConfig) -> Result<(KinematicConfiguration, SpinorParams)> {
    let kin = if n == 3 { sample_isotropic_triple(d, rng, cfg)? } else { sample_configuration(d, n, true, rng, cfg)? };
    let params = make_spinor_params(d / 2, n, rng, cfg);
    Ok((kin, params))
}

/// [`sample_point`] on the substream `trial` of `seed`.
pub fn sample_trial(d: usize, n: usize, seed: u64, trial: u64) -> Result<(KinematicConfiguration, SpinorParams)> {
    sample_point(d, n, &mut substream(seed, trial), &SamplerConfig::default())
}
