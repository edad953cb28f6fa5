//! Strassen's commutator bound on 3 × 3 × 3 coordinate subtensors.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{combinations, inverse, rank, ExactMatrix, ExactTensor3};

/// The largest value the bound can take on a 3 × 3 × 3 tensor.
pub const STRASSEN_MAX: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrassenBound {
    pub bound: usize,
    /// No slice ordering had an invertible first slice.
    pub degenerate: bool,
    /// Where the bound was attained: slicing mode (0, 1, 2), the three index
    /// sets and the inverted slice.
    pub witness: Option<StrassenWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrassenWitness {
    pub mode: usize,
    pub indices: [Vec<usize>; 3],
    pub inverted: usize,
}

fn slices_along(t: &ExactTensor3, mode: usize) -> [ExactMatrix; 3] {
    std::array::from_fn(|s| match mode {
        0 => t.first_index_slice(s),
        1 => t.slice(s),
        _ => t.last_index_slice(s),
    })
}

/// 3 + ⌈rank(B A⁻¹ C − C A⁻¹ B) / 2⌉, or `None` when `a` is singular.
fn commutator_bound(a: &ExactMatrix, b: &ExactMatrix, c: &ExactMatrix) -> Option<usize> {
    let ai = inverse(a)?;
    let comm = b.mul(&ai).mul(c).sub(&c.mul(&ai).mul(b));
    Some(3 + rank(&comm).div_ceil(2))
}

/// Best bound over the choice of inverted slice, for a fixed slicing mode.
fn bound_for_mode(t: &ExactTensor3, mode: usize) -> Option<(usize, usize)> {
    let s = slices_along(t, mode);
    (0..3)
        .filter_map(|a| {
            let (b, c) = ((a + 1) % 3, (a + 2) % 3);
            commutator_bound(&s[a], &s[b], &s[c]).map(|v| (v, a))
        })
        .max_by_key(|&(v, a)| (v, std::cmp::Reverse(a)))
}

/// Strassen bound of a 3 × 3 × 3 tensor sliced along the middle index. The
/// first slice is inverted when possible, otherwise another one.
pub fn strassen_lower_bound(t: &ExactTensor3) -> Result<StrassenBound> {
    if t.dims() != [3, 3, 3] {
        return Err(Error::DimensionMismatch(format!("Strassen bound needs a 3x3x3 tensor, got {:?}", t.dims())));
    }
    let s = slices_along(t, 1);
    for a in 0..3 {
        if let Some(bound) = commutator_bound(&s[a], &s[(a + 1) % 3], &s[(a + 2) % 3]) {
            let witness = StrassenWitness { mode: 1, indices: [vec![0, 1, 2], vec![0, 1, 2], vec![0, 1, 2]], inverted: a };
            return Ok(StrassenBound { bound, degenerate: false, witness: Some(witness) });
        }
    }
    Ok(StrassenBound { bound: 0, degenerate: true, witness: None })
}

/// Maximum of the bound over every 3 × 3 × 3 coordinate subtensor, all three
/// slicing modes and every choice of inverted slice. Stops early once the
/// largest possible value is found.
pub fn strassen_scan(t: &ExactTensor3) -> Result<StrassenBound> {
    let dims = t.dims();
    if dims.iter().any(|&n| n < 3) {
        return Err(Error::DimensionMismatch(format!("scan needs every dimension >= 3, got {dims:?}")));
    }
    let sets: [Vec<Vec<usize>>; 3] = dims.map(|n| combinations(n, 3));
    let mut jobs = vec![];
    for a in &sets[0] {
        for b in &sets[1] {
            for c in &sets[2] {
                jobs.push([a, b, c]);
            }
        }
    }
    let best = AtomicUsize::new(0);
    let found = jobs
        .par_iter()
        .filter_map(|[a, b, c]| {
            if best.load(Ordering::Relaxed) >= STRASSEN_MAX {
                return None;
            }
            let sub = t.subtensor(a, b, c);
            let (v, mode, inv) = (0..3).filter_map(|m| bound_for_mode(&sub, m).map(|(v, i)| (v, m, i))).max_by_key(|x| x.0)?;
            best.fetch_max(v, Ordering::Relaxed);
            Some((v, StrassenWitness { mode, indices: [a.to_vec(), b.to_vec(), c.to_vec()], inverted: inv }))
        })
        .max_by(|x, y| x.0.cmp(&y.0).then_with(|| y.1.indices.cmp(&x.1.indices)));
    Ok(match found {
        Some((bound, w)) => StrassenBound { bound, degenerate: false, witness: Some(w) },
        None => StrassenBound { bound: 0, degenerate: true, witness: None },
    })
}
