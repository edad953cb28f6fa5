//! Order-3 tensors, their flattenings and multilinear rank.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::exact::rank;
use crate::linalg::matrix::{ExactMatrix, Matrix};
use crate::scalar::GaussianRational as Q;

/// Tensor of format `dims[0] × dims[1] × dims[2]`.
///
/// Stored slice by slice along the middle index: entry `(i, j, k)` lives at
/// `j·dims[0]·dims[2] + i·dims[2] + k`, so slice `j` is a contiguous
/// row-major `dims[0] × dims[2]` matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTensor")]
pub struct ExactTensor3 {
    dims: [usize; 3],
    entries: Vec<Q>,
}

#[derive(Deserialize)]
struct RawTensor {
    dims: [usize; 3],
    entries: Vec<Q>,
}

impl TryFrom<RawTensor> for ExactTensor3 {
    type Error = Error;
    fn try_from(raw: RawTensor) -> Result<Self> {
        Self::new(raw.dims, raw.entries)
    }
}

impl ExactTensor3 {
    pub fn new(dims: [usize; 3], entries: Vec<Q>) -> Result<Self> {
        if entries.len() != dims.iter().product::<usize>() {
            return Err(Error::DimensionMismatch(format!("tensor {dims:?} with {} entries", entries.len())));
        }
        Ok(Self { dims, entries })
    }

    pub fn zeros(dims: [usize; 3]) -> Self {
        Self { dims, entries: vec![Q::zero(); dims.iter().product()] }
    }

    pub fn from_fn(dims: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> Q) -> Self {
        let mut t = Self::zeros(dims);
        for j in 0..dims[1] {
            for i in 0..dims[0] {
                for k in 0..dims[2] {
                    let idx = t.index(i, j, k);
                    t.entries[idx] = f(i, j, k);
                }
            }
        }
        t
    }

    /// Stacks equally sized `a × c` matrices as the middle-index slices.
    pub fn from_slices(slices: &[ExactMatrix]) -> Result<Self> {
        let first = slices.first().ok_or_else(|| Error::DimensionMismatch("no slices".into()))?;
        let (a, c) = (first.rows(), first.cols());
        if slices.iter().any(|s| s.rows() != a || s.cols() != c) {
            return Err(Error::DimensionMismatch("slices of unequal shape".into()));
        }
        let entries = slices.iter().flat_map(|s| s.entries().iter().cloned()).collect();
        Self::new([a, slices.len(), c], entries)
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        j * self.dims[0] * self.dims[2] + i * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.entries[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Q) {
        let idx = self.index(i, j, k);
        self.entries[idx] = v;
    }

    /// Middle-index slice `j` as a `dims[0] × dims[2]` matrix.
    pub fn slice(&self, j: usize) -> ExactMatrix {
        Matrix::from_fn(self.dims[0], self.dims[2], |i, k| self.get(i, j, k).clone())
    }

    /// Slice with the first index fixed: a `dims[1] × dims[2]` matrix.
    pub fn first_index_slice(&self, i: usize) -> ExactMatrix {
        Matrix::from_fn(self.dims[1], self.dims[2], |j, k| self.get(i, j, k).clone())
    }

    /// Slice with the last index fixed: a `dims[0] × dims[1]` matrix.
    pub fn last_index_slice(&self, k: usize) -> ExactMatrix {
        Matrix::from_fn(self.dims[0], self.dims[1], |i, j| self.get(i, j, k).clone())
    }

    /// Coordinate subtensor on the given index sets.
    pub fn subtensor(&self, a: &[usize], b: &[usize], c: &[usize]) -> Self {
        Self::from_fn([a.len(), b.len(), c.len()], |i, j, k| self.get(a[i], b[j], c[k]).clone())
    }

    /// The three mode flattenings.
    ///
    /// Mode 1 has rows `i` and columns `(j, k)` with `j` major, i.e. the
    /// slices side by side. Mode 2 has rows `j` (one vectorized slice per
    /// row). Mode 3 has rows `k` and columns `(j, i)` with `j` major.
    pub fn flattenings(&self) -> [ExactMatrix; 3] {
        let [a, b, c] = self.dims;
        [
            Matrix::from_fn(a, b * c, |i, col| self.get(i, col / c, col % c).clone()),
            Matrix::from_fn(b, a * c, |j, col| self.get(col / c, j, col % c).clone()),
            Matrix::from_fn(c, a * b, |k, col| self.get(col % a, col / a, k).clone()),
        ]
    }

    /// Ranks of the three flattenings.
    pub fn multilinear_rank(&self) -> [usize; 3] {
        self.flattenings().map(|f| rank(&f))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Q::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<Q> {
        (0..n).map(|_| Q::gaussian(rng.random_range(1..9), rng.random_range(-4..5))).collect()
    }

    #[test]
    fn identity_and_zero_slices() {
        let t = ExactTensor3::from_slices(&[ExactMatrix::identity(2), ExactMatrix::zeros(2, 2)]).unwrap();
        let [f1, f2, f3] = t.flattenings();
        assert_eq!((f1.rows(), f1.cols()), (2, 4));
        assert_eq!((f2.rows(), f2.cols()), (2, 4));
        assert_eq!(rank(&f2), 1);
        assert_eq!(rank(&f3), 2);
        assert_eq!(t.multilinear_rank(), [2, 1, 2]);
    }

    #[test]
    fn mode_one_is_slices_side_by_side() {
        let s0 = ExactMatrix::from_int_rows(&[[1, 2], [3, 4]]);
        let s1 = ExactMatrix::from_int_rows(&[[5, 6], [7, 8]]);
        let t = ExactTensor3::from_slices(&[s0, s1]).unwrap();
        let [f1, _, _] = t.flattenings();
        assert_eq!(f1, ExactMatrix::from_int_rows(&[[1, 2, 5, 6], [3, 4, 7, 8]]));
    }

    #[test]
    fn rank_one_tensor() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let (u, v, w) = (rand_vec(&mut rng, 3), rand_vec(&mut rng, 4), rand_vec(&mut rng, 2));
        let t = ExactTensor3::from_fn([3, 4, 2], |i, j, k| &(&u[i] * &v[j]) * &w[k]);
        assert_eq!(t.multilinear_rank(), [1, 1, 1]);
    }

    #[test]
    fn zero_tensor() {
        assert_eq!(ExactTensor3::zeros([3, 4, 3]).multilinear_rank(), [0, 0, 0]);
    }

    #[test]
    fn json_schema() {
        let t = ExactTensor3::from_slices(&[ExactMatrix::identity(1)]).unwrap();
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, r#"{"dims":[1,1,1],"entries":["1/1"]}"#);
        assert!(serde_json::from_str::<ExactTensor3>(r#"{"dims":[2,1,1],"entries":["1/1"]}"#).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use rand::Rng;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn tucker_bound(seed in any::<u64>(), a in 1usize..4, b in 1usize..4, c in 1usize..4) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let t = ExactTensor3::from_fn([a, b, c], |_, _, _| Q::from_int(rng.random_range(-3..4)));
                let [r1, r2, r3] = t.multilinear_rank();
                prop_assert!(r1 <= b * c && r2 <= a * c && r3 <= a * b);
                prop_assert!(r1 <= r2 * r3 && r2 <= r1 * r3 && r3 <= r1 * r2);
            }
        }
    }
}
