//! Matrices and tensors over exact and floating scalars.

pub mod exact;
pub mod float;
pub mod matrix;
pub mod tensor;

pub use exact::{combinations, determinant, inverse, kernel_basis, minors, pfaffian, rank, rref};
pub use float::{expm, float_rank, max_abs, orthonormal_columns, singular_values};
pub use matrix::{ExactMatrix, FloatMatrix, Matrix};
pub use tensor::ExactTensor3;
