//! Exact spinor kinematics in general dimension.

pub mod ad;
pub mod analysis;
pub mod brackets;
pub mod cli;
pub mod clifford;
pub mod conjugation;
pub mod error;
pub mod kinematics;
pub mod linalg;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{ComplexFloat, GaussianRational};
