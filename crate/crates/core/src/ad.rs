//! Forward-mode algorithmic differentiation.
//!
//! A [`Dual`] carries a value and one directional derivative. Evaluating a
//! polynomial program over `Dual<GaussianRational>` with a single seeded
//! input yields the exact partial derivative with respect to that input.

use crate::scalar::{FromExact, GaussianRational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Dual<T> {
    pub value: T,
    pub tangent: T,
}

impl<T: Scalar> Dual<T> {
    pub fn constant(value: T) -> Self {
        Self { value, tangent: T::zero() }
    }

    /// An independent variable seeded with unit tangent.
    pub fn variable(value: T) -> Self {
        Self { value, tangent: T::one() }
    }

    pub fn seeded(value: T, seed: bool) -> Self {
        if seed {
            Self::variable(value)
        } else {
            Self::constant(value)
        }
    }
}

impl<T: Scalar> Scalar for Dual<T> {
    fn zero() -> Self {
        Self::constant(T::zero())
    }
    fn one() -> Self {
        Self::constant(T::one())
    }
    fn imag_unit() -> Self {
        Self::constant(T::imag_unit())
    }
    fn from_int(v: i64) -> Self {
        Self::constant(T::from_int(v))
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.tangent.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        Self { value: self.value.plus(&rhs.value), tangent: self.tangent.plus(&rhs.tangent) }
    }
    fn minus(&self, rhs: &Self) -> Self {
        Self { value: self.value.minus(&rhs.value), tangent: self.tangent.minus(&rhs.tangent) }
    }
    fn times(&self, rhs: &Self) -> Self {
        // Product rule; skip the terms whose tangent is zero.
        let tangent = match (self.tangent.is_zero(), rhs.tangent.is_zero()) {
            (true, true) => T::zero(),
            (true, false) => self.value.times(&rhs.tangent),
            (false, true) => self.tangent.times(&rhs.value),
            (false, false) => self.value.times(&rhs.tangent).plus(&self.tangent.times(&rhs.value)),
        };
        Self { value: self.value.times(&rhs.value), tangent }
    }
    fn negated(&self) -> Self {
        Self { value: self.value.negated(), tangent: self.tangent.negated() }
    }
}

impl<T: FromExact> FromExact for Dual<T> {
    fn from_exact(q: &GaussianRational) -> Self {
        Self::constant(T::from_exact(q))
    }
}
