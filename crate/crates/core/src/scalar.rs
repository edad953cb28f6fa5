//! Exact arithmetic over the Gaussian rationals ℚ(i).
//!
//! [`GaussianRational`] is the scalar type of every exact computation in the
//! crate. Values are kept as a pair of reduced rationals, so equality is
//! structural and zero tests are exact. [`ComplexFloat`] values only ever
//! come out of [`GaussianRational::to_float`] and are used by the numeric
//! fallbacks.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Complex double-precision value, produced only by explicit conversion.
pub type ComplexFloat = Complex64;

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

/// The four field operations exposed through [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to `a` and `b`; division by zero is reported, not panicked on.
pub fn arith(a: &GaussianRational, b: &GaussianRational, op: ArithOp) -> Result<GaussianRational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::new(BigRational::from_integer(v.into()), BigRational::zero())
    }

    /// `num/den` as a real Gaussian rational. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    /// `re_num/re_den + (im_num/im_den)·i`. Panics on a zero denominator.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(
            BigRational::new(re_num.into(), re_den.into()),
            BigRational::new(im_num.into(), im_den.into()),
        )
    }

    /// `re + im·i` with integer parts.
    pub fn gaussian(re: i64, im: i64) -> Self {
        Self::from_parts(re, 1, im, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Total bit length of the four integers in the canonical form; used to
    /// pick small pivots.
    pub fn height(&self) -> u64 {
        self.re.numer().bits() + self.re.denom().bits() + self.im.numer().bits() + self.im.denom().bits()
    }

    /// Whether both parts are integers.
    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    /// Nearest double pair. Fails if either part does not fit in an `f64`.
    pub fn to_float(&self) -> Result<ComplexFloat> {
        let re = ratio_to_f64(&self.re)?;
        let im = ratio_to_f64(&self.im)?;
        Ok(ComplexFloat::new(re, im))
    }

    /// Re-reduces both parts. Arithmetic already returns reduced values, so
    /// this is the identity on anything built through the public API.
    pub fn normalized(&self) -> Self {
        Self::new(
            BigRational::new(self.re.numer().clone(), self.re.denom().clone()),
            BigRational::new(self.im.numer().clone(), self.im.denom().clone()),
        )
    }
}

fn ratio_to_f64(r: &BigRational) -> Result<f64> {
    // Ratio::to_f64 rounds correctly even when numerator and denominator
    // individually overflow.
    match r.to_f64() {
        Some(v) if v.is_finite() => Ok(v),
        _ => Err(Error::FloatOverflow),
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

/// Canonical text form: `a/b` for real values, `a/b+c/d*i` (or `a/b-c/d*i`)
/// otherwise. All integers are in lowest terms with positive denominators.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ratio(f, &self.re)?;
        if !self.im.is_zero() {
            if self.im.is_negative() {
                f.write_str("-")?;
                write_ratio(f, &-self.im.clone())?;
            } else {
                f.write_str("+")?;
                write_ratio(f, &self.im)?;
            }
            f.write_str("*i")?;
        }
        Ok(())
    }
}

fn parse_ratio(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().ok()?;
    let den: BigInt = den.trim().parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Parses the canonical form and a few lenient variants: `a`, `a/b`,
/// `a/b+c/d*i`, `a/b-c/d*i`, `c/d*i`, `i`, `-i`.
impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a Gaussian rational: {s:?}"));
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix("*i").or_else(|| t.strip_suffix('i')) else {
            return parse_ratio(t).map(|re| Self::new(re, BigRational::zero())).ok_or_else(bad);
        };
        // The first sign after position 0 separates the real part.
        let split = body.char_indices().skip(1).find(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i);
        let (re_txt, im_txt) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im_txt = im_txt.strip_prefix('+').unwrap_or(im_txt).trim();
        let im = match im_txt {
            "" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_ratio(other).ok_or_else(bad)?,
        };
        let re = parse_ratio(re_txt).ok_or_else(bad)?;
        Ok(Self::new(re, im))
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.is_zero() || rhs.is_zero() {
            return GaussianRational::zero();
        }
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::new(&self.re * &rhs.re, BigRational::zero());
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

/// The ring operations shared by exact, floating and dual-number scalars.
///
/// Method names avoid clashing with `std::ops` so generic code can call them
/// on types that implement both.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn imag_unit() -> Self;
    fn from_int(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
}

/// Scalars with exact inverses.
pub trait Field: Scalar {
    fn try_inv(&self) -> Option<Self>;
}

/// Scalars that can host an exact value.
pub trait FromExact: Scalar {
    fn from_exact(q: &GaussianRational) -> Self;
}

impl FromExact for GaussianRational {
    fn from_exact(q: &GaussianRational) -> Self {
        q.clone()
    }
}

impl FromExact for ComplexFloat {
    /// Out-of-range values become NaN.
    fn from_exact(q: &GaussianRational) -> Self {
        q.to_float().unwrap_or(Complex64::new(f64::NAN, f64::NAN))
    }
}

impl Scalar for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn imag_unit() -> Self {
        GaussianRational::i()
    }
    fn from_int(v: i64) -> Self {
        GaussianRational::from_int(v)
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Field for GaussianRational {
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl Scalar for ComplexFloat {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn from_int(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
}
