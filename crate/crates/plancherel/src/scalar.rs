//! Coefficient scalars for the two arithmetic modes.
//!
//! Everything downstream (group algebra, traces, measures) is generic over
//! [`Coeff`]. The float mode uses complex doubles; the exact mode uses
//! cyclotomic numbers with rational coefficients ([`crate::cyclo::Cyclo`]),
//! so identities that hold algebraically hold bit-for-bit.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Coefficients a scalar mode must support.
///
/// No division is required: every reciprocal the library needs is a
/// reciprocal of an explicit integer (class sizes, group orders, dimensions),
/// which `from_ratio` covers.
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// True for modes where `==` is a mathematical equality.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// e^{2πi·num/den}.
    fn root_of_unity(num: i64, den: i64) -> Self;
    fn conj(&self) -> Self;
    /// Zero test; in float mode this is a strict `== 0.0` on both parts.
    fn is_zero(&self) -> bool;
    /// Small enough to prune from sparse supports (threshold 1e-14 in float
    /// mode, exact zero otherwise).
    fn is_negligible(&self) -> bool;
    fn to_c64(&self) -> Complex64;
}

/// Support-pruning threshold for float mode.
pub const PRUNE_EPS: f64 = 1e-14;

impl Coeff for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn root_of_unity(num: i64, den: i64) -> Self {
        let angle = 2.0 * std::f64::consts::PI * (num.rem_euclid(den) as f64) / (den as f64);
        Complex64::new(angle.cos(), angle.sin())
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn is_negligible(&self) -> bool {
        self.re.abs() < PRUNE_EPS && self.im.abs() < PRUNE_EPS
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
}
