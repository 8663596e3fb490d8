//! Exact coefficient arithmetic.
//!
//! [`Rational`] is the prime field. [`ParamPoly`] is the polynomial ring over
//! it in declared parameter symbols and [`ParamRatio`] its fraction field,
//! where the parameters behave as algebraically independent transcendentals.

mod gcd;
mod param;
mod rational;
mod ratio;

use core::fmt::Debug;

pub use gcd::{poly_content_gcd, poly_gcd};
pub use param::{PMono, ParamPoly, MAX_SYMBOLS};
pub use ratio::ParamRatio;
pub use rational::Rational;

/// An integral domain with exact division.
pub trait Domain: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(q)` with `q * rhs == self`; `None` if `rhs` does not divide `self`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

/// A field: every nonzero element is invertible.
pub trait Field: Domain {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}
