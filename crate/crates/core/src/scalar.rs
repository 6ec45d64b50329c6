//! The exact integer scalar abstraction shared by every matrix and series type.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

/// An exact signed integer ring element.
///
/// Implemented for `i64`, `i128` and [`num_bigint::BigInt`]. The crate-level
/// aliases use `BigInt`; the fixed-width types are useful for small
/// experiments where overflow is known not to happen.
pub trait Scalar:
    Clone + Debug + Display + FromStr + Eq + Ord + Hash + Integer + Signed + ToPrimitive + From<i32> + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl Scalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

impl Scalar for num_bigint::BigInt {
    fn from_i64(v: i64) -> Self {
        num_bigint::BigInt::from(v)
    }
}
