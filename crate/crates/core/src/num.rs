// SPDX-License-Identifier: Apache-2.0

//! Integer scalar abstraction for utilities, costs and derived weights.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, PrimInt, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Signed exact integer used for utilities, costs, votes, flows and
/// rotation weights.
///
/// Every accumulation that can grow with the instance goes through the
/// checked helpers below, so overflow surfaces as [`Error::Overflow`]
/// instead of wrapping.
pub trait Weight:
    PrimInt
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Hash
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    fn try_from_usize(n: usize) -> Result<Self> {
        <Self as FromPrimitive>::from_usize(n).ok_or(Error::Overflow)
    }

    fn try_from_i64(n: i64) -> Result<Self> {
        <Self as FromPrimitive>::from_i64(n).ok_or(Error::Overflow)
    }

    fn add_checked(self, rhs: Self) -> Result<Self> {
        self.checked_add(&rhs).ok_or(Error::Overflow)
    }

    fn sub_checked(self, rhs: Self) -> Result<Self> {
        self.checked_sub(&rhs).ok_or(Error::Overflow)
    }

    fn mul_checked(self, rhs: Self) -> Result<Self> {
        self.checked_mul(&rhs).ok_or(Error::Overflow)
    }
}

impl Weight for i32 {}
impl Weight for i64 {}
impl Weight for i128 {}

/// Checked sum of an iterator of weights.
pub fn checked_sum<W: Weight>(items: impl IntoIterator<Item = W>) -> Result<W> {
    items
        .into_iter()
        .try_fold(W::zero(), |acc, x| acc.add_checked(x))
}
