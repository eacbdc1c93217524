//! Exact comparison of `k * log2(n)` values.
//!
//! `k1 log n1 <= k2 log n2` iff `n1^k1 <= n2^k2`, so every comparison is a
//! comparison of big integers and nothing is rounded.

use core::cmp::Ordering;

use num_bigint::BigUint;

use crate::framework::Factor;
use crate::{Error, Result};

/// `k * log2(base)`, kept symbolically.
#[derive(Debug, Clone, Copy)]
pub struct KLogN {
    pub k: u64,
    pub base: u64,
}

impl KLogN {
    pub fn new(k: u64, base: u64) -> Result<Self> {
        if base == 0 {
            return Err(Error::invalid("log of zero"));
        }
        if k > u32::MAX as u64 {
            return Err(Error::Overflow);
        }
        Ok(KLogN { k, base })
    }

    /// `base^(k * scale)`.
    fn power(&self, scale: u64) -> BigUint {
        let e = u32::try_from(self.k * scale).expect("exponent checked at construction");
        BigUint::from(self.base).pow(e)
    }
}

impl PartialEq for KLogN {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for KLogN {}

impl PartialOrd for KLogN {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for KLogN {
    fn cmp(&self, other: &Self) -> Ordering {
        self.power(1).cmp(&other.power(1))
    }
}

/// Continued-fraction convergents of `sqrt(3)` that lie below it, coarse to
/// fine.
pub const ROOT3_LOWER: [(u64, u64); 6] = [(1, 1), (5, 3), (19, 11), (71, 41), (265, 153), (989, 571)];

/// A rational constant below `2 / sqrt(3)`: the factor by which one halving
/// step shrinks `k log n`, as a strong-diminisher constant.
pub const KLOGN_FACTOR: Factor = Factor { num: 8, den: 7 };

/// Whether `after <= (sqrt(3) / 2) * before`. Proven through a rational
/// lower bound `r <= sqrt(3)`: `n'^(2 k' den) <= n^(k num)` suffices. A
/// `false` answer means no listed bound was tight enough.
pub fn shrinks_by_root3_over_2(after: KLogN, before: KLogN) -> bool {
    if after.k == 0 || after.base == 1 {
        return true;
    }
    ROOT3_LOWER.iter().any(|&(num, den)| {
        let (Some(l), Some(r)) = (
            after.k.checked_mul(2 * den).filter(|&e| e <= u32::MAX as u64),
            before.k.checked_mul(num).filter(|&e| e <= u32::MAX as u64),
        ) else {
            return false;
        };
        let lhs = BigUint::from(after.base).pow(l as u32);
        let rhs = BigUint::from(before.base).pow(r as u32);
        lhs <= rhs
    })
}
