//! Membership, range structure and the successor function.
//!
//! A Dyck number is an odd integer whose binary code, read from the least
//! significant bit upward, never has more 0-bits than 1-bits in any suffix.
//! Numbers of the same bit-length `n` form the *n-range*, which always ends
//! at the Mersenne number `2^n - 1`.

use std::fmt;

use crate::error::{overflow, Error, Result};
use crate::indexing;

/// Largest range (bit-length) supported by the 64-bit arithmetic.
pub const MAX_RANGE: u32 = 63;

/// An odd integer satisfying suffix dominance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckNumber(u64);

impl DyckNumber {
    /// The first term.
    pub const ONE: DyckNumber = DyckNumber(1);

    pub fn new(value: u64) -> Result<Self> {
        if is_dyck(value) {
            Ok(DyckNumber(value))
        } else {
            Err(Error::NotMember(value))
        }
    }

    /// Wraps `value` without checking membership.
    ///
    /// Callers must have established `is_dyck(value)` by construction.
    pub(crate) const fn new_unchecked(value: u64) -> Self {
        DyckNumber(value)
    }

    #[inline]
    pub const fn get(self) -> u64 {
        self.0
    }

    /// Binary code length, i.e. the range this term belongs to.
    #[inline]
    pub const fn bit_length(self) -> u32 {
        64 - self.0.leading_zeros()
    }
}

impl TryFrom<u64> for DyckNumber {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        DyckNumber::new(value)
    }
}

impl From<DyckNumber> for u64 {
    fn from(d: DyckNumber) -> u64 {
        d.0
    }
}

impl fmt::Display for DyckNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Suffix-dominance test.
///
/// Scans from the least significant bit upward, adding one per 1-bit and
/// subtracting one per 0-bit, up to the most significant 1. Zero and even
/// numbers are rejected.
pub fn is_dyck(v: u64) -> bool {
    if v & 1 == 0 {
        return false;
    }
    let mut balance: i32 = 0;
    let mut rest = v;
    while rest != 0 {
        // consume a run of ones, then a run of zeros
        let ones = rest.trailing_ones();
        balance += ones as i32;
        rest >>= ones;
        if rest == 0 {
            break;
        }
        let zeros = rest.trailing_zeros();
        balance -= zeros as i32;
        if balance < 0 {
            return false;
        }
        rest >>= zeros;
    }
    true
}

/// Length of the maximal all-ones suffix of the binary code.
#[inline]
pub fn trailing_ones(v: u64) -> u32 {
    v.trailing_ones()
}

/// `2^n - 1` for `1 <= n <= 63`.
pub fn mersenne(n: u32) -> Result<u64> {
    match n {
        0 => Err(Error::OutOfDomain {
            op: "mersenne",
            value: 0,
        }),
        1..=MAX_RANGE => Ok((1u64 << n) - 1),
        _ => Err(overflow("mersenne")),
    }
}

/// The range of a term.
pub fn range_of(d: DyckNumber) -> u32 {
    d.bit_length()
}

/// Like [`range_of`], but for a raw value that may not be a member.
pub fn range_of_value(v: u64) -> Result<u32> {
    DyckNumber::new(v).map(range_of)
}

/// `binomial(k, floor(k/2))`, the middle entry of row `k` of Pascal's triangle.
pub fn central_binomial(k: u32) -> Result<u64> {
    // multiplicative formula; each partial product is itself a binomial
    // coefficient, so the division is exact
    let half = u128::from(k / 2);
    let k = u128::from(k);
    let mut acc: u128 = 1;
    for i in 0..half {
        acc = acc * (k - i) / (i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(overflow("central_binomial"));
        }
    }
    Ok(acc as u64)
}

/// Number of members with bit-length `n`.
pub fn range_size(n: u32) -> Result<u64> {
    match n {
        0 => Err(Error::OutOfDomain {
            op: "range_size",
            value: 0,
        }),
        1..=MAX_RANGE => central_binomial(n - 1),
        _ => Err(overflow("range_size")),
    }
}

/// Total number of members with bit-length at most `n`.
pub fn cumulative_size(n: u32) -> Result<u64> {
    (1..=n).try_fold(0u64, |acc, m| {
        acc.checked_add(range_size(m)?)
            .ok_or_else(|| overflow("cumulative_size"))
    })
}

/// The least member strictly greater than `d`, found by scanning odd
/// candidates.
pub fn successor(d: DyckNumber) -> Result<DyckNumber> {
    let mut candidate = d.get();
    loop {
        candidate = candidate
            .checked_add(2)
            .ok_or_else(|| overflow("successor"))?;
        if candidate >> MAX_RANGE != 0 {
            return Err(overflow("successor"));
        }
        if is_dyck(candidate) {
            return Ok(DyckNumber(candidate));
        }
    }
}

/// Repunit-suffix jump `d + 2^ceil(r/2)`, with `r` the trailing-ones count.
///
/// This is only a candidate: it is frequently, but not always, the successor
/// (after 143 it yields the non-member 147).
pub fn repunit_jump(d: DyckNumber) -> Result<u64> {
    let r = trailing_ones(d.get());
    let step = 1u64
        .checked_shl(r.div_ceil(2))
        .ok_or_else(|| overflow("repunit_jump"))?;
    d.get()
        .checked_add(step)
        .ok_or_else(|| overflow("repunit_jump"))
}

/// Successor via the repunit jump, accepted only when the candidate is a
/// member whose rank immediately follows the rank of `d`. Otherwise the
/// successor is unranked directly.
pub fn successor_fast(d: DyckNumber) -> Result<DyckNumber> {
    let next_rank = indexing::rank(d)
        .checked_add(1)
        .ok_or_else(|| overflow("successor"))?;
    if let Ok(candidate) = repunit_jump(d) {
        if let Ok(candidate) = DyckNumber::new(candidate) {
            if candidate.bit_length() <= MAX_RANGE && indexing::rank(candidate) == next_rank {
                return Ok(candidate);
            }
        }
    }
    indexing::term_at(next_rank)
}

/// The smallest member of range `n`.
pub fn first_of_range(n: u32) -> Result<DyckNumber> {
    match n {
        0 => Err(Error::OutOfDomain {
            op: "first_of_range",
            value: 0,
        }),
        1 => Ok(DyckNumber::ONE),
        _ => successor(DyckNumber(mersenne(n - 1)?)),
    }
}

/// Ascending iterator over members, driven by [`successor`].
#[derive(Debug, Clone)]
pub struct Terms {
    next: Option<DyckNumber>,
    last: u64,
}

impl Iterator for Terms {
    type Item = DyckNumber;

    fn next(&mut self) -> Option<DyckNumber> {
        let current = self.next?;
        self.next = if current.get() >= self.last {
            None
        } else {
            successor(current).ok()
        };
        Some(current)
    }
}

/// All members starting at `from`, up to and including the Mersenne number
/// `2^63 - 1`.
pub fn terms_from(from: DyckNumber) -> Terms {
    Terms {
        next: Some(from),
        last: (1u64 << MAX_RANGE) - 1,
    }
}

/// Members of range `n` in ascending order.
pub fn iter_range(n: u32) -> Result<Terms> {
    let first = first_of_range(n)?;
    Ok(Terms {
        next: Some(first),
        last: mersenne(n)?,
    })
}

/// The first `limit` members in ascending order.
pub fn enumerate_terms(limit: usize) -> std::iter::Take<Terms> {
    terms_from(DyckNumber::ONE).take(limit)
}
