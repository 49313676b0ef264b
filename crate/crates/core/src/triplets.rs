//! Triplets `(t-4, t-2, t)` with `t ≡ 7 (mod 8)`, the maps that create and
//! invert them, and the per-range split into triplets and lone terms.
//!
//! A term `d` spawns the triplet `(4d-1, 4d+1, 4d+3)` two ranges higher;
//! dropping the last three bits of any triplet member and appending a 1
//! recovers `d`. Inside range `n >= 4` this is a bijection with range `n-2`,
//! and the members left over are the lone terms.

use std::fmt;

use crate::error::{overflow, Error, Result};
use crate::sequence::{is_dyck, iter_range, range_size, DyckNumber};

/// Three consecutive odd members ending in binary `111`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triplet {
    low: DyckNumber,
    mid: DyckNumber,
    high: DyckNumber,
}

impl Triplet {
    /// The triplet whose largest member is `high`, if all three are members.
    pub fn from_high(high: u64) -> Option<Triplet> {
        if high & 7 != 7 || !is_dyck(high - 4) {
            return None;
        }
        // a member ending in 011 makes the 101 and 111 variants members too
        Some(Triplet {
            low: DyckNumber::new_unchecked(high - 4),
            mid: DyckNumber::new_unchecked(high - 2),
            high: DyckNumber::new_unchecked(high),
        })
    }

    pub fn low(&self) -> DyckNumber {
        self.low
    }

    pub fn mid(&self) -> DyckNumber {
        self.mid
    }

    pub fn high(&self) -> DyckNumber {
        self.high
    }

    pub fn members(&self) -> [DyckNumber; 3] {
        [self.low, self.mid, self.high]
    }

    pub fn values(&self) -> [u64; 3] {
        [self.low.get(), self.mid.get(), self.high.get()]
    }

    /// The term that spawns this triplet.
    pub fn parent(&self) -> DyckNumber {
        DyckNumber::new_unchecked(2 * (self.high.get() / 8) + 1)
    }

    pub fn contains(&self, v: u64) -> bool {
        self.values().contains(&v)
    }
}

impl fmt::Display for Triplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.low, self.mid, self.high)
    }
}

/// `2d + 1`, a member of the next range.
pub fn child(d: DyckNumber) -> Result<DyckNumber> {
    d.get()
        .checked_mul(2)
        .and_then(|x| x.checked_add(1))
        .filter(|&x| x >> 63 == 0)
        .map(DyckNumber::new_unchecked)
        .ok_or_else(|| overflow("child"))
}

/// `(d - 1) / 2` when that is again a member.
pub fn parent_unary(d: DyckNumber) -> Option<DyckNumber> {
    DyckNumber::new(d.get() >> 1).ok()
}

/// `(4d - 1, 4d + 1, 4d + 3)`.
pub fn spawn_triplet(d: DyckNumber) -> Result<Triplet> {
    let high = d
        .get()
        .checked_mul(4)
        .and_then(|x| x.checked_add(3))
        .filter(|&x| x >> 63 == 0)
        .ok_or_else(|| overflow("spawn_triplet"))?;
    Ok(Triplet {
        low: DyckNumber::new_unchecked(high - 4),
        mid: DyckNumber::new_unchecked(high - 2),
        high: DyckNumber::new_unchecked(high),
    })
}

/// The detected triplet containing `d`, if any.
pub fn triplet_of(d: DyckNumber) -> Option<Triplet> {
    let v = d.get();
    let high = match v & 7 {
        3 => v.checked_add(4)?,
        5 => v.checked_add(2)?,
        7 => v,
        _ => return None,
    };
    Triplet::from_high(high)
}

/// `2 * (x / 8) + 1` for any member `x` of a triplet.
pub fn triplet_parent(x: DyckNumber) -> Result<DyckNumber> {
    triplet_of(x)
        .map(|t| t.parent())
        .ok_or(Error::NotInTriplet(x.get()))
}

/// Like [`triplet_parent`] for a raw value.
pub fn triplet_parent_value(x: u64) -> Result<DyckNumber> {
    let d = DyckNumber::new(x).map_err(|_| Error::NotInTriplet(x))?;
    triplet_parent(d)
}

/// Triplets lying entirely inside range `n`.
///
/// Ranges 1 to 3 report none: `(3, 5, 7)` straddles ranges 2 and 3.
pub fn triplets_in_range(n: u32) -> Result<Vec<Triplet>> {
    if n < 4 {
        // validate n even though the answer is fixed
        range_size(n)?;
        return Ok(Vec::new());
    }
    Ok(iter_range(n)?
        .filter(|d| d.get() & 7 == 7)
        .filter_map(|d| Triplet::from_high(d.get()))
        .collect())
}

/// Members of range `n` outside every triplet. The base root 1 is excluded.
pub fn lone_terms_in_range(n: u32) -> Result<Vec<DyckNumber>> {
    Ok(iter_range(n)?
        .filter(|&d| d != DyckNumber::ONE && triplet_of(d).is_none())
        .collect())
}

/// Lone-term count implied by range sizes: `|D_n| - 3 |D_{n-2}|`.
pub fn predicted_lone_count(n: u32) -> Result<u64> {
    if n < 4 {
        return Err(Error::OutOfDomain {
            op: "predicted_lone_count",
            value: i64::from(n),
        });
    }
    Ok(range_size(n)? - 3 * range_size(n - 2)?)
}

/// Split of a range into triplets and lone terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeCensus {
    pub range: u32,
    pub size: u64,
    pub triplets: u64,
    pub lone: u64,
}

pub fn range_census(n: u32) -> Result<RangeCensus> {
    let size = range_size(n)?;
    let mut triplets = 0;
    let mut lone = 0;
    for d in iter_range(n)? {
        if d == DyckNumber::ONE {
            continue;
        }
        match triplet_of(d) {
            Some(t) if n >= 4 && t.high() == d => triplets += 1,
            Some(_) => {}
            None => lone += 1,
        }
    }
    Ok(RangeCensus {
        range: n,
        size,
        triplets,
        lone,
    })
}
