//! Ballot-number table and rank/unrank in the global 1-based order.
//!
//! `N(k, s)` counts binary words of length `k` whose running balance, read
//! right to left (+1 per 1-bit, -1 per 0-bit), never drops below zero and
//! finishes at `s`. A member of range `n` is a 1-bit on top of such a word of
//! length `n - 1`, so the table answers every "how many completions" question
//! needed to rank a term by walking its bits from the top.

use std::sync::OnceLock;

use crate::error::{overflow, Error, Result};
use crate::sequence::{cumulative_size, is_dyck, range_size, DyckNumber, MAX_RANGE};

/// Longest word length held in the shared table.
pub const TABLE_LENGTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallotTable {
    // rows[k][s], 0 <= s <= k
    rows: Vec<Vec<u64>>,
}

impl BallotTable {
    /// Builds rows `0..=max_length` from the recurrence
    /// `N(k, s) = N(k-1, s-1) + N(k-1, s+1)`.
    pub fn new(max_length: usize) -> Self {
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(max_length + 1);
        rows.push(vec![1]);
        for k in 1..=max_length {
            let prev = &rows[k - 1];
            let row = (0..=k)
                .map(|s| {
                    let from_below = if s >= 1 {
                        prev.get(s - 1).copied().unwrap_or(0)
                    } else {
                        0
                    };
                    let from_above = prev.get(s + 1).copied().unwrap_or(0);
                    from_below + from_above
                })
                .collect();
            rows.push(row);
        }
        BallotTable { rows }
    }

    /// The process-wide table of length [`TABLE_LENGTH`].
    pub fn shared() -> &'static BallotTable {
        static TABLE: OnceLock<BallotTable> = OnceLock::new();
        TABLE.get_or_init(|| BallotTable::new(TABLE_LENGTH))
    }

    pub fn max_length(&self) -> usize {
        self.rows.len() - 1
    }

    /// `N(k, s)`; zero for `s` outside `0..=k` or of the wrong parity.
    pub fn count(&self, k: usize, s: i64) -> Result<u64> {
        let row = self.rows.get(k).ok_or(Error::BeyondTable(k))?;
        if s < 0 {
            return Ok(0);
        }
        Ok(row.get(s as usize).copied().unwrap_or(0))
    }

    /// Row `k` as a slice indexed by final balance.
    pub fn row(&self, k: usize) -> Result<&[u64]> {
        self.rows
            .get(k)
            .map(Vec::as_slice)
            .ok_or(Error::BeyondTable(k))
    }

    /// `Σ_{s >= min_end} N(k, s)`.
    fn tail_sum(&self, k: usize, min_end: i64) -> u64 {
        let start = min_end.max(0) as usize;
        self.rows[k].iter().skip(start).sum()
    }
}

/// `N(k, s)` from the shared table.
pub fn ballot_count(k: usize, s: i64) -> Result<u64> {
    BallotTable::shared().count(k, s)
}

/// 1-based position of `d` among all members in ascending order.
pub fn rank(d: DyckNumber) -> u64 {
    let v = d.get();
    let len = d.bit_length();
    let table = BallotTable::shared();
    // bit-lengths of members never exceed 64, so the prefix sum is in range
    let mut position = cumulative_size(len - 1).expect("prefix fits in u64");

    // suffix_min: minimum of the partial sums of the fixed bits above the
    // current position, read upward (0 once the walk is above the top)
    let mut suffix_min: i64 = 0;
    for i in (0..len as usize).rev() {
        let bit_set = (v >> i) & 1 == 1;
        if bit_set && i + 1 < len as usize {
            // words agreeing above i, with a 0 at i and a free tail of i bits
            let with_zero = -1 + suffix_min.min(0);
            position += table.tail_sum(i, -with_zero);
        }
        let step = if bit_set { 1 } else { -1 };
        suffix_min = step + suffix_min.min(0);
    }
    position + 1
}

/// Index of `d` in OEIS A036991, whose first entry a(1) is the null term 0.
pub fn oeis_index(d: DyckNumber) -> u64 {
    rank(d) + 1
}

/// The member with OEIS A036991 index `index` (2 or more; index 1 is 0).
pub fn from_oeis_index(index: u64) -> Result<DyckNumber> {
    match index {
        0 | 1 => Err(Error::OutOfDomain {
            op: "from_oeis_index",
            value: index as i64,
        }),
        _ => term_at(index - 1),
    }
}

/// Like [`rank`], but for a raw value that may not be a member.
pub fn rank_value(v: u64) -> Result<u64> {
    DyckNumber::new(v).map(rank)
}

/// The member at 1-based position `i`.
pub fn term_at(i: u64) -> Result<DyckNumber> {
    if i == 0 {
        return Err(Error::OutOfDomain {
            op: "term_at",
            value: 0,
        });
    }
    let table = BallotTable::shared();

    let mut remaining = i;
    let mut len = 1u32;
    loop {
        if len > MAX_RANGE {
            return Err(overflow("term_at"));
        }
        let size = range_size(len)?;
        if remaining <= size {
            break;
        }
        remaining -= size;
        len += 1;
    }

    let mut value: u64 = 1 << (len - 1);
    let mut suffix_min: i64 = 1;
    for p in (0..(len - 1) as usize).rev() {
        let with_zero = -1 + suffix_min.min(0);
        let zero_count = table.tail_sum(p, -with_zero);
        if remaining <= zero_count {
            suffix_min = with_zero;
        } else {
            remaining -= zero_count;
            value |= 1 << p;
            suffix_min = 1 + suffix_min.min(0);
        }
    }
    debug_assert_eq!(remaining, 1);
    debug_assert!(is_dyck(value));
    Ok(DyckNumber::new_unchecked(value))
}
