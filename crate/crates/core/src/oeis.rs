//! OEIS b-file parsing and cross-checking against locally generated values.
//!
//! A b-file holds one `n a(n)` pair per line. Lines starting with `#` and
//! blank lines are ignored. Indices must be consecutive.

use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::indexing::term_at;
use crate::primes::dyck_primes;
use crate::sequence::central_binomial;
use crate::triplets::predicted_lone_count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BFileEntry {
    pub index: i64,
    pub value: u64,
}

impl BFileEntry {
    pub fn new(index: i64, value: u64) -> Self {
        BFileEntry { index, value }
    }
}

fn parse_line(line: &str, number: usize) -> Result<Option<BFileEntry>> {
    let trimmed = line.trim();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        return Ok(None);
    }
    let malformed = |reason: &str| Error::MalformedLine {
        line: number,
        reason: reason.to_string(),
    };
    let mut fields = trimmed.split_whitespace();
    let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(malformed("expected two fields"));
    };
    let index = index
        .parse::<i64>()
        .map_err(|e| malformed(&format!("bad index `{index}`: {e}")))?;
    let value = value
        .parse::<u64>()
        .map_err(|e| malformed(&format!("bad value `{value}`: {e}")))?;
    Ok(Some(BFileEntry { index, value }))
}

/// Parses b-file text read from `reader`.
pub fn read_bfile<R: BufRead>(reader: R) -> Result<Vec<BFileEntry>> {
    let mut entries: Vec<BFileEntry> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let number = i + 1;
        let line = line.map_err(|e| Error::MalformedLine {
            line: number,
            reason: e.to_string(),
        })?;
        let Some(entry) = parse_line(&line, number)? else {
            continue;
        };
        if let Some(prev) = entries.last() {
            let expected = prev.index + 1;
            if entry.index != expected {
                return Err(Error::NonConsecutive {
                    line: number,
                    expected,
                    found: entry.index,
                });
            }
        }
        entries.push(entry);
    }
    Ok(entries)
}

pub fn parse_bfile(text: &str) -> Result<Vec<BFileEntry>> {
    read_bfile(text.as_bytes())
}

/// Renders entries as `index value` lines.
pub fn write_bfile(entries: &[BFileEntry]) -> String {
    entries
        .iter()
        .map(|e| format!("{} {}\n", e.index, e.value))
        .collect()
}

/// Sequences this crate can regenerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sequence {
    /// Dyck numbers preceded by the null term: a(1) = 0, a(2) = 1, ...
    A036991,
    /// Central binomial coefficients, offset 0.
    A001405,
    /// Lone-term counts, offset 0 (range `n + 4`).
    A116385,
    /// Dyck primes, offset 1.
    A350577,
}

impl Sequence {
    pub const ALL: [Sequence; 4] = [
        Sequence::A036991,
        Sequence::A001405,
        Sequence::A116385,
        Sequence::A350577,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sequence::A036991 => "a036991",
            Sequence::A001405 => "a001405",
            Sequence::A116385 => "a116385",
            Sequence::A350577 => "a350577",
        }
    }

    /// The value this crate generates at OEIS index `index`.
    pub fn expected(self, index: i64) -> Result<u64> {
        let domain = |op| Error::OutOfDomain { op, value: index };
        match self {
            Sequence::A036991 => dyck_at(index, 1),
            Sequence::A001405 => u32::try_from(index)
                .map_err(|_| domain("a001405"))
                .and_then(central_binomial),
            Sequence::A116385 => u32::try_from(index)
                .ok()
                .and_then(|n| n.checked_add(4))
                .ok_or_else(|| domain("a116385"))
                .and_then(predicted_lone_count),
            Sequence::A350577 => {
                let i = usize::try_from(index)
                    .ok()
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| domain("a350577"))?;
                Ok(dyck_primes()
                    .nth(i - 1)
                    .expect("Dyck primes below 2^63")
                    .get())
            }
        }
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sequence> {
        Sequence::ALL
            .into_iter()
            .find(|q| q.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownSequence(s.to_string()))
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification {
    Match {
        checked: usize,
    },
    Mismatch {
        index: i64,
        expected: u64,
        found: u64,
    },
}

impl Verification {
    pub fn is_match(&self) -> bool {
        matches!(self, Verification::Match { .. })
    }
}

/// Compares `entries` with the local generator for `sequence`, stopping at the
/// first disagreement.
///
/// For A036991 a first entry with value 0 is taken as the null term and fixes
/// the index shift, so both `0 0 / 1 1 / 2 3` and the OEIS layout
/// `1 0 / 2 1 / 3 3` are accepted.
pub fn verify_prefix(entries: &[BFileEntry], sequence: Sequence) -> Result<Verification> {
    // A350577 is sequential; generate it once instead of per entry
    if sequence == Sequence::A350577 {
        return verify_dyck_primes(entries);
    }
    // a leading 0 marks where the null term sits; otherwise assume the OEIS
    // offset of 1
    let null_index = match entries.first() {
        Some(e) if e.value == 0 => e.index,
        _ => 1,
    };
    for e in entries {
        let expected = match sequence {
            Sequence::A036991 => dyck_at(e.index, null_index)?,
            _ => sequence.expected(e.index)?,
        };
        if expected != e.value {
            return Ok(Verification::Mismatch {
                index: e.index,
                expected,
                found: e.value,
            });
        }
    }
    Ok(Verification::Match {
        checked: entries.len(),
    })
}

fn verify_dyck_primes(entries: &[BFileEntry]) -> Result<Verification> {
    let Some(first) = entries.first() else {
        return Ok(Verification::Match { checked: 0 });
    };
    let skip = usize::try_from(first.index)
        .ok()
        .filter(|&i| i >= 1)
        .ok_or(Error::OutOfDomain {
            op: "a350577",
            value: first.index,
        })?;
    let generated = dyck_primes().skip(skip - 1);
    for (e, p) in entries.iter().zip(generated) {
        if p.get() != e.value {
            return Ok(Verification::Mismatch {
                index: e.index,
                expected: p.get(),
                found: e.value,
            });
        }
    }
    Ok(Verification::Match {
        checked: entries.len(),
    })
}

// a(null_index) = 0 and a(null_index + k) = k-th member.
fn dyck_at(index: i64, null_index: i64) -> Result<u64> {
    match index.checked_sub(null_index).map(u64::try_from) {
        Some(Ok(0)) => Ok(0),
        Some(Ok(k)) => term_at(k).map(u64::from),
        _ => Err(Error::OutOfDomain {
            op: "a036991",
            value: index,
        }),
    }
}

/// Name-based convenience wrapper around [`verify_prefix`].
pub fn verify_prefix_named(entries: &[BFileEntry], name: &str) -> Result<Verification> {
    verify_prefix(entries, name.parse()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_lines() {
        assert_eq!(
            parse_bfile("0 0\n1 1\n2 3\n").unwrap(),
            [
                BFileEntry::new(0, 0),
                BFileEntry::new(1, 1),
                BFileEntry::new(2, 3)
            ]
        );
        assert_eq!(
            parse_bfile("# comment\n1 1\n").unwrap(),
            [BFileEntry::new(1, 1)]
        );
        assert_eq!(
            parse_bfile("1\t1\n\n2   3").unwrap(),
            [BFileEntry::new(1, 1), BFileEntry::new(2, 3)]
        );
        assert!(parse_bfile("").unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(
            parse_bfile("1 x\n"),
            Err(Error::MalformedLine { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("# a\n1 1\n2\n"),
            Err(Error::MalformedLine { line: 3, .. })
        ));
        assert!(matches!(
            parse_bfile("1 1 1\n"),
            Err(Error::MalformedLine { line: 1, .. })
        ));
        assert_eq!(
            parse_bfile("1 1\n3 5\n"),
            Err(Error::NonConsecutive {
                line: 2,
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn sequence_names() {
        assert_eq!("A036991".parse(), Ok(Sequence::A036991));
        assert_eq!("a350577".parse(), Ok(Sequence::A350577));
        assert_eq!(
            "a000045".parse::<Sequence>(),
            Err(Error::UnknownSequence("a000045".into()))
        );
    }

    #[test]
    fn expected_values() {
        assert_eq!(Sequence::A036991.expected(1), Ok(0));
        assert_eq!(Sequence::A036991.expected(2), Ok(1));
        assert_eq!(Sequence::A036991.expected(7062), Ok(33023));
        assert_eq!(Sequence::A036991.expected(13496), Ok(65535));
        assert_eq!(Sequence::A001405.expected(16), Ok(12870));
        let a116385: Vec<u64> = (0..17)
            .map(|n| Sequence::A116385.expected(n).unwrap())
            .collect();
        assert_eq!(
            a116385,
            [0, 0, 1, 2, 5, 10, 21, 42, 84, 168, 330, 660, 1287, 2574, 5005, 10010, 19448]
        );
        assert_eq!(Sequence::A350577.expected(1), Ok(3));
        assert_eq!(Sequence::A350577.expected(20), Ok(109));
        assert!(Sequence::A350577.expected(0).is_err());
        assert!(Sequence::A036991.expected(0).is_err());
    }

    #[test]
    fn verification() {
        let entries: Vec<_> = (7060..=7063)
            .map(|i| BFileEntry::new(i, Sequence::A036991.expected(i).unwrap()))
            .collect();
        assert_eq!(
            verify_prefix(&entries, Sequence::A036991),
            Ok(Verification::Match { checked: 4 })
        );
        let mut bad = entries.clone();
        bad[2].value = 33024;
        assert_eq!(
            verify_prefix(&bad, Sequence::A036991),
            Ok(Verification::Mismatch {
                index: 7062,
                expected: 33023,
                found: 33024
            })
        );
        assert_eq!(
            verify_prefix(&[], Sequence::A116385),
            Ok(Verification::Match { checked: 0 })
        );
        assert!(verify_prefix_named(&entries, "nope").is_err());
    }

    #[test]
    fn null_term_offsets() {
        let zero_based = parse_bfile("0 0\n1 1\n2 3\n3 5\n").unwrap();
        assert!(verify_prefix(&zero_based, Sequence::A036991)
            .unwrap()
            .is_match());
        let one_based = parse_bfile("1 0\n2 1\n3 3\n4 5\n").unwrap();
        assert!(verify_prefix(&one_based, Sequence::A036991)
            .unwrap()
            .is_match());
        let window = parse_bfile("7062 33024\n").unwrap();
        assert_eq!(
            verify_prefix(&window, Sequence::A036991),
            Ok(Verification::Mismatch {
                index: 7062,
                expected: 33023,
                found: 33024
            })
        );
    }

    #[test]
    fn dyck_prime_window() {
        let entries = parse_bfile("18 103\n19 107\n20 109\n").unwrap();
        assert!(verify_prefix(&entries, Sequence::A350577)
            .unwrap()
            .is_match());
        let entries = parse_bfile("18 103\n19 107\n20 113\n").unwrap();
        assert_eq!(
            verify_prefix(&entries, Sequence::A350577),
            Ok(Verification::Mismatch {
                index: 20,
                expected: 109,
                found: 113
            })
        );
    }
}
