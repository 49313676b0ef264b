//! Primality, Dyck primes, and prime-triplet censuses.
//!
//! Any three consecutive odd numbers include a multiple of 3, so a triplet
//! holding two primes (above `(3, 5, 7)`) holds exactly two, and they form
//! either a twin pair (gap 2) or a cousin pair (gap 4).

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::forest::{check_depth, tree_level};
use crate::sequence::{is_dyck, terms_from, DyckNumber};
use crate::triplets::{spawn_triplet, triplets_in_range, Triplet};

const WITNESSES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic strong-probable-prime test, exact for every `u64`.
///
/// The seven-witness set is known to have no strong pseudoprimes below 2^64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes up to and including `limit`, by the sieve of Eratosthenes.
pub fn sieve(limit: usize) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; limit + 1];
    let mut i = 2;
    while i * i <= limit {
        if !composite[i] {
            (i * i..=limit).step_by(i).for_each(|j| composite[j] = true);
        }
        i += 1;
    }
    (2..=limit)
        .filter(|&k| !composite[k])
        .map(|k| k as u64)
        .collect()
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    if count == 0 {
        return Vec::new();
    }
    // p_n < n (ln n + ln ln n) for n >= 6
    let n = count.max(6) as f64;
    let bound = (n * (n.ln() + n.ln().ln())).ceil() as usize;
    let mut primes = sieve(bound);
    primes.truncate(count);
    primes
}

/// Members that are prime, in ascending order.
pub fn dyck_primes() -> impl Iterator<Item = DyckNumber> {
    terms_from(DyckNumber::ONE).filter(|d| is_prime(d.get()))
}

/// Dyck primes not exceeding `limit`.
pub fn dyck_primes_up_to(limit: u64) -> Vec<u64> {
    dyck_primes()
        .map(u64::from)
        .take_while(|&v| v <= limit)
        .collect()
}

/// How many of `values` are Dyck numbers.
pub fn count_dyck(values: &[u64]) -> usize {
    values.iter().filter(|&&v| is_dyck(v)).count()
}

/// Gap between the two primes of a prime triplet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PrimeGap {
    Twin,
    Cousin,
}

/// A triplet together with the primality of each member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeTripletRecord {
    pub triplet: Triplet,
    pub prime_mask: [bool; 3],
}

impl PrimeTripletRecord {
    pub fn prime_count(&self) -> usize {
        self.prime_mask.iter().filter(|&&p| p).count()
    }

    /// At least two members are prime.
    pub fn is_prime_triplet(&self) -> bool {
        self.prime_count() >= 2
    }

    /// Twin if two adjacent members are prime, cousin if only the outer two.
    pub fn gap(&self) -> Option<PrimeGap> {
        match self.prime_mask {
            [true, true, _] | [_, true, true] => Some(PrimeGap::Twin),
            [true, false, true] => Some(PrimeGap::Cousin),
            _ => None,
        }
    }

    /// Members with non-primes replaced by zero.
    pub fn masked_values(&self) -> [u64; 3] {
        let v = self.triplet.values();
        [0, 1, 2].map(|i| if self.prime_mask[i] { v[i] } else { 0 })
    }

    /// `a/b/c` with non-primes shown as 0, e.g. `11/13/0`.
    pub fn masked(&self) -> String {
        let [a, b, c] = self.masked_values();
        format!("{a}/{b}/{c}")
    }
}

impl fmt::Display for PrimeTripletRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.masked())
    }
}

pub fn classify_triplet(t: Triplet) -> PrimeTripletRecord {
    PrimeTripletRecord {
        triplet: t,
        prime_mask: t.values().map(is_prime),
    }
}

/// Prime triplets lying inside range `n`.
pub fn prime_triplets_in_range(n: u32) -> Result<Vec<PrimeTripletRecord>> {
    Ok(triplets_in_range(n)?
        .into_iter()
        .map(classify_triplet)
        .filter(PrimeTripletRecord::is_prime_triplet)
        .collect())
}

/// Prime triplets among the sibling groups at `depth` below `root`.
pub fn prime_triplets_in_tree(root: DyckNumber, depth: u32) -> Result<Vec<PrimeTripletRecord>> {
    if depth == 0 {
        // still validates the root
        tree_level(root, 0)?;
        return Ok(Vec::new());
    }
    check_depth(root, depth)?;
    let parents = tree_level(root, depth - 1)?;
    let mut out = Vec::new();
    for p in parents {
        let rec = classify_triplet(spawn_triplet(p)?);
        if rec.is_prime_triplet() {
            out.push(rec);
        }
    }
    Ok(out)
}

/// Twin and cousin counts among a range's prime triplets.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GapCensus {
    pub twin: u64,
    pub cousin: u64,
}

impl GapCensus {
    pub fn tally(records: &[PrimeTripletRecord]) -> GapCensus {
        records.iter().fold(GapCensus::default(), |mut acc, r| {
            match r.gap() {
                Some(PrimeGap::Twin) => acc.twin += 1,
                Some(PrimeGap::Cousin) => acc.cousin += 1,
                None => {}
            }
            acc
        })
    }

    pub fn total(&self) -> u64 {
        self.twin + self.cousin
    }
}

pub fn gap_census(n: u32) -> Result<GapCensus> {
    Ok(GapCensus::tally(&prime_triplets_in_range(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: u64) -> DyckNumber {
        DyckNumber::new(v).unwrap()
    }

    fn trial_division(n: u64) -> bool {
        n >= 2
            && (2..)
                .take_while(|k| k * k <= n)
                .all(|k| !n.is_multiple_of(k))
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(61));
        assert!(!is_prime(63));
        assert!(is_prime(4192757));
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        // largest prime below 2^64
        assert!(is_prime(18446744073709551557));
        // strong pseudoprime to bases 2, 3, 5, 7
        assert!(!is_prime(3215031751));
        assert!(!is_prime(4294967297));
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..200_000 {
            assert_eq!(is_prime(n), trial_division(n), "{n}");
        }
    }

    #[test]
    fn sieve_agrees() {
        let s = sieve(10_000);
        let t: Vec<u64> = (0..=10_000).filter(|&n| trial_division(n)).collect();
        assert_eq!(s, t);
        assert_eq!(first_primes(10), [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(first_primes(1000).last(), Some(&7919));
    }

    #[test]
    fn dyck_prime_lists() {
        assert_eq!(dyck_primes_up_to(31), [3, 5, 7, 11, 13, 19, 23, 29, 31]);
        assert_eq!(dyck_primes_up_to(109).len(), 20);
        assert!(dyck_primes_up_to(2).is_empty());
    }

    #[test]
    fn record_verdicts() {
        let rec = |h| classify_triplet(Triplet::from_high(h).unwrap());
        let r = rec(15);
        assert!(r.is_prime_triplet());
        assert_eq!(r.prime_mask, [true, true, false]);
        assert_eq!(r.masked(), "11/13/0");
        let r = rec(23);
        assert_eq!(r.prime_mask, [true, false, true]);
        assert_eq!(r.gap(), Some(PrimeGap::Cousin));
        assert!(!rec(159).is_prime_triplet());
        assert_eq!(rec(159).gap(), None);
    }

    #[test]
    fn range_records() {
        let r4 = prime_triplets_in_range(4).unwrap();
        assert_eq!(r4.len(), 1);
        assert_eq!(r4[0].triplet.values(), [11, 13, 15]);
        let r9 = prime_triplets_in_range(9).unwrap();
        assert_eq!(r9.len(), 5);
        assert_eq!(r9[0].masked(), "307/0/311");
    }

    #[test]
    fn tree_records() {
        let t3: Vec<[u64; 3]> = prime_triplets_in_tree(d(39), 3)
            .unwrap()
            .iter()
            .map(|r| r.triplet.values())
            .collect();
        assert_eq!(t3, [[2539, 2541, 2543], [2547, 2549, 2551]]);
        assert!(prime_triplets_in_tree(d(39), 0).unwrap().is_empty());
        assert!(prime_triplets_in_tree(d(45), 2).is_err());
    }

    #[test]
    fn gap_censuses() {
        assert_eq!(gap_census(4), Ok(GapCensus { twin: 1, cousin: 0 }));
        assert_eq!(gap_census(5), Ok(GapCensus { twin: 1, cousin: 1 }));
        assert_eq!(gap_census(7), Ok(GapCensus { twin: 1, cousin: 0 }));
    }
}
