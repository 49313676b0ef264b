//! Rank and unrank through the ballot table, and the OEIS index offset.
//!
//!     cargo run --example rank_unrank -- 33023

use dyck_numbers::indexing::{ballot_count, oeis_index, rank_value, term_at};
use dyck_numbers::sequence::{cumulative_size, enumerate_terms};
use dyck_numbers::DyckNumber;

fn main() -> dyck_numbers::Result<()> {
    let v: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(65535);

    let d = DyckNumber::new(v)?;
    let r = rank_value(v)?;
    println!(
        "{v}: position {r} among members, A036991 index {}",
        oeis_index(d)
    );
    println!("term_at({r}) = {}", term_at(r)?);

    // the first few positions, checked against plain enumeration
    for (i, t) in enumerate_terms(12).enumerate() {
        assert_eq!(term_at(i as u64 + 1)?, t);
    }

    println!("\nN(k, s) for k < 9:");
    for k in 0..9 {
        let row: Vec<String> = (0..=k as i64)
            .map(|s| ballot_count(k, s).unwrap().to_string())
            .collect();
        println!("  k={k}: {}", row.join(" "));
    }

    let last = cumulative_size(63)?;
    println!(
        "\n{last} members fit in 63 bits; the last is {}",
        term_at(last)?
    );
    Ok(())
}
