//! Prime triplets per range with their twin/cousin split, plus a prime
//! triplet search inside one tree.
//!
//!     cargo run --release --example prime_census -- 22

use dyck_numbers::forest::roots_in_range;
use dyck_numbers::primes::{
    count_dyck, first_primes, gap_census, prime_triplets_in_range, prime_triplets_in_tree,
};

fn main() -> dyck_numbers::Result<()> {
    let top: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(16);

    println!("{:>3} {:>8} {:>6} {:>7}", "n", "triplets", "twin", "cousin");
    for n in 4..=top {
        let c = gap_census(n)?;
        println!("{n:>3} {:>8} {:>6} {:>7}", c.total(), c.twin, c.cousin);
    }

    let shown: Vec<String> = prime_triplets_in_range(8)?
        .iter()
        .map(|r| r.masked())
        .collect();
    println!("\nrange 8: {}", shown.join(", "));

    for root in roots_in_range(7)? {
        for depth in 1..=4 {
            let found = prime_triplets_in_tree(root, depth)?;
            if !found.is_empty() {
                let shown: Vec<String> = found.iter().map(|r| r.masked()).collect();
                println!("tree {root}, depth {depth}: {}", shown.join(", "));
            }
        }
    }

    let primes = first_primes(10_000);
    println!(
        "\n{} of the first {} primes are Dyck numbers",
        count_dyck(&primes),
        primes.len()
    );
    Ok(())
}
