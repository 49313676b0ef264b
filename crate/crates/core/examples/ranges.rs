//! Walk the first few ranges: size, first and last member, and the
//! triplet/lone split.
//!
//!     cargo run --example ranges -- 12

use dyck_numbers::sequence::{first_of_range, iter_range, mersenne};
use dyck_numbers::triplets::{predicted_lone_count, range_census};

fn main() -> dyck_numbers::Result<()> {
    let top: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);

    println!(
        "{:>3} {:>7} {:>9} {:>9} {:>8} {:>6} {:>9}",
        "n", "size", "first", "last", "triplets", "lone", "predicted"
    );
    for n in 1..=top {
        let c = range_census(n)?;
        let predicted = if n >= 4 {
            predicted_lone_count(n)?.to_string()
        } else {
            "-".into()
        };
        println!(
            "{:>3} {:>7} {:>9} {:>9} {:>8} {:>6} {:>9}",
            n,
            c.size,
            first_of_range(n)?,
            mersenne(n)?,
            c.triplets,
            c.lone,
            predicted
        );
    }

    let members: Vec<String> = iter_range(6)?.map(|d| d.to_string()).collect();
    println!("\nrange 6: {}", members.join(" "));
    Ok(())
}
