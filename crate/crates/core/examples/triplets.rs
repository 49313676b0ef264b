//! Triplets (4d-1, 4d+1, 4d+3), their parents, and the lone terms left over.
//!
//!     cargo run --example triplets -- 8

use dyck_numbers::triplets::{child, lone_terms_in_range, triplet_of, triplets_in_range};
use dyck_numbers::DyckNumber;

fn main() -> dyck_numbers::Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(8);

    for t in triplets_in_range(n)? {
        println!("{t}  <- parent {}", t.parent());
    }
    let lone: Vec<String> = lone_terms_in_range(n)?
        .iter()
        .map(|d| d.to_string())
        .collect();
    println!("lone in range {n}: {}", lone.join(" "));

    let d = DyckNumber::new(39)?;
    println!("\nchild(39) = {}", child(d)?);
    for v in [157, 39] {
        match triplet_of(DyckNumber::new(v)?) {
            Some(t) => println!("{v} sits in {t}"),
            None => println!("{v} is in no triplet"),
        }
    }
    Ok(())
}
