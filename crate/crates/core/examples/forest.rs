//! The ternary forest: every lone term roots a tree whose levels are
//! triplets spawned two ranges down.
//!
//!     cargo run --example forest -- 39 3

use dyck_numbers::forest::{ancestry, classify, levels, roots_in_range, TreePath};
use dyck_numbers::DyckNumber;

fn main() -> dyck_numbers::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let root = args.next().flatten().unwrap_or(39);
    let depth = args.next().flatten().unwrap_or(3) as usize;

    let root = DyckNumber::new(root)?;
    for (k, level) in levels(root)?.take(depth + 1).enumerate() {
        let shown: Vec<String> = level.iter().take(9).map(|d| d.to_string()).collect();
        let more = if level.len() > 9 { " ..." } else { "" };
        println!(
            "depth {k} ({} nodes): {}{more}",
            level.len(),
            shown.join(" ")
        );
    }

    for n in 6..=9 {
        let roots: Vec<String> = roots_in_range(n)?.iter().map(|d| d.to_string()).collect();
        println!("roots of range {n}: {}", roots.join(" "));
    }

    let node = DyckNumber::new(623)?;
    let chain: Vec<String> = ancestry(node).iter().map(|d| d.to_string()).collect();
    println!(
        "\n{node} is a {:?}; ancestry {}",
        classify(node),
        chain.join(" -> ")
    );
    println!("path {}", TreePath::locate(node));
    Ok(())
}
