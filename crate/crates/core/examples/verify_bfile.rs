//! Cross-check a b-file against the local generators.
//!
//!     cargo run --example verify_bfile -- tests/data/b036991.txt a036991
//!
//! Without arguments a short A036991 prefix is built in memory, checked, then
//! corrupted and checked again.

use std::fs::File;
use std::io::BufReader;

use dyck_numbers::oeis::{
    parse_bfile, read_bfile, verify_prefix, write_bfile, BFileEntry, Sequence,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [path, name] = args.as_slice() {
        let seq: Sequence = name.parse()?;
        let entries = read_bfile(BufReader::new(File::open(path)?))?;
        println!("{path}: {:?}", verify_prefix(&entries, seq)?);
        return Ok(());
    }

    let entries: Vec<BFileEntry> = (1..=20)
        .map(|i| Sequence::A036991.expected(i).map(|v| BFileEntry::new(i, v)))
        .collect::<Result<_, _>>()?;
    let text = write_bfile(&entries);
    print!("{text}");
    println!(
        "{:?}",
        verify_prefix(&parse_bfile(&text)?, Sequence::A036991)?
    );

    let mut bad = entries.clone();
    bad[11].value += 2;
    println!("{:?}", verify_prefix(&bad, Sequence::A036991)?);
    Ok(())
}
