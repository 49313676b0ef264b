//! Dyck numbers (OEIS A036991): odd integers whose binary code never has more
//! 0-bits than 1-bits in any suffix.
//!
//! The crate enumerates and ranks the sequence, splits each range (terms of a
//! common bit-length) into triplets `(t-4, t-2, t)` and lone terms, builds the
//! forest of ternary trees rooted at 1 and at the lone terms, and runs the
//! prime-triplet censuses over ranges and trees.
//!
//! ```
//! use dyck_numbers::{indexing, sequence, triplets};
//!
//! let first = sequence::first_of_range(16).unwrap();
//! assert_eq!(first.get(), 33023);
//! assert_eq!(indexing::rank(first), 7061);
//! assert_eq!(indexing::oeis_index(first), 7062);
//! assert_eq!(triplets::lone_terms_in_range(6).unwrap()[0].get(), 39);
//! ```

pub mod cli;
pub mod error;
pub mod forest;
pub mod indexing;
pub mod oeis;
pub mod primes;
pub mod sequence;
pub mod triplets;

pub use error::{Error, Result};
pub use forest::{Branch, NodeKind, TreePath};
pub use indexing::BallotTable;
pub use oeis::{BFileEntry, Sequence, Verification};
pub use primes::{GapCensus, PrimeTripletRecord};
pub use sequence::DyckNumber;
pub use triplets::Triplet;
