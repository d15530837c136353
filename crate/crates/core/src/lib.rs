//! Sloping binary numbers.
//!
//! Write the binary expansions of 0, 1, 2, ... one per row, right-adjusted,
//! and read the array along diagonals. The upward-sloping reading gives
//! `s(n)` (0, 3, 6, 5, 4, 15, 10, ...), the downward one gives `d(n)`, and the
//! numbers never produced by `s` are the missing numbers `t(n)`.
//!
//! The crate is organised as mutually checking layers:
//!
//! * [`binary_grid`] reads the array literally, bit by bit. It is slow and
//!   obviously correct, and serves as the ground-truth oracle.
//! * [`closed_forms`] evaluates the same sequences through signed sums,
//!   congruence sums, and recurrences, and derives the related sequences
//!   (inverse map, record values, permutations, term counts).
//! * [`analysis`] covers dynamics: trajectories under `n -> s(n)`, model
//!   sequences, fixed points, unboundedness witnesses, and averages.
//! * [`cli`] holds the sequence registry, b-file interchange and the
//!   verification suites driven by the `sloping` binary.

pub mod analysis;
pub mod binary_grid;
pub mod cli;
pub mod closed_forms;
mod error;

pub use error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Natural = num_bigint::BigUint;

/// Arbitrary-precision signed integer. Negative values are viewed in
/// 2's complement, i.e. with infinitely many leading 1 bits.
pub type Int = num_bigint::BigInt;

/// Number of significant bits of `n`; zero has length 0.
pub(crate) fn bitlen_word(n: u64) -> u32 {
    64 - n.leading_zeros()
}
