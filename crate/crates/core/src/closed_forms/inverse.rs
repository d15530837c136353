//! The inverse map and the suffix permutations.
//!
//! Bit `k` of `s(n)` is bit `k` of `n + k`, which depends only on `n` mod
//! `2^(k+1)`. So the last `k` bits of `s(n)` are a function of the last `k`
//! bits of `n`, and because `s` is injective on residues that function is a
//! permutation. Inverting it one bit at a time recovers `n` mod `2^K` from
//! `s(n)`, which is how [`s_inverse`] works.

use num_traits::{ToPrimitive, Zero};

use super::{pow2, s_ext, s_word};
use crate::{Error, Int, Natural, Result};

/// The unique integer `n` with `s(n) = m`.
///
/// Determines `n` mod `2^K` bit by bit for `K = bitlen(m) + 3`, then picks
/// the representative. Every preimage lies in `[-(bitlen(m) + 2), m]`, which
/// that modulus separates cleanly.
pub fn s_inverse(m: &Natural) -> Int {
    let width = m.bits() + 3;
    let mut residue = Natural::zero();
    for k in 0..width {
        // choose bit k of n so that bit k of n + k matches bit k of m
        let with_zero = (&residue + k).bit(k);
        if with_zero != m.bit(k) {
            residue.set_bit(k, true);
        }
    }
    if &residue <= m {
        Int::from(residue)
    } else {
        Int::from(residue) - Int::from(pow2(width))
    }
}

/// Bounded linear search for the preimage of `m`, used as an oracle for
/// [`s_inverse`]. Scans `[-(bitlen(m) + 2), m]`.
pub fn s_inverse_search(m: &Natural) -> Int {
    let lowest = -(m.bits() as i64 + 2);
    if let Some(top) = m.to_u64().filter(|&v| v < 1 << 62) {
        // s(n) >= n and s(-k) >= 2^(k-1), so the word range covers everything
        if let Some(n) = (0..=top).find(|&n| s_word(n) == top) {
            return Int::from(n);
        }
        let hit = (lowest..0)
            .find(|&n| &s_ext(&Int::from(n)) == m)
            .expect("s is a bijection from the integers onto the naturals");
        return Int::from(hit);
    }
    let mut n = Int::from(lowest);
    let upper = Int::from(m.clone());
    while n <= upper {
        if &s_ext(&n) == m {
            return n;
        }
        n += 1u32;
    }
    panic!("no preimage for {m}; s is a bijection, so this is a bug");
}

/// Default bound on the suffix length for [`suffix_perm`].
pub const SUFFIX_PERM_MAX: u32 = 20;

/// The permutation relating the last `k` bits of `s(n)` to those of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationTable {
    k: u32,
    // indexed by the suffix of s(n); holds the suffix of n
    table: Vec<u64>,
}

impl PermutationTable {
    pub fn k(&self) -> u32 {
        self.k
    }

    /// The residue of `n` mod `2^k` for which `s(n)` ends in `u`.
    pub fn n_suffix(&self, u: u64) -> u64 {
        self.table[u as usize]
    }

    /// The residue of `s(n)` mod `2^k` for `n` ending in `r`.
    pub fn s_suffix(&self, r: u64) -> u64 {
        self.table
            .iter()
            .position(|&x| x == r)
            .expect("table is a bijection") as u64
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.table
    }

    /// Whether truncating the top bit of every entry yields `shorter`.
    pub fn restricts_to(&self, shorter: &PermutationTable) -> bool {
        if shorter.k + 1 != self.k {
            return false;
        }
        let mask = (1u64 << shorter.k) - 1;
        self.table
            .iter()
            .enumerate()
            .all(|(u, &r)| shorter.table[u & mask as usize] == r & mask)
    }
}

pub fn suffix_perm(k: u32) -> Result<PermutationTable> {
    suffix_perm_bounded(k, SUFFIX_PERM_MAX)
}

/// Builds the length-`k` suffix permutation from `s` on `0..2^k`, then checks
/// it is a bijection and that the next period `2^k..2^(k+1)` induces the
/// same suffixes.
pub fn suffix_perm_bounded(k: u32, max_k: u32) -> Result<PermutationTable> {
    if k == 0 || k > max_k {
        return Err(Error::domain(format!(
            "suffix length {k} outside 1..={max_k}"
        )));
    }
    let period = 1u64 << k;
    let mask = period - 1;
    let mut table = vec![u64::MAX; period as usize];
    for r in 0..period {
        let u = s_word(r) & mask;
        if table[u as usize] != u64::MAX {
            return Err(Error::Invariant(format!(
                "residues {} and {r} share the suffix {u} of s",
                table[u as usize]
            )));
        }
        table[u as usize] = r;
    }
    for r in period..2 * period {
        if s_word(r) & mask != s_word(r - period) & mask {
            return Err(Error::Invariant(format!(
                "suffix of s({r}) differs from s({}) mod 2^{k}",
                r - period
            )));
        }
    }
    Ok(PermutationTable { k, table })
}
