//! Fixed points of `s`.
//!
//! `s(n) = n` exactly when no `k >= 1` has `n + k ≡ 0 (mod 2^k)`. The cases
//! `k = 1, 2` force `n ≡ 0 (mod 4)`; among the rest only `k = 4r` can still
//! hit, which is membership in `Q_r = {2^(4r) j - 4r : j >= 1}`.

use rayon::prelude::*;

use crate::closed_forms::{nat_divisible_by_pow2, pow2, s_eval, s_word, t_eval, EvalMethod};
use crate::{Error, Natural, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedMethod {
    /// Evaluate `s(n)` and compare.
    Direct,
    /// `n ≡ 0 (mod 4)` and `n` outside every `Q_r`.
    Theorem,
}

/// The progression `Q_r = {2^(4r) j - 4r : j >= 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QrProgression {
    pub r: u64,
}

impl QrProgression {
    pub fn new(r: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::domain("Q_r is indexed from r = 1"));
        }
        Ok(QrProgression { r })
    }

    fn shift(&self) -> u64 {
        4 * self.r
    }

    pub fn least_member(&self) -> Natural {
        pow2(self.shift()) - self.shift()
    }

    pub fn contains(&self, n: &Natural) -> bool {
        let k = self.shift();
        let shifted = n + k;
        nat_divisible_by_pow2(&shifted, k) && shifted >= pow2(k)
    }

    /// Whether `t(4r) = 2^(4r) - 4r`. Progressions failing this are contained
    /// in some `Q_s` with `s < r` and add nothing to the exclusion.
    pub fn is_essential(&self) -> bool {
        let k = self.shift();
        t_eval(k, EvalMethod::CongruenceSum).expect("4r >= 1") == pow2(k) - k
    }
}

pub fn is_fixed(n: &Natural, method: FixedMethod) -> bool {
    match method {
        FixedMethod::Direct => &s_eval(n, EvalMethod::CongruenceSum).expect("accepted") == n,
        FixedMethod::Theorem => is_fixed_by_progressions(n, false),
    }
}

/// The theorem test, optionally skipping the non-essential `Q_r`.
pub fn is_fixed_by_progressions(n: &Natural, essential_only: bool) -> bool {
    if !nat_divisible_by_pow2(n, 2) {
        return false;
    }
    // Q_r starts at 2^(4r) - 4r, which exceeds n once 4r > bitlen(n) + 1
    let max_r = (n.bits() + 1) / 4 + 1;
    (1..=max_r)
        .map(|r| QrProgression { r })
        .filter(|q| !essential_only || q.is_essential())
        .all(|q| !q.contains(n))
}

/// Word version of the theorem test.
pub fn is_fixed_word(n: u64) -> bool {
    if !n.is_multiple_of(4) {
        return false;
    }
    let mut k = 4u32;
    while k < 63 && (1u64 << k) <= n + k as u64 {
        if (n + k as u64) & ((1u64 << k) - 1) == 0 {
            return false;
        }
        k += 4;
    }
    true
}

/// Largest `limit` accepted by the listing functions.
pub const FIXED_LIMIT_MAX: u64 = 1 << 32;

/// All `n <= limit` with `s(n) = n`.
pub fn fixed_points(limit: u64) -> Result<Vec<u64>> {
    if limit > FIXED_LIMIT_MAX {
        return Err(Error::budget("fixed-point limit", FIXED_LIMIT_MAX));
    }
    Ok((0..=limit / 4)
        .map(|q| 4 * q)
        .filter(|&n| s_word(n) == n)
        .collect())
}

/// All `m <= limit` for which `4m` is not fixed.
pub fn excluded_fixed_quarters(limit: u64) -> Result<Vec<u64>> {
    if limit > FIXED_LIMIT_MAX / 4 {
        return Err(Error::budget("excluded-quarter limit", FIXED_LIMIT_MAX / 4));
    }
    Ok((0..=limit).filter(|&m| s_word(4 * m) != 4 * m).collect())
}

/// First `n < limit` where the direct and theorem predicates disagree.
pub fn fixed_methods_disagree(limit: u64) -> Option<u64> {
    (0..limit)
        .into_par_iter()
        .find_first(|&n| (s_word(n) == n) != is_fixed_word(n))
}
