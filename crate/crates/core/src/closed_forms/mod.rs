//! Closed forms, congruence sums, and recurrences.
//!
//! Every sequence here can be evaluated by more than one route, selected
//! with [`EvalMethod`]. The routes are independent of each other and of the
//! literal readings in [`crate::binary_grid`], so agreement between them is
//! the main correctness check of the crate.
//!
//! Indexing: `s`, `d`, `sigma`, `delta`, `f'` start at 0; `t`, `f`, `R`,
//! `gap`, `g` start at 1; `g'` starts at 0.

mod counts;
mod inverse;
mod records;
mod reflection;
mod seq_d;
mod seq_s;
mod seq_t;

use std::fmt;

use num_bigint::Sign;
use num_traits::{One, Zero};

use crate::{Int, Natural};

pub use counts::{
    f_eval, f_prime_eval, f_prime_word, f_word, g_min, g_prime_search, g_tower, TowerExpr,
    G_MIN_MAX,
};
pub use inverse::{
    s_inverse, s_inverse_search, suffix_perm, suffix_perm_bounded, PermutationTable,
    SUFFIX_PERM_MAX,
};
pub use records::{delta, delta_prefix, gap, record_r, record_r_formula, sigma, DELTA_MAX};
pub use reflection::{d_via_reflection, s_via_reflection};
pub use seq_d::{d_eval, d_word};
pub use seq_s::{s_eval, s_ext, s_signed_sum_with_upper, s_word};
pub use seq_t::{t_eval, t_word};

/// Evaluation route. Each sequence accepts only its own subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalMethod {
    /// Alternating-sign power sum over the bits of shifted indices.
    SignedSum,
    /// Sum of `2^k` over the `k` satisfying a congruence mod `2^k`.
    CongruenceSum,
    /// Block recurrence on the leading bit.
    Recurrence,
    /// Literal diagonal reading of the binary array.
    Oracle,
    /// `t(n) = 2^n - 1 - d(n - 1)`.
    FromD,
    /// `t(n) = s(2^n - n) - 2^n`.
    FromS,
    /// The congruence sum for `s` evaluated at the negative argument `-n`.
    Extension,
}

impl EvalMethod {
    pub const ALL: [EvalMethod; 7] = [
        EvalMethod::SignedSum,
        EvalMethod::CongruenceSum,
        EvalMethod::Recurrence,
        EvalMethod::Oracle,
        EvalMethod::FromD,
        EvalMethod::FromS,
        EvalMethod::Extension,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EvalMethod::SignedSum => "signed_sum",
            EvalMethod::CongruenceSum => "congruence_sum",
            EvalMethod::Recurrence => "recurrence",
            EvalMethod::Oracle => "oracle",
            EvalMethod::FromD => "from_d",
            EvalMethod::FromS => "from_s",
            EvalMethod::Extension => "extension",
        }
    }
}

impl fmt::Display for EvalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Route for the term-count functions `f` and `f'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMethod {
    Brute,
    Recurrence,
}

/// `p_k = 2^k - k`, the first index at which `s` reaches `2^k`.
pub fn p(k: u64) -> Natural {
    pow2(k) - k
}

pub(crate) fn pow2(k: u64) -> Natural {
    Natural::one() << k
}

/// `x ≡ 0 (mod 2^k)` for a signed `x`.
pub(crate) fn divisible_by_pow2(x: &Int, k: u64) -> bool {
    match x.sign() {
        Sign::NoSign => true,
        _ => x.magnitude().trailing_zeros().is_some_and(|tz| tz >= k),
    }
}

/// Same test on a nonnegative value.
pub(crate) fn nat_divisible_by_pow2(x: &Natural, k: u64) -> bool {
    x.is_zero() || x.trailing_zeros().is_some_and(|tz| tz >= k)
}

/// `ceil(log2 n)` for `n >= 1`.
pub(crate) fn ceil_log2(n: &Natural) -> u64 {
    debug_assert!(!n.is_zero());
    (n - 1u32).bits()
}
