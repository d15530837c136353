use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{nat_divisible_by_pow2, pow2, EvalMethod};
use crate::binary_grid::diagonal_down;
use crate::{bitlen_word, Error, Int, Natural, Result};

/// `d(n)`, the downward-sloping reading, by the chosen route.
///
/// Accepts `SignedSum`, `CongruenceSum`, `Recurrence` and `Oracle`.
pub fn d_eval(n: &Natural, method: EvalMethod) -> Result<Natural> {
    match method {
        EvalMethod::SignedSum => Ok(d_signed_sum(n)),
        EvalMethod::CongruenceSum => Ok(d_congruence(n)),
        EvalMethod::Recurrence => Ok(d_recurrence(n)),
        EvalMethod::Oracle => Ok(diagonal_down(n)),
        other => Err(Error::UnsupportedMethod {
            sequence: "d",
            method: other.name(),
        }),
    }
}

// d(n) = 2^m - 1/2 - 1/2 * sum_{k=0..m} (-1)^floor((n-k)/2^k) 2^k, m = floor(log2 n).
fn d_signed_sum(n: &Natural) -> Natural {
    if n.is_zero() {
        return Natural::zero();
    }
    let m = n.bits() - 1;
    let n = Int::from(n.clone());
    let mut alternating = Int::zero();
    for k in 0..=m {
        let term = Int::one() << k;
        if (&n - k).div_floor(&term).is_odd() {
            alternating -= term;
        } else {
            alternating += term;
        }
    }
    let doubled: Int = (Int::one() << (m + 1)) - 1 - alternating;
    debug_assert!(doubled.is_even() && !doubled.is_negative());
    (doubled >> 1u32).into_parts().1
}

// n minus 2^k over 1 <= k <= log2 n with n ≡ k - 1 (mod 2^k).
fn d_congruence(n: &Natural) -> Natural {
    if n.is_zero() {
        return Natural::zero();
    }
    let mut total = n.clone();
    for k in 1..n.bits() {
        // k <= floor(log2 n) < n, so n + 1 - k > 0
        if nat_divisible_by_pow2(&(n + 1u32 - k), k) {
            total -= pow2(k);
        }
    }
    total
}

// d(2^i + i + j) = d(i - 1) for j = -1, and 2^i + d(i + j) for 0 <= j < 2^i.
fn d_recurrence(n: &Natural) -> Natural {
    let mut total = Natural::zero();
    let mut rest = n.clone();
    loop {
        if rest.is_zero() {
            return total;
        }
        if rest.is_one() {
            return total + 1u32;
        }
        // block i covers 2^i + i - 1 ..= 2^(i+1) + i - 1
        let mut i = rest.bits() - 1;
        if rest < pow2(i) + i - 1u32 {
            i -= 1;
        }
        let block_start = pow2(i) + i - 1u32;
        if rest == block_start {
            rest = Natural::from(i - 1);
        } else {
            let top = pow2(i);
            rest -= &top;
            total += top;
        }
    }
}

/// Word evaluation of `d(n)` through the congruence sum, for sweeps.
pub fn d_word(n: u64) -> u64 {
    let mut total = n;
    for k in 1..bitlen_word(n) {
        if (n + 1 - k as u64) & ((1u64 << k) - 1) == 0 {
            total -= 1 << k;
        }
    }
    total
}
