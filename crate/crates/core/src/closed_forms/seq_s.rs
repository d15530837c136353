use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ceil_log2, nat_divisible_by_pow2, pow2, t_eval, EvalMethod};
use crate::binary_grid::diagonal_up;
use crate::{Error, Int, Natural, Result};

/// `s(n)` by the chosen route.
///
/// Accepts `SignedSum`, `CongruenceSum`, `Recurrence` and `Oracle`.
pub fn s_eval(n: &Natural, method: EvalMethod) -> Result<Natural> {
    match method {
        EvalMethod::SignedSum => {
            Ok(s_signed_sum_with_upper(n, n.bits() + 1).expect("bitlen(n) + 1 exceeds log2 n"))
        }
        EvalMethod::CongruenceSum => Ok(s_congruence(n)),
        EvalMethod::Recurrence => Ok(s_recurrence(n)),
        EvalMethod::Oracle => Ok(diagonal_up(&Int::from(n.clone()))),
        other => Err(Error::UnsupportedMethod {
            sequence: "s",
            method: other.name(),
        }),
    }
}

/// Signed-sum form with an explicit upper limit `m`:
/// `s(n) = 2^m - 1/2 - 1/2 * sum_{k=0..m} (-1)^floor((n+k)/2^k) 2^k`.
///
/// Any `m > log2 n` gives the same value; smaller `m` is rejected.
pub fn s_signed_sum_with_upper(n: &Natural, m: u64) -> Result<Natural> {
    if m < n.bits() {
        return Err(Error::domain(format!(
            "upper limit {m} does not exceed log2 {n}"
        )));
    }
    let n = Int::from(n.clone());
    let mut alternating = Int::zero();
    for k in 0..=m {
        let term = Int::one() << k;
        let quotient = (&n + k).div_floor(&term);
        if quotient.is_odd() {
            alternating -= term;
        } else {
            alternating += term;
        }
    }
    // twice the value, to stay in integers
    let doubled: Int = (Int::one() << (m + 1)) - 1 - alternating;
    debug_assert!(doubled.is_even() && !doubled.is_negative());
    Ok((doubled >> 1u32).into_parts().1)
}

// n + sum of 2^k over k >= 1 with n + k ≡ 0 (mod 2^k); k <= ceil(log2 n)
// suffices for n >= 3, and k <= 2 covers n < 3.
fn s_congruence(n: &Natural) -> Natural {
    let bound = if *n < Natural::from(3u32) {
        2
    } else {
        ceil_log2(n)
    };
    let mut total = n.clone();
    for k in 1..=bound {
        if nat_divisible_by_pow2(&(n + k), k) {
            total += pow2(k);
        }
    }
    total
}

// s(2^i + j) = 2^i + s(j), except 3 * 2^i + s(j) when j = 2^i - i - 1.
fn s_recurrence(n: &Natural) -> Natural {
    let mut total = Natural::zero();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let i = rest.bits() - 1;
        let top = pow2(i);
        rest -= &top;
        let special = &top - (i + 1);
        total += if rest == special { top * 3u32 } else { top };
    }
    total
}

/// Word evaluation of `s(n)` through the congruence sum, for sweeps.
/// Requires `n < 2^62`.
pub fn s_word(n: u64) -> u64 {
    assert!(n < 1 << 62, "{n} outside the word range");
    let mut total = n;
    let mut k = 1u32;
    while (1u64 << k) <= n + k as u64 {
        if (n + k as u64) & ((1u64 << k) - 1) == 0 {
            total += 1 << k;
        }
        k += 1;
    }
    total
}

/// `s` extended to all integers: `s(-n) = t(n)` for `n >= 1`.
///
/// # Panics
///
/// If `n < -(2^64 - 1)`; the value would have more than `2^64` bits.
pub fn s_ext(n: &Int) -> Natural {
    if n.is_negative() {
        let m = n
            .magnitude()
            .to_u64()
            .expect("argument too negative to evaluate");
        t_eval(m, EvalMethod::CongruenceSum).expect("t is defined for m >= 1")
    } else {
        s_congruence(n.magnitude())
    }
}
