//! Explicit `n` in an arithmetic progression with a large excess `s(n) - n`.
//!
//! For `a = c * 2^d` (`c` odd) and `k = 2^m - b`, choosing
//! `c j ≡ -2^(m-d) (mod 2^(k-d))` makes `n = a j + b` satisfy
//! `n + k ≡ 0 (mod 2^k)`, so the congruence sum for `s(n)` picks up `2^k`.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::closed_forms::{divisible_by_pow2, pow2, s_eval, EvalMethod};
use crate::{Error, Int, Natural, Result};

/// Largest `m` accepted by [`unbounded_witness`].
pub const WITNESS_MAX_M: u32 = 16;

/// Largest exponent `k = 2^m - b` accepted by [`unbounded_witness`].
pub const WITNESS_MAX_BITS: u64 = 1 << 20;

/// Inverse of odd `c` modulo `2^e`, by Newton lifting `x <- x (2 - c x)`.
pub fn inverse_mod_pow2(c: &Natural, e: u64) -> Result<Natural> {
    if c.is_even() {
        return Err(Error::domain(
            "only odd numbers are invertible modulo a power of two",
        ));
    }
    let modulus = pow2(e);
    let c = c % &modulus;
    // c * c ≡ 1 (mod 8)
    let mut x = c.clone();
    let mut precision = 3u64;
    while precision < e {
        precision *= 2;
        let m = pow2(precision.min(e));
        let cx = (&c * &x) % &m;
        let correction = (Natural::from(2u32) + &m - cx) % &m;
        x = (x * correction) % &m;
    }
    Ok(x % modulus)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// The witness `n = a j + b`.
    pub n: Natural,
    pub j: Natural,
    /// `s(n) - n >= 2^k`.
    pub k: u64,
}

/// Builds `n = a j + b` with `n + k ≡ 0 (mod 2^k)` for `k = 2^m - b`.
///
/// Takes the least `j >= 1` in the solution class for which `n` is
/// nonnegative.
pub fn unbounded_witness(a: &Natural, b: &Int, m: u32) -> Result<Witness> {
    if a.is_zero() {
        return Err(Error::domain("a must be positive"));
    }
    if m > WITNESS_MAX_M {
        return Err(Error::budget("witness exponent m", WITNESS_MAX_M as u64));
    }
    let d = a.trailing_zeros().expect("a > 0");
    let c = a >> d;
    if (m as u64) < d {
        return Err(Error::domain(format!(
            "m = {m} is below the 2-adic valuation {d} of a"
        )));
    }
    let top = Int::one() << m;
    if top <= b + Int::from(d) {
        return Err(Error::domain(format!("2^{m} must exceed b + {d}")));
    }
    let k = (&top - b)
        .to_u64()
        .filter(|&k| k <= WITNESS_MAX_BITS)
        .ok_or_else(|| Error::budget("witness exponent 2^m - b", WITNESS_MAX_BITS))?;

    let e = k - d;
    let modulus = pow2(e);
    let inverse = inverse_mod_pow2(&c, e)?;
    let target = (&modulus - pow2(m as u64 - d) % &modulus) % &modulus;
    let mut j = (target * inverse) % &modulus;
    if j.is_zero() {
        j = modulus.clone();
    }
    let a_int = Int::from(a.clone());
    let n_int = &a_int * Int::from(j.clone()) + b;
    if n_int.is_negative() {
        // raise j by whole periods until a j + b >= 0
        let deficit = (-&n_int).into_parts().1;
        let step = a * &modulus;
        j += deficit.div_ceil(&step) * &modulus;
    }
    let n = (a_int * Int::from(j.clone()) + b).into_parts().1;
    Ok(Witness { n, j, k })
}

/// Checks `n ≡ b (mod a)` and `n + k ≡ 0 (mod 2^k)`. When `k` is small the
/// excess `s(n) - n >= 2^k` is also confirmed by evaluation.
pub fn check_witness(w: &Witness, a: &Natural, b: &Int) -> bool {
    let n = Int::from(w.n.clone());
    let in_progression = (&n - b).mod_floor(&Int::from(a.clone())).is_zero();
    let congruent = divisible_by_pow2(&(&n + w.k), w.k);
    if !(in_progression && congruent) {
        return false;
    }
    if w.k <= 64 && w.n.bits() <= 4096 {
        let s = s_eval(&w.n, EvalMethod::CongruenceSum).expect("accepted");
        return s - &w.n >= pow2(w.k);
    }
    true
}
