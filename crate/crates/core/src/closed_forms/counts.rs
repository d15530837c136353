//! Term counts of the congruence sums.
//!
//! `f(n)` counts the summands of the sum for `t(n)`: the `k` in `1..=n` with
//! `k ≡ n (mod 2^k)`. `f'(n)` counts the summands of the sum for `s(n)`.
//! `g(m)` and `g'(m)` are the first positions where those counts reach `m`.

use std::fmt;

use num_traits::{One, ToPrimitive, Zero};

use super::{ceil_log2, nat_divisible_by_pow2, pow2, CountMethod};
use crate::{bitlen_word, Error, Natural, Result};

/// `f(n)` for `n >= 1`.
pub fn f_eval(n: &Natural, method: CountMethod) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::domain("f is indexed from 1"));
    }
    Ok(match method {
        CountMethod::Brute => f_brute(n),
        CountMethod::Recurrence => f_recurrence(n),
    })
}

// k = n always counts; any other solution has k <= floor(log2 n).
fn f_brute(n: &Natural) -> u64 {
    let top = n.bits() - 1;
    let below = (1..=top)
        .filter(|&k| nat_divisible_by_pow2(&(n - k), k))
        .count() as u64;
    below + 1
}

// f(1) = 1; f(2^i + j) = f(j) + 1 for 1 <= j <= i, f(j) for i < j <= 2^i.
fn f_recurrence(n: &Natural) -> u64 {
    let mut count = 0;
    let mut rest = n.clone();
    while !rest.is_one() {
        let i = (&rest - 1u32).bits() - 1;
        rest -= pow2(i);
        if rest <= Natural::from(i) {
            count += 1;
        }
    }
    count + 1
}

/// Word evaluation of `f(n)`, `n >= 1`.
pub fn f_word(n: u64) -> u64 {
    assert!(n >= 1, "f is indexed from 1");
    let mut count = 1;
    let mut rest = n;
    while rest != 1 {
        let i = bitlen_word(rest - 1) - 1;
        rest -= 1 << i;
        if rest <= i as u64 {
            count += 1;
        }
    }
    count
}

/// `f'(n)` for `n >= 0`.
pub fn f_prime_eval(n: &Natural, method: CountMethod) -> u64 {
    match method {
        CountMethod::Brute => f_prime_brute(n),
        CountMethod::Recurrence => f_prime_recurrence(n),
    }
}

// same k range as the congruence sum for s
fn f_prime_brute(n: &Natural) -> u64 {
    let bound = if *n < Natural::from(3u32) {
        2
    } else {
        ceil_log2(n)
    };
    (1..=bound)
        .filter(|&k| nat_divisible_by_pow2(&(n + k), k))
        .count() as u64
}

// f'(0) = 0, f'(1) = 1; f'(2^i + j) = f'(j) + 1 when j = 2^i - i - 1, else f'(j).
fn f_prime_recurrence(n: &Natural) -> u64 {
    let mut count = 0;
    let mut rest = n.clone();
    while rest > Natural::one() {
        let i = rest.bits() - 1;
        let top = pow2(i);
        rest -= &top;
        if rest == top - (i + 1) {
            count += 1;
        }
    }
    count + rest.to_u64().expect("rest is 0 or 1")
}

/// Word evaluation of `f'(n)`. Requires `n < 2^62`.
pub fn f_prime_word(n: u64) -> u64 {
    assert!(n < 1 << 62, "{n} outside the word range");
    let mut count = 0;
    let mut k = 1u32;
    while (1u64 << k) <= n + k as u64 {
        if (n + k as u64) & ((1u64 << k) - 1) == 0 {
            count += 1;
        }
        k += 1;
    }
    count
}

/// Largest `m` for which [`g_min`] materializes `g(m)`; `g(6)` has about
/// `2^2059` bits.
pub const G_MIN_MAX: u32 = 5;

/// `g(m)`, the least `n` with `f(n) = m`, from `g(1) = 1`,
/// `g(m + 1) = 2^g(m) + g(m)`.
pub fn g_min(m: u32) -> Result<Natural> {
    if m == 0 {
        return Err(Error::domain("g is indexed from 1"));
    }
    if m > G_MIN_MAX {
        return Err(Error::Budget {
            what: format!("g({m}) is too large to materialize; use g_tower"),
            limit: G_MIN_MAX as u64,
        });
    }
    let mut g = Natural::one();
    for _ in 1..m {
        let exponent = g.to_u64().expect("g(4) fits a word");
        g = pow2(exponent) + g;
    }
    Ok(g)
}

/// Symbolic value of `g(m)`: either an exact number or `2^e + e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TowerExpr {
    Exact(Natural),
    PowPlus(Box<TowerExpr>),
}

impl TowerExpr {
    /// Exact value, provided every intermediate exponent stays below
    /// `max_bits`.
    pub fn eval(&self, max_bits: u64) -> Result<Natural> {
        match self {
            TowerExpr::Exact(v) => Ok(v.clone()),
            TowerExpr::PowPlus(inner) => {
                let e = inner.eval(max_bits)?;
                match e.to_u64() {
                    Some(bits) if bits < max_bits => Ok(pow2(bits) + e),
                    _ => Err(Error::budget("tower value bit length", max_bits)),
                }
            }
        }
    }

    /// Replaces every subtree whose value has at most `max_bits` bits with
    /// its exact value.
    pub fn collapse(&self, max_bits: u64) -> TowerExpr {
        match self.eval(max_bits + 1) {
            Ok(v) if v.bits() <= max_bits => TowerExpr::Exact(v),
            _ => match self {
                TowerExpr::PowPlus(inner) => TowerExpr::PowPlus(Box::new(inner.collapse(max_bits))),
                exact => exact.clone(),
            },
        }
    }

    /// Nesting depth; an exact value has depth 0.
    pub fn depth(&self) -> usize {
        match self {
            TowerExpr::Exact(_) => 0,
            TowerExpr::PowPlus(inner) => 1 + inner.depth(),
        }
    }
}

impl fmt::Display for TowerExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerExpr::Exact(v) => write!(f, "{v}"),
            TowerExpr::PowPlus(inner) => match inner.as_ref() {
                TowerExpr::Exact(v) => write!(f, "2^{v} + {v}"),
                nested => write!(f, "2^({nested}) + {nested}"),
            },
        }
    }
}

/// `g(m)` as a tower of `2^e + e` over `g(1) = 1`.
pub fn g_tower(m: u32) -> Result<TowerExpr> {
    if m == 0 {
        return Err(Error::domain("g is indexed from 1"));
    }
    let mut expr = TowerExpr::Exact(Natural::one());
    for _ in 1..m {
        expr = TowerExpr::PowPlus(Box::new(expr));
    }
    Ok(expr)
}

/// Least `n <= limit` with `f'(n) = target`.
pub fn g_prime_search(target: u64, limit: u64) -> Option<u64> {
    (0..=limit).find(|&n| f_prime_word(n) == target)
}
