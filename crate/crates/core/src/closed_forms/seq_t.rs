use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{d_eval, divisible_by_pow2, pow2, s_eval, EvalMethod};
use crate::binary_grid::diagonal_up;
use crate::{bitlen_word, Error, Int, Natural, Result};

/// The `n`-th missing number `t(n)`, `n >= 1`.
///
/// Every [`EvalMethod`] is accepted: the three direct forms, the two
/// identities through `d` and `s`, the diagonal reading at row `-n`, and the
/// congruence sum for `s` taken at `-n`.
pub fn t_eval(n: u64, method: EvalMethod) -> Result<Natural> {
    if n == 0 {
        return Err(Error::domain("t is indexed from 1"));
    }
    let value = match method {
        EvalMethod::SignedSum => t_signed_sum(n),
        EvalMethod::CongruenceSum => t_congruence(n),
        EvalMethod::Recurrence => t_recurrence(n),
        EvalMethod::FromD => {
            pow2(n) - 1u32 - d_eval(&Natural::from(n - 1), EvalMethod::CongruenceSum)?
        }
        EvalMethod::FromS => s_eval(&(pow2(n) - n), EvalMethod::CongruenceSum)? - pow2(n),
        EvalMethod::Oracle => diagonal_up(&-Int::from(n)),
        EvalMethod::Extension => s_congruence_signed(&-Int::from(n)),
    };
    Ok(value)
}

// t(n + 1) = 2^n - 1/2 + 1/2 * sum_{k=0..n} (-1)^floor((n-k)/2^k) 2^k
fn t_signed_sum(n: u64) -> Natural {
    let m = n - 1;
    let shifted = Int::from(m);
    let mut alternating = Int::zero();
    for k in 0..=m {
        let term = Int::one() << k;
        if (&shifted - k).div_floor(&term).is_odd() {
            alternating -= term;
        } else {
            alternating += term;
        }
    }
    let doubled: Int = (Int::one() << (m + 1)) - 1 + alternating;
    debug_assert!(doubled.is_even() && !doubled.is_negative());
    (doubled >> 1u32).into_parts().1
}

// -n + sum of 2^k over k >= 1 with n - k ≡ 0 (mod 2^k). The k = n term always
// contributes; the rest have k <= floor(log2 n).
fn t_congruence(n: u64) -> Natural {
    let mut total = pow2(n) - n;
    for k in 1..bitlen_word(n) as u64 {
        if (n - k) & ((1u64 << k) - 1) == 0 {
            total += pow2(k);
        }
    }
    total
}

// t(1) = 1, t(2) = 2, and for i <= j <= 2^i + i:
//   t(2^i + i) = 2^(2^i + i) - 2^i + t(i)
//   t(2^i + j) = 2^(2^i + j) - 2^i - 2^j + t(j)   (j > i)
fn t_recurrence(n: u64) -> Natural {
    let mut total = Int::zero();
    let mut rest = n;
    while rest > 2 {
        // block i covers 2^i + i ..= 2^(i+1) + i
        let mut i = bitlen_word(rest) as u64 - 1;
        if rest < (1u64 << i) + i {
            i -= 1;
        }
        let j = rest - (1u64 << i);
        total += Int::one() << rest;
        total -= Int::one() << i;
        if j == i {
            rest = i;
        } else {
            total -= Int::one() << j;
            rest = j;
        }
    }
    total += rest;
    debug_assert!(!total.is_negative());
    total.into_parts().1
}

// s(x) = x + sum of 2^k over k >= 1 with x + k ≡ 0 (mod 2^k), for any integer
// x. Terms stop once 0 < x + k < 2^k.
fn s_congruence_signed(x: &Int) -> Natural {
    let mut total = x.clone();
    let mut k = 1u64;
    loop {
        let shifted = x + k;
        if shifted.is_positive() && shifted.magnitude().bits() <= k {
            break;
        }
        if divisible_by_pow2(&shifted, k) {
            total += Int::one() << k;
        }
        k += 1;
    }
    debug_assert!(!total.is_negative());
    total.into_parts().1
}

/// Word evaluation of `t(n)` for `1 <= n <= 64`.
pub fn t_word(n: u32) -> u64 {
    assert!((1..=64).contains(&n), "t({n}) does not fit a word");
    let mut total: u128 = (1u128 << n) - n as u128;
    for k in 1..bitlen_word(n as u64) {
        if (n - k) & ((1u32 << k) - 1) == 0 {
            total += 1 << k;
        }
    }
    total as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    const MISSING: [u64; 9] = [1, 2, 7, 12, 29, 62, 123, 248, 505];

    #[test]
    fn prefix_every_method() {
        for method in EvalMethod::ALL {
            for (i, &expected) in MISSING.iter().enumerate() {
                let n = i as u64 + 1;
                assert_eq!(
                    t_eval(n, method).unwrap(),
                    Natural::from(expected),
                    "{method} at {n}"
                );
            }
        }
        for (i, &expected) in MISSING.iter().enumerate() {
            assert_eq!(t_word(i as u32 + 1), expected);
        }
    }

    #[test]
    fn examples() {
        assert_eq!(
            t_eval(4, EvalMethod::FromS).unwrap(),
            Natural::from(28u32 - 16)
        );
        // 5 = 2^1 + 3: 2^5 - 2 - 2^3 + t(3)
        assert_eq!(
            t_eval(5, EvalMethod::Recurrence).unwrap(),
            Natural::from(32u32 - 2 - 8 + 7)
        );
        assert_eq!(
            t_eval(9, EvalMethod::CongruenceSum).unwrap(),
            Natural::from(505u32)
        );
        assert_eq!(
            t_eval(6, EvalMethod::FromD).unwrap(),
            Natural::from(64u32 - 1 - 1)
        );
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(
            t_eval(0, EvalMethod::CongruenceSum),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn methods_agree_through_64() {
        for n in 1..=64u64 {
            let expected = t_eval(n, EvalMethod::CongruenceSum).unwrap();
            for method in EvalMethod::ALL {
                assert_eq!(t_eval(n, method).unwrap(), expected, "{method} at {n}");
            }
            assert_eq!(Natural::from(t_word(n as u32)), expected);
        }
    }

    #[test]
    fn long_arguments() {
        for n in [200u64, 1000, 2059] {
            let expected = t_eval(n, EvalMethod::CongruenceSum).unwrap();
            assert_eq!(t_eval(n, EvalMethod::Recurrence).unwrap(), expected);
            assert_eq!(t_eval(n, EvalMethod::FromD).unwrap(), expected);
            assert_eq!(t_eval(n, EvalMethod::FromS).unwrap(), expected);
            assert_eq!(expected.bits(), n);
        }
    }
}
