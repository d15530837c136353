use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::closed_forms::s_word;
use crate::{Error, Result};

/// Largest `N` accepted by [`mean_excess`].
pub const MEAN_EXCESS_MAX: u64 = 1 << 32;

/// `(1/N) * sum_{n<N} (s(n) - n)`, exactly.
pub fn mean_excess(count: u64) -> Result<BigRational> {
    if count == 0 {
        return Err(Error::domain("the mean needs N >= 1"));
    }
    if count > MEAN_EXCESS_MAX {
        return Err(Error::budget("mean_excess range", MEAN_EXCESS_MAX));
    }
    // each excess is below 2^(bitlen(N) + 2), so chunk sums fit u128
    let total: u128 = (0..count)
        .into_par_iter()
        .map(|n| (s_word(n) - n) as u128)
        .sum();
    Ok(BigRational::new(BigInt::from(total), BigInt::from(count)))
}
