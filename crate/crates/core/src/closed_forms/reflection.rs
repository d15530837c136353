use super::{d_eval, pow2, s_eval, EvalMethod};
use crate::{Error, Natural, Result};

/// `s(n) = 2^j - 1 - d(2^j - 1 - n)`, valid for `0 <= n < 2^j - j`.
pub fn s_via_reflection(n: &Natural, j: u64) -> Result<Natural> {
    let top = pow2(j);
    if top < Natural::from(j) || *n >= &top - j {
        return Err(Error::domain(format!(
            "s reflection needs n < 2^j - j (n = {n}, j = {j})"
        )));
    }
    let mirrored = &top - 1u32 - n;
    Ok(top - 1u32 - d_eval(&mirrored, EvalMethod::CongruenceSum)?)
}

/// `d(n) = 2^j - 1 - s(2^j - 1 - n)`, valid for `j <= n < 2^j`.
pub fn d_via_reflection(n: &Natural, j: u64) -> Result<Natural> {
    let top = pow2(j);
    if *n < Natural::from(j) || *n >= top {
        return Err(Error::domain(format!(
            "d reflection needs j <= n < 2^j (n = {n}, j = {j})"
        )));
    }
    let mirrored = &top - 1u32 - n;
    Ok(top - 1u32 - s_eval(&mirrored, EvalMethod::CongruenceSum)?)
}
