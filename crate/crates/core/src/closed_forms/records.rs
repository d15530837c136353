use super::{p, pow2, s_eval, t_eval, t_word, EvalMethod};
use crate::{bitlen_word, Error, Natural, Result};

/// `R(k) = s(p_k)`, the first value of `s` with highest bit `2^k`.
pub fn record_r(k: u64) -> Result<Natural> {
    if k == 0 {
        return Err(Error::domain("R is indexed from 1"));
    }
    s_eval(&p(k), EvalMethod::CongruenceSum)
}

/// `R(k) = 2^k - k + sum of 2^l over l >= 1 with k ≡ l (mod 2^l)`.
///
/// Apart from `l = k`, only `l <= floor(log2 k)` can satisfy the congruence.
pub fn record_r_formula(k: u64) -> Result<Natural> {
    if k == 0 {
        return Err(Error::domain("R is indexed from 1"));
    }
    let mut total = pow2(k) - k + pow2(k);
    for l in 1..bitlen_word(k) as u64 {
        if l != k && (k - l) & ((1u64 << l) - 1) == 0 {
            total += pow2(l);
        }
    }
    Ok(total)
}

/// `2^(k+1) - R(k)`, checked against `2^k - t(k)`.
pub fn gap(k: u64) -> Result<Natural> {
    let record = record_r(k)?;
    let via_record = pow2(k + 1) - record;
    let via_missing = pow2(k) - t_eval(k, EvalMethod::CongruenceSum)?;
    if via_record != via_missing {
        return Err(Error::Invariant(format!(
            "gap({k}): 2^(k+1) - R(k) = {via_record} but 2^k - t(k) = {via_missing}"
        )));
    }
    Ok(via_record)
}

/// `sigma(n)` from the block identity: block `m` (indices `2^m..2^(m+1)`) is
/// `s(p_m), ..., s(p_(m+1) - 1)` followed by `t(m + 1)`.
pub fn sigma(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let m = bitlen_word(n) - 1;
    let offset = n - (1u64 << m);
    if offset + 1 == 1u64 << m {
        t_word(m + 1)
    } else {
        let p_m = (1u64 << m) - m as u64;
        super::s_word(p_m + offset)
    }
}

/// Largest prefix [`delta_prefix`] will build; memory is linear in it.
pub const DELTA_MAX: usize = 1 << 26;

/// The first `count` terms of `delta`: the stream `d(0), d(1), ...` with
/// repeats dropped.
pub fn delta_prefix(count: usize) -> Result<Vec<u64>> {
    if count > DELTA_MAX {
        return Err(Error::budget("delta prefix length", DELTA_MAX as u64));
    }
    let mut seen: Vec<bool> = Vec::new();
    let mut out = Vec::with_capacity(count);
    let mut i = 0u64;
    while out.len() < count {
        // d(i) <= i
        let v = super::d_word(i);
        if seen.len() <= v as usize {
            seen.resize(i as usize + 1, false);
        }
        if !seen[v as usize] {
            seen[v as usize] = true;
            out.push(v);
        }
        i += 1;
    }
    Ok(out)
}

pub fn delta(n: u64) -> Result<u64> {
    let len = usize::try_from(n)
        .ok()
        .and_then(|n| n.checked_add(1))
        .ok_or_else(|| Error::budget("delta index", DELTA_MAX as u64))?;
    Ok(delta_prefix(len)?[n as usize])
}
