use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;

use crate::analysis::{is_fixed_word, model_t1};
use crate::binary_grid::diagonal_left_down;
use crate::closed_forms::{
    d_eval, d_word, delta_prefix, f_prime_eval, f_word, g_min, gap, record_r, s_eval, s_inverse,
    s_word, sigma, t_eval, CountMethod, EvalMethod, G_MIN_MAX,
};
use crate::{Error, Int, Natural, Result};

/// Most terms a single `gen` call will produce.
pub const GEN_MAX_COUNT: u64 = 1 << 22;

/// Largest index for sequences evaluated on machine words.
pub const GEN_INDEX_MAX: u64 = 1 << 40;

/// Default `--limit-bits`.
pub const DEFAULT_LIMIT_BITS: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceId {
    S,
    T,
    D,
    SInv,
    Sigma,
    Delta,
    LeftDown,
    F,
    FPrime,
    R,
    Gap,
    Fixed,
    G,
    T1Hat,
}

impl SequenceId {
    pub const ALL: [SequenceId; 14] = [
        SequenceId::S,
        SequenceId::T,
        SequenceId::D,
        SequenceId::SInv,
        SequenceId::Sigma,
        SequenceId::Delta,
        SequenceId::LeftDown,
        SequenceId::F,
        SequenceId::FPrime,
        SequenceId::R,
        SequenceId::Gap,
        SequenceId::Fixed,
        SequenceId::G,
        SequenceId::T1Hat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceId::S => "s",
            SequenceId::T => "t",
            SequenceId::D => "d",
            SequenceId::SInv => "sinv",
            SequenceId::Sigma => "sigma",
            SequenceId::Delta => "delta",
            SequenceId::LeftDown => "leftdown",
            SequenceId::F => "f",
            SequenceId::FPrime => "fprime",
            SequenceId::R => "R",
            SequenceId::Gap => "gap",
            SequenceId::Fixed => "fixed",
            SequenceId::G => "g",
            SequenceId::T1Hat => "t1hat",
        }
    }

    pub fn oeis(self) -> &'static str {
        match self {
            SequenceId::S => "A102370",
            SequenceId::T => "A102371",
            SequenceId::D => "A105033",
            SequenceId::SInv => "A103122",
            SequenceId::Sigma => "A105027",
            SequenceId::Delta => "A105025",
            SequenceId::LeftDown => "A105029",
            SequenceId::F => "A103318",
            SequenceId::FPrime => "A104234",
            SequenceId::R => "A103529",
            SequenceId::Gap => "A103530",
            SequenceId::Fixed => "A104235",
            SequenceId::G => "A034797",
            SequenceId::T1Hat => "A103127",
        }
    }

    /// First valid index.
    pub fn offset(self) -> u64 {
        match self {
            SequenceId::T
            | SequenceId::F
            | SequenceId::R
            | SequenceId::Gap
            | SequenceId::G
            | SequenceId::Fixed => 1,
            _ => 0,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            SequenceId::S => "upward diagonal reading s(n)",
            SequenceId::T => "missing numbers t(n)",
            SequenceId::D => "downward diagonal reading d(n)",
            SequenceId::SInv => "inverse of s",
            SequenceId::Sigma => "upward block permutation",
            SequenceId::Delta => "downward reading with repeats removed",
            SequenceId::LeftDown => "left-adjusted downward reading",
            SequenceId::F => "term count of the sum for t(n)",
            SequenceId::FPrime => "term count of the sum for s(n)",
            SequenceId::R => "records R(k) of s",
            SequenceId::Gap => "2^(k+1) - R(k)",
            SequenceId::Fixed => "n-th fixed point of s",
            SequenceId::G => "least n with f(n) = m",
            SequenceId::T1Hat => "numbers congruent to -1, 1, 3, 5 mod 16",
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceId::ALL
            .into_iter()
            .find(|id| id.name() == s || id.oeis().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown sequence '{s}'")))
    }
}

/// A block of consecutive terms starting at `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Terms {
    pub start: u64,
    pub values: Vec<Int>,
}

impl Terms {
    pub fn indexed(&self) -> impl Iterator<Item = (u64, &Int)> {
        (self.start..).zip(&self.values)
    }
}

/// Terms `start .. start + count` of `id`, refusing any value wider than
/// `limit_bits` bits.
pub fn generate(id: SequenceId, start: u64, count: u64, limit_bits: u64) -> Result<Terms> {
    if start < id.offset() {
        return Err(Error::Domain(format!(
            "{id} starts at index {}, not {start}",
            id.offset()
        )));
    }
    if count > GEN_MAX_COUNT {
        return Err(Error::budget("term count", GEN_MAX_COUNT));
    }
    let end = start
        .checked_add(count)
        .ok_or_else(|| Error::budget("index range", u64::MAX))?;
    if count == 0 {
        return Ok(Terms {
            start,
            values: Vec::new(),
        });
    }
    let last = end - 1;
    precheck_width(id, last, limit_bits)?;
    let word_bound = matches!(
        id,
        SequenceId::Sigma
            | SequenceId::Delta
            | SequenceId::LeftDown
            | SequenceId::Fixed
            | SequenceId::F
    );
    if word_bound && last > GEN_INDEX_MAX {
        return Err(Error::budget(format!("index for {id}"), GEN_INDEX_MAX));
    }

    let values: Vec<Int> = match id {
        SequenceId::Delta => {
            let prefix = delta_prefix(end as usize)?;
            prefix[start as usize..]
                .iter()
                .map(|&v| Int::from(v))
                .collect()
        }
        SequenceId::Fixed => fixed_terms(start, end),
        _ => (start..end).map(|n| term(id, n)).collect::<Result<_>>()?,
    };
    for (n, v) in (start..).zip(&values) {
        if v.bits() > limit_bits {
            return Err(Error::Budget {
                what: format!("{id}({n}) has {} bits", v.bits()),
                limit: limit_bits,
            });
        }
    }
    Ok(Terms { start, values })
}

// Rejects requests whose values are known to be too wide before computing.
fn precheck_width(id: SequenceId, last: u64, limit_bits: u64) -> Result<()> {
    let width = match id {
        SequenceId::T | SequenceId::Gap => Some(last),
        SequenceId::R => Some(last.saturating_add(1)),
        SequenceId::G if last > G_MIN_MAX as u64 => {
            return Err(Error::Budget {
                what: format!("g({last}) is a power tower beyond exact evaluation"),
                limit: G_MIN_MAX as u64,
            })
        }
        SequenceId::G => Some(g_min(last as u32)?.bits()),
        _ => None,
    };
    match width {
        Some(w) if w > limit_bits => Err(Error::Budget {
            what: format!("{id}({last}) has about {w} bits"),
            limit: limit_bits,
        }),
        _ => Ok(()),
    }
}

fn term(id: SequenceId, n: u64) -> Result<Int> {
    let big = Natural::from(n);
    let value = match id {
        SequenceId::S if n < 1 << 62 => Int::from(s_word(n)),
        SequenceId::S => s_eval(&big, EvalMethod::CongruenceSum)?.into(),
        SequenceId::T => t_eval(n, EvalMethod::CongruenceSum)?.into(),
        SequenceId::D if n < 1 << 62 => Int::from(d_word(n)),
        SequenceId::D => d_eval(&big, EvalMethod::CongruenceSum)?.into(),
        SequenceId::SInv => s_inverse(&big),
        SequenceId::Sigma => Int::from(sigma(n)),
        SequenceId::LeftDown => Int::from(diagonal_left_down(n)),
        SequenceId::F => Int::from(f_word(n)),
        SequenceId::FPrime => Int::from(f_prime_eval(&big, CountMethod::Recurrence)),
        SequenceId::R => record_r(n)?.into(),
        SequenceId::Gap => gap(n)?.into(),
        SequenceId::G => g_min(n.to_u32().expect("prechecked"))?.into(),
        SequenceId::T1Hat => Int::from(model_t1(n)),
        SequenceId::Delta | SequenceId::Fixed => unreachable!("generated as a block"),
    };
    Ok(value)
}

// the 1-based fixed points with positions start..end
fn fixed_terms(start: u64, end: u64) -> Vec<Int> {
    let mut out = Vec::with_capacity((end - start) as usize);
    let mut position = 0u64;
    let mut n = 0u64;
    while position + 1 < end {
        if is_fixed_word(n) {
            position += 1;
            if position >= start {
                out.push(Int::from(n));
            }
        }
        n += 4;
    }
    out
}
