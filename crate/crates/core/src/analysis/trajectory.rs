use num_traits::ToPrimitive;

use crate::closed_forms::{s_eval, s_word, EvalMethod};
use crate::{Error, Natural, Result};

/// Default cap on trajectory and comparison lengths.
pub const TRAJECTORY_MAX: usize = 1 << 27;

/// Default comparison length for model-sequence checks.
pub const DEFAULT_COMPARE_LIMIT: usize = 1_000_000;

/// One step of `n -> s(n)`, on the word path when it fits.
pub fn step(n: &Natural) -> Natural {
    match n.to_u64() {
        Some(w) if w < 1 << 62 => Natural::from(s_word(w)),
        _ => s_eval(n, EvalMethod::CongruenceSum).expect("congruence sum accepts every n"),
    }
}

/// The orbit `m, s(m), s(s(m)), ...` as an endless iterator.
#[derive(Debug, Clone)]
pub struct TrajectoryIter {
    next: Natural,
}

impl TrajectoryIter {
    pub fn new(start: Natural) -> Self {
        TrajectoryIter { next: start }
    }
}

impl Iterator for TrajectoryIter {
    type Item = Natural;

    fn next(&mut self) -> Option<Natural> {
        let following = step(&self.next);
        Some(std::mem::replace(&mut self.next, following))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub start: Natural,
    pub terms: Vec<Natural>,
}

/// The first `count` iterates of `s` starting at `m`.
pub fn trajectory(m: &Natural, count: usize) -> Result<Trajectory> {
    if count == 0 {
        return Err(Error::domain("a trajectory needs at least one term"));
    }
    if count > TRAJECTORY_MAX {
        return Err(Error::budget("trajectory length", TRAJECTORY_MAX as u64));
    }
    Ok(Trajectory {
        start: m.clone(),
        terms: TrajectoryIter::new(m.clone()).take(count).collect(),
    })
}

/// Offsets `epsilon_0..epsilon_15` of the model for the orbit of 2.
pub const EPSILON: [i64; 16] = [
    2, -2, -6, -10, -14, -18, -22, -26, -30, -34, -38, -42, -46, -50, -54, 6,
];

const T1_RESIDUES: [u64; 4] = [1, 3, 5, 15];

/// `n`-th number (from 0) congruent to -1, 1, 3 or 5 mod 16.
pub fn model_t1(n: u64) -> u64 {
    16 * (n / 4) + T1_RESIDUES[(n % 4) as usize]
}

/// `8n + epsilon_(n mod 16)`.
pub fn model_t2(n: u64) -> u64 {
    let base = 8 * n as i128 + EPSILON[(n % 16) as usize] as i128;
    base as u64
}

/// Where two sequences first disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence<T> {
    pub index: usize,
    pub value_a: T,
    pub value_b: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivergenceReport<T> {
    /// Number of leading indices on which the sequences agree.
    pub agree_count: usize,
    pub divergence: Option<Divergence<T>>,
}

impl<T> DivergenceReport<T> {
    pub fn first_divergence_index(&self) -> Option<usize> {
        self.divergence.as_ref().map(|d| d.index)
    }
}

/// Compares two sequences on indices `0..limit`.
///
/// Both sequences must yield at least `limit` terms; running short is a
/// domain error.
pub fn first_divergence<T, A, B>(seq_a: A, seq_b: B, limit: usize) -> Result<DivergenceReport<T>>
where
    T: PartialEq,
    A: IntoIterator<Item = T>,
    B: IntoIterator<Item = T>,
{
    if limit > TRAJECTORY_MAX {
        return Err(Error::budget("comparison length", TRAJECTORY_MAX as u64));
    }
    let mut a = seq_a.into_iter();
    let mut b = seq_b.into_iter();
    for index in 0..limit {
        let (Some(x), Some(y)) = (a.next(), b.next()) else {
            return Err(Error::domain(format!(
                "sequence ended at index {index} before {limit}"
            )));
        };
        if x != y {
            return Ok(DivergenceReport {
                agree_count: index,
                divergence: Some(Divergence {
                    index,
                    value_a: x,
                    value_b: y,
                }),
            });
        }
    }
    Ok(DivergenceReport {
        agree_count: limit,
        divergence: None,
    })
}

/// Orbit of `start` on the word path, for long comparisons.
pub fn word_trajectory(start: u64) -> impl Iterator<Item = u64> {
    std::iter::successors(Some(start), |&n| (n < 1 << 62).then(|| s_word(n)))
}

/// `8 * (2^119 - 1)`: by this index the orbit of 2 has certainly left its model.
pub fn t2_divergence_bound() -> Natural {
    ((Natural::from(1u32) << 119u32) - 1u32) * 8u32
}
