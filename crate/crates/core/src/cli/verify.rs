//! Verification suites: sweeps that compare independent evaluation routes
//! and report the first counterexample.

use std::fmt;

use clap::ValueEnum;
use rayon::prelude::*;

use crate::analysis::{
    excluded_fixed_quarters, first_divergence, fixed_methods_disagree, is_fixed, model_t1,
    model_t2, word_trajectory, FixedMethod, TRAJECTORY_MAX,
};
use crate::binary_grid::{
    diagonal_delta, diagonal_down, diagonal_left_down, diagonal_sigma, diagonal_up,
};
use crate::closed_forms::{
    d_eval, d_via_reflection, d_word, delta_prefix, f_eval, f_prime_eval, f_prime_word, f_word,
    gap, record_r, record_r_formula, s_eval, s_ext, s_inverse, s_inverse_search, s_via_reflection,
    s_word, sigma, suffix_perm, t_eval, t_word, CountMethod, EvalMethod,
};
use crate::{bitlen_word, Error, Int, Natural, Result};

/// Largest `--limit` accepted by `verify`.
pub const VERIFY_LIMIT_MAX: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Methods,
    Bijection,
    Fixed,
    Trajectories,
    FFamily,
    Permutations,
    Reflections,
    All,
}

impl Suite {
    const PARTS: [Suite; 7] = [
        Suite::Methods,
        Suite::Bijection,
        Suite::Fixed,
        Suite::Trajectories,
        Suite::FFamily,
        Suite::Permutations,
        Suite::Reflections,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    /// `None` when the check passed.
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "[PASS] {}", self.name),
            Some(c) => write!(f, "[FAIL] {}: {c}", self.name),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub limit: u64,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed())
    }
}

/// Runs `suite` with sweeps over `[0, limit)`.
pub fn verify(suite: Suite, limit: u64) -> Result<Report> {
    if limit > VERIFY_LIMIT_MAX {
        return Err(Error::budget("verify limit", VERIFY_LIMIT_MAX));
    }
    if limit == 0 {
        return Err(Error::domain("verify needs a positive limit"));
    }
    let parts: Vec<Suite> = match suite {
        Suite::All => Suite::PARTS.to_vec(),
        one => vec![one],
    };
    let mut checks = Vec::new();
    for part in parts {
        for (name, check) in checks_for(part) {
            let counterexample = match check(limit) {
                Ok(c) => c,
                Err(e) => Some(format!("error: {e}")),
            };
            checks.push(CheckOutcome {
                name: name.to_string(),
                counterexample,
            });
        }
    }
    Ok(Report { limit, checks })
}

type Check = fn(u64) -> Result<Option<String>>;

fn checks_for(suite: Suite) -> Vec<(&'static str, Check)> {
    match suite {
        Suite::Methods => vec![
            ("s: all methods agree", s_methods as Check),
            ("d: all methods agree", d_methods),
            ("t: all methods agree", t_methods),
            ("s at -n equals t(n)", negative_extension),
            ("records and gaps", records),
        ],
        Suite::Bijection => vec![
            ("s is injective with s(n) >= n", injective),
            ("missing values are the t(n)", missing_values),
            ("s_inverse inverts s", inverse_round_trip),
            ("s_inverse matches search", inverse_search),
        ],
        Suite::Fixed => vec![
            ("fixed: theorem matches direct", fixed_predicates),
            ("fixed: excluded quarter classes", excluded_quarters),
        ],
        Suite::Trajectories => vec![
            ("T1 leaves its model at 511", t1_divergence),
            ("T2 follows its model", t2_agreement),
            ("trajectories increase", trajectories_increase),
        ],
        Suite::FFamily => vec![
            ("f: brute, recurrence and word agree", f_methods),
            ("f': brute, recurrence and word agree", f_prime_methods),
            ("f first occurrences", f_first_occurrences),
            ("f'(2^n - n) = f(n)", f_shifted_powers),
        ],
        Suite::Permutations => vec![
            ("sigma: reading matches block formula", sigma_reading),
            ("delta: reading matches deduplication", delta_reading),
            (
                "sigma, delta prefixes are permutations",
                prefix_permutations,
            ),
            ("left-down reading", left_down),
            ("suffix permutations", suffix_permutations),
        ],
        Suite::Reflections => vec![("reflection identities", reflections)],
        Suite::All => Vec::new(),
    }
}

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

// Sweep limit for checks that evaluate several big-integer routes per term.
fn big_limit(limit: u64) -> u64 {
    limit.min(1 << 16)
}

fn first_failure<F>(range: std::ops::Range<u64>, check: F) -> Option<String>
where
    F: Fn(u64) -> Option<String> + Sync + Send,
{
    range.into_par_iter().find_map_first(check)
}

fn s_methods(limit: u64) -> Result<Option<String>> {
    Ok(first_failure(0..big_limit(limit), |n| {
        let expected = diagonal_up(&Int::from(n));
        if Natural::from(s_word(n)) != expected {
            return Some(format!(
                "s_word({n}) = {} but the reading gives {expected}",
                s_word(n)
            ));
        }
        [
            EvalMethod::SignedSum,
            EvalMethod::CongruenceSum,
            EvalMethod::Recurrence,
        ]
        .into_iter()
        .find_map(|m| {
            let got = match s_eval(&nat(n), m) {
                Ok(v) => v,
                Err(e) => return Some(e.to_string()),
            };
            (got != expected).then(|| format!("s({n}) by {m} is {got}, reading gives {expected}"))
        })
    }))
}

fn d_methods(limit: u64) -> Result<Option<String>> {
    Ok(first_failure(0..big_limit(limit), |n| {
        let expected = diagonal_down(&nat(n));
        if Natural::from(d_word(n)) != expected {
            return Some(format!(
                "d_word({n}) = {} but the reading gives {expected}",
                d_word(n)
            ));
        }
        [
            EvalMethod::SignedSum,
            EvalMethod::CongruenceSum,
            EvalMethod::Recurrence,
        ]
        .into_iter()
        .find_map(|m| {
            let got = match d_eval(&nat(n), m) {
                Ok(v) => v,
                Err(e) => return Some(e.to_string()),
            };
            (got != expected).then(|| format!("d({n}) by {m} is {got}, reading gives {expected}"))
        })
    }))
}

fn t_methods(limit: u64) -> Result<Option<String>> {
    for n in 1..=limit.min(256) {
        let expected = t_eval(n, EvalMethod::CongruenceSum)?;
        for m in EvalMethod::ALL {
            let got = t_eval(n, m)?;
            if got != expected {
                return Ok(Some(format!("t({n}) by {m} is {got}, expected {expected}")));
            }
        }
        if n <= 64 && Natural::from(t_word(n as u32)) != expected {
            return Ok(Some(format!("t_word({n}) differs")));
        }
    }
    Ok(None)
}

fn negative_extension(limit: u64) -> Result<Option<String>> {
    for n in 1..=limit.min(256) {
        let ext = s_ext(&-Int::from(n));
        let t = t_eval(n, EvalMethod::Recurrence)?;
        if ext != t {
            return Ok(Some(format!("s(-{n}) = {ext} but t({n}) = {t}")));
        }
    }
    Ok(None)
}

fn records(limit: u64) -> Result<Option<String>> {
    for k in 1..=limit.min(64) {
        let r = record_r(k)?;
        if r != record_r_formula(k)? {
            return Ok(Some(format!("R({k}) = {r} disagrees with its closed form")));
        }
        // gap cross-checks 2^(k+1) - R(k) against 2^k - t(k)
        gap(k)?;
    }
    Ok(None)
}

fn injective(limit: u64) -> Result<Option<String>> {
    let values: Vec<u64> = (0..limit).into_par_iter().map(s_word).collect();
    if let Some(n) = (0..limit).find(|&n| values[n as usize] < n) {
        return Ok(Some(format!("s({n}) = {} < {n}", values[n as usize])));
    }
    let mut sorted = values.clone();
    sorted.par_sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        let hits: Vec<u64> = (0..limit).filter(|&n| values[n as usize] == w[0]).collect();
        return Ok(Some(format!("s takes the value {} at {hits:?}", w[0])));
    }
    Ok(None)
}

fn missing_values(limit: u64) -> Result<Option<String>> {
    // s(n) >= n, so values below `limit` can only come from [0, limit)
    let mut hit = vec![false; limit as usize];
    for n in 0..limit {
        let v = s_word(n);
        if v < limit {
            hit[v as usize] = true;
        }
    }
    let missing: Vec<u64> = (0..limit).filter(|&v| !hit[v as usize]).collect();
    let expected: Vec<u64> = (1..=63u32).map(t_word).take_while(|&t| t < limit).collect();
    if missing != expected {
        return Ok(Some(format!(
            "values missed below {limit}: {missing:?}, t gives {expected:?}"
        )));
    }
    Ok(None)
}

fn inverse_round_trip(limit: u64) -> Result<Option<String>> {
    Ok(first_failure(0..big_limit(limit), |m| {
        let n = s_inverse(&nat(m));
        if s_ext(&n) != nat(m) {
            return Some(format!("s(s_inverse({m})) = s({n}) != {m}"));
        }
        let back = s_inverse(&nat(s_word(m)));
        (back != Int::from(m)).then(|| format!("s_inverse(s({m})) = {back}"))
    }))
}

fn inverse_search(limit: u64) -> Result<Option<String>> {
    Ok(first_failure(0..limit.min(1 << 12), |m| {
        let fast = s_inverse(&nat(m));
        let slow = s_inverse_search(&nat(m));
        (fast != slow).then(|| format!("s_inverse({m}) = {fast} but search finds {slow}"))
    }))
}

fn fixed_predicates(limit: u64) -> Result<Option<String>> {
    if let Some(n) = fixed_methods_disagree(limit) {
        return Ok(Some(format!("predicates disagree at {n}")));
    }
    Ok(first_failure(0..big_limit(limit).min(1 << 14), |n| {
        let direct = is_fixed(&nat(n), FixedMethod::Direct);
        (direct != is_fixed(&nat(n), FixedMethod::Theorem))
            .then(|| format!("big predicates disagree at {n}"))
    }))
}

// 4m is excluded by Q_r exactly when m ≡ -r (mod 2^(4r-2))
fn excluded_quarters(limit: u64) -> Result<Option<String>> {
    let quarters = excluded_fixed_quarters(limit / 4)?;
    let predicted: Vec<u64> = (0..=limit / 4)
        .filter(|&m| {
            (1..16u64).any(|r| {
                let modulus = 1u64 << (4 * r - 2);
                (m + r) % modulus == 0
            })
        })
        .collect();
    if quarters != predicted {
        let first = quarters
            .iter()
            .zip(&predicted)
            .find(|(a, b)| a != b)
            .map(|(a, b)| format!("{a} vs {b}"))
            .unwrap_or_else(|| "different lengths".into());
        return Ok(Some(format!(
            "excluded quarters differ from the classes: {first}"
        )));
    }
    Ok(None)
}

fn t1_divergence(_limit: u64) -> Result<Option<String>> {
    let report = first_divergence(word_trajectory(1), (0..).map(model_t1), 600)?;
    match report.divergence {
        Some(d) if d.index == 511 && d.value_a == 4095 && d.value_b == 2047 => Ok(None),
        other => Ok(Some(format!("expected divergence at 511, found {other:?}"))),
    }
}

fn t2_agreement(limit: u64) -> Result<Option<String>> {
    let report = first_divergence(
        word_trajectory(2),
        (0..).map(model_t2),
        limit.min(TRAJECTORY_MAX as u64) as usize,
    )?;
    Ok(report.divergence.map(|d| {
        format!(
            "index {}: T2 = {}, model = {}",
            d.index, d.value_a, d.value_b
        )
    }))
}

fn trajectories_increase(limit: u64) -> Result<Option<String>> {
    Ok(first_failure(0..limit.min(1 << 12), |m| {
        let orbit: Vec<u64> = word_trajectory(m).take(40).collect();
        if orbit[1] == m {
            return orbit
                .iter()
                .any(|&v| v != m)
                .then(|| format!("fixed point {m} moves"));
        }
        orbit
            .windows(2)
            .position(|w| w[1] <= w[0])
            .map(|i| format!("orbit of {m} does not increase at step {i}"))
    }))
}

fn f_methods(limit: u64) -> Result<Option<String>> {
    let big = first_failure(1..big_limit(limit).max(1), |n| {
        let brute = match f_eval(&nat(n), CountMethod::Brute) {
            Ok(v) => v,
            Err(e) => return Some(e.to_string()),
        };
        let rec = match f_eval(&nat(n), CountMethod::Recurrence) {
            Ok(v) => v,
            Err(e) => return Some(e.to_string()),
        };
        (brute != rec || brute != f_word(n)).then(|| {
            format!(
                "f({n}): brute {brute}, recurrence {rec}, word {}",
                f_word(n)
            )
        })
    });
    if big.is_some() {
        return Ok(big);
    }
    Ok(first_failure(1..limit.max(1), |n| {
        let f = f_word(n);
        (f > 4).then(|| format!("f({n}) = {f} exceeds 4 below g(5)"))
    }))
}

fn f_prime_methods(limit: u64) -> Result<Option<String>> {
    Ok(first_failure(0..big_limit(limit), |n| {
        let brute = f_prime_eval(&nat(n), CountMethod::Brute);
        let rec = f_prime_eval(&nat(n), CountMethod::Recurrence);
        let word = f_prime_word(n);
        (brute != rec || brute != word)
            .then(|| format!("f'({n}): brute {brute}, recurrence {rec}, word {word}"))
    }))
}

fn f_first_occurrences(limit: u64) -> Result<Option<String>> {
    for (value, position) in [(1u64, 1u64), (2, 3), (3, 11), (4, 2059)] {
        let search_end = limit.max(position + 1);
        let found = (1..search_end).find(|&n| f_word(n) == value);
        if found != Some(position) {
            return Ok(Some(format!(
                "f first reaches {value} at {found:?}, expected {position}"
            )));
        }
    }
    Ok(None)
}

fn f_shifted_powers(limit: u64) -> Result<Option<String>> {
    let top = bitlen_word(limit).clamp(2, 24) as u64;
    for n in 1..=top {
        let at = (1u64 << n) - n;
        if f_prime_word(at) != f_word(n) {
            return Ok(Some(format!(
                "f'(2^{n} - {n}) = {} but f({n}) = {}",
                f_prime_word(at),
                f_word(n)
            )));
        }
    }
    Ok(None)
}

fn sigma_reading(limit: u64) -> Result<Option<String>> {
    Ok(first_failure(0..limit, |n| {
        (diagonal_sigma(n) != sigma(n)).then(|| {
            format!(
                "sigma({n}): reading {} vs formula {}",
                diagonal_sigma(n),
                sigma(n)
            )
        })
    }))
}

fn delta_reading(limit: u64) -> Result<Option<String>> {
    let prefix = delta_prefix(limit as usize)?;
    Ok(first_failure(0..limit, |n| {
        let read = diagonal_delta(n);
        (read != prefix[n as usize])
            .then(|| format!("delta({n}): reading {read} vs dedup {}", prefix[n as usize]))
    }))
}

fn is_permutation(values: &[u64]) -> bool {
    let mut seen = vec![false; values.len()];
    values.iter().all(|&v| {
        let fresh = (v as usize) < seen.len() && !seen[v as usize];
        if fresh {
            seen[v as usize] = true;
        }
        fresh
    })
}

fn prefix_permutations(limit: u64) -> Result<Option<String>> {
    let top = bitlen_word(limit) - 1;
    for m in 0..=top {
        let len = 1u64 << m;
        let sig: Vec<u64> = (0..len).map(sigma).collect();
        if !is_permutation(&sig) {
            return Ok(Some(format!("sigma on [0, 2^{m}) is not a permutation")));
        }
        if !is_permutation(&delta_prefix(len as usize)?) {
            return Ok(Some(format!("delta on [0, 2^{m}) is not a permutation")));
        }
    }
    Ok(None)
}

fn left_down(limit: u64) -> Result<Option<String>> {
    let terms: Vec<u64> = (0..limit).into_par_iter().map(diagonal_left_down).collect();
    if let Some(i) = terms
        .iter()
        .position(|&v| (v + 1).is_power_of_two() && v > 0)
    {
        return Ok(Some(format!(
            "term {i} is {}, of the form 2^m - 1",
            terms[i]
        )));
    }
    let mut sorted = terms.clone();
    sorted.par_sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Ok(Some(format!("value {} repeats", w[0])));
    }
    Ok(None)
}

fn suffix_permutations(limit: u64) -> Result<Option<String>> {
    let top = (bitlen_word(limit) - 1).clamp(1, 16);
    let mut previous = suffix_perm(1)?;
    for k in 2..=top {
        let table = suffix_perm(k)?;
        if !table.restricts_to(&previous) {
            return Ok(Some(format!(
                "suffix table {k} does not restrict to table {}",
                k - 1
            )));
        }
        previous = table;
    }
    Ok(None)
}

fn reflections(limit: u64) -> Result<Option<String>> {
    let top = (bitlen_word(limit) as u64).clamp(1, 16);
    for j in 1..=top {
        let bad = first_failure(0..1 << j, |n| {
            let v = nat(n);
            if n + j < 1 << j {
                let via = match s_via_reflection(&v, j) {
                    Ok(v) => v,
                    Err(e) => return Some(e.to_string()),
                };
                if via != nat(s_word(n)) {
                    return Some(format!("s({n}) by reflection at j = {j} is {via}"));
                }
            }
            if n >= j {
                let via = match d_via_reflection(&v, j) {
                    Ok(v) => v,
                    Err(e) => return Some(e.to_string()),
                };
                if via != nat(d_word(n)) {
                    return Some(format!("d({n}) by reflection at j = {j} is {via}"));
                }
            }
            None
        });
        if bad.is_some() {
            return Ok(bad);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_small() {
        for suite in Suite::PARTS {
            let report = verify(suite, 1 << 10).unwrap();
            assert!(report.passed(), "{:?}", report.first_failure());
        }
    }

    #[test]
    fn all_runs_every_part() {
        let report = verify(Suite::All, 1 << 8).unwrap();
        let expected: usize = Suite::PARTS.iter().map(|&s| checks_for(s).len()).sum();
        assert_eq!(report.checks.len(), expected);
        assert!(report.passed());
    }

    #[test]
    fn limits() {
        assert!(matches!(
            verify(Suite::Methods, VERIFY_LIMIT_MAX + 1),
            Err(Error::Budget { .. })
        ));
        assert!(verify(Suite::Methods, 0).is_err());
    }

    #[test]
    fn excluded_classes_reach_third_progression() {
        // 1021 ≡ -3 (mod 1024)
        assert_eq!(excluded_quarters(4 * 2000).unwrap(), None);
        assert!(excluded_fixed_quarters(1021).unwrap().contains(&1021));
    }

    #[test]
    fn permutation_helper() {
        assert!(is_permutation(&[2, 0, 1]));
        assert!(!is_permutation(&[0, 0, 1]));
        assert!(!is_permutation(&[0, 3, 1]));
    }

    #[test]
    fn outcome_lines() {
        let ok = CheckOutcome {
            name: "x".into(),
            counterexample: None,
        };
        assert_eq!(ok.to_string(), "[PASS] x");
        let bad = CheckOutcome {
            name: "x".into(),
            counterexample: Some("n = 3".into()),
        };
        assert_eq!(bad.to_string(), "[FAIL] x: n = 3");
    }
}
