//! Acceptance suite. Each criterion runs under its time limit and prints one
//! `[PASS]`/`[FAIL]` line; the process exits nonzero if any fail.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, TestRunner};
use rayon::prelude::*;

use sloping::analysis::{
    excluded_fixed_quarters, first_divergence, fixed_points, is_fixed, mean_excess, model_t1,
    model_t2, unbounded_witness, word_trajectory, FixedMethod,
};
use sloping::binary_grid::{
    diagonal_delta, diagonal_down, diagonal_left_down, diagonal_sigma, diagonal_up,
};
use sloping::closed_forms::{
    d_eval, delta_prefix, f_eval, f_prime_eval, f_prime_word, f_word, g_min, g_prime_search, gap,
    record_r, s_eval, s_ext, s_inverse, s_word, sigma, t_eval, CountMethod, EvalMethod,
};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const S_PREFIX: [u64; 33] = [
    0, 3, 6, 5, 4, 15, 10, 9, 8, 11, 14, 13, 28, 23, 18, 17, 16, 19, 22, 21, 20, 31, 26, 25, 24,
    27, 30, 61, 44, 39, 34, 33, 32,
];
const MISSING: [u64; 9] = [1, 2, 7, 12, 29, 62, 123, 248, 505];
const INVERSE_PREFIX: [i64; 30] = [
    0, -1, -2, 1, 4, 3, 2, -3, 8, 7, 6, 9, -4, 11, 10, 5, 16, 15, 14, 17, 20, 19, 18, 13, 24, 23,
    22, 25, 12, -5,
];
const D_PREFIX: [u64; 22] = [
    0, 1, 0, 3, 2, 1, 4, 7, 6, 5, 0, 11, 10, 9, 12, 15, 14, 13, 8, 3, 18, 17,
];
const F_TABLE: [u64; 32] = [
    1, 1, 2, 1, 2, 2, 2, 1, 2, 2, 3, 1, 2, 2, 2, 1, 2, 2, 3, 2, 2, 2, 2, 1, 2, 2, 3, 1, 2, 2, 2, 1,
];
const F_PRIME_TABLE: [u64; 17] = [0, 1, 1, 1, 0, 2, 1, 1, 0, 1, 1, 1, 1, 2, 1, 1, 0];
const SIGMA_PREFIX: [u64; 16] = [0, 1, 3, 2, 6, 5, 4, 7, 15, 10, 9, 8, 11, 14, 13, 12];
const DELTA_PREFIX: [u64; 16] = [0, 1, 3, 2, 4, 7, 6, 5, 11, 10, 9, 12, 15, 14, 13, 8];
const LEFT_DOWN_PREFIX: [u64; 13] = [0, 2, 6, 5, 4, 14, 13, 8, 11, 10, 9, 12, 30];

const S_METHODS: [EvalMethod; 4] = [
    EvalMethod::SignedSum,
    EvalMethod::CongruenceSum,
    EvalMethod::Recurrence,
    EvalMethod::Oracle,
];

fn nat(v: u64) -> BigUint {
    BigUint::from(v)
}

fn pow2(k: u64) -> BigUint {
    BigUint::from(1u32) << k
}

fn s_prefix_all_methods() -> Outcome {
    for (n, &expected) in S_PREFIX.iter().enumerate() {
        for m in S_METHODS {
            let got = s_eval(&nat(n as u64), m).map_err(|e| e.to_string())?;
            ensure!(
                got == nat(expected),
                "s({n}) by {m} = {got}, table says {expected}"
            );
        }
        let read = diagonal_up(&BigInt::from(n));
        ensure!(read == nat(expected), "reading of row {n} = {read}");
    }
    Ok(())
}

fn missing_numbers() -> Outcome {
    let methods = [
        EvalMethod::SignedSum,
        EvalMethod::CongruenceSum,
        EvalMethod::Recurrence,
        EvalMethod::FromD,
        EvalMethod::FromS,
    ];
    for (i, &expected) in MISSING.iter().enumerate() {
        let n = i as u64 + 1;
        for m in methods {
            let got = t_eval(n, m).map_err(|e| e.to_string())?;
            ensure!(
                got == nat(expected),
                "t({n}) by {m} = {got}, expected {expected}"
            );
        }
    }
    Ok(())
}

fn method_sweep() -> Outcome {
    let bad = (0..1u64 << 16).into_par_iter().find_map_first(|n| {
        let check = || -> Outcome {
            let err = |e: sloping::Error| e.to_string();
            let s_ref = s_eval(&nat(n), EvalMethod::Oracle).map_err(err)?;
            let d_ref = d_eval(&nat(n), EvalMethod::Oracle).map_err(err)?;
            for m in S_METHODS {
                ensure!(s_eval(&nat(n), m).map_err(err)? == s_ref, "s({n}) by {m}");
                ensure!(d_eval(&nat(n), m).map_err(err)? == d_ref, "d({n}) by {m}");
            }
            ensure!(diagonal_down(&nat(n)) == d_ref, "d reading at {n}");
            Ok(())
        };
        check().err()
    });
    ensure!(bad.is_none(), "methods disagree: {}", bad.unwrap());

    let values: Vec<u64> = (0..1u64 << 20).into_par_iter().map(s_word).collect();
    let below = values.iter().enumerate().find(|&(n, &v)| v < n as u64);
    ensure!(below.is_none(), "s(n) < n at {:?}", below);
    let mut sorted = values;
    sorted.par_sort_unstable();
    let repeat = sorted.windows(2).find(|w| w[0] == w[1]);
    ensure!(repeat.is_none(), "s repeats the value {:?}", repeat);
    Ok(())
}

fn negative_arguments() -> Outcome {
    let expected = [62u64, 29, 12, 7, 2, 1];
    for (i, &value) in expected.iter().enumerate() {
        let n = -6 + i as i64;
        let ext = s_ext(&BigInt::from(n));
        ensure!(ext == nat(value), "s({n}) = {ext}, expected {value}");
        let t = t_eval(n.unsigned_abs(), EvalMethod::CongruenceSum).map_err(|e| e.to_string())?;
        ensure!(ext == t, "s({n}) differs from t({})", -n);
    }
    Ok(())
}

fn inverse_prefix() -> Outcome {
    for (m, &expected) in INVERSE_PREFIX.iter().enumerate() {
        let got = s_inverse(&nat(m as u64));
        ensure!(
            got == BigInt::from(expected),
            "s_inverse({m}) = {got}, expected {expected}"
        );
    }
    let bad = (0..1u64 << 14)
        .into_par_iter()
        .find_first(|&m| s_ext(&s_inverse(&nat(m))) != nat(m));
    ensure!(bad.is_none(), "s(s_inverse(m)) != m at {:?}", bad);
    Ok(())
}

fn d_prefix() -> Outcome {
    for (n, &expected) in D_PREFIX.iter().enumerate() {
        for m in S_METHODS {
            let got = d_eval(&nat(n as u64), m).map_err(|e| e.to_string())?;
            ensure!(
                got == nat(expected),
                "d({n}) by {m} = {got}, expected {expected}"
            );
        }
    }
    Ok(())
}

fn trajectory_divergence() -> Outcome {
    let t1 = first_divergence(word_trajectory(1), (0..).map(model_t1), 600)
        .map_err(|e| e.to_string())?;
    ensure!(
        t1.agree_count == 511,
        "T1 agrees on {} terms",
        t1.agree_count
    );
    let d = t1.divergence.ok_or("T1 never diverges")?;
    ensure!(
        d.index == 511 && d.value_a == 4095 && d.value_b == 2047,
        "T1 diverges as {d:?}"
    );
    let t2 = first_divergence(word_trajectory(2), (0..).map(model_t2), 1_000_000)
        .map_err(|e| e.to_string())?;
    ensure!(t2.divergence.is_none(), "T2 diverges: {:?}", t2.divergence);
    Ok(())
}

fn fixed_point_checks() -> Outcome {
    let bad = (0..1u64 << 20).into_par_iter().find_first(|&n| {
        is_fixed(&nat(n), FixedMethod::Direct) != is_fixed(&nat(n), FixedMethod::Theorem)
    });
    ensure!(bad.is_none(), "predicates disagree at {:?}", bad);
    let fixed = fixed_points(52).map_err(|e| e.to_string())?;
    ensure!(
        fixed == [0, 4, 8, 16, 20, 24, 32, 36, 40, 48, 52],
        "fixed points {fixed:?}"
    );
    let quarters = excluded_fixed_quarters(700).map_err(|e| e.to_string())?;
    for m in (3..=700).step_by(4).chain((62..=638).step_by(64)) {
        ensure!(quarters.contains(&m), "quarter {m} not excluded");
    }
    Ok(())
}

fn f_family() -> Outcome {
    for (i, &expected) in F_TABLE.iter().enumerate() {
        let n = i as u64 + 1;
        for m in [CountMethod::Brute, CountMethod::Recurrence] {
            let got = f_eval(&nat(n), m).map_err(|e| e.to_string())?;
            ensure!(got == expected, "f({n}) = {got}, expected {expected}");
        }
    }
    for (value, position) in [(1u64, 1u64), (2, 3), (3, 11), (4, 2059)] {
        let first = (1..=position).find(|&n| f_word(n) == value);
        ensure!(first == Some(position), "f first hits {value} at {first:?}");
    }
    for (m, expected) in [1u64, 3, 11, 2059].into_iter().enumerate() {
        let g = g_min(m as u32 + 1).map_err(|e| e.to_string())?;
        ensure!(g == nat(expected), "g({}) = {g}", m + 1);
    }
    let g5 = g_min(5).map_err(|e| e.to_string())?;
    ensure!(g5 == pow2(2059) + 2059u32, "g(5) is wrong");
    for (n, &expected) in F_PRIME_TABLE.iter().enumerate() {
        for m in [CountMethod::Brute, CountMethod::Recurrence] {
            let got = f_prime_eval(&nat(n as u64), m);
            ensure!(got == expected, "f'({n}) = {got}, expected {expected}");
        }
        ensure!(f_prime_word(n as u64) == expected, "word f'({n})");
    }
    let searched: Vec<Option<u64>> = (0..4).map(|v| g_prime_search(v, 10_000)).collect();
    ensure!(
        searched == [Some(0), Some(1), Some(5), Some(2037)],
        "g' search gives {searched:?}"
    );
    let big = pow2(2059) - 2059u32;
    for m in [CountMethod::Brute, CountMethod::Recurrence] {
        let got = f_prime_eval(&big, m);
        ensure!(got == 4, "f'(2^2059 - 2059) = {got}");
    }
    Ok(())
}

fn records() -> Outcome {
    for (k, expected) in [3u64, 6, 15, 28, 61, 126].into_iter().enumerate() {
        let r = record_r(k as u64 + 1).map_err(|e| e.to_string())?;
        ensure!(r == nat(expected), "R({}) = {r}", k + 1);
    }
    let mut prefix = Vec::new();
    for k in 1..=64u64 {
        let r = record_r(k).map_err(|e| e.to_string())?;
        let t = t_eval(k, EvalMethod::CongruenceSum).map_err(|e| e.to_string())?;
        ensure!(pow2(k + 1) - &r == pow2(k) - t, "gap identity fails at {k}");
        let g = gap(k).map_err(|e| e.to_string())?;
        if k <= 10 {
            prefix.push(g.to_u64().unwrap());
        }
    }
    ensure!(
        prefix == [1, 2, 1, 4, 3, 2, 5, 8, 7, 6],
        "gap prefix {prefix:?}"
    );
    Ok(())
}

fn is_permutation(values: &[u64]) -> bool {
    let mut seen = vec![false; values.len()];
    for &v in values {
        if v as usize >= seen.len() || seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
    }
    true
}

fn permutations() -> Outcome {
    let sig: Vec<u64> = (0..16).map(sigma).collect();
    ensure!(sig == SIGMA_PREFIX, "sigma prefix {sig:?}");
    let del = delta_prefix(1 << 14).map_err(|e| e.to_string())?;
    ensure!(del[..16] == DELTA_PREFIX, "delta prefix {:?}", &del[..16]);
    for n in 0..1u64 << 14 {
        ensure!(
            diagonal_sigma(n) == sigma(n),
            "sigma reading differs at {n}"
        );
        ensure!(
            diagonal_delta(n) == del[n as usize],
            "delta reading differs at {n}"
        );
    }
    for m in 0..=14 {
        let len = 1usize << m;
        let sig: Vec<u64> = (0..len as u64).map(sigma).collect();
        ensure!(
            is_permutation(&sig),
            "sigma on [0, 2^{m}) is not a permutation"
        );
        ensure!(
            is_permutation(&del[..len]),
            "delta on [0, 2^{m}) is not a permutation"
        );
    }
    Ok(())
}

fn left_adjusted() -> Outcome {
    let terms: Vec<u64> = (0..1u64 << 14).map(diagonal_left_down).collect();
    ensure!(terms[..13] == LEFT_DOWN_PREFIX, "prefix {:?}", &terms[..13]);
    let mut sorted = terms.clone();
    sorted.sort_unstable();
    ensure!(sorted.windows(2).all(|w| w[0] != w[1]), "values repeat");
    let mersenne = terms.iter().find(|&&v| v > 0 && (v + 1).is_power_of_two());
    ensure!(mersenne.is_none(), "value {:?} is 2^m - 1", mersenne);
    Ok(())
}

fn witnesses() -> Outcome {
    let strategy = (0u64..1 << 20, 0u32..8, 0u32..5, -200i64..200)
        .prop_filter("2^m > b + d", |&(_, d, extra, b)| {
            (1i64 << (d + extra)) > b + d as i64
        });
    let mut runner = TestRunner::new(Config::with_cases(20));
    for _ in 0..20 {
        let (c, d, extra, b) = strategy
            .new_tree(&mut runner)
            .map_err(|e| e.to_string())?
            .current();
        let a = nat(2 * c + 1) << d;
        let m = d + extra;
        let b = BigInt::from(b);
        let w = unbounded_witness(&a, &b, m).map_err(|e| e.to_string())?;
        let n = BigInt::from(w.n.clone());
        ensure!(
            (&n - &b).mod_floor(&BigInt::from(a.clone())).is_zero(),
            "n not in the progression for a = {a}, b = {b}"
        );
        let k = ((BigInt::from(1) << m) - &b).to_u64().unwrap();
        ensure!(w.k == k, "k = {} but 2^m - b = {k}", w.k);
        if k <= 64 {
            let s = s_eval(&w.n, EvalMethod::CongruenceSum).map_err(|e| e.to_string())?;
            ensure!(
                s - &w.n >= pow2(k),
                "s(n) - n below 2^{k} for a = {a}, b = {b}"
            );
        } else {
            let shifted = &w.n + k;
            ensure!(
                (shifted % pow2(k)).is_zero(),
                "n + {k} not divisible by 2^{k} for a = {a}, b = {b}"
            );
        }
    }
    Ok(())
}

fn average_order() -> Outcome {
    for e in (10..=20u64).step_by(2) {
        let mean = mean_excess(1 << e).map_err(|e| e.to_string())?;
        let bound = num_rational::BigRational::from_integer(BigInt::from(2 * e));
        ensure!(
            mean >= Zero::zero() && mean <= bound,
            "mean_excess(2^{e}) = {mean}"
        );
    }
    Ok(())
}

struct Criterion {
    number: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            number: 1,
            title: "s(0..32), all methods",
            limit: secs(1),
            run: s_prefix_all_methods,
        },
        Criterion {
            number: 2,
            title: "missing numbers t(1..9)",
            limit: secs(1),
            run: missing_numbers,
        },
        Criterion {
            number: 3,
            title: "method agreement and injectivity",
            limit: secs(30),
            run: method_sweep,
        },
        Criterion {
            number: 4,
            title: "s at negative arguments",
            limit: secs(1),
            run: negative_arguments,
        },
        Criterion {
            number: 5,
            title: "inverse prefix and round trip",
            limit: secs(5),
            run: inverse_prefix,
        },
        Criterion {
            number: 6,
            title: "d(0..21)",
            limit: secs(1),
            run: d_prefix,
        },
        Criterion {
            number: 7,
            title: "trajectory divergence",
            limit: secs(60),
            run: trajectory_divergence,
        },
        Criterion {
            number: 8,
            title: "fixed points",
            limit: secs(60),
            run: fixed_point_checks,
        },
        Criterion {
            number: 9,
            title: "f family",
            limit: secs(30),
            run: f_family,
        },
        Criterion {
            number: 10,
            title: "records and gaps",
            limit: secs(1),
            run: records,
        },
        Criterion {
            number: 11,
            title: "sigma and delta permutations",
            limit: secs(30),
            run: permutations,
        },
        Criterion {
            number: 12,
            title: "left-adjusted reading",
            limit: secs(10),
            run: left_adjusted,
        },
        Criterion {
            number: 13,
            title: "unboundedness witnesses",
            limit: secs(10),
            run: witnesses,
        },
        Criterion {
            number: 14,
            title: "average excess",
            limit: secs(60),
            run: average_order,
        },
    ];

    let mut failed = 0;
    for c in criteria {
        let started = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(c.run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = started.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed > c.limit {
                Err(format!("took {elapsed:.2?}, limit {:?}", c.limit))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!("[PASS] {:>2} {} ({elapsed:.2?})", c.number, c.title),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2} {}: {why}", c.number, c.title);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
