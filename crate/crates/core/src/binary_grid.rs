//! Literal readings of the binary array.
//!
//! Row `r` of the right-adjusted array holds the 2's-complement expansion of
//! `r`, with column `k` holding the `2^k` bit. Every reading here pulls
//! individual bits out of row indices with [`bit_of`]; nothing is
//! materialized except by [`render_window`], which exists for display and
//! tests.
//!
//! Rows small enough for a machine word take a word path. Larger rows take
//! an arbitrary-precision path. Both paths are public so they can be
//! compared on their overlap.

use std::fmt;

use num_bigint::Sign;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{bitlen_word, Error, Int, Natural, Result};

/// The `2^k` bit of `n` in 2's complement.
///
/// For `n < 0` this is the complement of bit `k` of `-(n + 1)`, so bits above
/// the magnitude are all 1.
pub fn bit_of(n: &Int, k: u64) -> u8 {
    match n.sign() {
        Sign::Minus => {
            let flipped: Int = -(n + 1u32);
            1 - flipped.magnitude().bit(k) as u8
        }
        _ => n.magnitude().bit(k) as u8,
    }
}

/// Word version of [`bit_of`].
pub fn bit_of_word(n: i64, k: u32) -> u8 {
    if k >= 63 {
        (n < 0) as u8
    } else {
        ((n >> k) & 1) as u8
    }
}

// s(n) < 2^(bitlen(n) + 2), so rows below 2^62 keep the sum inside a u64;
// t(62) < 2^62 bounds the negative side.
const WORD_UP_MAX: i64 = 1 << 62;
const WORD_UP_MIN: i64 = -62;

/// Reads the upward-sloping diagonal through row `n`: the sum over `k` of
/// `bit_of(n + k, k) * 2^k`.
///
/// The reading stops at the first `k` with `0 <= n + k < 2^k`; from there on
/// every row is too short to reach column `k`. Defined for every integer,
/// and for `n < 0` it yields the missing numbers.
pub fn diagonal_up(n: &Int) -> Natural {
    match n.to_i64() {
        Some(w) if (WORD_UP_MIN..WORD_UP_MAX).contains(&w) => Natural::from(diagonal_up_word(w)),
        _ => diagonal_up_big(n),
    }
}

/// Word path of [`diagonal_up`]; requires `-62 <= n < 2^62`.
pub fn diagonal_up_word(n: i64) -> u64 {
    assert!(
        (WORD_UP_MIN..WORD_UP_MAX).contains(&n),
        "row {n} outside the word range"
    );
    let mut total = 0u64;
    let mut k = 0u32;
    loop {
        let row = n + k as i64;
        if row >= 0 && (k >= 63 || (1i64 << k) > row) {
            return total;
        }
        total |= (bit_of_word(row, k) as u64) << k;
        k += 1;
    }
}

/// Arbitrary-precision path of [`diagonal_up`].
pub fn diagonal_up_big(n: &Int) -> Natural {
    let mut total = Natural::zero();
    let mut k = 0u64;
    let mut row = n.clone();
    loop {
        if !row.is_negative() && row.magnitude().bits() <= k {
            return total;
        }
        if bit_of(&row, k) == 1 {
            total.set_bit(k, true);
        }
        row += 1u32;
        k += 1;
    }
}

/// Reads the downward-sloping diagonal through row `n`: the sum of
/// `bit_of(n - k, k) * 2^k` for `0 <= k <= floor(log2 n)`.
pub fn diagonal_down(n: &Natural) -> Natural {
    match n.to_u64() {
        Some(w) => Natural::from(diagonal_down_word(w)),
        None => diagonal_down_big(n),
    }
}

pub fn diagonal_down_word(n: u64) -> u64 {
    (0..bitlen_word(n))
        .map(|k| (((n - k as u64) >> k) & 1) << k)
        .fold(0, |acc, b| acc | b)
}

pub fn diagonal_down_big(n: &Natural) -> Natural {
    let mut total = Natural::zero();
    for k in 0..n.bits() {
        let row = n - k;
        if row.bit(k) {
            total.set_bit(k, true);
        }
    }
    total
}

/// Starting at the leading 1 of row `r`, reads up and to the right:
/// cells `(r, c), (r-1, c-1), ..., (r-c, 0)` with `c = bitlen(r) - 1`,
/// most significant first.
pub fn diagonal_sigma(r: u64) -> u64 {
    if r == 0 {
        return 0;
    }
    let c = bitlen_word(r) - 1;
    (0..=c).fold(0, |acc, i| {
        let col = c - i;
        acc | ((((r - i as u64) >> col) & 1) << col)
    })
}

/// Starting at the leading 1 of row `r`, reads down and to the right:
/// cells `(r, c), (r+1, c-1), ..., (r+c, 0)`.
pub fn diagonal_delta(r: u64) -> u64 {
    if r == 0 {
        return 0;
    }
    let c = bitlen_word(r) - 1;
    (0..=c).fold(0, |acc, i| {
        let col = c - i;
        acc | ((((r + i as u64) >> col) & 1) << col)
    })
}

/// Length of row `r` in the left-adjusted array. Row 0 is the single cell `0`.
fn left_row_len(r: u64) -> u32 {
    bitlen_word(r).max(1)
}

/// Cell `(r, j)` of the left-adjusted array, `j` counted from the leading bit.
fn left_cell(r: u64, j: u32) -> u64 {
    (r >> (left_row_len(r) - 1 - j)) & 1
}

/// Reads the left-adjusted array down the diagonal starting at column 0 of
/// row `i`: cells `(i, 0), (i+1, 1), (i+2, 2), ...` for as long as the row is
/// long enough, most significant first.
pub fn diagonal_left_down(i: u64) -> u64 {
    let mut value = 0u64;
    let mut j = 0u32;
    while j < left_row_len(i + j as u64) {
        value = (value << 1) | left_cell(i + j as u64, j);
        j += 1;
    }
    value
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adjustment {
    Right,
    Left,
}

/// Default cap on the number of rows [`render_window`] will materialize.
pub const MAX_WINDOW_ROWS: u64 = 1 << 16;

/// A materialized rectangle of the binary array.
///
/// Rows are stored most significant cell first, i.e. in reading order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridWindow {
    first: Int,
    last: Int,
    columns: usize,
    adjustment: Adjustment,
    rows: Vec<Vec<u8>>,
}

impl GridWindow {
    pub fn first(&self) -> &Int {
        &self.first
    }

    pub fn last(&self) -> &Int {
        &self.last
    }

    /// Column count for right-adjusted windows; the widest row for left-adjusted ones.
    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn adjustment(&self) -> Adjustment {
        self.adjustment
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Bit `k` (counted from the right) of the row with index `row`, for
    /// right-adjusted windows. `None` outside the window.
    pub fn cell(&self, row: &Int, k: usize) -> Option<u8> {
        if self.adjustment != Adjustment::Right || row < &self.first || row > &self.last {
            return None;
        }
        let offset = (row - &self.first).to_usize()?;
        let cells = &self.rows[offset];
        cells.len().checked_sub(k + 1).map(|i| cells[i])
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect())
            .collect()
    }
}

impl fmt::Display for GridWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .first
            .to_string()
            .len()
            .max(self.last.to_string().len());
        let mut row = self.first.clone();
        for cells in self.row_strings() {
            match self.adjustment {
                Adjustment::Right => writeln!(f, "{row:>width$}  {cells}")?,
                Adjustment::Left => writeln!(f, "{row:>width$}  {cells:<w$}", w = self.columns)?,
            }
            row += 1u32;
        }
        Ok(())
    }
}

/// Materializes rows `first..=last`. Right-adjusted windows are `columns` wide;
/// left-adjusted windows ignore `columns` and give each row its own length.
pub fn render_window(
    first: &Int,
    last: &Int,
    columns: usize,
    adjustment: Adjustment,
) -> Result<GridWindow> {
    render_window_with_budget(first, last, columns, adjustment, MAX_WINDOW_ROWS)
}

pub fn render_window_with_budget(
    first: &Int,
    last: &Int,
    columns: usize,
    adjustment: Adjustment,
    max_rows: u64,
) -> Result<GridWindow> {
    if first > last {
        return Err(Error::domain(format!("empty window {first}..={last}")));
    }
    let count = (last - first + 1u32)
        .to_u64()
        .filter(|&c| c <= max_rows)
        .ok_or_else(|| Error::budget("window rows", max_rows))?;

    let rows: Vec<Vec<u8>> = match adjustment {
        Adjustment::Right => {
            if columns == 0 {
                return Err(Error::domain(
                    "a right-adjusted window needs at least one column",
                ));
            }
            (0..count)
                .map(|i| {
                    let r = first + i;
                    (0..columns as u64).rev().map(|k| bit_of(&r, k)).collect()
                })
                .collect()
        }
        Adjustment::Left => {
            if first.is_negative() {
                return Err(Error::domain(
                    "the left-adjusted array has no negative rows",
                ));
            }
            (0..count)
                .map(|i| {
                    let r: Natural = first.magnitude() + i;
                    if r.is_zero() {
                        return vec![0];
                    }
                    (0..r.bits()).rev().map(|k| r.bit(k) as u8).collect()
                })
                .collect()
        }
    };
    let columns = match adjustment {
        Adjustment::Right => columns,
        Adjustment::Left => rows.iter().map(Vec::len).max().unwrap_or(1),
    };
    Ok(GridWindow {
        first: first.clone(),
        last: last.clone(),
        columns,
        adjustment,
        rows,
    })
}

/// Reassembles `n >= 0` from its bits, as the sum of `bit_of(n, k) * 2^k`.
pub fn from_bits(n: &Natural) -> Natural {
    let signed = Int::from(n.clone());
    (0..n.bits()).fold(Natural::zero(), |acc, k| {
        if bit_of(&signed, k) == 1 {
            acc + (Natural::one() << k)
        } else {
            acc
        }
    })
}
