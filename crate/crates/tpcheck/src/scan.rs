//! Exhaustive minor scanning with structural pruning.
//!
//! The scan enumerates row/column index subsets of sizes `1..=m` in
//! (size, row-set, column-set) lexicographic order and computes each
//! minor exactly. Two prunes cut the work without changing any verdict:
//!
//! - *Domination.* If the sorted index sets violate `i_l <= j_l` at some
//!   position, the submatrix contains a forced zero block wider than its
//!   order and the minor is structurally zero. Those minors are skipped
//!   (they can never be negative) and enter min-tracking as zeros.
//! - *Shift classes.* Toeplitz entries depend only on `j - i`, so the
//!   minor of `(I, J)` equals the minor of `(I - t, J - t)`. Only
//!   canonical pairs with `i_1 = 0` are computed. The first negative
//!   pair in enumeration order is always canonical (shifting a negative
//!   pair down is lexicographically smaller and equally negative), so
//!   the reported witness is still the globally first negative minor.
//!
//! The combinatorial budget counts determinants actually computed, i.e.
//! canonical dominated pairs; it is checked against the cap before any
//! work starts.

use exact_core::Rat;
use genfun::CoeffSeq;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;

use crate::det::{bareiss_big, bareiss_i128};
use crate::report::{MinorWitness, TPReport, Verdict};
use crate::window::{toeplitz_window, ToeplitzWindow};
use crate::TpcheckError;

/// Default maximum minor order.
pub const DEFAULT_MAX_ORDER: usize = 4;
/// Default window side length.
pub const DEFAULT_WINDOW: usize = 16;
/// Default cap on the number of determinants per scan.
pub const DEFAULT_CAP: u64 = 2_000_000;

/// Scan configuration: minor order bound, window shape, budget cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub max_order: usize,
    pub rows: usize,
    pub cols: usize,
    pub cap: u64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            max_order: DEFAULT_MAX_ORDER,
            rows: DEFAULT_WINDOW,
            cols: DEFAULT_WINDOW,
            cap: DEFAULT_CAP,
        }
    }
}

impl ScanOptions {
    pub fn scan(&self, s: &CoeffSeq) -> Result<TPReport, TpcheckError> {
        minor_scan_with_cap(s, self.max_order, self.rows, self.cols, self.cap)
    }
}

/// Counts pairs `(I, J)` of `k`-subsets with `i_l <= j_l` for all `l`
/// (the structurally nonzero minors of an `rows x cols` window).
pub fn count_dominated_pairs(rows: usize, cols: usize, k: usize) -> u128 {
    count_pairs(rows, cols, k, false)
}

/// Counts dominated pairs whose row set starts at index 0 (the shift
/// classes actually computed by the scan).
pub fn count_canonical_pairs(rows: usize, cols: usize, k: usize) -> u128 {
    count_pairs(rows, cols, k, true)
}

fn count_pairs(rows: usize, cols: usize, k: usize, canonical: bool) -> u128 {
    if k == 0 || k > rows || k > cols {
        return 0;
    }
    // DP over index values; state = (#rows chosen, #cols chosen), with
    // the column count never ahead of the row count.
    let mut cur = vec![vec![0u128; k + 1]; k + 1];
    cur[0][0] = 1;
    for v in 0..rows.max(cols) {
        let mut next = vec![vec![0u128; k + 1]; k + 1];
        for ni in 0..=k {
            for nj in 0..=ni {
                let ways = cur[ni][nj];
                if ways == 0 {
                    continue;
                }
                let di_max = usize::from(v < rows && ni < k);
                let dj_max = usize::from(v < cols && nj < k);
                for di in 0..=di_max {
                    if canonical && v == 0 && ni == 0 && di == 0 {
                        continue; // row set must contain index 0
                    }
                    for dj in 0..=dj_max {
                        let (ni2, nj2) = (ni + di, nj + dj);
                        if nj2 > ni2 {
                            continue;
                        }
                        next[ni2][nj2] = next[ni2][nj2].saturating_add(ways);
                    }
                }
            }
        }
        cur = next;
    }
    cur[k][k]
}

fn binom_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}

/// Lex-ordered `k`-subsets of `lo..hi`.
fn combinations(lo: usize, hi: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if hi.saturating_sub(lo) < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (lo..lo + k).collect();
    loop {
        out.push(cur.clone());
        // successor
        let mut p = k;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            if cur[p] + 1 <= hi - (k - p) {
                cur[p] += 1;
                for l in p + 1..k {
                    cur[l] = cur[l - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Lex-ordered column sets dominated by a fixed row set: sorted sets
/// `J` with `j_l >= i_l` for every position.
struct DominatedCols<'a> {
    row_set: &'a [usize],
    cols: usize,
    cur: Option<Vec<usize>>,
}

impl<'a> DominatedCols<'a> {
    fn new(row_set: &'a [usize], cols: usize) -> Self {
        let cur = Self::refill(row_set, cols, &[], row_set[0]);
        DominatedCols {
            row_set,
            cols,
            cur,
        }
    }

    /// Minimal completion of `prefix ++ [cand] ++ ...` under the lower
    /// bounds; `None` when it does not fit in `0..cols`.
    fn refill(row_set: &[usize], cols: usize, prefix: &[usize], cand: usize) -> Option<Vec<usize>> {
        let k = row_set.len();
        let mut v = prefix.to_vec();
        let mut prev = cand;
        if prev >= cols {
            return None;
        }
        v.push(prev);
        for l in v.len()..k {
            prev = row_set[l].max(prev + 1);
            if prev >= cols {
                return None;
            }
            v.push(prev);
        }
        Some(v)
    }
}

impl<'a> Iterator for DominatedCols<'a> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.cur.take()?;
        let k = cur.len();
        for p in (0..k).rev() {
            if let Some(next) = Self::refill(self.row_set, self.cols, &cur[..p], cur[p] + 1) {
                self.cur = Some(next);
                break;
            }
        }
        Some(cur)
    }
}

/// Window lifted to integers once: entry `(i, j)` of the original
/// window equals `big[i * cols + j] / scale`. When every lifted entry
/// fits `i128`, a machine-integer copy is kept for the fast kernel.
struct LiftedWindow {
    cols: usize,
    big: Vec<BigInt>,
    small: Option<Vec<i128>>,
    scale: BigInt,
}

fn lift_window(window: &ToeplitzWindow) -> LiftedWindow {
    let (rows, cols) = (window.rows(), window.cols());
    let mut scale = BigInt::one();
    for i in 0..rows {
        for j in 0..cols {
            scale = scale.lcm(window.entry(i, j).denom());
        }
    }
    let mut big = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let e = window.entry(i, j);
            big.push(e.numer() * (&scale / e.denom()));
        }
    }
    let small = big
        .iter()
        .map(BigInt::to_i128)
        .collect::<Option<Vec<i128>>>();
    LiftedWindow {
        cols,
        big,
        small,
        scale,
    }
}

impl LiftedWindow {
    /// Determinant of the lifted submatrix (an integer: `scale^k` times
    /// the rational minor).
    fn minor_int(&self, row_set: &[usize], col_set: &[usize]) -> BigInt {
        if let Some(small) = &self.small {
            let m: Vec<Vec<i128>> = row_set
                .iter()
                .map(|&i| {
                    col_set
                        .iter()
                        .map(|&j| small[i * self.cols + j])
                        .collect()
                })
                .collect();
            if let Some(d) = bareiss_i128(m) {
                return BigInt::from(d);
            }
        }
        let m: Vec<Vec<BigInt>> = row_set
            .iter()
            .map(|&i| {
                col_set
                    .iter()
                    .map(|&j| self.big[i * self.cols + j].clone())
                    .collect()
            })
            .collect();
        bareiss_big(m)
    }

    /// Rational value of a lifted order-`k` determinant.
    fn to_rat(&self, det_int: BigInt, k: usize) -> Rat {
        let mut denom = BigInt::one();
        for _ in 0..k {
            denom *= &self.scale;
        }
        Rat::from_big(det_int, denom)
    }
}

struct RowScan {
    first_negative: Option<(Vec<usize>, BigInt)>,
    min_seen: Option<BigInt>,
    computed: u64,
}

fn scan_row_set(lifted: &LiftedWindow, row_set: &[usize], cols: usize) -> RowScan {
    let mut out = RowScan {
        first_negative: None,
        min_seen: None,
        computed: 0,
    };
    for col_set in DominatedCols::new(row_set, cols) {
        let value = lifted.minor_int(row_set, &col_set);
        out.computed += 1;
        if value.is_negative() && out.first_negative.is_none() {
            out.first_negative = Some((col_set, value.clone()));
        }
        match &out.min_seen {
            Some(m) if *m <= value => {}
            _ => out.min_seen = Some(value),
        }
    }
    out
}

/// Scans all minors of orders `1..=m` of the `rows x cols` window of
/// `s` with the default budget cap.
pub fn minor_scan(
    s: &CoeffSeq,
    m: usize,
    rows: usize,
    cols: usize,
) -> Result<TPReport, TpcheckError> {
    minor_scan_with_cap(s, m, rows, cols, DEFAULT_CAP)
}

/// [`minor_scan`] with an explicit determinant budget.
///
/// Orders are scanned in ascending size; within a size, row sets and
/// column sets advance lexicographically, so the reported witness is the
/// first negative minor in that deterministic order regardless of how
/// the per-row-set work is scheduled. Scanning stops at the end of the
/// size block that produced a violation.
pub fn minor_scan_with_cap(
    s: &CoeffSeq,
    m: usize,
    rows: usize,
    cols: usize,
    cap: u64,
) -> Result<TPReport, TpcheckError> {
    let limit = rows.min(cols);
    if m < 1 || m > limit {
        return Err(TpcheckError::BadOrder { m, limit });
    }
    let window = toeplitz_window(s, rows, cols)?;

    let required: u128 = (1..=m)
        .map(|k| count_canonical_pairs(rows, cols, k))
        .fold(0u128, u128::saturating_add);
    if required > u128::from(cap) {
        return Err(TpcheckError::BudgetExceeded { required, cap });
    }

    let lifted = lift_window(&window);

    let mut min_seen: Option<Rat> = None;
    let fold_min = |min_seen: &mut Option<Rat>, v: Rat| match min_seen {
        Some(m) if *m <= v => {}
        _ => *min_seen = Some(v),
    };

    for k in 1..=m {
        // canonical row sets: {0} together with k-1 indices above 0
        let row_sets: Vec<Vec<usize>> = combinations(1, rows, k - 1)
            .into_iter()
            .map(|tail| {
                let mut v = Vec::with_capacity(k);
                v.push(0);
                v.extend(tail);
                v
            })
            .collect();

        let results: Vec<RowScan> = row_sets
            .par_iter()
            .map(|rs| scan_row_set(&lifted, rs, cols))
            .collect();

        // structurally zero minors of this size enter min-tracking as 0
        if binom_u128(rows, k) * binom_u128(cols, k) > count_dominated_pairs(rows, cols, k) {
            fold_min(&mut min_seen, Rat::zero());
        }
        // all order-k lifted determinants share the scale factor, so the
        // block minimum can be taken on integers
        if let Some(block_min) = results.iter().filter_map(|r| r.min_seen.as_ref()).min() {
            fold_min(&mut min_seen, lifted.to_rat(block_min.clone(), k));
        }

        let witness = results.iter().enumerate().find_map(|(idx, r)| {
            r.first_negative
                .as_ref()
                .map(|(col_set, value)| MinorWitness {
                    rows: row_sets[idx].clone(),
                    cols: col_set.clone(),
                    value: lifted.to_rat(value.clone(), k),
                })
        });

        if let Some(witness) = witness {
            return Ok(TPReport {
                verdict: Verdict::Violated,
                max_order_checked: k,
                rows,
                cols,
                witness: Some(witness),
                min_minor_seen: min_seen,
                note: None,
            });
        }
    }

    Ok(TPReport {
        verdict: Verdict::ConsistentUpTo,
        max_order_checked: m,
        rows,
        cols,
        witness: None,
        min_minor_seen: min_seen,
        note: None,
    })
}
