//! Finite windows of the upper-triangular Toeplitz matrix of a sequence.

use exact_core::Rat;
use genfun::CoeffSeq;

use crate::TpcheckError;

/// `R x C` window with entry `(i, j) = a_{j-i}` (`a_k = 0` for `k < 0`).
///
/// Constant along diagonals, zero strictly below the main diagonal.
#[derive(Debug, Clone)]
pub struct ToeplitzWindow {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
    source: CoeffSeq,
}

/// Builds the window. The top-right entry is `a_{C-1}`, so `C` may not
/// exceed the known prefix unless the tail is exactly zero.
pub fn toeplitz_window(
    s: &CoeffSeq,
    rows: usize,
    cols: usize,
) -> Result<ToeplitzWindow, TpcheckError> {
    if rows == 0 || cols == 0 {
        return Err(TpcheckError::EmptyWindow { rows, cols });
    }
    if cols > s.truncation_order() && !s.exact_tail() {
        return Err(TpcheckError::WindowExceedsKnown {
            needed: cols - 1,
            known: s.truncation_order(),
        });
    }
    let coeff = |k: usize| s.known_coeff(k).expect("checked above");
    let mut entries = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            entries.push(if j >= i { coeff(j - i) } else { Rat::zero() });
        }
    }
    Ok(ToeplitzWindow {
        rows,
        cols,
        entries,
        source: s.clone(),
    })
}

impl ToeplitzWindow {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn source(&self) -> &CoeffSeq {
        &self.source
    }

    /// Extracts the submatrix with the given (sorted) row and column
    /// index sets.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|&i| cols.iter().map(|&j| self.entry(i, j).clone()).collect())
            .collect()
    }
}
