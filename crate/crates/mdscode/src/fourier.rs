//! Fourier matrices of the multiplicative group and arithmetic-progression
//! row selections of them.
//!
//! For `n` dividing `q - 1` the field has a primitive `n`-th root of
//! unity `w_n = omega^((q-1)/n)`, and the Fourier matrix is the `n x n`
//! matrix with entry `(i, j)` equal to `w_n^(i*j)`. Row selections pick
//! `count` rows starting at `start` and stepping by `step`, wrapping
//! modulo `n`; steps coprime to `n` keep the selected rows distinct.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::galois::FieldContext;
use crate::linalg::FieldMatrix;

/// An arithmetic progression of row indices modulo the row count:
/// `start, start + step, start + 2*step, ...` taken `count` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowSelection {
    /// First row, zero-based, in `[0, n)`.
    pub start: usize,
    /// Number of rows selected.
    pub count: usize,
    /// Increment between selected rows; must be coprime to `n`.
    pub step: usize,
}

impl RowSelection {
    pub fn new(start: usize, count: usize, step: usize) -> Self {
        RowSelection { start, count, step }
    }

    /// The selected row indices for a matrix with `n` rows, after
    /// validation against `n`.
    pub(crate) fn indices(&self, n: usize) -> Result<Vec<usize>> {
        if n == 0 || self.start >= n || self.count == 0 || self.count > n {
            return Err(Error::SelectionOutOfRange { start: self.start, count: self.count, n });
        }
        if gcd(self.step as u64, n as u64) != 1 {
            return Err(Error::StepNotCoprime { step: self.step, n });
        }
        Ok((0..self.count).map(|t| (self.start + t * self.step) % n).collect())
    }
}

impl fmt::Display for RowSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "start={} count={} step={}", self.start, self.count, self.step)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// The `n x n` Fourier matrix over `ctx`, for any `n` dividing `q - 1`.
pub fn fourier_matrix(ctx: &Arc<FieldContext>, n: usize) -> Result<FieldMatrix> {
    let q = ctx.q();
    if n == 0 || (q - 1) % n as u64 != 0 {
        return Err(Error::NoRootOfUnity { n: n as u64, q });
    }
    let scale = ((q - 1) / n as u64) as i64;
    Ok(FieldMatrix::from_fn(ctx.clone(), n, n, |i, j| {
        ctx.omega_pow(scale * (i as i64) * (j as i64))
    }))
}

/// The rows of `f` named by `sel`, in selection order (wrapping modulo
/// the row count of `f`).
pub fn select_rows(f: &FieldMatrix, sel: RowSelection) -> Result<FieldMatrix> {
    let indices = sel.indices(f.rows())?;
    Ok(FieldMatrix::from_fn(f.context().clone(), indices.len(), f.cols(), |i, j| {
        f[(indices[i], j)]
    }))
}

/// Do the first three rows of the full Fourier matrix (order `q - 1`)
/// have only nonzero `2 x 2` minors? Fields with fewer than three rows
/// available answer `false`.
///
/// The check is exhaustive, so the cost grows quadratically in `q`; it
/// is meant for desk-scale fields.
pub fn check_first_three_rows_2x2(ctx: &Arc<FieldContext>) -> bool {
    let n = (ctx.q() - 1) as usize;
    if n < 3 {
        return false;
    }
    let top = FieldMatrix::from_fn(ctx.clone(), 3, n, |i, j| {
        ctx.omega_pow((i * j) as i64)
    });
    let (ok, _) = top
        .minors_all_nonzero_with_budget(2, None)
        .expect("uncapped scan cannot overflow a budget");
    ok
}
