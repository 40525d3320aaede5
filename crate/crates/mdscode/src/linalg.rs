//! Dense matrices over a [`FieldContext`] with exact Gaussian
//! elimination: determinants, reduced row echelon form, linear solving,
//! and exhaustive minor scans (the workhorse behind MDS certification).
//!
//! Everything here is deterministic. Pivoting always takes the first
//! nonzero entry in column order, and minor enumeration walks index sets
//! in lexicographic order, so counterexamples and counts are reproducible
//! run to run.

use std::ops::{Index, IndexMut};
use std::sync::Arc;

use crate::comb::{Combinations, binomial};
use crate::error::{Error, Result};
use crate::galois::{FieldContext, FieldElement};

/// Ceiling on exhaustive minor enumeration unless a caller overrides it.
pub const DEFAULT_MINOR_BUDGET: u64 = 10_000_000;

/// A row-major matrix over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    ctx: Arc<FieldContext>,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

/// Outcome of one exhaustive minor scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct MinorScan {
    pub(crate) all_nonzero: bool,
    /// Minors actually evaluated (stops at the first zero).
    pub(crate) checked: u64,
    /// Row and column indices of the first zero minor, in scan order.
    pub(crate) first_zero: Option<(Vec<usize>, Vec<usize>)>,
}

impl FieldMatrix {
    /// Wrap `data` (row-major, length `rows * cols`) as a matrix.
    ///
    /// # Panics
    /// Panics if the length is wrong or an entry is out of range for the
    /// field.
    pub fn new(ctx: Arc<FieldContext>, rows: usize, cols: usize, data: Vec<FieldElement>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows * cols");
        for &e in &data {
            assert!(
                (e.value() as u64) < ctx.q(),
                "entry {} is not an element of {}",
                e.value(),
                ctx
            );
        }
        FieldMatrix { ctx, rows, cols, data }
    }

    pub fn zeros(ctx: Arc<FieldContext>, rows: usize, cols: usize) -> Self {
        FieldMatrix { ctx, rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(ctx: Arc<FieldContext>, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m[(i, i)] = FieldElement::ONE;
        }
        m
    }

    /// Build a matrix entry by entry.
    pub fn from_fn(
        ctx: Arc<FieldContext>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::new(ctx, rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[FieldElement] {
        assert!(i < self.rows, "row {i} out of range");
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn assert_same_field(&self, other: &FieldMatrix) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.spec() == other.ctx.spec(),
            "matrices belong to different fields"
        );
    }

    pub fn transpose(&self) -> FieldMatrix {
        FieldMatrix::from_fn(self.ctx.clone(), self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Matrix product `self * other`.
    ///
    /// # Panics
    /// Panics on a field or dimension mismatch.
    pub fn matmul(&self, other: &FieldMatrix) -> FieldMatrix {
        self.assert_same_field(other);
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let ctx = &self.ctx;
        let mut out = FieldMatrix::zeros(self.ctx.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = ctx.mul(a, other[(k, j)]);
                    out[(i, j)] = ctx.add(out[(i, j)], t);
                }
            }
        }
        out
    }

    /// Determinant by Gaussian elimination, taking the first nonzero
    /// entry in each column as the pivot.
    ///
    /// # Panics
    /// Panics if the matrix is not square.
    pub fn determinant(&self) -> FieldElement {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let mut buf = self.data.clone();
        det_in_place(&mut buf, self.rows, &self.ctx)
    }

    /// Reduced row echelon form. Returns the reduced matrix, its rank,
    /// and the pivot columns in increasing order.
    pub fn rref(&self) -> (FieldMatrix, usize, Vec<usize>) {
        let ctx = self.ctx.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pr) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pr, rank);
            let inv = ctx.inv(m[(rank, col)]).expect("pivot is nonzero");
            for c in col..m.cols {
                m[(rank, c)] = ctx.mul(m[(rank, c)], inv);
            }
            for r in 0..m.rows {
                if r == rank || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)];
                for c in col..m.cols {
                    let t = ctx.mul(factor, m[(rank, c)]);
                    m[(r, c)] = ctx.sub(m[(r, c)], t);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        (m, rank, pivots)
    }

    /// The submatrix picked out by `rows` and `cols`.
    ///
    /// # Panics
    /// Panics unless both index lists are strictly increasing and in
    /// range.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> FieldMatrix {
        for w in [rows, cols] {
            for pair in w.windows(2) {
                assert!(pair[0] < pair[1], "indices must be strictly increasing");
            }
        }
        if let Some(&r) = rows.last() {
            assert!(r < self.rows, "row index {r} out of range");
        }
        if let Some(&c) = cols.last() {
            assert!(c < self.cols, "column index {c} out of range");
        }
        FieldMatrix::from_fn(self.ctx.clone(), rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])]
        })
    }

    /// Check every `j x j` minor under the default enumeration budget.
    /// Returns the verdict and, on failure, the first zero minor in
    /// lexicographic (row-set major) order.
    pub fn minors_all_nonzero(&self, j: usize) -> Result<(bool, Option<(Vec<usize>, Vec<usize>)>)> {
        self.minors_all_nonzero_with_budget(j, Some(DEFAULT_MINOR_BUDGET))
    }

    /// Same as [`minors_all_nonzero`](Self::minors_all_nonzero) with an
    /// explicit budget; `None` removes the cap entirely.
    pub fn minors_all_nonzero_with_budget(
        &self,
        j: usize,
        budget: Option<u64>,
    ) -> Result<(bool, Option<(Vec<usize>, Vec<usize>)>)> {
        let scan = self.scan_minors(j, budget)?;
        Ok((scan.all_nonzero, scan.first_zero))
    }

    pub(crate) fn scan_minors(&self, j: usize, budget: Option<u64>) -> Result<MinorScan> {
        assert!(
            j <= self.rows.min(self.cols),
            "minor size {j} exceeds matrix dimensions {}x{}",
            self.rows,
            self.cols
        );
        let planned = binomial(self.rows as u64, j as u64)
            .and_then(|a| a.checked_mul(binomial(self.cols as u64, j as u64)?));
        if let Some(b) = budget {
            match planned {
                Some(p) if p <= b as u128 => {}
                _ => {
                    return Err(Error::CombinationOverflow {
                        planned: planned.unwrap_or(u128::MAX),
                        budget: b,
                    });
                }
            }
        }
        let mut scratch = vec![FieldElement::ZERO; j * j];
        let mut checked = 0u64;
        let mut row_sets = Combinations::new(self.rows, j);
        while let Some(rs) = row_sets.next() {
            let mut col_sets = Combinations::new(self.cols, j);
            while let Some(cs) = col_sets.next() {
                for (a, &r) in rs.iter().enumerate() {
                    for (b, &c) in cs.iter().enumerate() {
                        scratch[a * j + b] = self[(r, c)];
                    }
                }
                checked += 1;
                if det_in_place(&mut scratch, j, &self.ctx).is_zero() {
                    return Ok(MinorScan {
                        all_nonzero: false,
                        checked,
                        first_zero: Some((rs.to_vec(), cs.to_vec())),
                    });
                }
            }
        }
        Ok(MinorScan { all_nonzero: true, checked, first_zero: None })
    }

    /// Solve `self * X = rhs` for a square nonsingular `self`; `rhs` may
    /// carry several right-hand sides as columns.
    ///
    /// # Panics
    /// Panics on a field mismatch, a non-square `self`, or a row-count
    /// mismatch with `rhs`.
    pub fn solve(&self, rhs: &FieldMatrix) -> Result<FieldMatrix> {
        self.assert_same_field(rhs);
        assert_eq!(self.rows, self.cols, "solve needs a square matrix");
        assert_eq!(self.rows, rhs.rows, "right-hand side has wrong height");
        let n = self.rows;
        let aug = FieldMatrix::from_fn(self.ctx.clone(), n, n + rhs.cols, |i, j| {
            if j < n { self[(i, j)] } else { rhs[(i, j - n)] }
        });
        let (red, rank, pivots) = aug.rref();
        if rank < n || pivots.iter().take(n).any(|&c| c >= n) {
            return Err(Error::Singular);
        }
        Ok(FieldMatrix::from_fn(self.ctx.clone(), n, rhs.cols, |i, j| red[(i, n + j)]))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Index<(usize, usize)> for FieldMatrix {
    type Output = FieldElement;

    fn index(&self, (r, c): (usize, usize)) -> &FieldElement {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for FieldMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut FieldElement {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl std::fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Determinant of the `n x n` matrix laid out row-major in `buf`,
/// destroying `buf` in the process.
fn det_in_place(buf: &mut [FieldElement], n: usize, ctx: &FieldContext) -> FieldElement {
    debug_assert_eq!(buf.len(), n * n);
    let mut negate = false;
    for col in 0..n {
        let Some(pr) = (col..n).find(|&r| !buf[r * n + col].is_zero()) else {
            return FieldElement::ZERO;
        };
        if pr != col {
            for c in 0..n {
                buf.swap(pr * n + c, col * n + c);
            }
            negate = !negate;
        }
        let pivot_inv = ctx.inv(buf[col * n + col]).expect("pivot is nonzero");
        for r in col + 1..n {
            let lead = buf[r * n + col];
            if lead.is_zero() {
                continue;
            }
            let factor = ctx.mul(lead, pivot_inv);
            for c in col..n {
                let t = ctx.mul(factor, buf[col * n + c]);
                buf[r * n + c] = ctx.sub(buf[r * n + c], t);
            }
        }
    }
    let mut det = FieldElement::ONE;
    for i in 0..n {
        det = ctx.mul(det, buf[i * n + i]);
    }
    if negate { ctx.neg(det) } else { det }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::field_build;
    use crate::test_oracles::{det_cofactor, minors_brute, rank_brute};
    use rand_chacha::ChaCha8Rng;
    use rand_chacha::rand_core::{RngCore, SeedableRng};

    fn gf(p: u64, m: u32) -> Arc<FieldContext> {
        field_build(p, m).unwrap()
    }

    fn random_matrix(ctx: &Arc<FieldContext>, r: usize, c: usize, rng: &mut ChaCha8Rng) -> FieldMatrix {
        FieldMatrix::from_fn(ctx.clone(), r, c, |_, _| {
            ctx.element(rng.next_u64() % ctx.q()).unwrap()
        })
    }

    #[test]
    fn determinant_of_identity() {
        let ctx = gf(3, 2);
        assert_eq!(FieldMatrix::identity(ctx, 3).determinant(), FieldElement::ONE);
    }

    #[test]
    fn determinant_catches_proportional_fourier_rows() {
        // [[1, w], [w, w^2]] over GF(8): the second row is w times the
        // first, so the determinant must vanish.
        let ctx = gf(2, 3);
        let w = ctx.omega();
        let m = FieldMatrix::new(
            ctx.clone(),
            2,
            2,
            vec![FieldElement::ONE, w, w, ctx.mul(w, w)],
        );
        assert!(m.determinant().is_zero());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let ctx = gf(3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..50 {
            let m = random_matrix(&ctx, 5, 5, &mut rng);
            assert_eq!(m.determinant(), det_cofactor(&m));
        }
    }

    #[test]
    fn determinant_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for ctx in [gf(2, 3), gf(3, 2), gf(5, 1)] {
            for _ in 0..1000 {
                let a = random_matrix(&ctx, 4, 4, &mut rng);
                let b = random_matrix(&ctx, 4, 4, &mut rng);
                assert_eq!(
                    a.matmul(&b).determinant(),
                    ctx.mul(a.determinant(), b.determinant())
                );
            }
        }
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let ctx = gf(2, 3);
        let id = FieldMatrix::identity(ctx, 4);
        let (red, rank, pivots) = id.rref();
        assert_eq!(red, id);
        assert_eq!(rank, 4);
        assert_eq!(pivots, vec![0, 1, 2, 3]);
    }

    #[test]
    fn rref_of_zero_matrix() {
        let ctx = gf(3, 2);
        let z = FieldMatrix::zeros(ctx, 3, 5);
        let (red, rank, pivots) = z.rref();
        assert_eq!(red, z);
        assert_eq!(rank, 0);
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_rank_matches_minor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for ctx in [gf(2, 2), gf(5, 1)] {
            for r in 1..=4usize {
                for c in 1..=4usize {
                    for _ in 0..20 {
                        let m = random_matrix(&ctx, r, c, &mut rng);
                        let (_, rank, _) = m.rref();
                        assert_eq!(rank, rank_brute(&m));
                    }
                }
            }
        }
    }

    #[test]
    fn rref_normalizes_row_equivalent_matrices_identically() {
        // Scaling and adding rows must not change the reduced form.
        let ctx = gf(7, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let m = random_matrix(&ctx, 3, 5, &mut rng);
        let mut scaled = m.clone();
        let two = ctx.element(2).unwrap();
        for c in 0..5 {
            scaled[(1, c)] = ctx.mul(scaled[(1, c)], two);
            let t = scaled[(2, c)];
            scaled[(0, c)] = ctx.add(scaled[(0, c)], t);
        }
        assert_eq!(m.rref().0, scaled.rref().0);
    }

    #[test]
    fn submatrix_picks_rows_and_columns() {
        let ctx = gf(5, 1);
        let m = FieldMatrix::from_fn(ctx.clone(), 3, 4, |i, j| {
            ctx.element(((i * 4 + j) % 5) as u64).unwrap()
        });
        let s = m.submatrix(&[0, 2], &[1, 3]);
        assert_eq!(s.rows(), 2);
        assert_eq!(s.cols(), 2);
        assert_eq!(s[(0, 0)], m[(0, 1)]);
        assert_eq!(s[(1, 1)], m[(2, 3)]);
        let all = m.submatrix(&[0, 1, 2], &[0, 1, 2, 3]);
        assert_eq!(all, m);
    }

    #[test]
    #[should_panic(expected = "strictly increasing")]
    fn submatrix_rejects_unsorted_indices() {
        let ctx = gf(5, 1);
        let m = FieldMatrix::identity(ctx, 3);
        let _ = m.submatrix(&[2, 0], &[0, 1]);
    }

    #[test]
    fn minors_find_the_first_zero() {
        let ctx = gf(2, 3);
        let ones = FieldMatrix::from_fn(ctx, 2, 2, |_, _| FieldElement::ONE);
        let (ok, witness) = ones.minors_all_nonzero(2).unwrap();
        assert!(!ok);
        assert_eq!(witness, Some((vec![0, 1], vec![0, 1])));
    }

    #[test]
    fn fourier_top_rows_have_nonzero_2x2_minors_over_gf8() {
        let ctx = gf(2, 3);
        let m = FieldMatrix::from_fn(ctx.clone(), 3, 7, |i, j| {
            ctx.omega_pow((i * j) as i64)
        });
        let (ok, witness) = m.minors_all_nonzero(2).unwrap();
        assert!(ok, "unexpected zero minor at {witness:?}");
    }

    #[test]
    fn minors_agree_with_brute_force_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        let ctx = gf(5, 1);
        for r in 1..=4usize {
            for c in 1..=6usize {
                for _ in 0..10 {
                    let m = random_matrix(&ctx, r, c, &mut rng);
                    for j in 1..=r.min(c) {
                        assert_eq!(
                            m.minors_all_nonzero(j).unwrap(),
                            minors_brute(&m, j),
                            "disagreement on {r}x{c}, j={j}"
                        );
                    }
                }
            }
        }
        // The wrapped top rows of the GF(5) Fourier matrix contain a zero
        // 2x2 minor; make sure both routes report the same first witness.
        let ctx = gf(5, 1);
        let m = FieldMatrix::from_fn(ctx.clone(), 3, 4, |i, j| ctx.omega_pow((i * j) as i64));
        assert_eq!(m.minors_all_nonzero(2).unwrap(), minors_brute(&m, 2));
        assert!(!m.minors_all_nonzero(2).unwrap().0);
    }

    #[test]
    fn minor_budget_is_enforced() {
        let ctx = gf(2, 4);
        let wide = FieldMatrix::from_fn(ctx.clone(), 8, 30, |i, j| {
            ctx.omega_pow((i * j) as i64)
        });
        let err = wide.minors_all_nonzero_with_budget(8, Some(1000)).unwrap_err();
        assert!(matches!(err, Error::CombinationOverflow { budget: 1000, .. }));
        // And an explicit None lifts the cap.
        let small = FieldMatrix::identity(gf(2, 2), 3);
        assert!(small.minors_all_nonzero_with_budget(1, None).is_ok());
    }

    #[test]
    fn solve_recovers_known_solutions() {
        let ctx = gf(2, 3);
        let id = FieldMatrix::identity(ctx.clone(), 3);
        let mut rng = ChaCha8Rng::seed_from_u64(26);
        let rhs = random_matrix(&ctx, 3, 2, &mut rng);
        assert_eq!(id.solve(&rhs).unwrap(), rhs);

        // Vandermonde systems over distinct points are nonsingular.
        let pts = [ctx.element(1).unwrap(), ctx.omega(), ctx.element(5).unwrap()];
        let v = FieldMatrix::from_fn(ctx.clone(), 3, 3, |i, j| {
            ctx.pow(pts[i], j as i64).unwrap()
        });
        let x = random_matrix(&ctx, 3, 1, &mut rng);
        let b = v.matmul(&x);
        assert_eq!(v.solve(&b).unwrap(), x);
    }

    #[test]
    fn solve_reports_singular_systems() {
        let ctx = gf(3, 2);
        let m = FieldMatrix::from_fn(ctx.clone(), 2, 2, |_, _| FieldElement::ONE);
        let rhs = FieldMatrix::from_fn(ctx.clone(), 2, 1, |i, _| {
            ctx.element(i as u64).unwrap()
        });
        assert_eq!(m.solve(&rhs).unwrap_err(), Error::Singular);
    }

    #[test]
    fn empty_minor_scan_counts_one_trivial_minor() {
        let ctx = gf(2, 2);
        let m = FieldMatrix::zeros(ctx, 0, 4);
        let scan = m.scan_minors(0, Some(10)).unwrap();
        assert!(scan.all_nonzero);
        assert_eq!(scan.checked, 1);
    }
}
