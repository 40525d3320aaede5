//! Linear codes from Fourier-matrix rows, their maximum-length
//! extensions, and MDS certification.
//!
//! A `[n, k]` code is MDS exactly when every `k x k` minor of its
//! generator is nonzero, so certification is an exhaustive minor scan
//! (or a seeded random sample of column sets when the exhaustive count
//! is out of reach). For a generator in standard form `(I | A)` the
//! equivalent, cheaper criterion is that no square submatrix of `A` of
//! any size is singular.

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::{RngCore, SeedableRng};

use crate::comb::binomial;
use crate::error::{Error, Result};
use crate::fourier::{RowSelection, fourier_matrix, select_rows};
use crate::galois::{FieldContext, FieldElement};
use crate::linalg::{DEFAULT_MINOR_BUDGET, FieldMatrix};

/// How a code came to be. Extensions that are only proven for codes of
/// a specific shape use this to refuse foreign inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Rows of the full Fourier matrix (order `q - 1`).
    FourierRows(RowSelection),
    /// A Fourier-row code extended by the two standard-basis columns.
    TwoColumnExtension(RowSelection),
    /// Three Fourier rows prefixed with the full identity block
    /// (characteristic-two fields only).
    IdentityExtensionDim3(RowSelection),
    /// Found by the exhaustive dimension-3 search.
    SearchWitness,
    /// Produced by a transformation of another code (standard form, dual).
    Derived,
    /// Loaded from a file or supplied as a raw generator.
    External,
}

/// A linear `[n, k]` code, held as a full-rank generator matrix.
#[derive(Debug, Clone)]
pub struct LinearCode {
    generator: FieldMatrix,
    check: OnceLock<FieldMatrix>,
    provenance: Provenance,
}

impl LinearCode {
    /// Wrap a generator matrix, verifying it has full row rank.
    pub fn from_generator(generator: FieldMatrix, provenance: Provenance) -> Result<Self> {
        let (_, rank, _) = generator.rref();
        if rank != generator.rows() {
            return Err(Error::RankDeficient { rank, k: generator.rows() });
        }
        Ok(LinearCode { generator, check: OnceLock::new(), provenance })
    }

    pub fn generator(&self) -> &FieldMatrix {
        &self.generator
    }

    /// Block length.
    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    /// Dimension.
    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn field(&self) -> &Arc<FieldContext> {
        self.generator.context()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// A zero-dimensional code (the dual of a full `[n, n]` code).
    pub fn is_degenerate(&self) -> bool {
        self.k() == 0
    }

    /// The `(n - k) x n` check matrix, computed on first use from the
    /// standard form; rows of the generator pair to zero with it.
    pub fn check_matrix(&self) -> &FieldMatrix {
        self.check.get_or_init(|| {
            let h = dual_code(self).generator;
            debug_assert!(is_zero_matrix(&self.generator.matmul(&h.transpose())));
            h
        })
    }
}

fn is_zero_matrix(m: &FieldMatrix) -> bool {
    (0..m.rows()).all(|i| m.row(i).iter().all(|e| e.is_zero()))
}

/// The code generated by an arithmetic-progression selection of rows of
/// the full Fourier matrix: a `[q - 1, count]` code.
pub fn code_from_rows(ctx: &Arc<FieldContext>, sel: RowSelection) -> Result<LinearCode> {
    let f = fourier_matrix(ctx, (ctx.q() - 1) as usize)?;
    let generator = select_rows(&f, sel)?;
    LinearCode::from_generator(generator, Provenance::FourierRows(sel))
}

/// Extend a Fourier-row code of dimension `r >= 2` by two extra columns
/// at the front: `(1, 0, .., 0)` and `(0, .., 0, 1)`. The result is a
/// `[q + 1, r]` code, MDS whenever the input rows were selected with a
/// step coprime to `q - 1`.
pub fn extend_two_columns(code: &LinearCode) -> Result<LinearCode> {
    let Provenance::FourierRows(sel) = code.provenance else {
        return Err(Error::WrongProvenance);
    };
    let r = code.k();
    if r < 2 {
        return Err(Error::DimensionTooSmall { k: r, min: 2 });
    }
    let g = code.generator();
    let extended = FieldMatrix::from_fn(g.context().clone(), r, code.n() + 2, |i, j| match j {
        0 => {
            if i == 0 { FieldElement::ONE } else { FieldElement::ZERO }
        }
        1 => {
            if i == r - 1 { FieldElement::ONE } else { FieldElement::ZERO }
        }
        _ => g[(i, j - 2)],
    });
    LinearCode::from_generator(extended, Provenance::TwoColumnExtension(sel))
}

/// Over a characteristic-two field with `q >= 4`: prefix the first three
/// Fourier rows with a full identity block, giving a `[q + 2, 3]` code
/// in standard form.
pub fn extend_identity_columns_dim3(ctx: &Arc<FieldContext>) -> Result<LinearCode> {
    extend_identity_columns_dim3_with(ctx, RowSelection::new(0, 3, 1))
}

/// Same as [`extend_identity_columns_dim3`] but with an arbitrary
/// three-row selection of the Fourier matrix.
pub fn extend_identity_columns_dim3_with(
    ctx: &Arc<FieldContext>,
    sel: RowSelection,
) -> Result<LinearCode> {
    if ctx.characteristic() != 2 {
        return Err(Error::FieldNotEven { q: ctx.q() });
    }
    if ctx.q() < 4 {
        return Err(Error::FieldTooSmall { q: ctx.q() });
    }
    if sel.count != 3 {
        return Err(Error::LengthMismatch { expected: 3, got: sel.count });
    }
    let f = fourier_matrix(ctx, (ctx.q() - 1) as usize)?;
    let a = select_rows(&f, sel)?;
    let b = FieldMatrix::from_fn(ctx.clone(), 3, a.cols() + 3, |i, j| {
        if j < 3 {
            if i == j { FieldElement::ONE } else { FieldElement::ZERO }
        } else {
            a[(i, j - 3)]
        }
    });
    LinearCode::from_generator(b, Provenance::IdentityExtensionDim3(sel))
}

/// Certification strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertifyMode {
    /// Every `k x k` minor, in lexicographic column-set order.
    Full,
    /// `count` column sets drawn by a ChaCha stream seeded with `seed`.
    /// A passing verdict is strong evidence, not a proof.
    Sampled { count: u64, seed: u64 },
    /// The standard-form criterion: all square submatrices of `A`.
    StandardForm,
}

impl fmt::Display for CertifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyMode::Full => write!(f, "full"),
            CertifyMode::Sampled { count, seed } => write!(f, "sampled (count={count}, seed={seed})"),
            CertifyMode::StandardForm => write!(f, "standard-form"),
        }
    }
}

/// Outcome of an MDS certification run.
///
/// `counterexample`, when present, names row and column sets of the
/// generator whose minor evaluates to zero; a full-mode pass means
/// `minors_checked` covered every `k`-subset of columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdsCertificate {
    pub verdict: bool,
    pub minors_checked: u64,
    pub counterexample: Option<(Vec<usize>, Vec<usize>)>,
    pub mode: CertifyMode,
}

impl fmt::Display for MdsCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mode: {}", self.mode)?;
        writeln!(f, "minors checked: {}", self.minors_checked)?;
        write!(f, "verdict: {}", if self.verdict { "MDS" } else { "NOT MDS" })?;
        if let Some((rows, cols)) = &self.counterexample {
            write!(f, "\nzero minor at rows {rows:?}, columns {cols:?}")?;
        }
        Ok(())
    }
}

/// Certify a code under the default enumeration budget.
pub fn certify_mds(code: &LinearCode, mode: CertifyMode) -> Result<MdsCertificate> {
    certify_mds_with_budget(code, mode, Some(DEFAULT_MINOR_BUDGET))
}

/// Certify a code with an explicit budget (`None` lifts the cap).
pub fn certify_mds_with_budget(
    code: &LinearCode,
    mode: CertifyMode,
    budget: Option<u64>,
) -> Result<MdsCertificate> {
    certify_matrix(code.generator(), mode, budget)
}

/// Certify a bare generator matrix. Works on matrices that may not even
/// have full rank (those simply fail with a zero-minor counterexample).
pub fn certify_matrix(
    g: &FieldMatrix,
    mode: CertifyMode,
    budget: Option<u64>,
) -> Result<MdsCertificate> {
    let (k, n) = (g.rows(), g.cols());
    if k > n {
        let (_, rank, _) = g.rref();
        return Err(Error::RankDeficient { rank, k });
    }
    match mode {
        CertifyMode::Full => {
            let scan = g.scan_minors(k, budget)?;
            Ok(MdsCertificate {
                verdict: scan.all_nonzero,
                minors_checked: scan.checked,
                counterexample: scan.first_zero,
                mode,
            })
        }
        CertifyMode::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rows: Vec<usize> = (0..k).collect();
            let mut checked = 0u64;
            for _ in 0..count {
                let cols = sample_sorted(&mut rng, n, k);
                checked += 1;
                if g.submatrix(&rows, &cols).determinant().is_zero() {
                    return Ok(MdsCertificate {
                        verdict: false,
                        minors_checked: checked,
                        counterexample: Some((rows, cols)),
                        mode,
                    });
                }
            }
            Ok(MdsCertificate { verdict: true, minors_checked: checked, counterexample: None, mode })
        }
        CertifyMode::StandardForm => {
            let code = LinearCode::from_generator(g.clone(), Provenance::External)?;
            certify_mds_standard_with_budget(&code, budget)
        }
    }
}

/// Uniform `k`-subset of `{0, .., n-1}`, sorted: a partial Fisher-Yates
/// shuffle driven by rejection-sampled uniform draws, so the sequence is
/// fully determined by the seed.
fn sample_sorted(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = i + uniform_below(rng, (n - i) as u64) as usize;
        pool.swap(i, j);
    }
    let mut picked: Vec<usize> = pool[..k].to_vec();
    picked.sort_unstable();
    picked
}

fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let zone = bound * (u64::MAX / bound);
    loop {
        let r = rng.next_u64();
        if r < zone {
            return r % bound;
        }
    }
}

/// Column-permute a code into standard form `(I_k | A)`.
///
/// Returns the permuted code and the permutation itself: entry `i` of
/// the returned vector is the original column now sitting at position
/// `i`. Codes whose leading `k` columns are already independent come
/// back with the identity permutation.
pub fn standard_form(code: &LinearCode) -> (LinearCode, Vec<usize>) {
    let g = code.generator();
    let (red, rank, pivots) = g.rref();
    debug_assert_eq!(rank, code.k(), "full rank is a construction invariant");
    let mut perm = pivots.clone();
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; code.n()];
        for &p in &pivots {
            s[p] = true;
        }
        s
    };
    perm.extend((0..code.n()).filter(|&c| !pivot_set[c]));
    let std_gen = FieldMatrix::from_fn(g.context().clone(), code.k(), code.n(), |i, j| {
        red[(i, perm[j])]
    });
    let std_code = LinearCode::from_generator(std_gen, Provenance::Derived)
        .expect("row-equivalent matrix keeps full rank");
    (std_code, perm)
}

/// Certify a standard-form generator `(I_k | A)` by scanning the square
/// submatrices of `A` of every size, smallest first. Counterexamples are
/// translated back to column sets of the full generator.
pub fn certify_mds_standard(code: &LinearCode) -> Result<MdsCertificate> {
    certify_mds_standard_with_budget(code, Some(DEFAULT_MINOR_BUDGET))
}

/// [`certify_mds_standard`] with an explicit enumeration budget.
pub fn certify_mds_standard_with_budget(
    code: &LinearCode,
    budget: Option<u64>,
) -> Result<MdsCertificate> {
    let g = code.generator();
    let (k, n) = (code.k(), code.n());
    let id = FieldMatrix::identity(g.context().clone(), k);
    let all_rows: Vec<usize> = (0..k).collect();
    let leading: Vec<usize> = (0..k).collect();
    if k > n || (k > 0 && g.submatrix(&all_rows, &leading) != id) {
        return Err(Error::NotStandardForm);
    }
    let trailing: Vec<usize> = (k..n).collect();
    let a = g.submatrix(&all_rows, &trailing);
    certify_standard_parts(&a, k, budget)
}

/// The standard-form criterion applied directly to the `A` block of an
/// implicit `(I_k | A)` generator. Used by the dimension-3 search, which
/// builds millions of candidate `A` blocks and never materializes the
/// identity part.
pub(crate) fn certify_standard_parts(
    a: &FieldMatrix,
    k: usize,
    budget: Option<u64>,
) -> Result<MdsCertificate> {
    let top = k.min(a.cols());
    if let Some(b) = budget {
        let mut planned: u128 = 0;
        for j in 1..=top {
            let c = binomial(k as u64, j as u64)
                .and_then(|x| x.checked_mul(binomial(a.cols() as u64, j as u64)?));
            planned = c.and_then(|x| planned.checked_add(x)).unwrap_or(u128::MAX);
        }
        if planned > b as u128 {
            return Err(Error::CombinationOverflow { planned, budget: b });
        }
    }
    let mut checked = 0u64;
    for j in 1..=top {
        let scan = a.scan_minors(j, None)?;
        checked += scan.checked;
        if let Some((rows, cols)) = scan.first_zero {
            // Translate the zero minor of A into a zero k x k minor of
            // (I | A): identity columns for the rows left out, plus the
            // offending columns of A shifted past the identity block.
            let mut g_cols: Vec<usize> = (0..k).filter(|r| !rows.contains(r)).collect();
            g_cols.extend(cols.iter().map(|c| c + k));
            g_cols.sort_unstable();
            return Ok(MdsCertificate {
                verdict: false,
                minors_checked: checked,
                counterexample: Some(((0..k).collect(), g_cols)),
                mode: CertifyMode::StandardForm,
            });
        }
    }
    Ok(MdsCertificate {
        verdict: true,
        minors_checked: checked,
        counterexample: None,
        mode: CertifyMode::StandardForm,
    })
}

/// The dual code, with its generator expressed in the original column
/// order: standard-form the input, take `(-A^T | I)`, and undo the
/// column permutation. Duals of full `[n, n]` codes are degenerate
/// (zero rows).
pub fn dual_code(code: &LinearCode) -> LinearCode {
    let (std_code, perm) = standard_form(code);
    let (k, n) = (code.k(), code.n());
    let g = std_code.generator();
    let ctx = g.context().clone();
    let mut h = FieldMatrix::zeros(ctx.clone(), n - k, n);
    for i in 0..n - k {
        for j in 0..n {
            let entry = if j < k {
                ctx.neg(g[(j, k + i)])
            } else if j - k == i {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            };
            h[(i, perm[j])] = entry;
        }
    }
    LinearCode::from_generator(h, Provenance::Derived)
        .expect("dual generator contains an identity block")
}
