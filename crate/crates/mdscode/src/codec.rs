//! Encoding and decoding against a [`LinearCode`].
//!
//! Erasure decoding solves for the message from any `k` surviving
//! coordinates, so an MDS `[n, k]` code tolerates up to `n - k` erased
//! symbols. Error decoding is bounded-distance: it corrects up to
//! `t = (n - k) / 2` corrupted symbols by scanning error supports in
//! order of weight and solving each against the syndrome.

use std::fmt;

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::galois::FieldElement;
use crate::linalg::FieldMatrix;

/// Cap on `q^k` message enumerations in [`min_distance_exhaustive`].
const DEFAULT_WEIGHT_BUDGET: u64 = 10_000_000;

/// A received or transmitted word: `n` symbols, optionally with an
/// erasure mask marking positions whose values are unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    symbols: Vec<FieldElement>,
    erasure_mask: Option<Vec<bool>>,
}

impl Word {
    pub fn new(symbols: Vec<FieldElement>) -> Self {
        Word { symbols, erasure_mask: None }
    }

    /// A word with some positions erased. Erased symbol values are
    /// normalized to zero so equality ignores whatever was lost.
    pub fn with_erasures(mut symbols: Vec<FieldElement>, mask: Vec<bool>) -> Result<Self> {
        if mask.len() != symbols.len() {
            return Err(Error::LengthMismatch { expected: symbols.len(), got: mask.len() });
        }
        for (s, &erased) in symbols.iter_mut().zip(&mask) {
            if erased {
                *s = FieldElement::ZERO;
            }
        }
        Ok(Word { symbols, erasure_mask: Some(mask) })
    }

    pub fn symbols(&self) -> &[FieldElement] {
        &self.symbols
    }

    pub fn erasure_mask(&self) -> Option<&[bool]> {
        self.erasure_mask.as_deref()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_erased(&self, i: usize) -> bool {
        self.erasure_mask.as_ref().is_some_and(|m| m[i])
    }

    fn erased_count(&self) -> usize {
        self.erasure_mask.as_ref().map_or(0, |m| m.iter().filter(|&&e| e).count())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if self.is_erased(i) {
                write!(f, "?")?;
            } else {
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

/// A successful decode: the recovered message, the restored codeword,
/// and how many symbols were filled in or corrected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub message: Vec<FieldElement>,
    pub codeword: Word,
    pub corrections: usize,
}

/// Encode a length-`k` message as the codeword `m * G`.
pub fn encode(code: &LinearCode, message: &[FieldElement]) -> Result<Word> {
    if message.len() != code.k() {
        return Err(Error::LengthMismatch { expected: code.k(), got: message.len() });
    }
    let g = code.generator();
    let ctx = code.field();
    let mut symbols = vec![FieldElement::ZERO; code.n()];
    for (i, &m) in message.iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        for (j, out) in symbols.iter_mut().enumerate() {
            *out = ctx.add(*out, ctx.mul(m, g[(i, j)]));
        }
    }
    Ok(Word::new(symbols))
}

/// The syndrome `H * r^T`; zero exactly when `r` is a codeword (erased
/// positions count as zero symbols).
pub fn syndrome(code: &LinearCode, word: &Word) -> Result<Vec<FieldElement>> {
    if word.len() != code.n() {
        return Err(Error::LengthMismatch { expected: code.n(), got: word.len() });
    }
    let h = code.check_matrix();
    let ctx = code.field();
    let mut s = vec![FieldElement::ZERO; h.rows()];
    for (i, out) in s.iter_mut().enumerate() {
        for (j, &r) in word.symbols().iter().enumerate() {
            *out = ctx.add(*out, ctx.mul(h[(i, j)], r));
        }
    }
    Ok(s)
}

/// Recover the message from a word whose only defects are erasures.
///
/// Up to `n - k` erasures are always recoverable for an MDS code; one
/// more leaves fewer than `k` known symbols and fails with
/// [`Error::TooManyErasures`]. The surviving symbols must be consistent
/// with some codeword, otherwise decoding fails.
pub fn erasure_decode(code: &LinearCode, word: &Word) -> Result<DecodeResult> {
    if word.len() != code.n() {
        return Err(Error::LengthMismatch { expected: code.n(), got: word.len() });
    }
    let (n, k) = (code.n(), code.k());
    let erased = word.erased_count();
    let unerased: Vec<usize> = (0..n).filter(|&i| !word.is_erased(i)).collect();
    if unerased.len() < k {
        return Err(Error::TooManyErasures { erased, max: n - k });
    }
    // Solve for the message from the first k surviving coordinates.
    let support = &unerased[..k];
    let rows: Vec<usize> = (0..k).collect();
    let gs = code.generator().submatrix(&rows, support).transpose();
    let rhs: Vec<FieldElement> = support.iter().map(|&i| word.symbols()[i]).collect();
    let message = solve_column(&gs, &rhs)?;
    let codeword = encode(code, &message)?;
    for &i in &unerased {
        if codeword.symbols()[i] != word.symbols()[i] {
            return Err(Error::DecodingFailure);
        }
    }
    Ok(DecodeResult { message, codeword, corrections: erased })
}

/// Bounded-distance error decoding: find the unique codeword within
/// `t = (n - k) / 2` symbol changes of the received word, or fail.
///
/// Error supports are scanned in order of weight, so `corrections` is
/// the distance to the returned codeword. Words carrying erasures
/// belong to [`erasure_decode`]; passing one here is a caller bug.
pub fn error_decode(code: &LinearCode, word: &Word) -> Result<DecodeResult> {
    assert!(
        word.erased_count() == 0,
        "error_decode expects a fully known word; use erasure_decode"
    );
    if word.len() != code.n() {
        return Err(Error::LengthMismatch { expected: code.n(), got: word.len() });
    }
    let (n, k) = (code.n(), code.k());
    let t = (n - k) / 2;
    let s = syndrome(code, word)?;
    if s.iter().all(|e| e.is_zero()) {
        let message = extract_message(code, word.symbols());
        return Ok(DecodeResult { message, codeword: word.clone(), corrections: 0 });
    }
    let h = code.check_matrix();
    let ctx = code.field();
    for w in 1..=t {
        let mut supports = crate::comb::Combinations::new(n, w);
        while let Some(support) = supports.next() {
            // Solve H_E * e = s on this support; accept only a unique,
            // consistent solution. Underdetermined supports are skipped:
            // any solution there has a zero entry, so a smaller support
            // already covered it.
            let mut aug = FieldMatrix::zeros(ctx.clone(), n - k, w + 1);
            for i in 0..n - k {
                for (c, &j) in support.iter().enumerate() {
                    aug[(i, c)] = h[(i, j)];
                }
                aug[(i, w)] = s[i];
            }
            let (red, rank, pivots) = aug.rref();
            if pivots.contains(&w) || rank != w {
                continue;
            }
            let mut corrected = word.symbols().to_vec();
            for (i, &j) in support.iter().enumerate() {
                let e = red[(i, w)];
                debug_assert!(!e.is_zero(), "minimal support has no zero error values");
                corrected[j] = ctx.sub(corrected[j], e);
            }
            let message = extract_message(code, &corrected);
            debug_assert_eq!(encode(code, &message).unwrap().symbols(), &corrected[..]);
            return Ok(DecodeResult {
                message,
                codeword: Word::new(corrected),
                corrections: w,
            });
        }
    }
    Err(Error::DecodingFailure)
}

/// Solve a square system against a single right-hand-side vector.
fn solve_column(m: &FieldMatrix, rhs: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let col = FieldMatrix::new(m.context().clone(), rhs.len(), 1, rhs.to_vec());
    let x = m.solve(&col)?;
    Ok((0..x.rows()).map(|i| x[(i, 0)]).collect())
}

/// Solve `m * G = c` for a known codeword `c` via the pivot columns of
/// `G`, which are always independent.
fn extract_message(code: &LinearCode, codeword: &[FieldElement]) -> Vec<FieldElement> {
    let g = code.generator();
    let (_, _, pivots) = g.rref();
    let rows: Vec<usize> = (0..code.k()).collect();
    let gp = g.submatrix(&rows, &pivots).transpose();
    let rhs: Vec<FieldElement> = pivots.iter().map(|&j| codeword[j]).collect();
    solve_column(&gp, &rhs).expect("pivot columns of a full-rank generator are invertible")
}

/// The exact minimum distance, by enumerating all `q^k` messages.
///
/// `budget` caps the enumeration (`None` applies a ten-million default);
/// exceeding it fails with [`Error::CombinationOverflow`] rather than
/// silently running for hours.
pub fn min_distance_exhaustive(code: &LinearCode, budget: Option<u64>) -> Result<usize> {
    if code.k() == 0 {
        return Err(Error::DimensionTooSmall { k: 0, min: 1 });
    }
    let q = code.field().q() as u128;
    let budget = budget.unwrap_or(DEFAULT_WEIGHT_BUDGET);
    let planned = q.checked_pow(code.k() as u32).unwrap_or(u128::MAX);
    if planned > budget as u128 {
        return Err(Error::CombinationOverflow { planned, budget });
    }
    let ctx = code.field();
    let mut digits = vec![0u64; code.k()];
    let mut message = vec![FieldElement::ZERO; code.k()];
    let mut best = code.n() + 1;
    'outer: loop {
        // Advance the base-q odometer; the all-zero message is skipped
        // because the loop weighs a word only after the first advance.
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                break 'outer;
            }
            digits[pos] += 1;
            if digits[pos] < q as u64 {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
        for (m, &d) in message.iter_mut().zip(&digits) {
            *m = ctx.element(d).expect("digit below q");
        }
        let cw = encode(code, &message)?;
        let weight = cw.symbols().iter().filter(|e| !e.is_zero()).count();
        if weight < best {
            best = weight;
            if best == 1 {
                break;
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{Provenance, code_from_rows, extend_identity_columns_dim3, extend_two_columns};
    use crate::fourier::RowSelection;
    use crate::galois::{FieldContext, field_build};
    use rand_chacha::ChaCha8Rng;
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    use std::sync::Arc;

    fn gf(p: u64, m: u32) -> Arc<FieldContext> {
        field_build(p, m).unwrap()
    }

    fn code_10_3() -> LinearCode {
        extend_identity_columns_dim3(&gf(2, 3)).unwrap()
    }

    fn code_10_4() -> LinearCode {
        let ctx = gf(3, 2);
        extend_two_columns(&code_from_rows(&ctx, RowSelection::new(0, 4, 1)).unwrap()).unwrap()
    }

    fn msg(ctx: &Arc<FieldContext>, vals: &[u64]) -> Vec<FieldElement> {
        vals.iter().map(|&v| ctx.element(v).unwrap()).collect()
    }

    #[test]
    fn encode_matches_explicit_row_combination() {
        let code = code_10_3();
        let ctx = code.field().clone();
        let message = msg(&ctx, &[3, 1, 6]);
        let word = encode(&code, &message).unwrap();
        let g = code.generator();
        for j in 0..code.n() {
            let mut acc = FieldElement::ZERO;
            for (i, &m) in message.iter().enumerate() {
                acc = ctx.add(acc, ctx.mul(m, g[(i, j)]));
            }
            assert_eq!(word.symbols()[j], acc);
        }
    }

    #[test]
    fn encode_checks_message_length() {
        let code = code_10_3();
        assert_eq!(
            encode(&code, &[FieldElement::ONE; 4]).unwrap_err(),
            Error::LengthMismatch { expected: 3, got: 4 }
        );
    }

    #[test]
    fn codewords_have_zero_syndrome() {
        let code = code_10_4();
        let ctx = code.field().clone();
        let word = encode(&code, &msg(&ctx, &[1, 7, 0, 5])).unwrap();
        assert!(syndrome(&code, &word).unwrap().iter().all(|e| e.is_zero()));

        let mut tampered = word.symbols().to_vec();
        tampered[4] = ctx.add(tampered[4], FieldElement::ONE);
        let s = syndrome(&code, &Word::new(tampered)).unwrap();
        assert!(s.iter().any(|e| !e.is_zero()));
    }

    #[test]
    fn erasure_decode_recovers_up_to_n_minus_k() {
        let code = code_10_3();
        let ctx = code.field().clone();
        let message = msg(&ctx, &[5, 2, 7]);
        let clean = encode(&code, &message).unwrap();
        // Erase the maximum n - k = 7 positions, several patterns.
        for mask_positions in [
            vec![0, 1, 2, 3, 4, 5, 6],
            vec![3, 4, 5, 6, 7, 8, 9],
            vec![0, 2, 4, 6, 7, 8, 9],
        ] {
            let mut mask = vec![false; 10];
            for &p in &mask_positions {
                mask[p] = true;
            }
            let received = Word::with_erasures(clean.symbols().to_vec(), mask).unwrap();
            let out = erasure_decode(&code, &received).unwrap();
            assert_eq!(out.message, message);
            assert_eq!(out.codeword, clean);
            assert_eq!(out.corrections, 7);
        }
    }

    #[test]
    fn one_erasure_past_the_limit_fails() {
        let code = code_10_3();
        let ctx = code.field().clone();
        let clean = encode(&code, &msg(&ctx, &[1, 2, 3])).unwrap();
        let mut mask = vec![true; 10];
        mask[8] = false;
        mask[9] = false;
        let received = Word::with_erasures(clean.symbols().to_vec(), mask).unwrap();
        assert_eq!(
            erasure_decode(&code, &received).unwrap_err(),
            Error::TooManyErasures { erased: 8, max: 7 }
        );
    }

    #[test]
    fn erasure_decode_rejects_inconsistent_survivors() {
        let code = code_10_3();
        let ctx = code.field().clone();
        let clean = encode(&code, &msg(&ctx, &[4, 4, 4])).unwrap();
        let mut symbols = clean.symbols().to_vec();
        symbols[9] = ctx.add(symbols[9], FieldElement::ONE);
        let mut mask = vec![false; 10];
        mask[0] = true;
        mask[1] = true;
        let received = Word::with_erasures(symbols, mask).unwrap();
        assert_eq!(erasure_decode(&code, &received).unwrap_err(), Error::DecodingFailure);
    }

    #[test]
    fn clean_words_decode_with_zero_corrections() {
        let code = code_10_4();
        let ctx = code.field().clone();
        let message = msg(&ctx, &[8, 0, 3, 1]);
        let clean = encode(&code, &message).unwrap();
        let out = error_decode(&code, &clean).unwrap();
        assert_eq!(out.message, message);
        assert_eq!(out.corrections, 0);
    }

    #[test]
    fn error_decode_corrects_up_to_t() {
        let code = code_10_4();
        let ctx = code.field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut below = |bound: u64| rng.next_u64() % bound;
        for trial in 0..200u32 {
            let message = msg(&ctx, &(0..4).map(|_| below(9)).collect::<Vec<_>>());
            let clean = encode(&code, &message).unwrap();
            let w = (trial % 4) as usize; // 0..=t = 3 errors
            let mut symbols = clean.symbols().to_vec();
            let mut hit = vec![false; 10];
            let mut placed = 0;
            while placed < w {
                let pos = below(10) as usize;
                if hit[pos] {
                    continue;
                }
                hit[pos] = true;
                let delta = ctx.element(1 + below(8)).unwrap();
                symbols[pos] = ctx.add(symbols[pos], delta);
                placed += 1;
            }
            let out = error_decode(&code, &Word::new(symbols)).unwrap();
            assert_eq!(out.message, message, "trial {trial} with {w} errors");
            assert_eq!(out.corrections, w);
            assert_eq!(out.codeword, clean);
        }
    }

    #[test]
    fn error_decode_never_overreaches_t() {
        // Beyond t errors the decoder either fails or returns some
        // codeword within t of the input; it never invents a farther one.
        let code = code_10_4();
        let ctx = code.field().clone();
        let t = 3;
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut below = |bound: u64| rng.next_u64() % bound;
        for _ in 0..100u32 {
            let symbols: Vec<FieldElement> =
                (0..10).map(|_| ctx.element(below(9)).unwrap()).collect();
            let received = Word::new(symbols.clone());
            if let Ok(out) = error_decode(&code, &received) {
                let dist = out
                    .codeword
                    .symbols()
                    .iter()
                    .zip(&symbols)
                    .filter(|(a, b)| a != b)
                    .count();
                assert!(dist <= t);
                assert_eq!(dist, out.corrections);
                assert!(syndrome(&code, &out.codeword).unwrap().iter().all(|e| e.is_zero()));
            }
        }
    }

    #[test]
    fn exhaustive_distance_meets_the_singleton_bound_for_mds_codes() {
        let code = code_10_3();
        assert_eq!(min_distance_exhaustive(&code, None).unwrap(), 8); // n - k + 1

        let ctx = gf(2, 3);
        let plain = code_from_rows(&ctx, RowSelection::new(0, 3, 1)).unwrap();
        assert_eq!(min_distance_exhaustive(&plain, None).unwrap(), 5); // [7, 3]
    }

    #[test]
    fn exhaustive_distance_sees_through_non_mds_codes() {
        let ctx = gf(5, 1);
        let e = |v: u64| ctx.element(v).unwrap();
        let g = crate::linalg::FieldMatrix::new(
            ctx.clone(),
            2,
            3,
            vec![e(1), e(0), e(1), e(0), e(1), e(0)],
        );
        let code = crate::codes::LinearCode::from_generator(g, Provenance::External).unwrap();
        assert_eq!(min_distance_exhaustive(&code, None).unwrap(), 1);
    }

    #[test]
    fn exhaustive_distance_respects_its_budget() {
        let code = code_10_4();
        assert_eq!(
            min_distance_exhaustive(&code, Some(1000)).unwrap_err(),
            Error::CombinationOverflow { planned: 6561, budget: 1000 }
        );
    }

    #[test]
    fn word_display_marks_erasures() {
        let ctx = gf(5, 1);
        let symbols = msg(&ctx, &[3, 1, 4]);
        let word = Word::with_erasures(symbols, vec![false, true, false]).unwrap();
        assert_eq!(word.to_string(), "3 ? 4");
        assert_eq!(Word::new(msg(&ctx, &[2, 0])).to_string(), "2 0");
    }

    #[test]
    fn erasure_mask_length_is_validated() {
        let ctx = gf(5, 1);
        assert_eq!(
            Word::with_erasures(msg(&ctx, &[1, 2]), vec![true]).unwrap_err(),
            Error::LengthMismatch { expected: 2, got: 1 }
        );
    }
}
