//! Independent reference implementations used only by the test suite.
//!
//! These deliberately avoid the production code paths: determinants come
//! from recursive cofactor expansion instead of elimination, and index
//! subsets are generated by plain recursion instead of the streaming
//! enumerator. Agreement between the two routes is what the tests check.

use crate::galois::FieldElement;
use crate::linalg::FieldMatrix;

/// Determinant by Laplace expansion along the first row.
pub(crate) fn det_cofactor(m: &FieldMatrix) -> FieldElement {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let ctx = m.context().clone();
    if n == 0 {
        return FieldElement::ONE;
    }
    if n == 1 {
        return m[(0, 0)];
    }
    let mut acc = FieldElement::ZERO;
    for j in 0..n {
        let entry = m[(0, j)];
        if entry.is_zero() {
            continue;
        }
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let term = ctx.mul(entry, det_cofactor(&m.submatrix(&rows, &cols)));
        acc = if j % 2 == 0 { ctx.add(acc, term) } else { ctx.sub(acc, term) };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Brute-force version of the minor scan: materialize every index subset,
/// evaluate every minor by cofactor expansion, report the first zero.
#[allow(clippy::type_complexity)]
pub(crate) fn minors_brute(
    m: &FieldMatrix,
    j: usize,
) -> (bool, Option<(Vec<usize>, Vec<usize>)>) {
    for rs in subsets(m.rows(), j) {
        for cs in subsets(m.cols(), j) {
            if det_cofactor(&m.submatrix(&rs, &cs)).is_zero() {
                return (false, Some((rs, cs)));
            }
        }
    }
    (true, None)
}

/// Rank as the size of the largest nonsingular square submatrix.
pub(crate) fn rank_brute(m: &FieldMatrix) -> usize {
    for j in (1..=m.rows().min(m.cols())).rev() {
        for rs in subsets(m.rows(), j) {
            for cs in subsets(m.cols(), j) {
                if !det_cofactor(&m.submatrix(&rs, &cs)).is_zero() {
                    return j;
                }
            }
        }
    }
    0
}
