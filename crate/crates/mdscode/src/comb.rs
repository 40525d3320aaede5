//! Small combinatorial helpers used by the minor scans and the
//! exhaustive searches. Kept internal: the public API talks about
//! matrices and codes, not index sets.

/// Binomial coefficient `C(n, k)` in `u128`, or `None` on overflow.
pub(crate) fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    Some(acc)
}

/// Number of length-`k` arrangements of `n` distinct items,
/// `P(n, k) = n! / (n-k)!`, or `None` on overflow.
pub(crate) fn arrangements(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
    }
    Some(acc)
}

/// Streaming enumerator of the k-element subsets of `{0, .., n-1}` in
/// lexicographic order. Yields borrowed slices to avoid a heap
/// allocation per subset; call `next()` until it returns `None`.
pub(crate) struct Combinations {
    n: usize,
    k: usize,
    idx: Vec<usize>,
    started: bool,
    exhausted: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            k,
            idx: (0..k).collect(),
            started: false,
            exhausted: k > n,
        }
    }

    pub(crate) fn next(&mut self) -> Option<&[usize]> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        // Find the rightmost position that can still move up.
        let mut i = self.k;
        loop {
            if i == 0 {
                self.exhausted = true;
                return None;
            }
            i -= 1;
            if self.idx[i] < self.n - self.k + i {
                break;
            }
        }
        self.idx[i] += 1;
        for j in i + 1..self.k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(&self.idx)
    }
}

/// Streaming enumerator of the length-`k` injective tuples over
/// `{0, .., n-1}` (k-permutations) in lexicographic order.
pub(crate) struct Arrangements {
    n: usize,
    seq: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    exhausted: bool,
}

impl Arrangements {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        let exhausted = k > n;
        let seq: Vec<usize> = (0..k).collect();
        let mut used = vec![false; n];
        if !exhausted {
            for &v in &seq {
                used[v] = true;
            }
        }
        Arrangements { n, seq, used, started: false, exhausted }
    }

    pub(crate) fn next(&mut self) -> Option<&[usize]> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.seq);
        }
        // Backtrack: bump the rightmost position that has a larger
        // unused value available, then refill the tail minimally.
        let k = self.seq.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.exhausted = true;
                return None;
            }
            i -= 1;
            let cur = self.seq[i];
            self.used[cur] = false;
            if let Some(next) = (cur + 1..self.n).find(|&v| !self.used[v]) {
                self.seq[i] = next;
                self.used[next] = true;
                break;
            }
        }
        for j in i + 1..k {
            let smallest = (0..self.n).find(|&v| !self.used[v]).expect("k <= n leaves free values");
            self.seq[j] = smallest;
            self.used[smallest] = true;
        }
        Some(&self.seq)
    }
}
