//! Canonical bases for exterior and tensor powers.
//!
//! Labels are index tuples ordered lexicographically. Exterior labels are
//! strictly increasing tuples (subsets); tensor labels are arbitrary tuples.
//! Every graded matrix in the crate is written in these bases.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Strictly increasing `k`-subsets of `0..n`, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for t in i..k {
            cur[t] = cur[t - 1] + 1;
        }
    }
}

/// All `s`-tuples over `0..n` in lexicographic order (the Kronecker ordering).
pub fn tuples(n: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..s {
        let mut next = Vec::with_capacity(out.len() * n);
        for t in &out {
            for i in 0..n {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Sign of the permutation sorting `seq` (which must have distinct entries).
pub fn permutation_sign(seq: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Inserts `t` into the sorted subset `set`, returning the merged subset and the
/// sign of `e_t ∧ e_set` relative to the sorted wedge, or `None` when `t ∈ set`.
pub fn wedge_insert(t: usize, set: &[usize]) -> Option<(Vec<usize>, i64)> {
    let pos = match set.binary_search(&t) {
        Ok(_) => return None,
        Err(pos) => pos,
    };
    let mut merged = Vec::with_capacity(set.len() + 1);
    merged.extend_from_slice(&set[..pos]);
    merged.push(t);
    merged.extend_from_slice(&set[pos..]);
    let sign = if pos % 2 == 0 { 1 } else { -1 };
    Some((merged, sign))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BasisIndex {
    labels: Vec<Vec<usize>>,
}

impl BasisIndex {
    pub fn new(labels: Vec<Vec<usize>>) -> Result<Self> {
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return domain("basis labels must be distinct and lexicographically sorted");
        }
        Ok(Self { labels })
    }

    /// Basis of `Λ^k ℚ^n`.
    pub fn exterior(n: usize, k: usize) -> Self {
        Self { labels: subsets(n, k) }
    }

    /// Basis of `⊗^s ℚ^n`.
    pub fn tensor(n: usize, s: usize) -> Self {
        Self { labels: tuples(n, s) }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    pub fn position(&self, label: &[usize]) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_slice().cmp(label)).ok()
    }

    pub fn is_exterior(&self) -> bool {
        self.labels.iter().all(|l| l.windows(2).all(|w| w[0] < w[1]))
    }
}
