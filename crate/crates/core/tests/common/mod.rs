//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(x: i64) -> Q {
    Q::from_integer(x.into())
}

/// Rank by plain Gaussian elimination on a row list.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let pivot_row: Vec<Q> = rows[r].iter().map(|x| x / &pivot).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        rows[r] = pivot_row;
        r += 1;
    }
    r
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
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
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Betti numbers of a nilpotent Lie algebra over ℚ from its
/// Chevalley–Eilenberg complex. `bracket[i][j]` is `[x_i, x_j]` in the basis.
pub fn lie_algebra_betti(bracket: &[Vec<Vec<Q>>]) -> Vec<usize> {
    let d = bracket.len();
    let bases: Vec<Vec<Vec<usize>>> = (0..=d).map(|k| k_subsets(d, k)).collect();
    // ∂(x_1∧…∧x_k) = Σ_{i<j} (−1)^{i+j} [x_i,x_j] ∧ x_1…x̂_i…x̂_j…x_k
    let boundary_rank = |k: usize| -> usize {
        if k < 2 {
            return 0;
        }
        let tgt = &bases[k - 1];
        let mut cols: Vec<Vec<Q>> = Vec::new();
        for s in &bases[k] {
            let mut col = vec![Q::zero(); tgt.len()];
            for a in 0..k {
                for b in a + 1..k {
                    let sign = if (a + b) % 2 == 0 { Q::one() } else { -Q::one() };
                    let rest: Vec<usize> =
                        s.iter().enumerate().filter(|&(i, _)| i != a && i != b).map(|(_, &x)| x).collect();
                    for (t, coeff) in bracket[s[a]][s[b]].iter().enumerate() {
                        if coeff.is_zero() || rest.contains(&t) {
                            continue;
                        }
                        // t ∧ rest, sorted with the sign of the insertion
                        let pos = rest.iter().filter(|&&x| x < t).count();
                        let mut merged = rest.clone();
                        merged.insert(pos, t);
                        let s2 = if pos % 2 == 0 { Q::one() } else { -Q::one() };
                        let idx = tgt.iter().position(|x| *x == merged).unwrap();
                        col[idx] += coeff * &sign * s2;
                    }
                }
            }
            cols.push(col);
        }
        rank(cols)
    };
    let ranks: Vec<usize> = (0..=d + 1).map(|k| if k > d { 0 } else { boundary_rank(k) }).collect();
    (0..=d).map(|k| bases[k].len() - ranks[k] - ranks[k + 1]).collect()
}

/// Structure constants of the 2-step Lie algebra `ℚ^n ⊕ ℚ^a` with
/// `[e_i, e_j] = Σ_t pairing[t][(i,j)] f_t`.
pub fn extension_lie_algebra(n: usize, a: usize, pairing: &[Vec<i64>]) -> Vec<Vec<Vec<Q>>> {
    let d = n + a;
    let mut br = vec![vec![vec![Q::zero(); d]; d]; d];
    let mut col = 0;
    for i in 0..n {
        for j in i + 1..n {
            for t in 0..a {
                br[i][j][n + t] = q(pairing[t][col]);
                br[j][i][n + t] = -q(pairing[t][col]);
            }
            col += 1;
        }
    }
    br
}

/// Free 2-step nilpotent Lie algebra on `r` generators.
pub fn free_class2_lie_algebra(r: usize) -> Vec<Vec<Vec<Q>>> {
    let w = r * (r - 1) / 2;
    let identity: Vec<Vec<i64>> = (0..w).map(|t| (0..w).map(|c| i64::from(t == c)).collect()).collect();
    extension_lie_algebra(r, w, &identity)
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
