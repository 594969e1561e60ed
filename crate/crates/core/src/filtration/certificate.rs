//! Filtrations of `H_j(N, ℚ)` whose layers are subquotients of tensor powers
//! `⊗^s V`, `V = N/N′ ⊗ ℚ`, with `s ≤ c(j−1)+1`.
//!
//! The layers come from recursing through `γ_c N ↣ N ↠ N/γ_c N`: the `E^∞_{i,j−i}`
//! cell is a subquotient of `H_i(N/γ_c N) ⊗ ⊗^{c(j−i)} V`, each layer of
//! `H_i(N/γ_c N)` contributing its own degree plus `c(j−i)`. `E^∞_{0,j}` vanishes
//! for `j ≥ 1`.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::binomial;
use crate::nilgroup::{witt_number, FreeNilpotentSpec};
use crate::spectral::Page;

/// `c(j−1)+1` for `j ≥ 1`, and `0` for `j = 0`.
pub fn bound(c: usize, j: usize) -> usize {
    if j == 0 {
        0
    } else {
        c * (j - 1) + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Layer {
    pub tensor_degree: usize,
    pub dimension: usize,
    /// `false` when `dimension` is an `E²` upper bound rather than an exact `E^∞` value.
    pub exact: bool,
    /// `(p, q)` cells visited, outermost extension first.
    pub origin: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub bound_satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationCertificate {
    pub spec: FreeNilpotentSpec,
    pub j: usize,
    pub c: usize,
    pub bound: usize,
    pub layers: Vec<Layer>,
    pub verdict: Verdict,
}

impl FiltrationCertificate {
    pub fn total_dimension(&self) -> usize {
        self.layers.iter().map(|l| l.dimension).sum()
    }

    /// True when every layer dimension is exact (class ≤ 2).
    pub fn is_exact(&self) -> bool {
        self.layers.iter().all(|l| l.exact)
    }

    /// The layer coming from the `E_{1, j−1}` cell of the outermost extension.
    pub fn first_layer(&self) -> Option<&Layer> {
        self.layers.iter().find(|l| l.origin.first().is_some_and(|&(p, _)| p == 1))
    }
}

fn layers(spec: &FreeNilpotentSpec, j: usize) -> Result<Vec<Layer>> {
    let (r, c) = (spec.rank, spec.class);
    if j == 0 {
        return Ok(vec![Layer { tensor_degree: 0, dimension: 1, exact: true, origin: vec![(0, 0)] }]);
    }
    if c == 1 {
        return Ok(vec![Layer { tensor_degree: j, dimension: binomial(r, j), exact: true, origin: vec![(j, 0)] }]);
    }
    if c == 2 {
        let page = Page::free_nilpotent(spec)?;
        return Ok((1..=j)
            .map(|i| Layer {
                tensor_degree: 2 * j - i,
                dimension: page.e3_dim(i, j - i),
                exact: true,
                origin: vec![(i, j - i)],
            })
            .collect());
    }
    let lower = FreeNilpotentSpec { rank: r, class: c - 1 };
    let top_rank = witt_number(r, c);
    let mut out = Vec::new();
    for i in 1..=j {
        let fiber = binomial(top_rank, j - i);
        for inner in layers(&lower, i)? {
            let mut origin = vec![(i, j - i)];
            origin.extend(inner.origin);
            out.push(Layer {
                tensor_degree: inner.tensor_degree + c * (j - i),
                dimension: inner.dimension * fiber,
                exact: false,
                origin,
            });
        }
    }
    Ok(out)
}

/// Layer-by-layer certificate for the tensor-degree bound on `H_j(N, ℚ)`.
///
/// For class ≤ 2 the layer dimensions are exact and sum to `dim H_j`. For
/// class ≥ 3 they are `E²` upper bounds; the degrees are still exact.
pub fn filtration_certificate(spec: &FreeNilpotentSpec, j: usize) -> Result<FiltrationCertificate> {
    spec.validate()?;
    let layers = layers(spec, j)?;
    let b = bound(spec.class, j);
    let bound_satisfied = layers.iter().all(|l| l.tensor_degree <= b);
    Ok(FiltrationCertificate { spec: *spec, j, c: spec.class, bound: b, layers, verdict: Verdict { bound_satisfied } })
}
