//! Hall bases of free nilpotent groups and the induced action on
//! lower-central layers.
//!
//! A basic commutator `[u, v]` requires `u > v` and, when `u = [u₁, u₂]`,
//! `u₂ ≤ v`. Within a weight, commutators are ordered by `(v, u)` using
//! positions in the list, which puts `[x_j, x_i]` (`j > i`) in the same order
//! as the lexicographic basis `e_i ∧ e_j` of `Λ²`.
//!
//! Layers `γ_w / γ_{w+1}` are identified with the weight-`w` part of the free
//! Lie ring, realized inside the tensor algebra by `[a, b] = ab − ba`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::free::FreeNilpotentSpec;
use crate::error::{domain, Error, Result};
use crate::linalg::{IntMatrix, Rat, SpanSolver};

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Rank of the weight-`w` layer of the free Lie ring on `r` generators.
pub fn witt_number(r: usize, w: usize) -> usize {
    if w == 0 {
        return 0;
    }
    let total: i128 =
        (1..=w).filter(|d| w.is_multiple_of(*d)).map(|d| mobius(d) as i128 * (r as i128).pow((w / d) as u32)).sum();
    (total / w as i128) as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracket {
    Generator(usize),
    /// Indices of the two factors within the same [`HallBasis`].
    Commutator(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicCommutator {
    pub weight: usize,
    pub bracket: Bracket,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallBasis {
    rank: usize,
    class: usize,
    elements: Vec<BasicCommutator>,
}

/// Element of the free associative algebra: word → coefficient.
type Word = Vec<usize>;
type TensorElem = BTreeMap<Word, Rat>;

fn add_scaled(target: &mut TensorElem, src: &TensorElem, f: &Rat) {
    for (w, c) in src {
        let e = target.entry(w.clone()).or_insert_with(Rat::zero);
        *e += c * f;
        if e.is_zero() {
            target.remove(w);
        }
    }
}

fn product(a: &TensorElem, b: &TensorElem) -> TensorElem {
    let mut out = TensorElem::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            let e = out.entry(w).or_insert_with(Rat::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn lie_bracket(a: &TensorElem, b: &TensorElem) -> TensorElem {
    let mut out = product(a, b);
    add_scaled(&mut out, &product(b, a), &-Rat::one());
    out
}

impl HallBasis {
    pub fn new(spec: &FreeNilpotentSpec) -> Result<Self> {
        spec.validate()?;
        let (r, c) = (spec.rank, spec.class);
        let mut elements: Vec<BasicCommutator> =
            (0..r).map(|g| BasicCommutator { weight: 1, bracket: Bracket::Generator(g) }).collect();
        for w in 2..=c {
            let mut layer = Vec::new();
            for u in 0..elements.len() {
                for v in 0..u {
                    if elements[u].weight + elements[v].weight != w {
                        continue;
                    }
                    if let Bracket::Commutator(_, u2) = elements[u].bracket {
                        if u2 > v {
                            continue;
                        }
                    }
                    layer.push((v, u));
                }
            }
            layer.sort_unstable();
            elements.extend(
                layer.into_iter().map(|(v, u)| BasicCommutator { weight: w, bracket: Bracket::Commutator(u, v) }),
            );
        }
        Ok(Self { rank: r, class: c, elements })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn elements(&self) -> &[BasicCommutator] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Indices (into [`Self::elements`]) of the weight-`w` basic commutators.
    pub fn layer(&self, w: usize) -> Vec<usize> {
        (0..self.elements.len()).filter(|&i| self.elements[i].weight == w).collect()
    }

    /// Formal expression such as `[[x2,x1],x1]` (generators are 1-based).
    pub fn render(&self, i: usize) -> String {
        match self.elements[i].bracket {
            Bracket::Generator(g) => format!("x{}", g + 1),
            Bracket::Commutator(u, v) => format!("[{},{}]", self.render(u), self.render(v)),
        }
    }

    /// Expands every basic commutator into the tensor algebra, with the
    /// generators replaced by `images[g]`.
    fn expand_with(&self, images: &[TensorElem]) -> Vec<TensorElem> {
        let mut out: Vec<TensorElem> = Vec::with_capacity(self.elements.len());
        for e in &self.elements {
            let t = match e.bracket {
                Bracket::Generator(g) => images[g].clone(),
                Bracket::Commutator(u, v) => lie_bracket(&out[u], &out[v]),
            };
            out.push(t);
        }
        out
    }

    fn standard_images(&self) -> Vec<TensorElem> {
        (0..self.rank).map(|g| TensorElem::from([(vec![g], Rat::one())])).collect()
    }

    fn word_index(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &x| acc * self.rank + x)
    }

    fn to_dense(&self, w: usize, t: &TensorElem) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.rank.pow(w as u32)];
        for (word, c) in t {
            debug_assert_eq!(word.len(), w);
            v[self.word_index(word)] = c.clone();
        }
        v
    }

    /// Coordinates solver for the weight-`w` layer inside words of length `w`.
    fn layer_solver(&self, w: usize) -> Result<(Vec<usize>, SpanSolver)> {
        let idx = self.layer(w);
        let expanded = self.expand_with(&self.standard_images());
        let cols: Vec<Vec<Rat>> = idx.iter().map(|&i| self.to_dense(w, &expanded[i])).collect();
        let solver = SpanSolver::new(self.rank.pow(w as u32), &cols)?;
        Ok((idx, solver))
    }

    /// Matrix of the Lie-ring automorphism induced by `g ∈ GL_r(ℤ)` on the
    /// weight-`w` layer, in the Hall basis of that layer.
    ///
    /// Column `k` of `g` is the image of generator `x_k`.
    pub fn induced_layer_map(&self, g: &IntMatrix, w: usize) -> Result<IntMatrix> {
        if w == 0 || w > self.class {
            return domain(format!("layer {w} outside 1..={}", self.class));
        }
        if g.rows() != self.rank || g.cols() != self.rank {
            return Err(Error::Shape(format!("action matrix must be {0}x{0}", self.rank)));
        }
        let images: Vec<TensorElem> = (0..self.rank)
            .map(|k| {
                (0..self.rank)
                    .filter(|&i| !g.get(i, k).is_zero())
                    .map(|i| (vec![i], Rat::from_integer(g.get(i, k).clone())))
                    .collect()
            })
            .collect();
        let moved = self.expand_with(&images);
        let (idx, solver) = self.layer_solver(w)?;
        let mut out = IntMatrix::zeros(idx.len(), idx.len());
        for (col, &i) in idx.iter().enumerate() {
            let coords = solver
                .coordinates(&self.to_dense(w, &moved[i]))
                .ok_or_else(|| Error::Domain("image left the Lie layer".into()))?;
            for (row, x) in coords.iter().enumerate() {
                if !x.is_integer() {
                    return Err(Error::Domain("non-integral layer action".into()));
                }
                out.set(row, col, x.to_integer());
            }
        }
        Ok(out)
    }
}

impl fmt::Display for HallBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = (0..self.len()).map(|i| self.render(i)).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

impl Serialize for HallBasis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            weight: usize,
            expr: String,
        }
        let entries: Vec<Entry> =
            (0..self.len()).map(|i| Entry { weight: self.elements[i].weight, expr: self.render(i) }).collect();
        entries.serialize(s)
    }
}

pub fn hall_basis(spec: &FreeNilpotentSpec) -> Result<HallBasis> {
    HallBasis::new(spec)
}
