//! Degree-bounded search for ideal elements with a unique `v`-minimal
//! monomial, certifying `[v] ∈ Σ_A`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::laurent::{pairing, CyclicModuleSpec, LaurentPoly, ValuationVector};
use crate::error::{Error, Result};
use crate::linalg::{format_rat, Rat, RatMatrix};

/// `coeff · t^shift · g_generator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessTerm {
    pub generator: usize,
    pub shift: Vec<i64>,
    #[serde(serialize_with = "ser_rat")]
    pub coeff: Rat,
}

fn ser_rat<S: serde::Serializer>(x: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rat(x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub element: LaurentPoly,
    pub minimal_exponent: Vec<i64>,
    pub combination: Vec<WitnessTerm>,
    /// The multiplier degree bound at which the witness was found.
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum WitnessOutcome {
    Found(Witness),
    Unknown { degree_bound: usize },
}

impl WitnessOutcome {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Self::Found(w) => Some(w),
            Self::Unknown { .. } => None,
        }
    }
}

/// Exponents `a ∈ ℤⁿ` with `|a|₁ ≤ bound`, in lexicographic order.
pub fn l1_ball(n: usize, bound: usize) -> Vec<Vec<i64>> {
    fn rec(n: usize, budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in -budget..=budget {
            prefix.push(x);
            rec(n, budget - x.abs(), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, bound as i64, &mut Vec::new(), &mut out);
    out
}

fn search_at(spec: &CyclicModuleSpec, v: &[Rat], bound: usize) -> Option<Witness> {
    let shifts = l1_ball(spec.nvars, bound);
    let elements: Vec<(usize, Vec<i64>, LaurentPoly)> = spec
        .ideal
        .iter()
        .enumerate()
        .flat_map(|(k, g)| shifts.iter().map(move |a| (k, a.clone(), g.shift(a))))
        .collect();
    // columns ordered by v-level, then exponent
    let mut monomials: Vec<(Rat, Vec<i64>)> = elements
        .iter()
        .flat_map(|(_, _, p)| p.support())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .map(|a| (pairing(v, &a), a))
        .collect();
    monomials.sort();
    let column: BTreeMap<&Vec<i64>, usize> = monomials.iter().enumerate().map(|(i, (_, a))| (a, i)).collect();
    let (nm, ne) = (monomials.len(), elements.len());
    let mut m = RatMatrix::zeros(ne, nm + ne);
    for (r, (_, _, p)) in elements.iter().enumerate() {
        for (a, c) in p.terms() {
            m.set(r, column[a], c.clone());
        }
        m.set(r, nm + r, Rat::from_integer(1.into()));
    }
    let rref = m.rref();
    for (i, &pivot) in rref.pivots.iter().enumerate() {
        if pivot >= nm {
            break;
        }
        let row = rref.matrix.row(i);
        let level = &monomials[pivot].0;
        let unique = (pivot + 1..nm).all(|j| row[j].is_zero() || monomials[j].0 != *level);
        if !unique {
            continue;
        }
        let element = LaurentPoly::from_terms(
            spec.nvars,
            (0..nm).filter(|&j| !row[j].is_zero()).map(|j| (monomials[j].1.clone(), row[j].clone())),
        )
        .expect("exponents have the module's arity");
        let combination = (0..ne)
            .filter(|&r| !row[nm + r].is_zero())
            .map(|r| WitnessTerm { generator: elements[r].0, shift: elements[r].1.clone(), coeff: row[nm + r].clone() })
            .collect();
        return Some(Witness { element, minimal_exponent: monomials[pivot].1.clone(), combination, degree: bound });
    }
    None
}

/// Looks for `h = Σ c · t^a · g_k ∈ I` with `|a|₁ ≤ degree_bound` whose
/// `v`-minimal support point is unique. Bounds are tried in the order
/// `0, 1, 2, 4, …, degree_bound`.
pub fn sigma_witness_search(
    spec: &CyclicModuleSpec,
    v: &ValuationVector,
    degree_bound: usize,
) -> Result<WitnessOutcome> {
    spec.validate()?;
    if v.dim() != spec.nvars {
        return Err(Error::Shape(format!("direction has {} entries, module has {} variables", v.dim(), spec.nvars)));
    }
    if spec.ideal.is_empty() {
        return Ok(WitnessOutcome::Unknown { degree_bound });
    }
    let mut bounds = vec![0];
    let mut b = 1;
    while b < degree_bound {
        bounds.push(b);
        b *= 2;
    }
    if degree_bound > 0 {
        bounds.push(degree_bound);
    }
    for b in bounds {
        if let Some(w) = search_at(spec, v.as_slice(), b) {
            return Ok(WitnessOutcome::Found(w));
        }
    }
    Ok(WitnessOutcome::Unknown { degree_bound })
}
