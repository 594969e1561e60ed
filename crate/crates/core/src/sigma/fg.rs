//! Finite generation of tensor powers `⊗^m A` under the diagonal action, and
//! full tameness of finite-dimensional modules.

use num_traits::Zero;
use serde::Serialize;

use super::cone::ConeUnion;
use super::laurent::{CyclicModuleSpec, LaurentPoly};
use super::principal::{sigma_complement, SigmaComplement};
use super::tame::{m_tame_witness, NonTameWitness};
use crate::error::{domain, Error, Result};
use crate::linalg::{format_rat, tensor_power_map, Rat, RatMatrix, SpanSolver};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FgCheck {
    /// `⊗^m A` is finite-dimensional and spanned by the diagonal orbits of
    /// `generators` elementary tensors, each closing up within the bound.
    Yes {
        dimension: usize,
        generators: usize,
    },
    /// `A` is not `m`-tame, so `⊗^m A` is not finitely generated.
    NoWitness {
        witness: NonTameWitness,
    },
    Unknown {
        reason: String,
    },
}

/// Companion matrix of multiplication by `t` on `ℚ[t^±]/(f)`, `n = 1`,
/// in the basis `1, t, …, t^{d−1}` of the normalized `f`.
fn companion(f: &LaurentPoly) -> RatMatrix {
    let support = f.support();
    let lo = support.first().expect("nonzero")[0];
    let hi = support.last().expect("nonzero")[0];
    let d = (hi - lo) as usize;
    let lead = f.coeff(&[hi]);
    let mut m = RatMatrix::zeros(d, d);
    for i in 1..d {
        m.set(i, i - 1, Rat::from_integer(1.into()));
    }
    for i in 0..d {
        m.set(i, d - 1, -(f.coeff(&[lo + i as i64]) / &lead));
    }
    m
}

/// Closure of `seed` under `op` and `inv` for at most `steps` rounds;
/// `None` if the span is still growing after the last round.
fn closure(
    solver_basis: &mut Vec<Vec<Rat>>,
    seed: Vec<Rat>,
    op: &RatMatrix,
    inv: &RatMatrix,
    steps: usize,
) -> Option<()> {
    let dim = seed.len();
    let mut frontier = vec![seed];
    for _ in 0..=steps {
        let mut fresh = Vec::new();
        for v in frontier {
            let solver = SpanSolver::new(dim, solver_basis).expect("independent");
            if !solver.contains(&v) {
                solver_basis.push(v.clone());
                fresh.push(v);
            }
        }
        if fresh.is_empty() {
            return Some(());
        }
        frontier = fresh.iter().flat_map(|v| [op.mul_vec(v), inv.mul_vec(v)]).collect();
    }
    None
}

/// Semidecision for finite generation of `⊗^m A` as a `ℚ[ℤⁿ]`-module under
/// the diagonal action.
///
/// Finite-dimensional `A` (a unit in `I`, or `n = 1` with `I` principal) is
/// settled by orbit closures of elementary tensors within `degree_bound`
/// steps. Otherwise an exact `Σ^c` that fails `m`-tameness gives
/// `NoWitness`; everything else is `Unknown`.
pub fn tensor_power_fg_check(spec: &CyclicModuleSpec, m: usize, degree_bound: usize) -> Result<FgCheck> {
    spec.validate()?;
    if m < 2 {
        return domain(format!("tensor powers are checked for m ≥ 2, got {m}"));
    }
    if spec.ideal.iter().any(LaurentPoly::is_unit) {
        return Ok(FgCheck::Yes { dimension: 0, generators: 0 });
    }
    if spec.nvars == 1 {
        if let [f] = spec.ideal.as_slice() {
            let t = companion(f);
            let d = t.rows();
            let big = d.checked_pow(m as u32).filter(|&x| x <= 4096);
            let Some(dimension) = big else {
                return Ok(FgCheck::Unknown { reason: format!("⊗^{m} of a {d}-dimensional module is too large") });
            };
            let op = tensor_power_map(&t, m);
            let inv = op.inverse().ok_or_else(|| Error::Domain("t acts singularly".into()))?;
            let mut basis: Vec<Vec<Rat>> = Vec::new();
            let mut generators = 0;
            for k in 0..dimension {
                if basis.len() == dimension {
                    break;
                }
                let mut e = vec![Rat::zero(); dimension];
                e[k] = Rat::from_integer(1.into());
                if SpanSolver::new(dimension, &basis)?.contains(&e) {
                    continue;
                }
                generators += 1;
                if closure(&mut basis, e, &op, &inv, degree_bound).is_none() {
                    return Ok(FgCheck::Unknown {
                        reason: format!("orbit closure did not stabilize within {degree_bound} steps"),
                    });
                }
            }
            return Ok(FgCheck::Yes { dimension, generators });
        }
    }
    match sigma_complement(spec)? {
        SigmaComplement::Exact { cones } => match m_tame_witness(&cones, m)? {
            Some(witness) => Ok(FgCheck::NoWitness { witness }),
            None => Ok(FgCheck::Unknown { reason: format!("A is {m}-tame; no generating set was constructed") }),
        },
        SigmaComplement::Unresolved { .. } => {
            Ok(FgCheck::Unknown { reason: "Σ-complement of a non-principal ideal is not computed".into() })
        }
    }
}

/// Coefficients `c_0, …, c_{d−1}, 1` of `det(x·1 − a)`, by Faddeev–LeVerrier.
pub fn characteristic_polynomial(a: &RatMatrix) -> Result<Vec<Rat>> {
    if !a.is_square() {
        return Err(Error::Shape("characteristic polynomial of a non-square matrix".into()));
    }
    let d = a.rows();
    let mut coeffs = vec![Rat::zero(); d + 1];
    coeffs[d] = Rat::from_integer(1.into());
    let mut mk = RatMatrix::zeros(d, d);
    for k in 1..=d {
        let shifted = &(a * &mk) + &RatMatrix::identity(d).scale(&coeffs[d - k + 1]);
        mk = shifted;
        let am = a * &mk;
        let trace: Rat = (0..d).map(|i| am.get(i, i).clone()).sum();
        coeffs[d - k] = -trace / Rat::from_integer((k as i64).into());
    }
    Ok(coeffs)
}

/// Empty `Σ^c` for a finite-dimensional module with invertible commuting
/// generator actions, with the characteristic polynomials that certify it:
/// each is monic with nonzero constant term, so both `t` and `t^{-1}` act
/// integrally and the module is finitely generated over every `ℚQ_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullyTameCertificate {
    pub sigma_complement: ConeUnion,
    pub characteristic_polynomials: Vec<Vec<Rat>>,
}

impl Serialize for FullyTameCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            sigma_complement: &'a ConeUnion,
            characteristic_polynomials: Vec<Vec<String>>,
        }
        let polys = self.characteristic_polynomials.iter().map(|p| p.iter().map(format_rat).collect()).collect();
        Out { sigma_complement: &self.sigma_complement, characteristic_polynomials: polys }.serialize(s)
    }
}

pub fn finite_dimensional_is_fully_tame(dim: usize, actions: &[RatMatrix]) -> Result<FullyTameCertificate> {
    if let Some(g) = actions.iter().find(|g| g.rows() != dim || g.cols() != dim) {
        return Err(Error::Shape(format!("action of shape {:?} on a {dim}-dimensional module", g.shape())));
    }
    for (i, a) in actions.iter().enumerate() {
        for b in &actions[i + 1..] {
            if a * b != b * a {
                return domain("generator actions do not commute");
            }
        }
    }
    let mut polys = Vec::with_capacity(actions.len());
    for (i, g) in actions.iter().enumerate() {
        let p = characteristic_polynomial(g)?;
        if p[0].is_zero() {
            return domain(format!("generator {i} acts singularly"));
        }
        polys.push(p);
    }
    Ok(FullyTameCertificate { sigma_complement: ConeUnion::empty(), characteristic_polynomials: polys })
}
