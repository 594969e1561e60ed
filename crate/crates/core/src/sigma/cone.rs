use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::lp::{feasible_point, maximize, Constraint, LpOutcome, Relation};
use crate::error::{domain, Error, Result};
use crate::linalg::{format_rat, parse_rat, Rat, RatMatrix};

/// Polyhedral cone `{x ∈ ℚⁿ : E x = 0, G x ≥ 0}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    dim: usize,
    eq: Vec<Vec<Rat>>,
    ge: Vec<Vec<Rat>>,
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Positive multiple with coprime integer entries.
fn primitive(row: &[Rat]) -> Vec<Rat> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return row.to_vec();
    }
    ints.into_iter().map(|x| Rat::from_integer(x / &gcd)).collect()
}

impl Cone {
    pub fn new(dim: usize, eq: Vec<Vec<Rat>>, ge: Vec<Vec<Rat>>) -> Result<Self> {
        if dim == 0 {
            return domain("cones live in ℚⁿ with n ≥ 1");
        }
        if let Some(r) = eq.iter().chain(&ge).find(|r| r.len() != dim) {
            return Err(Error::Shape(format!("constraint of length {} in a cone of dimension {dim}", r.len())));
        }
        Ok(Self { dim, eq, ge })
    }

    pub fn from_i64(dim: usize, eq: &[&[i64]], ge: &[&[i64]]) -> Result<Self> {
        let conv = |rows: &[&[i64]]| -> Vec<Vec<Rat>> {
            rows.iter().map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect()).collect()
        };
        Self::new(dim, conv(eq), conv(ge))
    }

    /// All of `ℚⁿ`.
    pub fn whole(dim: usize) -> Self {
        Self { dim, eq: Vec::new(), ge: Vec::new() }
    }

    /// The closed ray `ℚ_{≥0} · u`, `u ≠ 0`.
    pub fn ray(u: &[Rat]) -> Result<Self> {
        if u.iter().all(Zero::is_zero) {
            return domain("ray direction must be nonzero");
        }
        let eq = RatMatrix::from_rows(vec![u.to_vec()])?.kernel_basis();
        Self::new(u.len(), eq, vec![u.to_vec()])
    }

    pub fn ray_i64(u: &[i64]) -> Result<Self> {
        Self::ray(&u.iter().map(|&x| Rat::from_integer(x.into())).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn equalities(&self) -> &[Vec<Rat>] {
        &self.eq
    }

    pub fn inequalities(&self) -> &[Vec<Rat>] {
        &self.ge
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        v.len() == self.dim
            && self.eq.iter().all(|r| dot(r, v).is_zero())
            && self.ge.iter().all(|r| !dot(r, v).is_negative())
    }

    /// The cone's constraints on the variable block `offset .. offset + dim`
    /// of an LP in `total` variables.
    pub(crate) fn constraints(&self, offset: usize, total: usize) -> Vec<Constraint> {
        let embed = |row: &[Rat]| {
            let mut c = vec![Rat::zero(); total];
            c[offset..offset + self.dim].clone_from_slice(row);
            c
        };
        let eqs = self.eq.iter().map(|r| Constraint::new(embed(r), Relation::Eq, Rat::zero()));
        let ges = self.ge.iter().map(|r| Constraint::new(embed(r), Relation::Ge, Rat::zero()));
        eqs.chain(ges).collect()
    }

    fn boxed(&self) -> Vec<Constraint> {
        let mut cons = self.constraints(0, self.dim);
        for i in 0..self.dim {
            let mut e = vec![Rat::zero(); self.dim];
            e[i] = Rat::one();
            cons.push(Constraint::new(e.clone(), Relation::Le, Rat::one()));
            cons.push(Constraint::new(e, Relation::Ge, -Rat::one()));
        }
        cons
    }

    fn lineality_is_trivial(&self) -> bool {
        let rows: Vec<Vec<Rat>> = self.eq.iter().chain(&self.ge).cloned().collect();
        !rows.is_empty() && RatMatrix::from_rows(rows).map(|m| m.rank()).unwrap_or(0) == self.dim
    }

    /// Constraint systems in local variables whose union, up to positive
    /// scaling, is `cone ∖ {0}`.
    ///
    /// A nonzero `x` either has `Gx ≠ 0`, so `1ᵀGx > 0`, or lies in the
    /// lineality space `{Ex = 0, Gx = 0}` with some coordinate `≠ 0`.
    pub(crate) fn nonzero_pieces(&self, offset: usize, total: usize) -> Vec<Vec<Constraint>> {
        let mut pieces = Vec::new();
        let embed = |row: Vec<Rat>| {
            let mut c = vec![Rat::zero(); total];
            c[offset..offset + self.dim].clone_from_slice(&row);
            c
        };
        if !self.ge.is_empty() {
            let mut sum = vec![Rat::zero(); self.dim];
            for r in &self.ge {
                for (s, x) in sum.iter_mut().zip(r) {
                    *s += x;
                }
            }
            let mut p = self.constraints(offset, total);
            p.push(Constraint::new(embed(sum), Relation::Ge, Rat::one()));
            pieces.push(p);
        }
        if !self.lineality_is_trivial() {
            let lineality: Vec<Constraint> = self
                .eq
                .iter()
                .chain(&self.ge)
                .map(|r| Constraint::new(embed(r.clone()), Relation::Eq, Rat::zero()))
                .collect();
            for j in 0..self.dim {
                let mut e = vec![Rat::zero(); self.dim];
                e[j] = Rat::one();
                for (rel, rhs) in [(Relation::Ge, Rat::one()), (Relation::Le, -Rat::one())] {
                    let mut p = lineality.clone();
                    p.push(Constraint::new(embed(e.clone()), rel, rhs));
                    pieces.push(p);
                }
            }
        }
        pieces
    }

    /// A nonzero `v` with `±v` in the cone, if the lineality space is nonzero.
    pub fn lineality_element(&self) -> Option<Vec<Rat>> {
        if self.lineality_is_trivial() {
            return None;
        }
        let rows: Vec<Vec<Rat>> = self.eq.iter().chain(&self.ge).cloned().collect();
        if rows.is_empty() {
            let mut e = vec![Rat::zero(); self.dim];
            e[0] = Rat::one();
            return Some(e);
        }
        RatMatrix::from_rows(rows).expect("rectangular").kernel_basis().into_iter().next()
    }

    /// Some nonzero element, or `None` when the cone is `{0}`.
    pub fn nonzero_element(&self) -> Option<Vec<Rat>> {
        self.nonzero_pieces(0, self.dim).iter().find_map(|p| feasible_point(p, self.dim))
    }

    pub fn is_trivial(&self) -> bool {
        self.nonzero_element().is_none()
    }

    /// Canonical constraint system: implicit equalities moved to `E`, `E` in
    /// reduced row echelon form, inequalities reduced modulo the row space of
    /// `E`, irredundant, primitive and sorted. Equal cones get equal systems.
    pub fn canonical(&self) -> Self {
        let boxed = self.boxed();
        let mut eq = self.eq.clone();
        let mut ge = Vec::new();
        for r in &self.ge {
            match maximize(r, &boxed, self.dim) {
                LpOutcome::Optimal { value, .. } if value.is_zero() => eq.push(r.clone()),
                _ => ge.push(r.clone()),
            }
        }
        let eq = if eq.is_empty() {
            Vec::new()
        } else {
            let rref = RatMatrix::from_rows(eq).expect("rectangular").rref();
            let rows: Vec<Vec<Rat>> = (0..rref.pivots.len()).map(|i| rref.matrix.row(i).to_vec()).collect();
            rows
        };
        let pivots: Vec<usize> = eq.iter().map(|r| r.iter().position(|x| !x.is_zero()).unwrap()).collect();
        let mut reduced: Vec<Vec<Rat>> = ge
            .into_iter()
            .map(|mut r| {
                for (e, &p) in eq.iter().zip(&pivots) {
                    let f = r[p].clone();
                    if !f.is_zero() {
                        for (x, y) in r.iter_mut().zip(e) {
                            *x -= &f * y;
                        }
                    }
                }
                primitive(&r)
            })
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        reduced.sort();
        reduced.dedup();
        let eq: Vec<Vec<Rat>> = eq.iter().map(|r| primitive(r)).collect();
        let mut k = 0;
        while k < reduced.len() {
            let others: Vec<Vec<Rat>> =
                reduced.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, r)| r.clone()).collect();
            let trial = Cone { dim: self.dim, eq: eq.clone(), ge: others.clone() };
            let redundant = match maximize(&reduced[k].iter().map(|x| -x).collect::<Vec<_>>(), &trial.boxed(), self.dim)
            {
                LpOutcome::Optimal { value, .. } => !value.is_positive(),
                _ => false,
            };
            if redundant {
                reduced = others;
            } else {
                k += 1;
            }
        }
        Cone { dim: self.dim, eq, ge: reduced }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(default)]
    eq: Vec<Vec<String>>,
    #[serde(default)]
    ge: Vec<Vec<String>>,
}

/// `{"dim": n, "eq": [[..]], "ge": [[..]]}`; `dim` may be omitted when a
/// constraint row fixes it.
impl Serialize for Cone {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = |rs: &[Vec<Rat>]| rs.iter().map(|r| r.iter().map(format_rat).collect()).collect();
        ConeJson { dim: Some(self.dim), eq: rows(&self.eq), ge: rows(&self.ge) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cone {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ConeJson::deserialize(d)?;
        let parse = |rs: &[Vec<String>]| -> Result<Vec<Vec<Rat>>> {
            rs.iter().map(|r| r.iter().map(|x| parse_rat(x)).collect()).collect()
        };
        let build = || -> Result<Cone> {
            let eq = parse(&raw.eq)?;
            let ge = parse(&raw.ge)?;
            let dim = match raw.dim.or_else(|| eq.iter().chain(&ge).next().map(Vec::len)) {
                Some(d) => d,
                None => return domain("cone without constraints needs an explicit \"dim\""),
            };
            Cone::new(dim, eq, ge)
        };
        build().map_err(serde::de::Error::custom)
    }
}

/// Finite union of cones in a common `ℚⁿ`, standing for a closed subset of
/// the valuation sphere (the origin is never a valuation).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ConeUnion {
    cones: Vec<Cone>,
}

impl ConeUnion {
    pub fn new(cones: Vec<Cone>) -> Result<Self> {
        if let Some(first) = cones.first() {
            if cones.iter().any(|c| c.dim != first.dim) {
                return Err(Error::Shape("cones of a union must share a dimension".into()));
            }
        }
        Ok(Self { cones })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn whole(dim: usize) -> Self {
        Self { cones: vec![Cone::whole(dim)] }
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    /// `None` for the empty union, which fits every dimension.
    pub fn dim(&self) -> Option<usize> {
        self.cones.first().map(Cone::dim)
    }

    /// No nonzero direction is covered.
    pub fn is_empty(&self) -> bool {
        self.cones.iter().all(Cone::is_trivial)
    }

    /// Membership of the direction `v ≠ 0`.
    pub fn contains(&self, v: &[Rat]) -> bool {
        v.iter().any(|x| !x.is_zero()) && self.cones.iter().any(|c| c.contains(v))
    }

    /// Canonical cones, `{0}` cones dropped, sorted and deduplicated.
    pub fn canonical(&self) -> Self {
        let mut cones: Vec<Cone> = self.cones.iter().filter(|c| !c.is_trivial()).map(Cone::canonical).collect();
        cones.sort();
        cones.dedup();
        Self { cones }
    }
}

impl<'de> Deserialize<'de> for ConeUnion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let cones = Vec::<Cone>::deserialize(d)?;
        Self::new(cones).map_err(serde::de::Error::custom)
    }
}
