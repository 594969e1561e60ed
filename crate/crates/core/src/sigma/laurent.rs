use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::linalg::{format_rat, parse_rat, Rat};

/// Laurent polynomial in `nvars` variables over ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rat>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(exp: Vec<i64>, coeff: Rat) -> Self {
        let mut p = Self::zero(exp.len());
        if !coeff.is_zero() {
            p.terms.insert(exp, coeff);
        }
        p
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, Rat)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(Error::Shape(format!("exponent {exp:?} has length {}, expected {nvars}", exp.len())));
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[i64])]) -> Result<Self> {
        Self::from_terms(nvars, terms.iter().map(|&(c, e)| (e.to_vec(), Rat::from_integer(c.into()))))
    }

    fn add_term(&mut self, exp: Vec<i64>, c: Rat) {
        let e = self.terms.entry(exp).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rat)> {
        self.terms.iter()
    }

    /// Exponent vectors with nonzero coefficient, in lexicographic order.
    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    pub fn coeff(&self, exp: &[i64]) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    /// A monomial `c·t^a` with `c ≠ 0` is a unit of `ℚ[ℤⁿ]`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// Multiplication by the monomial `t^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        let terms =
            self.terms.iter().map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone())).collect();
        Self { nvars: self.nvars, terms }
    }

    pub fn scale(&self, f: &Rat) -> Self {
        if f.is_zero() {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * f)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.iter().zip(eb).map(|(a, b)| a + b).collect(), ca * cb);
            }
        }
        out
    }

    /// `min_{a ∈ supp} ⟨v, a⟩`, or `None` for the zero polynomial.
    pub fn valuation(&self, v: &[Rat]) -> Option<Rat> {
        self.terms.keys().map(|a| pairing(v, a)).min()
    }

    /// Support points where `⟨v, ·⟩` attains its minimum.
    pub fn v_minimal_support(&self, v: &[Rat]) -> Vec<Vec<i64>> {
        let Some(min) = self.valuation(v) else { return Vec::new() };
        self.terms.keys().filter(|a| pairing(v, a) == min).cloned().collect()
    }
}

pub(crate) fn pairing(v: &[Rat], a: &[i64]) -> Rat {
    v.iter().zip(a).map(|(x, &k)| x * Rat::from_integer(k.into())).sum()
}

fn var_name(i: usize, nvars: usize) -> String {
    match (nvars, i) {
        (1, 0) => "t".into(),
        (2, 0) => "t".into(),
        (2, 1) => "s".into(),
        _ => format!("t{}", i + 1),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (exp, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(
                    |(i, &e)| if e == 1 { var_name(i, self.nvars) } else { format!("{}^{e}", var_name(i, self.nvars)) },
                )
                .collect();
            let abs = c.abs();
            let body = match (mono.is_empty(), abs.is_one()) {
                (true, _) => format_rat(&abs),
                (false, true) => mono.join("*"),
                (false, false) => format!("{}*{}", format_rat(&abs), mono.join("*")),
            };
            match (k, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    coeff: String,
    exp: Vec<i64>,
}

fn terms_json(p: &LaurentPoly) -> Vec<TermJson> {
    p.terms.iter().map(|(e, c)| TermJson { coeff: format_rat(c), exp: e.clone() }).collect()
}

fn poly_from_json(nvars: usize, terms: Vec<TermJson>) -> Result<LaurentPoly> {
    let parsed: Result<Vec<(Vec<i64>, Rat)>> = terms.into_iter().map(|t| Ok((t.exp, parse_rat(&t.coeff)?))).collect();
    LaurentPoly::from_terms(nvars, parsed?)
}

/// Serialized as a list of `{"coeff": "p/q", "exp": [..]}` terms.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        terms_json(self).serialize(s)
    }
}

/// A nonzero direction `v ∈ ℚⁿ`; the valuation `t^a ↦ ⟨v, a⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationVector(Vec<Rat>);

impl ValuationVector {
    pub fn new(v: Vec<Rat>) -> Result<Self> {
        if v.iter().all(Zero::is_zero) {
            return domain("valuation vector must be nonzero");
        }
        Ok(Self(v))
    }

    pub fn from_i64(v: &[i64]) -> Result<Self> {
        Self::new(v.iter().map(|&x| Rat::from_integer(x.into())).collect())
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl Serialize for ValuationVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(format_rat))
    }
}

impl<'de> Deserialize<'de> for ValuationVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let v: Result<Vec<Rat>> = raw.iter().map(|s| parse_rat(s)).collect();
        v.and_then(Self::new).map_err(serde::de::Error::custom)
    }
}

/// The cyclic module `A = ℚ[ℤⁿ]/I` given by generators of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicModuleSpec {
    pub nvars: usize,
    pub ideal: Vec<LaurentPoly>,
}

impl CyclicModuleSpec {
    pub fn new(nvars: usize, ideal: Vec<LaurentPoly>) -> Result<Self> {
        let spec = Self { nvars, ideal };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.nvars == 0 {
            return domain("module needs at least one variable");
        }
        for g in &self.ideal {
            if g.nvars != self.nvars {
                return Err(Error::Shape(format!("generator in {} variables, expected {}", g.nvars, self.nvars)));
            }
            if g.is_zero() {
                return domain("ideal generators must be nonzero");
            }
        }
        Ok(())
    }

    /// `ℚ[ℤⁿ]` itself (`I = 0`).
    pub fn free(nvars: usize) -> Self {
        Self { nvars, ideal: Vec::new() }
    }

    pub fn principal(f: LaurentPoly) -> Result<Self> {
        Self::new(f.nvars, vec![f])
    }

    pub fn is_principal(&self) -> bool {
        self.ideal.len() == 1
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IdealJson {
    Generators(Vec<Vec<TermJson>>),
    Principal(Vec<TermJson>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleJson {
    nvars: usize,
    ideal: IdealJson,
}

/// `{"nvars": n, "ideal": [[term, ...], ...]}`. A flat list of terms is read
/// as a single (principal) generator.
impl Serialize for CyclicModuleSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            nvars: usize,
            ideal: Vec<Vec<TermJson>>,
        }
        Out { nvars: self.nvars, ideal: self.ideal.iter().map(terms_json).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclicModuleSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ModuleJson::deserialize(d)?;
        let gens = match raw.ideal {
            IdealJson::Generators(g) => g,
            IdealJson::Principal(t) => vec![t],
        };
        let ideal: Result<Vec<LaurentPoly>> = gens.into_iter().map(|t| poly_from_json(raw.nvars, t)).collect();
        ideal.and_then(|i| Self::new(raw.nvars, i)).map_err(serde::de::Error::custom)
    }
}
