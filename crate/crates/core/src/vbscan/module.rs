use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{domain, Error, Result};
use crate::linalg::{Rat, RatMatrix, SpanSolver, Subquotient};

/// A finite-dimensional `ℚ[ℤⁿ]`-module: commuting invertible operators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QModuleFD {
    dim: usize,
    generators: Vec<RatMatrix>,
}

impl QModuleFD {
    pub fn new(dim: usize, generators: Vec<RatMatrix>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.shape() != (dim, dim)) {
            return Err(Error::Shape(format!("generator of shape {:?} on a {dim}-dimensional module", g.shape())));
        }
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                if a * b != b * a {
                    return domain("module generators do not commute");
                }
            }
        }
        if let Some(i) = generators.iter().position(|g| g.inverse().is_none()) {
            return domain(format!("generator {i} is not invertible"));
        }
        Ok(Self { dim, generators })
    }

    /// `ℚ^dim` with `n` generators acting as the identity.
    pub fn trivial(dim: usize, n: usize) -> Self {
        Self { dim, generators: vec![RatMatrix::identity(dim); n] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[RatMatrix] {
        &self.generators
    }

    /// The submodule spanned by `basis`, which must be invariant.
    pub fn restrict(&self, basis: &[Vec<Rat>]) -> Result<Self> {
        let solver = SpanSolver::new(self.dim, basis)?;
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let cols = basis
                    .iter()
                    .map(|b| {
                        solver
                            .coordinates(&g.mul_vec(b))
                            .ok_or_else(|| Error::Domain("subspace is not invariant".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(RatMatrix::from_columns(basis.len(), &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { dim: basis.len(), generators })
    }

    /// The quotient by the invariant subspace spanned by `basis`.
    pub fn quotient(&self, basis: &[Vec<Rat>]) -> Result<Self> {
        self.restrict(basis)?;
        let whole = RatMatrix::identity(self.dim).image_basis();
        let sq = Subquotient::new(self.dim, &whole, basis)?;
        let generators = self.generators.iter().map(|g| sq.induced(g)).collect::<Result<Vec<_>>>()?;
        Ok(Self { dim: sq.dim(), generators })
    }
}

impl<'de> Deserialize<'de> for QModuleFD {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            dim: usize,
            generators: Vec<RatMatrix>,
        }
        let raw = Raw::deserialize(d)?;
        Self::new(raw.dim, raw.generators).map_err(serde::de::Error::custom)
    }
}

/// Restriction to `Q^m = ⟨g_1^m, …, g_n^m⟩`.
pub fn power_subgroup(module: &QModuleFD, m: u64) -> Result<QModuleFD> {
    if m == 0 {
        return domain("power subgroups need m ≥ 1");
    }
    Ok(QModuleFD { dim: module.dim, generators: module.generators.iter().map(|g| g.pow(m)).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn validation() {
        assert!(QModuleFD::new(1, vec![RatMatrix::from_i64(&[&[0]])]).is_err());
        assert!(QModuleFD::new(2, vec![RatMatrix::identity(3)]).is_err());
        let a = RatMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let b = RatMatrix::from_i64(&[&[1, 0], &[1, 1]]);
        assert!(QModuleFD::new(2, vec![a, b]).is_err());
    }

    #[test]
    fn powers() {
        let m = QModuleFD::new(1, vec![RatMatrix::from_i64(&[&[2]])]).unwrap();
        assert_eq!(power_subgroup(&m, 1).unwrap(), m);
        assert_eq!(power_subgroup(&m, 3).unwrap().generators()[0], RatMatrix::from_i64(&[&[8]]));
        let g = QModuleFD::new(2, vec![RatMatrix::from_i64(&[&[2, 1], &[1, 1]])]).unwrap();
        let twice = power_subgroup(&power_subgroup(&g, 2).unwrap(), 3).unwrap();
        assert_eq!(twice, power_subgroup(&g, 6).unwrap());
        assert!(power_subgroup(&g, 0).is_err());
    }

    #[test]
    fn sub_and_quotient() {
        let m = QModuleFD::new(2, vec![RatMatrix::from_i64(&[&[1, 1], &[0, 1]])]).unwrap();
        let line = vec![vec![rat(1), rat(0)]];
        assert_eq!(m.restrict(&line).unwrap().generators()[0], RatMatrix::identity(1));
        assert_eq!(m.quotient(&line).unwrap().generators()[0], RatMatrix::identity(1));
        assert!(m.restrict(&[vec![rat(0), rat(1)]]).is_err());
    }

    #[test]
    fn json() {
        let m: QModuleFD = serde_json::from_str(r#"{"dim":1,"generators":[[["2"]]]}"#).unwrap();
        assert_eq!(m.generators()[0], RatMatrix::from_i64(&[&[2]]));
        assert!(serde_json::from_str::<QModuleFD>(r#"{"dim":1,"generators":[[["0"]]]}"#).is_err());
    }
}
