//! Dense matrices over ℤ and the Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::RatMatrix;
use super::rational::Rat;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// The nonzero diagonal entries of `D`, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d.get(i, i).clone()).filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Invariant factors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors().into_iter().filter(|x| !x.is_one()).collect()
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_shape(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
            .expect("ragged literal")
    }

    /// Converts a rational matrix with integral entries.
    pub fn from_rat(m: &RatMatrix) -> Result<Self> {
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let x = m.get(i, j);
                if !x.is_integer() {
                    return Err(Error::Domain(format!("non-integral entry {x} at ({i},{j})")));
                }
                out.data[i * m.cols() + j] = x.to_integer();
            }
        }
        Ok(out)
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::from_shape(self.rows, self.cols, self.data.iter().cloned().map(Rat::from_integer).collect())
            .expect("shape preserved")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += f * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.cols {
            let x = f * &self.data[src * self.cols + j];
            self.data[dst * self.cols + j] += x;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let x = -&self.data[r * self.cols + j];
            self.data[r * self.cols + j] = x;
        }
    }

    /// Fraction-free (Bareiss) elimination; returns the rank and, for square
    /// input, the determinant.
    fn bareiss(&self) -> (usize, BigInt) {
        let mut m = self.clone();
        let mut rank = 0;
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != rank {
                m.swap_rows(p, rank);
                sign = -sign;
            }
            let pivot = m.get(rank, c).clone();
            for i in rank + 1..m.rows {
                for j in c + 1..m.cols {
                    let num = &pivot * m.get(i, j) - m.get(i, c) * m.get(rank, j);
                    m.data[i * m.cols + j] = num / &prev;
                }
                m.data[i * m.cols + c] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
        }
        let det = if self.is_square() && rank == self.rows {
            if self.rows == 0 {
                BigInt::one()
            } else {
                sign * m.get(self.rows - 1, self.cols - 1)
            }
        } else {
            BigInt::zero()
        };
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        Ok(self.bareiss().1)
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.bareiss().1.abs().is_one()
    }

    /// Replaces rows `(a, b)` by `M·(a, b)` for a 2×2 `M` given row-major.
    fn combine_rows(&mut self, a: usize, b: usize, m: [&BigInt; 4]) {
        for j in 0..self.cols {
            let (x, y) = (&self.data[a * self.cols + j], &self.data[b * self.cols + j]);
            let na = m[0] * x + m[1] * y;
            let nb = m[2] * x + m[3] * y;
            self.data[a * self.cols + j] = na;
            self.data[b * self.cols + j] = nb;
        }
    }

    /// Row-style Hermite form in place, mirroring every row operation on `u`.
    /// Entries above a pivot are reduced into `[0, pivot)`.
    fn hermite_rows(&mut self, u: &mut Self) {
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            for i in r + 1..self.rows {
                if self.get(i, c).is_zero() {
                    continue;
                }
                let (a, b) = (self.get(r, c).clone(), self.get(i, c).clone());
                let e = a.extended_gcd(&b);
                let (ag, bg) = (&a / &e.gcd, &b / &e.gcd);
                let m = [&e.x, &e.y, &-bg, &ag];
                self.combine_rows(r, i, m);
                u.combine_rows(r, i, m);
            }
            if self.get(r, c).is_zero() {
                continue;
            }
            if self.get(r, c).is_negative() {
                self.negate_row(r);
                u.negate_row(r);
            }
            let pivot = self.get(r, c).clone();
            for k in 0..r {
                let f = -self.get(k, c).div_floor(&pivot);
                if !f.is_zero() {
                    self.add_row(k, r, &f);
                    u.add_row(k, r, &f);
                }
            }
            r += 1;
        }
    }

    fn is_monomial(&self) -> bool {
        let row_ok = (0..self.rows).all(|i| (0..self.cols).filter(|&j| !self.get(i, j).is_zero()).count() <= 1);
        let col_ok = (0..self.cols).all(|j| (0..self.rows).filter(|&i| !self.get(i, j).is_zero()).count() <= 1);
        row_ok && col_ok
    }

    /// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal with
    /// `d_1 | d_2 | …`, nonnegative, zeros last.
    ///
    /// Alternates row and column Hermite forms until at most one entry per
    /// row and column survives; the reductions keep entries from growing.
    pub fn smith_normal_form(&self) -> Smith {
        let (m, n) = (self.rows, self.cols);
        let mut d = self.clone();
        let mut u = Self::identity(m);
        let mut v = Self::identity(n);
        d.hermite_rows(&mut u);
        while !d.is_monomial() {
            let mut dt = d.transpose();
            let mut vt = v.transpose();
            dt.hermite_rows(&mut vt);
            d = dt.transpose();
            v = vt.transpose();
            d.hermite_rows(&mut u);
        }
        // move the surviving entries onto the diagonal; both forms are echelon
        // so row t holds the t-th pivot
        for t in 0..m.min(n) {
            if let Some(j) = (t..n).find(|&j| !d.get(t, j).is_zero()) {
                d.swap_cols(t, j);
                v.swap_cols(t, j);
            }
        }
        let r = (0..m.min(n)).take_while(|&t| !d.get(t, t).is_zero()).count();
        for i in 0..r {
            for j in i + 1..r {
                let (a, b) = (d.get(i, i).clone(), d.get(j, j).clone());
                if b.is_multiple_of(&a) {
                    continue;
                }
                // diag(a, b) ↦ diag(g, lcm) with x·a + y·b = g
                let e = a.extended_gcd(&b);
                let (ag, bg) = (&a / &e.gcd, &b / &e.gcd);
                u.combine_rows(i, j, [&e.x, &e.y, &-&bg, &ag]);
                let mut vt = v.transpose();
                vt.combine_rows(i, j, [&BigInt::one(), &BigInt::one(), &(-&e.y * &bg), &(&e.x * &ag)]);
                v = vt.transpose();
                d.set(i, i, e.gcd.clone());
                d.set(j, j, &a * &bg);
            }
        }
        for t in 0..r {
            if d.get(t, t).is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
        }
        Smith { u, d, v }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Serialized like [`RatMatrix`]: rows of integer strings.
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rat().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = RatMatrix::deserialize(d)?;
        IntMatrix::from_rat(&m).map_err(D::Error::custom)
    }
}
