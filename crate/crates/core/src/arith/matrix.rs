use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bareiss;
use super::modular;
use super::Rational;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Bound for random evaluation coordinates.
pub const SCREEN_BOUND: i64 = 1_000_000;
/// Number of random evaluations tried before exact symbolic elimination.
pub const SCREEN_DRAWS: usize = 20;
const SCREEN_SEED: u64 = 0x0005_EED0_FB44_E155;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, got: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::new();
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, got: r.len() });
            }
            entries.extend(r.iter().map(|&v| super::rat(v)));
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { expected: self.cols, got: other.rows });
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, t| acc + self.get(i, t) * other.get(t, j))
        }))
    }

    fn same_shape(&self, other: &ExactMatrix) -> Result<()> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::LengthMismatch { expected: self.rows * self.cols, got: other.rows * other.cols });
        }
        Ok(())
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j)))
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j)))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|v| v * s).collect() }
    }

    /// `[[a, b], [c, d]]` assembled from blocks.
    pub fn block(a: &ExactMatrix, b: &ExactMatrix, c: &ExactMatrix, d: &ExactMatrix) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::Spec("block shapes do not fit".into()));
        }
        let (top, left) = (a.rows, a.cols);
        Ok(Self::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| match (i < top, j < left) {
            (true, true) => a.get(i, j).clone(),
            (true, false) => b.get(i, j - left).clone(),
            (false, true) => c.get(i - top, j).clone(),
            (false, false) => d.get(i - top, j - left).clone(),
        }))
    }

    /// Inverse, or `None` when singular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let (ints, scales) = self.integer_rows();
        let ident: Vec<BigInt> =
            (0..n * n).map(|t| if t / n == t % n { BigInt::one() } else { BigInt::zero() }).collect();
        let Some(s) = bareiss::solve(n, &ints, n, &ident, BigInt::one()).expect("big integers never overflow") else {
            return Ok(None);
        };
        // (D A) X = I with D = diag(scales) gives X = A^{-1} D^{-1}; undo the
        // column scaling.
        Ok(Some(Self::from_fn(n, n, |i, j| Rational::new(s.scaled[i * n + j].clone() * &scales[j], s.scale.clone()))))
    }

    /// Rows multiplied by the lcm of their denominators.
    pub(crate) fn integer_rows(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let mut ints = Vec::with_capacity(self.entries.len());
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            ints.extend(row.iter().map(|v| v.numer() * (&l / v.denom())));
            scales.push(l);
        }
        (ints, scales)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let full = self.rows.min(self.cols);
        if full == 0 {
            return 0;
        }
        let (ints, _) = self.integer_rows();
        if modular::rank(self.rows, self.cols, &ints) == full {
            return full;
        }
        int_rank_det(self.rows, self.cols, ints).0
    }

    /// Rank by Bareiss elimination alone, without the modular shortcut.
    pub fn rank_bareiss(&self) -> usize {
        let (ints, _) = self.integer_rows();
        int_rank_det(self.rows, self.cols, ints).0
    }

    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let (ints, scales) = self.integer_rows();
        let (_, det) = int_rank_det(self.rows, self.cols, ints);
        let denom = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
        Ok(Rational::new(det, denom))
    }
}

fn int_rank_det(rows: usize, cols: usize, ints: Vec<BigInt>) -> (usize, BigInt) {
    let small: Option<Vec<i64>> = ints.iter().map(ToPrimitive::to_i64).collect();
    if let Some(small) = small {
        if let Some(r) = bareiss::eliminate(rows, cols, small, 1i64) {
            return (r.rank, BigInt::from(r.det));
        }
    }
    let r = bareiss::eliminate(rows, cols, ints, BigInt::one()).expect("big integers never overflow");
    (r.rank, r.det)
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The banded `n x n` matrix with 3 on the diagonal, 1 on the first
/// superdiagonal, 3 on the first subdiagonal and 1 on the second.
pub fn toeplitz_31(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |i, j| {
        let v = if i == j {
            3
        } else if j == i + 1 {
            1
        } else if i == j + 1 {
            3
        } else if i == j + 2 {
            1
        } else {
            0
        };
        super::rat(v)
    })
}

/// Matrix with polynomial entries, all homogeneous of one common degree
/// (zero entries excepted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, nvars: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, got: entries.len() });
        }
        let mut degree = None;
        for e in &entries {
            if e.nvars() != nvars {
                return Err(Error::VarcountMismatch { left: nvars, right: e.nvars() });
            }
            if e.is_zero() {
                continue;
            }
            let d = e.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return Err(Error::NotHomogeneous),
                _ => {}
            }
        }
        Ok(Self { rows, cols, nvars, entries })
    }

    /// No degree check; entries may have mixed degrees.
    pub fn from_entries_unchecked(rows: usize, cols: usize, nvars: usize, entries: Vec<Polynomial>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self { rows, cols, nvars, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    /// Degree shared by the nonzero entries.
    pub fn entry_degree(&self) -> Option<u32> {
        self.entries.iter().find_map(Polynomial::degree)
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, nvars: self.nvars, entries }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<ExactMatrix> {
        let entries = self.entries.iter().map(|e| e.evaluate(point)).collect::<Result<Vec<_>>>()?;
        ExactMatrix::new(self.rows, self.cols, entries)
    }

    /// Rank over the rational function field. Random integer points are
    /// tried first (a full evaluated rank proves full symbolic rank);
    /// anything short of full is settled by exact elimination.
    pub fn symbolic_rank(&self) -> usize {
        let full = self.rows.min(self.cols);
        if full == 0 {
            return 0;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SCREEN_SEED);
        for _ in 0..SCREEN_DRAWS {
            let point = random_point(&mut rng, self.nvars);
            if self.evaluate(&point).map(|m| m.rank()).unwrap_or(0) == full {
                return full;
            }
        }
        self.symbolic_rank_exact()
    }

    /// Rank by fraction-free elimination over the polynomial ring.
    pub fn symbolic_rank_exact(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        bareiss::eliminate(self.rows, self.cols, self.entries.clone(), Polynomial::one(self.nvars))
            .expect("polynomial elimination is exact")
            .rank
    }

    /// Leibniz determinant, rows and columns taken in stored order.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        Ok(bareiss::eliminate(self.rows, self.cols, self.entries.clone(), Polynomial::one(self.nvars))
            .expect("polynomial elimination is exact")
            .det)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| *self.get(i, j) == self.get(j, i).neg()))
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub(crate) fn random_point(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| super::rat(rng.gen_range(-SCREEN_BOUND..=SCREEN_BOUND))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::identity(2).rank(), 2);
        assert_eq!(ExactMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(ExactMatrix::identity(5).determinant().unwrap(), rat(1));
        assert_eq!(m(&[&[3, 1], &[3, 3]]).determinant().unwrap(), rat(6));
        assert!(matches!(ExactMatrix::zeros(2, 3).determinant(), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn rational_determinant_and_inverse() {
        let a = ExactMatrix::new(
            2,
            2,
            vec![Rational::new(1.into(), 2.into()), rat(1), rat(3), Rational::new(2.into(), 3.into())],
        )
        .unwrap();
        // 1/2*2/3 - 3 = -8/3
        assert_eq!(a.determinant().unwrap(), Rational::new((-8).into(), 3.into()));
        let inv = a.inverse().unwrap().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), ExactMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().unwrap().is_none());
    }

    #[test]
    fn toeplitz_small() {
        assert_eq!(toeplitz_31(1), m(&[&[3]]));
        assert_eq!(toeplitz_31(2), m(&[&[3, 1], &[3, 3]]));
        assert_eq!(toeplitz_31(4), m(&[&[3, 1, 0, 0], &[3, 3, 1, 0], &[1, 3, 3, 1], &[0, 1, 3, 3]]));
        assert_ne!(toeplitz_31(3).determinant().unwrap(), rat(0));
    }

    #[test]
    fn symbolic_rank_examples() {
        let a = PolyMatrix::new(2, 2, 3, vec![p("x", 3), p("0", 3), p("0", 3), p("x", 3)]).unwrap();
        assert_eq!(a.symbolic_rank(), 2);
        assert_eq!(a.symbolic_rank_exact(), 2);
        let b = PolyMatrix::new(2, 2, 3, vec![p("x", 3), p("y", 3), p("x", 3), p("y", 3)]).unwrap();
        assert_eq!(b.symbolic_rank(), 1);
        let h =
            PolyMatrix::new(3, 3, 3, ["z", "y", "x", "y", "x", "0", "x", "0", "0"].iter().map(|s| p(s, 3)).collect())
                .unwrap();
        assert_eq!(h.symbolic_rank(), 3);
        assert_eq!(h.determinant().unwrap(), p("-x^3", 3));
    }

    #[test]
    fn mixed_degrees_rejected() {
        let r = PolyMatrix::new(1, 2, 3, vec![p("x", 3), p("y^2", 3)]);
        assert_eq!(r, Err(Error::NotHomogeneous));
    }
}
