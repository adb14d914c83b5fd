//! Exact rational vectors and matrices, with the elimination routines the
//! rest of the crate needs: rank, kernel, independent subsets and inverses.
//!
//! Everything here is exact. Elimination always pivots on the first nonzero
//! entry of a column (scanning rows top to bottom), so results such as kernel
//! bases are fully determined by the input.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses an integer or `p/q` rational.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let text = text.trim();
    let parsed = Rational::from_str(text)
        .map_err(|_| Error::Parse(format!("not an integer or p/q rational: {text:?}")))?;
    Ok(parsed)
}

/// A coordinate vector with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalVector {
    coords: Vec<Rational>,
}

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| integer(c)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.coords[index] = Rational::one();
        v
    }

    /// Parses whitespace-separated entries, each an integer or `p/q`.
    pub fn parse(line: &str) -> Result<Self, Error> {
        let coords = line
            .split_whitespace()
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(coords))
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn dot(&self, other: &Self) -> Rational {
        debug_assert_eq!(self.coords.len(), other.coords.len());
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_squared(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coords.iter().map(|c| c * factor).collect())
    }

    /// `self + factor * other`
    pub fn add_scaled(&self, factor: &Rational, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + factor * b)
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn sum(&self) -> Rational {
        self.coords.iter().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Integer multiple of `self` with coprime integer entries, positive scale.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .coords
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
        let ints: Vec<BigInt> = self
            .coords
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let gcd = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| num_integer::gcd(acc, c.clone()));
        if gcd.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &gcd).collect()
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;

    fn add(self, rhs: Self) -> RationalVector {
        RationalVector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;

    fn sub(self, rhs: Self) -> RationalVector {
        RationalVector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;

    fn neg(self) -> RationalVector {
        RationalVector::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl Neg for RationalVector {
    type Output = RationalVector;

    fn neg(self) -> RationalVector {
        -&self
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.data[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: &[RationalVector]) -> Self {
        let cols = rows.first().map_or(0, RationalVector::ambient_dim);
        let data = rows.iter().flat_map(|r| r.coords().iter().cloned()).collect();
        Self { rows: rows.len(), cols, data }
    }

    pub fn from_columns(columns: &[RationalVector]) -> Self {
        Self::from_rows(columns).transpose()
    }

    /// Orthogonal reflection in the hyperplane perpendicular to `root`.
    pub fn reflection(root: &RationalVector) -> Self {
        let n = root.ambient_dim();
        let factor = integer(2) / root.norm_squared();
        let mut m = Self::identity(n);
        for i in 0..n {
            for j in 0..n {
                let entry = &factor * &root.coords()[i] * &root.coords()[j];
                m.data[i * n + j] -= entry;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> RationalVector {
        RationalVector::new(self.data[row * self.cols..(row + 1) * self.cols].to_vec())
    }

    pub fn row_vectors(&self) -> Vec<RationalVector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn apply(&self, v: &RationalVector) -> RationalVector {
        debug_assert_eq!(self.cols, v.ambient_dim());
        RationalVector::new(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols).fold(Rational::zero(), |acc, j| acc + self.get(i, j) * &v.coords()[j])
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `self * reflection(root)` as a rank-one update.
    pub fn mul_reflection(&self, root: &RationalVector) -> Self {
        let image = self.apply(root);
        let factor = integer(2) / root.norm_squared();
        let mut out = self.clone();
        for i in 0..self.rows {
            if image.coords()[i].is_zero() {
                continue;
            }
            let scaled = &factor * &image.coords()[i];
            for j in 0..self.cols {
                if !root.coords()[j].is_zero() {
                    out.data[i * self.cols + j] -= &scaled * &root.coords()[j];
                }
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = self.data[i * n..(i + 1) * n].to_vec();
                row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        let pivots = row_reduce(&mut aug, n);
        if pivots.len() < n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for (i, row) in aug.iter().enumerate() {
            for j in 0..n {
                inv.data[i * n + j] = row[n + j].clone();
            }
        }
        Some(inv)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Reduces `rows` in place to reduced row echelon form, considering only the
/// first `pivot_cols` columns as pivot candidates. Returns the pivot columns.
pub fn row_reduce(rows: &mut [Vec<Rational>], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..pivot_cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let pivot = rows[next][col].clone();
        for entry in rows[next].iter_mut() {
            *entry /= &pivot;
        }
        for r in 0..rows.len() {
            if r == next || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            let (head, tail) = if r < next {
                let (a, b) = rows.split_at_mut(next);
                (&mut a[r], &b[0])
            } else {
                let (a, b) = rows.split_at_mut(r);
                (&mut b[0], &a[next])
            };
            for (x, p) in head.iter_mut().zip(tail.iter()) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}

pub fn rank(vectors: &[RationalVector]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let dim = first.ambient_dim();
    let mut rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    row_reduce(&mut rows, dim).len()
}

/// Indices of a maximal linearly independent subset, chosen greedily in input
/// order (a vector is kept iff it is not in the span of the earlier ones).
pub fn independent_subset(vectors: &[RationalVector]) -> Vec<usize> {
    let Some(first) = vectors.first() else {
        return Vec::new();
    };
    // Pivot columns of the matrix whose columns are the vectors.
    let n = vectors.len();
    let dim = first.ambient_dim();
    let mut rows: Vec<Vec<Rational>> = (0..dim)
        .map(|i| vectors.iter().map(|v| v.coords()[i].clone()).collect())
        .collect();
    row_reduce(&mut rows, n)
}

/// Basis of the null space of the matrix whose columns are `columns`: vectors
/// `x` with `sum_i x_i * columns[i] = 0`. One basis vector per free column, in
/// increasing column order, with that free variable set to 1.
pub fn kernel(columns: &[RationalVector]) -> Vec<Vec<Rational>> {
    let n = columns.len();
    let Some(first) = columns.first() else {
        return Vec::new();
    };
    let dim = first.ambient_dim();
    let mut rows: Vec<Vec<Rational>> = (0..dim)
        .map(|i| columns.iter().map(|v| v.coords()[i].clone()).collect())
        .collect();
    let pivots = row_reduce(&mut rows, n);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut x = vec![Rational::zero(); n];
        x[free] = Rational::one();
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = -rows[row][free].clone();
        }
        basis.push(x);
    }
    basis
}

/// Rank of an integer matrix given by rows, by fraction-free (Bareiss)
/// elimination. Runs in `i128` and restarts over big integers on overflow.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let wide: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_rank_i128(wide) {
        Some(r) => r,
        None => {
            let big = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            bareiss_rank_big(big)
        }
    }
}

#[allow(clippy::needless_range_loop)]
fn bareiss_rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(found) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, found);
        let pivot = m[rank][col];
        for r in rank + 1..rows {
            let lead = m[r][col];
            for c in col..cols {
                let value = pivot.checked_mul(m[r][c])?.checked_sub(lead.checked_mul(m[rank][c])?)?;
                m[r][c] = value / prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

#[allow(clippy::needless_range_loop)]
fn bareiss_rank_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(found) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, found);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            let lead = m[r][col].clone();
            for c in col..cols {
                let value = &pivot * &m[r][c] - &lead * &m[rank][c];
                m[r][c] = value / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Converts an integer-valued rational to `i64`, if it is one and fits.
pub fn to_i64(value: &Rational) -> Option<i64> {
    if value.is_integer() {
        value.to_integer().to_i64()
    } else {
        None
    }
}

pub fn is_nonnegative(value: &Rational) -> bool {
    !value.is_negative()
}
