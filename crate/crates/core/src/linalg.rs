//! Exact integer and rational linear algebra.
//!
//! Matrices store their vectors as rows. A generator matrix has one generator
//! per row, and the pairing between a point of `M` and a point of `N` is the
//! plain dot product.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// A point of an integer lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVector(pub Vec<BigInt>);

impl IntVector {
    pub fn zero(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        IntVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[axis] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Pairing with a rational functional.
    pub fn pair(&self, functional: &RatVector) -> Rat {
        debug_assert_eq!(self.dim(), functional.dim());
        self.0
            .iter()
            .zip(&functional.0)
            .map(|(a, z)| z * a)
            .fold(Rat::zero(), |acc, x| acc + x)
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|c| c * k).collect())
    }

    pub fn to_rational(&self) -> RatVector {
        RatVector(
            self.0
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A vector of exact rationals. `BigRational` keeps every entry in lowest
/// terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatVector(pub Vec<Rat>);

impl RatVector {
    pub fn from_integers(coords: &[i64]) -> Self {
        RatVector(
            coords
                .iter()
                .map(|&c| Rat::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &RatVector) -> Rat {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Returns the integer vector if every entry is integral.
    pub fn to_integer(&self) -> Option<IntVector> {
        self.0
            .iter()
            .map(|r| r.is_integer().then(|| r.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntVector)
    }
}

impl Index<usize> for RatVector {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<IntVector>,
    cols: usize,
}

impl IntMatrix {
    /// Builds a matrix from rows, which must share one length.
    pub fn from_rows(rows: Vec<IntVector>) -> Result<Self> {
        let cols = rows.first().map_or(0, IntVector::dim);
        if let Some(bad) = rows.iter().find(|r| r.dim() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.dim(),
            });
        }
        Ok(IntMatrix { rows, cols })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| IntVector::from_i64s(r)).collect())
            .expect("rows of equal length")
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix {
            rows: (0..n).map(|i| IntVector::unit(n, i)).collect(),
            cols: n,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.cols
    }

    pub fn transpose(&self) -> IntMatrix {
        let rows = (0..self.cols)
            .map(|j| IntVector(self.rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        IntMatrix {
            rows,
            cols: self.nrows(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.nrows(),
            });
        }
        let t = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| IntVector(t.rows.iter().map(|c| r.dot(c)).collect()))
            .collect();
        Ok(IntMatrix {
            rows,
            cols: other.cols,
        })
    }

    /// Row vector times matrix: `Σ_i v_i · row_i`.
    pub fn combine_rows(&self, coeffs: &RatVector) -> RatVector {
        let mut out = vec![Rat::zero(); self.cols];
        for (c, row) in coeffs.0.iter().zip(&self.rows) {
            for (o, x) in out.iter_mut().zip(&row.0) {
                *o += c * x;
            }
        }
        RatVector(out)
    }

    pub fn apply(&self, x: &RatVector) -> RatVector {
        RatVector(self.rows.iter().map(|r| x.dot(&r.to_rational())).collect())
    }

    fn to_rational_rows(&self) -> Vec<Vec<Rat>> {
        self.rows
            .iter()
            .map(|r| r.0.iter().map(|c| Rat::from_integer(c.clone())).collect())
            .collect()
    }
}

impl Index<usize> for IntMatrix {
    type Output = IntVector;
    fn index(&self, i: usize) -> &IntVector {
        &self.rows[i]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: Vec<RatVector>,
}

impl RatMatrix {
    pub fn column(&self, j: usize) -> RatVector {
        RatVector(self.rows.iter().map(|r| r[j].clone()).collect())
    }

    /// Row vector times matrix: `v · self`.
    pub fn left_apply(&self, v: &IntVector) -> RatVector {
        let cols = self.rows.first().map_or(0, RatVector::dim);
        let mut out = vec![Rat::zero(); cols];
        for (c, row) in v.0.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(&row.0) {
                *o += x * c;
            }
        }
        RatVector(out)
    }

    pub fn mul_int(&self, other: &IntMatrix) -> RatMatrix {
        let t = other.transpose();
        RatMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| RatVector(t.rows().iter().map(|c| r.dot(&c.to_rational())).collect()))
                .collect(),
        }
    }
}

/// Splits `v` as `g · p` with `g` the gcd of the coordinates and `p` primitive.
pub fn primitive(v: &IntVector) -> Result<(IntVector, BigInt)> {
    let g = v.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return Err(Error::NoPrimitiveDirection);
    }
    Ok((IntVector(v.0.iter().map(|c| c / &g).collect()), g))
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant(a: &IntMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    let n = a.nrows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m: Vec<Vec<BigInt>> = a.rows.iter().map(|r| r.0.clone()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    Ok(sign * &m[n - 1][n - 1])
}

/// Rank of an arbitrary (possibly rectangular) integer matrix.
pub fn rank(a: &IntMatrix) -> usize {
    let mut m = a.to_rational_rows();
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[r][c];
            for j in c..cols {
                let d = &f * &m[r][j];
                m[i][j] -= d;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Gauss-Jordan reduction of `[a | rhs]`; returns the reduced right-hand block.
fn gauss_jordan(a: &IntMatrix, mut rhs: Vec<Vec<Rat>>) -> Result<Vec<Vec<Rat>>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    let n = a.nrows();
    let mut m = a.to_rational_rows();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !m[i][c].is_zero())
            .ok_or(Error::Singular)?;
        m.swap(c, p);
        rhs.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        for x in rhs[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i == c || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in 0..n {
                let d = &f * &m[c][j];
                m[i][j] -= d;
            }
            for j in 0..rhs[i].len() {
                let d = &f * &rhs[c][j];
                rhs[i][j] -= d;
            }
        }
    }
    Ok(rhs)
}

/// Unique `x` with `a · x = b`, where `a` acts on column vectors through its rows.
pub fn solve(a: &IntMatrix, b: &RatVector) -> Result<RatVector> {
    if b.dim() != a.nrows() {
        return Err(Error::DimensionMismatch {
            expected: a.nrows(),
            found: b.dim(),
        });
    }
    let rhs = b.0.iter().map(|x| vec![x.clone()]).collect();
    let out = gauss_jordan(a, rhs)?;
    Ok(RatVector(
        out.into_iter().map(|mut r| r.remove(0)).collect(),
    ))
}

pub fn inverse(a: &IntMatrix) -> Result<RatMatrix> {
    let n = a.nrows();
    let rhs = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    let out = gauss_jordan(a, rhs)?;
    Ok(RatMatrix {
        rows: out.into_iter().map(RatVector).collect(),
    })
}

/// Coordinates `a` of `v` in the row basis of `basis`, i.e. `v = Σ a_i · basis_i`.
pub fn row_coordinates(basis: &IntMatrix, v: &RatVector) -> Result<RatVector> {
    solve(&basis.transpose(), v)
}

/// Generalised cross product: a vector orthogonal to the `n - 1` given rows
/// whose entries are the signed maximal minors. Zero iff the rows are dependent.
pub fn orthogonal_complement(rows: &[IntVector], n: usize) -> IntVector {
    debug_assert_eq!(rows.len() + 1, n);
    let coords = (0..n)
        .map(|skip| {
            let minor = IntMatrix {
                rows: rows
                    .iter()
                    .map(|r| {
                        IntVector(
                            r.0.iter()
                                .enumerate()
                                .filter(|&(j, _)| j != skip)
                                .map(|(_, c)| c.clone())
                                .collect(),
                        )
                    })
                    .collect(),
                cols: n - 1,
            };
            let d = determinant(&minor).expect("square minor");
            if skip % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    IntVector(coords)
}

/// Floor of a rational as an integer.
pub fn floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

pub fn ceil(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}

pub fn is_positive(r: &Rat) -> bool {
    r.is_positive()
}
