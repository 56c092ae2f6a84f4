//! Exact determinants, inverses and principal minors.
//!
//! Determinants go through fraction-free (Bareiss) elimination on an integer
//! matrix obtained by clearing denominators row by row, so every intermediate
//! value is itself a minor of the scaled input and stays polynomially sized.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::{denominator_lcm, Rational};

/// Strictly increasing set of 0-based indices.
///
/// Text formats render these 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// Sorts the indices; rejects repeats.
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateIndex(w[0]));
        }
        Ok(Self(indices))
    }

    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Determinant of a square integer matrix stored row-major.
pub(crate) fn bareiss_det(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, r * n + j);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = (&a[k * n + k] * &a[i * n + j] - &a[i * n + k] * &a[k * n + j]) / &prev;
                a[i * n + j] = value;
            }
        }
        prev = a[k * n + k].clone();
    }
    let det = a.swap_remove(n * n - 1);
    if negate {
        -det
    } else {
        det
    }
}

/// Clears denominators row by row. Returns the integer entries and the
/// product of the row multipliers.
pub(crate) fn integer_rows(m: &RationalMatrix) -> (Vec<BigInt>, BigInt) {
    let mut scale = BigInt::one();
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        let row = m.row(i);
        let d = denominator_lcm(row);
        out.extend(row.iter().map(|e| e.numer() * (&d / e.denom())));
        scale *= d;
    }
    (out, scale)
}

pub fn det(m: &RationalMatrix) -> Result<Rational> {
    let n = m.square_dim()?;
    let (entries, scale) = integer_rows(m);
    Ok(Rational::new(bareiss_det(entries, n), scale))
}

/// Exact inverse by Gauss-Jordan elimination.
pub fn inverse(m: &RationalMatrix) -> Result<RationalMatrix> {
    let n = m.square_dim()?;
    let mut work: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !work[r][col].is_zero())
            .ok_or(Error::Singular)?;
        work.swap(col, pivot);
        let inv = work[col][col].recip();
        for e in work[col].iter_mut() {
            *e *= &inv;
        }
        let pivot_row = work[col].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (e, p) in row.iter_mut().zip(&pivot_row) {
                *e -= &factor * p;
            }
        }
    }
    Ok(RationalMatrix::from_fn(n, n, |i, j| work[i][n + j].clone()))
}

/// Determinant of the submatrix on rows and columns `indices`.
pub fn principal_minor(m: &RationalMatrix, indices: &IndexSet) -> Result<Rational> {
    m.square_dim()?;
    if indices.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    det(&m.select(indices.as_slice(), indices.as_slice())?)
}

/// `det(I_k + F·G)` for `F` of shape k×n and `G` of shape n×k.
///
/// Evaluated as `det(I_n + G·F)` whenever `n < k`; both sides agree.
pub fn det_identity_plus_product(f: &RationalMatrix, g: &RationalMatrix) -> Result<Rational> {
    let (k, n) = f.shape();
    if g.shape() != (n, k) {
        return Err(Error::ShapeMismatch {
            op: "det_identity_plus_product",
            left: f.shape(),
            right: g.shape(),
        });
    }
    let (product, dim) = if k <= n {
        (f.mul(g)?, k)
    } else {
        (g.mul(f)?, n)
    };
    det(&RationalMatrix::identity(dim).add(&product)?)
}
