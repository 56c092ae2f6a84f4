//! The r-norm `r(A) = max { zᵀAy : y, z ∈ {±1}ⁿ }` and the reduction from
//! MATRIX R-NORM to matrix interval singularity.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::certificate::Verdict;
use crate::error::{Error, Result};
use crate::interval::MatrixInterval;
use crate::linalg::inverse;
use crate::matrix::RationalMatrix;
use crate::rational::{int, Rational};

/// Largest dimension accepted by the exponential sign sweeps.
pub const SIGN_SWEEP_LIMIT: usize = 30;

/// Vector with entries in `{-1, +1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        match entries.iter().position(|&s| s != 1 && s != -1) {
            Some(i) => Err(Error::NotSign(i)),
            None => Ok(Self(entries)),
        }
    }

    pub fn ones(n: usize) -> Self {
        Self(alloc::vec![1; n])
    }

    /// The `index`-th vector of `{±1}ⁿ` in lexicographic order with `+1`
    /// ranked before `-1`; coordinate 0 is the most significant.
    pub fn nth(n: usize, index: u64) -> Self {
        Self(
            (0..n)
                .map(|i| if (index >> (n - 1 - i)) & 1 == 0 { 1 } else { -1 })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|&s| int(s as i64)).collect()
    }
}

/// A sign pair attaining `value = zᵀAy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormWitness {
    pub y: SignVector,
    pub z: SignVector,
    pub value: Rational,
}

pub(crate) fn check_sweep_size(n: usize) -> Result<()> {
    if n > SIGN_SWEEP_LIMIT {
        return Err(Error::TooLarge {
            what: "dimension",
            value: n,
            limit: SIGN_SWEEP_LIMIT,
        });
    }
    Ok(())
}

/// `zᵀAy`.
pub fn bilinear(a: &RationalMatrix, y: &SignVector, z: &SignVector) -> Result<Rational> {
    let n = a.square_dim()?;
    for v in [y, z] {
        if v.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: v.len(),
            });
        }
    }
    let mut total = Rational::zero();
    for (i, &zi) in z.as_slice().iter().enumerate() {
        for (j, &yj) in y.as_slice().iter().enumerate() {
            let e = a.get(i, j);
            if zi * yj > 0 {
                total += e;
            } else {
                total -= e;
            }
        }
    }
    Ok(total)
}

/// Computes `r(A)` with a maximising sign pair.
///
/// For fixed `z` the best `y` is `sign(Aᵀz)` coordinatewise (zero maps to
/// `+1`), so only the `2ⁿ` choices of `z` are swept. The witness is the
/// first maximiser in [`SignVector::nth`] order.
pub fn r_norm(a: &RationalMatrix) -> Result<NormWitness> {
    let n = a.square_dim()?;
    check_sweep_size(n)?;
    let mut best: Option<NormWitness> = None;
    for index in 0..(1u64 << n) {
        let z = SignVector::nth(n, index);
        let mut y = Vec::with_capacity(n);
        let mut value = Rational::zero();
        for col in 0..n {
            let mut w = Rational::zero();
            for (row, &zr) in z.as_slice().iter().enumerate() {
                if zr > 0 {
                    w += a.get(row, col);
                } else {
                    w -= a.get(row, col);
                }
            }
            y.push(if w.is_negative() { -1 } else { 1 });
            value += w.abs();
        }
        if best.as_ref().is_none_or(|b| value > b.value) {
            best = Some(NormWitness {
                y: SignVector(y),
                z,
                value,
            });
        }
    }
    Ok(best.expect("sweep visits at least one sign vector"))
}

/// Answers `r(A) ≥ K`, with a witness when the answer is yes.
pub fn decide_r_norm(a: &RationalMatrix, k: &Rational) -> Result<Verdict<NormWitness>> {
    let witness = r_norm(a)?;
    Ok(if &witness.value >= k {
        Verdict::yes(witness)
    } else {
        Verdict::no()
    })
}

/// Interval `[A⁻¹ - J/K, A⁻¹ + J/K]`, singular iff `r(A) ≥ K`.
pub fn rnorm_to_interval_instance(a: &RationalMatrix, k: &Rational) -> Result<MatrixInterval> {
    let n = a.square_dim()?;
    if !k.is_positive() {
        return Err(Error::NotPositive("norm threshold K"));
    }
    let center = inverse(a)?;
    let radius = RationalMatrix::ones(n).scale(&k.recip());
    MatrixInterval::new(center, radius)
}
