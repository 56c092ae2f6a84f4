//! P-matrix recognition and the reduction from interval singularity to
//! P-MATRIX.
//!
//! Every matrix in `[A, A + Δ]` is `A + R·D(p)·Sᵀ` for some `p ∈ [0, 1]ᵐ`,
//! where column `k` of `R` is `Δᵢⱼ·eᵢ` and column `k` of `S` is `eⱼ`. For
//! nonsingular `A` the interval is singular iff
//! `ψ(p) = det(I + A⁻¹·R·D(p)·Sᵀ) ≤ 0` at some vertex `p ∈ {0, 1}ᵐ`, and
//! `ψ(p)` equals the principal minor of `M = I + Sᵀ·A⁻¹·R` on the support of
//! `p`. So the interval is singular iff `M` is not a P-matrix.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::certificate::Verdict;
use crate::error::{Error, Result};
use crate::interval::MatrixInterval;
use crate::linalg::{det, integer_rows, inverse, principal_minor, IndexSet};
use crate::matrix::RationalMatrix;
use crate::rational::{denominator_lcm, int, Rational};

/// Largest dimension accepted by the principal-minor sweep.
pub const MINOR_SWEEP_LIMIT: usize = 30;

/// Vertex of `{0, 1}ᵐ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryVector(Vec<bool>);

impl BinaryVector {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        match entries.iter().position(|&b| b > 1) {
            Some(i) => Err(Error::NotBinary(i)),
            None => Ok(Self(entries.into_iter().map(|b| b == 1).collect())),
        }
    }

    /// Bit `k` of `index` (least significant first) gives entry `k`.
    pub fn from_bits(m: usize, index: u64) -> Self {
        Self((0..m).map(|k| (index >> k) & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> IndexSet {
        IndexSet::new((0..self.0.len()).filter(|&k| self.0[k]).collect())
            .expect("positions are distinct")
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|&b| int(b as i64)).collect()
    }
}

/// A nonpositive principal minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonPCertificate {
    pub index_set: IndexSet,
    pub minor_value: Rational,
}

/// `Δ = R·Sᵀ` as a sum of single-entry rank-one slices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSFactorization {
    pub r: RationalMatrix,
    pub s: RationalMatrix,
    /// `(i, j)` entry of `Δ` behind each column, 0-based.
    pub column_map: Vec<(usize, usize)>,
}

impl RSFactorization {
    pub fn columns(&self) -> usize {
        self.column_map.len()
    }
}

/// Decides whether every principal minor of `m` is positive.
///
/// Index sets are explored depth-first in lexicographic order. Each step
/// extends a set by one index using Sylvester's identity on an integer
/// scaling of `m`, so a minor costs a rank-one update instead of a
/// determinant. Branches that cannot beat the best offender found so far
/// are pruned, which makes the certificate the first offending set in
/// size-then-lexicographic order.
pub fn is_p_matrix(m: &RationalMatrix) -> Result<Verdict<NonPCertificate>> {
    let n = m.square_dim()?;
    if n > MINOR_SWEEP_LIMIT {
        return Err(Error::TooLarge {
            what: "dimension",
            value: n,
            limit: MINOR_SWEEP_LIMIT,
        });
    }
    // Uniform positive scaling keeps every minor's sign.
    let scale = denominator_lcm(m.entries());
    let scaled = m.scale(&Rational::from_integer(scale));
    let (entries, _) = integer_rows(&scaled);
    let root = Bordered {
        candidates: (0..n).collect(),
        entries,
    };
    let mut search = MinorSearch {
        chosen: Vec::new(),
        best: None,
    };
    search.visit(&root, &BigInt::one());
    match search.best {
        None => Ok(Verdict {
            answer: true,
            certificate: None,
        }),
        Some(indices) => {
            let index_set = IndexSet::new(indices)?;
            let minor_value = principal_minor(m, &index_set)?;
            Ok(Verdict {
                answer: false,
                certificate: Some(NonPCertificate {
                    index_set,
                    minor_value,
                }),
            })
        }
    }
}

/// Bordered minors `det N[α∪{u}, α∪{v}]` for the current set `α`, over the
/// indices `u, v` still allowed to join it.
struct Bordered {
    candidates: Vec<usize>,
    entries: Vec<BigInt>,
}

struct MinorSearch {
    chosen: Vec<usize>,
    best: Option<Vec<usize>>,
}

impl MinorSearch {
    fn visit(&mut self, state: &Bordered, minor: &BigInt) {
        let len = state.candidates.len();
        for p in 0..len {
            let size = self.chosen.len() + 1;
            if self.best.as_ref().is_some_and(|b| size >= b.len()) {
                return;
            }
            let pivot = &state.entries[p * len + p];
            self.chosen.push(state.candidates[p]);
            if !pivot.is_positive() {
                self.best = Some(self.chosen.clone());
            } else if p + 1 < len {
                let rest = len - p - 1;
                let mut entries = Vec::with_capacity(rest * rest);
                for u in p + 1..len {
                    for v in p + 1..len {
                        let value = (pivot * &state.entries[u * len + v]
                            - &state.entries[u * len + p] * &state.entries[p * len + v])
                            / minor;
                        entries.push(value);
                    }
                }
                let child = Bordered {
                    candidates: state.candidates[p + 1..].to_vec(),
                    entries,
                };
                self.visit(&child, pivot);
            }
            self.chosen.pop();
        }
    }
}

/// Factorizes `Δ`, dropping the columns of zero entries.
pub fn build_rs(delta: &RationalMatrix) -> Result<RSFactorization> {
    build_rs_with(delta, true)
}

/// Factorizes `Δ` with all `n²` columns, zero entries included.
pub fn build_rs_unpruned(delta: &RationalMatrix) -> Result<RSFactorization> {
    build_rs_with(delta, false)
}

fn build_rs_with(delta: &RationalMatrix, prune: bool) -> Result<RSFactorization> {
    let n = delta.square_dim()?;
    if let Some((row, col)) = delta.first_negative() {
        return Err(Error::NegativeEntry { row, col });
    }
    let column_map: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !prune || !delta.get(i, j).is_zero())
        .collect();
    let m = column_map.len();
    let mut r = RationalMatrix::zeros(n, m);
    let mut s = RationalMatrix::zeros(n, m);
    for (k, &(i, j)) in column_map.iter().enumerate() {
        r.set(i, k, delta.get(i, j).clone());
        s.set(j, k, Rational::one());
    }
    Ok(RSFactorization { r, s, column_map })
}

/// `M = I_m + Sᵀ·A⁻¹·R` for the pruned factorization of `Δ`.
pub fn coxson_matrix(a: &RationalMatrix, delta: &RationalMatrix) -> Result<RationalMatrix> {
    let rs = build_rs(delta)?;
    coxson_matrix_from_rs(a, &rs)
}

pub fn coxson_matrix_from_rs(a: &RationalMatrix, rs: &RSFactorization) -> Result<RationalMatrix> {
    let a_inv = inverse(a)?;
    let product = rs.s.transpose().mul(&a_inv)?.mul(&rs.r)?;
    RationalMatrix::identity(rs.columns()).add(&product)
}

/// `ψ(p) = det(I_n + A⁻¹·R·D(p)·Sᵀ)`, evaluated as an n×n determinant.
///
/// `p` may be any rational vector; vertices of `{0, 1}ᵐ` come from
/// [`BinaryVector::to_rationals`].
pub fn psi(a: &RationalMatrix, rs: &RSFactorization, p: &[Rational]) -> Result<Rational> {
    let n = a.square_dim()?;
    if p.len() != rs.columns() {
        return Err(Error::LengthMismatch {
            expected: rs.columns(),
            found: p.len(),
        });
    }
    let a_inv = inverse(a)?;
    let weighted = rs.r.mul(&RationalMatrix::diag(p))?.mul(&rs.s.transpose())?;
    det(&RationalMatrix::identity(n).add(&a_inv.mul(&weighted)?)?)
}

/// Lower corner `A' = C - Δ` and width `Δ' = 2Δ`, so the interval is
/// `[A', A' + Δ']`.
pub fn corner_form(iv: &MatrixInterval) -> (RationalMatrix, RationalMatrix) {
    (iv.lower(), iv.radius().scale(&int(2)))
}

/// Builds the P-MATRIX instance for an interval: not a P-matrix iff the
/// interval is singular.
///
/// A singular lower corner already makes the interval singular; the 1×1
/// matrix `[-1]` is returned in that case.
pub fn interval_to_pmatrix_instance(iv: &MatrixInterval) -> Result<RationalMatrix> {
    let (corner, width) = corner_form(iv);
    if det(&corner)?.is_zero() {
        return Ok(RationalMatrix::from_ints(&[[-1]]));
    }
    coxson_matrix(&corner, &width)
}
