//! Matrix intervals `[C - Δ, C + Δ]` and an exact singularity oracle.
//!
//! For scale vectors `y, z ∈ [-1, 1]ⁿ` the matrix `C - D(y)ΔD(z)` lies in the
//! interval, and its determinant is affine in every single coordinate of
//! `y` and `z`. The interval is singular iff some vertex matrix
//! `C - D(y)ΔD(z)` with `y, z ∈ {±1}ⁿ` is singular or two vertex
//! determinants have opposite signs. In the second case a hypercube edge
//! with a sign change exists, and the root along that edge is rational,
//! which yields an exact singular matrix inside the interval.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::certificate::Verdict;
use crate::error::{Error, Result};
use crate::linalg::det;
use crate::matrix::RationalMatrix;
use crate::rational::{frac, sign, Rational};
use crate::rnorm::{bilinear, SignVector};

/// Largest dimension accepted by the `4ⁿ` vertex sweep.
pub const VERTEX_SWEEP_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixInterval {
    center: RationalMatrix,
    radius: RationalMatrix,
}

impl MatrixInterval {
    /// Center/radius form. The radius must be entrywise nonnegative.
    pub fn new(center: RationalMatrix, radius: RationalMatrix) -> Result<Self> {
        center.square_dim()?;
        if center.shape() != radius.shape() {
            return Err(Error::ShapeMismatch {
                op: "interval",
                left: center.shape(),
                right: radius.shape(),
            });
        }
        if let Some((row, col)) = radius.first_negative() {
            return Err(Error::NegativeEntry { row, col });
        }
        Ok(Self { center, radius })
    }

    /// Converts `[lower, upper]` to center/radius form.
    pub fn from_bounds(lower: &RationalMatrix, upper: &RationalMatrix) -> Result<Self> {
        let width = upper.sub(lower)?;
        if let Some((row, col)) = width.first_negative() {
            return Err(Error::InvertedBounds { row, col });
        }
        let half = frac(1, 2);
        Self::new(lower.add(upper)?.scale(&half), width.scale(&half))
    }

    pub fn center(&self) -> &RationalMatrix {
        &self.center
    }

    pub fn radius(&self) -> &RationalMatrix {
        &self.radius
    }

    pub fn dim(&self) -> usize {
        self.center.rows()
    }

    pub fn lower(&self) -> RationalMatrix {
        self.center.sub(&self.radius).expect("shapes checked")
    }

    pub fn upper(&self) -> RationalMatrix {
        self.center.add(&self.radius).expect("shapes checked")
    }

    pub fn contains(&self, m: &RationalMatrix) -> bool {
        self.lower().entrywise_le(m) && m.entrywise_le(&self.upper())
    }

    /// `C - D(row_scale)·Δ·D(col_scale)`.
    pub fn scaled_vertex(&self, row_scale: &[Rational], col_scale: &[Rational]) -> RationalMatrix {
        RationalMatrix::from_fn(self.dim(), self.dim(), |i, j| {
            let r = self.radius.get(i, j);
            if r.is_zero() {
                self.center.get(i, j).clone()
            } else {
                self.center.get(i, j) - &row_scale[i] * r * &col_scale[j]
            }
        })
    }
}

/// `D(v)`.
pub fn diag_of(values: &[Rational]) -> RationalMatrix {
    RationalMatrix::diag(values)
}

/// Exact singular matrix `C - D(row_scale)·Δ·D(col_scale)` inside an interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityCertificate {
    pub matrix: RationalMatrix,
    pub row_scale: Vec<Rational>,
    pub col_scale: Vec<Rational>,
}

/// Point of the `2n`-dimensional sign hypercube: `y` then `z`.
#[derive(Clone, Debug)]
struct Vertex {
    coords: Vec<Rational>,
}

impl Vertex {
    fn new(y: &SignVector, z: &SignVector) -> Self {
        let mut coords = y.to_rationals();
        coords.extend(z.to_rationals());
        Self { coords }
    }

    fn matrix(&self, iv: &MatrixInterval) -> RationalMatrix {
        let n = iv.dim();
        iv.scaled_vertex(&self.coords[..n], &self.coords[n..])
    }

    fn into_certificate(self, iv: &MatrixInterval) -> SingularityCertificate {
        let matrix = self.matrix(iv);
        let mut row_scale = self.coords;
        let col_scale = row_scale.split_off(iv.dim());
        SingularityCertificate {
            matrix,
            row_scale,
            col_scale,
        }
    }
}

/// Decides singularity of the interval via the vertex-determinant signs.
///
/// Vertices are swept with `z` outer and `y` inner, each in
/// [`SignVector::nth`] order. The sweep stops at the first vertex that is
/// singular or whose determinant sign differs from the first vertex's; that
/// evidence seeds the certificate.
pub fn is_singular_vertex_sign(iv: &MatrixInterval) -> Result<Verdict<SingularityCertificate>> {
    let n = iv.dim();
    if n > VERTEX_SWEEP_LIMIT {
        return Err(Error::TooLarge {
            what: "dimension",
            value: n,
            limit: VERTEX_SWEEP_LIMIT,
        });
    }
    let mut first: Option<(Vertex, i8)> = None;
    for zi in 0..(1u64 << n) {
        let z = SignVector::nth(n, zi);
        for yi in 0..(1u64 << n) {
            let vertex = Vertex::new(&SignVector::nth(n, yi), &z);
            let s = sign(&det(&vertex.matrix(iv))?);
            if s == 0 {
                return Ok(Verdict::yes(vertex.into_certificate(iv)));
            }
            match &first {
                None => first = Some((vertex, s)),
                Some((start, s0)) if *s0 != s => {
                    let cert = root_between(iv, start.clone(), *s0, &vertex)?;
                    return Ok(Verdict::yes(cert));
                }
                Some(_) => {}
            }
        }
    }
    Ok(Verdict::no())
}

/// Walks from `start` towards `target` one coordinate at a time and solves
/// for the determinant root on the first edge where the sign changes.
fn root_between(
    iv: &MatrixInterval,
    start: Vertex,
    start_sign: i8,
    target: &Vertex,
) -> Result<SingularityCertificate> {
    let mut current = start;
    let mut current_det = det(&current.matrix(iv))?;
    debug_assert_eq!(sign(&current_det), start_sign);
    for k in 0..current.coords.len() {
        if current.coords[k] == target.coords[k] {
            continue;
        }
        let mut next = current.clone();
        next.coords[k] = target.coords[k].clone();
        let next_det = det(&next.matrix(iv))?;
        if next_det.is_zero() {
            return Ok(next.into_certificate(iv));
        }
        if sign(&next_det) != sign(&current_det) {
            // det along the edge is a + b·t with t = ±1 at the endpoints.
            let t_here = current.coords[k].clone();
            let a = (&current_det + &next_det) * frac(1, 2);
            let b = (&current_det - &next_det) * frac(1, 2) * &t_here;
            let mut root = current;
            root.coords[k] = -a / b;
            return Ok(root.into_certificate(iv));
        }
        current = next;
        current_det = next_det;
    }
    unreachable!("endpoints of the walk have opposite determinant signs")
}

/// Exact singular matrix in a singular interval.
pub fn singular_certificate(iv: &MatrixInterval) -> Result<SingularityCertificate> {
    is_singular_vertex_sign(iv)?
        .certificate
        .ok_or(Error::NotSingular)
}

/// `ρ₀(A·D(y)·(αJ)·D(z)) = α·|zᵀAy|`; the product has rank at most one and
/// its only possibly nonzero eigenvalue is `α·zᵀAy`.
pub fn rho0_rank1(
    a: &RationalMatrix,
    y: &SignVector,
    z: &SignVector,
    alpha: &Rational,
) -> Result<Rational> {
    if !alpha.is_positive() {
        return Err(Error::NotPositive("alpha"));
    }
    Ok(alpha * bilinear(a, y, z)?.abs())
}
