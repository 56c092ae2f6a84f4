//! Verdicts and independent certificate checks.
//!
//! Each check recomputes the claim from the instance alone; none of them
//! reruns the oracle that produced the certificate.

// Rejections carry the offending exact values and are only built on the
// failure path, so their size is not worth boxing away.
#![allow(clippy::result_large_err)]

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::error::Error;
use crate::graph::{cut_size, CutCertificate, Graph};
use crate::interval::{MatrixInterval, SingularityCertificate};
use crate::linalg::{det, principal_minor};
use crate::matrix::RationalMatrix;
use crate::pmatrix::NonPCertificate;
use crate::rational::Rational;
use crate::rnorm::{bilinear, NormWitness};

/// Yes/no answer, with a certificate whenever the oracle has one to offer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<C> {
    pub answer: bool,
    pub certificate: Option<C>,
}

impl<C> Verdict<C> {
    pub fn yes(certificate: C) -> Self {
        Self {
            answer: true,
            certificate: Some(certificate),
        }
    }

    pub fn no() -> Self {
        Self {
            answer: false,
            certificate: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Cut(CutCertificate),
    NormWitness(NormWitness),
    SingularMatrix(RationalMatrix),
    NonPMinor(NonPCertificate),
}

impl From<SingularityCertificate> for Certificate {
    fn from(cert: SingularityCertificate) -> Self {
        Certificate::SingularMatrix(cert.matrix)
    }
}

/// Why a certificate was rejected.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error("certificate does not fit the instance: {0}")]
    Malformed(#[from] Error),
    #[error("vertex {vertex} has side label {label}, expected 1 or 2")]
    BadSide { vertex: usize, label: u8 },
    #[error("claimed value {claimed} but recomputed {actual}")]
    WrongValue { claimed: Rational, actual: Rational },
    #[error("value {value} is below the threshold {threshold}")]
    BelowThreshold { value: Rational, threshold: Rational },
    #[error("matrix has determinant {0}, not 0")]
    NonzeroDeterminant(Rational),
    #[error("matrix leaves the interval at entry ({row}, {col})")]
    OutsideInterval { row: usize, col: usize },
    #[error("certificate kind does not match the instance kind")]
    KindMismatch,
    #[error("principal minor {0} is positive")]
    PositiveMinor(Rational),
}

pub type Check = core::result::Result<(), Rejection>;

pub fn verify_cut(graph: &Graph, cert: &CutCertificate, target: Option<u64>) -> Check {
    if cert.side.len() != graph.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: graph.vertex_count(),
            found: cert.side.len(),
        }
        .into());
    }
    if let Some(vertex) = cert.side.iter().position(|&s| s != 1 && s != 2) {
        return Err(Rejection::BadSide {
            vertex,
            label: cert.side[vertex],
        });
    }
    let actual = cut_size(graph, &cert.subset())?;
    if actual != cert.cut_size {
        return Err(Rejection::WrongValue {
            claimed: count(cert.cut_size),
            actual: count(actual),
        });
    }
    if let Some(k) = target {
        if (actual as u64) < k {
            return Err(Rejection::BelowThreshold {
                value: count(actual),
                threshold: count(k as usize),
            });
        }
    }
    Ok(())
}

fn count(value: usize) -> Rational {
    Rational::from_integer(value.into())
}

pub fn verify_norm_witness(
    a: &RationalMatrix,
    witness: &NormWitness,
    threshold: Option<&Rational>,
) -> Check {
    let actual = bilinear(a, &witness.y, &witness.z)?;
    if actual != witness.value {
        return Err(Rejection::WrongValue {
            claimed: witness.value.clone(),
            actual,
        });
    }
    if let Some(k) = threshold {
        if &actual < k {
            return Err(Rejection::BelowThreshold {
                value: actual,
                threshold: k.clone(),
            });
        }
    }
    Ok(())
}

pub fn verify_singular_matrix(iv: &MatrixInterval, matrix: &RationalMatrix) -> Check {
    if matrix.shape() != iv.center().shape() {
        return Err(Error::ShapeMismatch {
            op: "singular certificate",
            left: iv.center().shape(),
            right: matrix.shape(),
        }
        .into());
    }
    let (lower, upper) = (iv.lower(), iv.upper());
    let n = iv.dim();
    for (row, col) in (0..n).flat_map(|i| (0..n).map(move |j| (i, j))) {
        let e = matrix.get(row, col);
        if e < lower.get(row, col) || e > upper.get(row, col) {
            return Err(Rejection::OutsideInterval { row, col });
        }
    }
    let d = det(matrix)?;
    if !d.is_zero() {
        return Err(Rejection::NonzeroDeterminant(d));
    }
    Ok(())
}

pub fn verify_non_p_minor(m: &RationalMatrix, cert: &NonPCertificate) -> Check {
    let actual = principal_minor(m, &cert.index_set)?;
    if actual != cert.minor_value {
        return Err(Rejection::WrongValue {
            claimed: cert.minor_value.clone(),
            actual,
        });
    }
    if actual.is_positive() {
        return Err(Rejection::PositiveMinor(actual));
    }
    Ok(())
}

pub fn verify(certificate: &Certificate, instance: &Instance<'_>) -> Check {
    match (certificate, instance) {
        (Certificate::Cut(c), Instance::Graph(g, k)) => verify_cut(g, c, *k),
        (Certificate::NormWitness(w), Instance::Matrix(a, k)) => verify_norm_witness(a, w, *k),
        (Certificate::SingularMatrix(b), Instance::Interval(iv)) => verify_singular_matrix(iv, b),
        (Certificate::NonPMinor(c), Instance::Matrix(m, _)) => verify_non_p_minor(m, c),
        _ => Err(Rejection::KindMismatch),
    }
}

/// The instance a certificate is checked against, with an optional target.
#[derive(Clone, Copy, Debug)]
pub enum Instance<'a> {
    Graph(&'a Graph, Option<u64>),
    Matrix(&'a RationalMatrix, Option<&'a Rational>),
    Interval(&'a MatrixInterval),
}
