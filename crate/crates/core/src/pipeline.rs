//! End-to-end run of the reduction chain with every stage decided by its own
//! brute-force oracle.

use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{graph_to_rnorm_instance, max_cut_bruteforce, CutCertificate, Graph};
use crate::interval::{is_singular_vertex_sign, MatrixInterval, SingularityCertificate};
use crate::linalg::det;
use crate::matrix::RationalMatrix;
use crate::pmatrix::{corner_form, interval_to_pmatrix_instance, is_p_matrix, NonPCertificate};
use crate::rational::Rational;
use crate::rnorm::{r_norm, rnorm_to_interval_instance, NormWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    MaxCut,
    RNorm,
    Interval,
    PMatrix,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::MaxCut => "maxcut",
            Stage::RNorm => "rnorm",
            Stage::Interval => "interval",
            Stage::PMatrix => "pmatrix",
        })
    }
}

#[derive(Clone, Debug)]
pub struct MaxCutStage {
    /// Max cut ≥ K.
    pub answer: bool,
    pub best: CutCertificate,
}

#[derive(Clone, Debug)]
pub struct RNormStage {
    pub matrix: RationalMatrix,
    pub threshold: Rational,
    /// r(A) ≥ threshold.
    pub answer: bool,
    pub witness: NormWitness,
}

#[derive(Clone, Debug)]
pub struct IntervalStage {
    pub interval: MatrixInterval,
    /// The interval is singular.
    pub answer: bool,
    pub certificate: Option<SingularityCertificate>,
}

#[derive(Clone, Debug)]
pub struct PMatrixStage {
    pub matrix: RationalMatrix,
    /// The lower corner was singular and the canonical non-P matrix was used.
    pub singular_corner: bool,
    /// The matrix is NOT a P-matrix.
    pub answer: bool,
    pub certificate: Option<NonPCertificate>,
}

#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub k: u64,
    pub max_cut: MaxCutStage,
    pub rnorm: RNormStage,
    pub interval: IntervalStage,
    pub pmatrix: PMatrixStage,
}

impl PipelineReport {
    pub fn answers(&self) -> [(Stage, bool); 4] {
        [
            (Stage::MaxCut, self.max_cut.answer),
            (Stage::RNorm, self.rnorm.answer),
            (Stage::Interval, self.interval.answer),
            (Stage::PMatrix, self.pmatrix.answer),
        ]
    }

    /// First adjacent pair of stages whose verdicts differ.
    pub fn first_disagreement(&self) -> Option<(Stage, Stage)> {
        self.answers()
            .windows(2)
            .find(|w| w[0].1 != w[1].1)
            .map(|w| (w[0].0, w[1].0))
    }

    pub fn consistent(&self) -> bool {
        self.first_disagreement().is_none()
    }
}

/// Runs max cut → r-norm → interval singularity → P-matrix for target `k`.
pub fn run_pipeline(graph: &Graph, k: u64) -> Result<PipelineReport> {
    if k == 0 {
        return Err(Error::NotPositive("cut target K"));
    }
    let best = max_cut_bruteforce(graph)?;
    let max_cut = MaxCutStage {
        answer: best.cut_size as u64 >= k,
        best,
    };

    let (matrix, threshold) = graph_to_rnorm_instance(graph, k)?;
    let witness = r_norm(&matrix)?;
    let rnorm = RNormStage {
        answer: witness.value >= threshold,
        matrix,
        threshold,
        witness,
    };

    let interval = rnorm_to_interval_instance(&rnorm.matrix, &rnorm.threshold)?;
    let verdict = is_singular_vertex_sign(&interval)?;
    let interval = IntervalStage {
        interval,
        answer: verdict.answer,
        certificate: verdict.certificate,
    };

    let singular_corner = det(&corner_form(&interval.interval).0)?.is_zero();
    let matrix = interval_to_pmatrix_instance(&interval.interval)?;
    let verdict = is_p_matrix(&matrix)?;
    let pmatrix = PMatrixStage {
        matrix,
        singular_corner,
        answer: !verdict.answer,
        certificate: verdict.certificate,
    };

    Ok(PipelineReport {
        k,
        max_cut,
        rnorm,
        interval,
        pmatrix,
    })
}
