//! Subcommand implementations. Each returns the text to print and an
//! [`Outcome`] that maps onto the process exit code.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use pmat_core::certificate::{verify, Certificate, Instance};
use pmat_core::graph::{cut_size, graph_to_rnorm_instance, max_cut_bruteforce, Graph};
use pmat_core::interval::{is_singular_vertex_sign, MatrixInterval};
use pmat_core::pipeline::{run_pipeline, PipelineReport};
use pmat_core::pmatrix::{coxson_matrix, interval_to_pmatrix_instance, is_p_matrix};
use pmat_core::rnorm::{decide_r_norm, r_norm, rnorm_to_interval_instance};
use pmat_core::{Rational, RationalMatrix};
use thiserror::Error;

use crate::format::{
    parse_certificate, parse_graph, parse_interval, parse_matrix, parse_rational, render_certificate,
    render_graph, render_interval, render_matrix, FormatError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// Yes, consistent, or valid.
    Yes,
    No,
    Inconsistent,
}

impl Outcome {
    pub fn from_answer(answer: bool) -> Self {
        if answer {
            Outcome::Yes
        } else {
            Outcome::No
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Yes => 0,
            Outcome::No => 1,
            Outcome::Inconsistent => 2,
        }
    }
}

/// Exit code for input errors.
pub const INPUT_ERROR: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] pmat_core::Error),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub outcome: Outcome,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load<T>(path: &Path, parse: impl Fn(&str) -> std::result::Result<T, FormatError>) -> Result<T> {
    parse(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_graph(path: &Path) -> Result<Graph> {
    load(path, parse_graph)
}

pub fn load_matrix(path: &Path) -> Result<RationalMatrix> {
    load(path, parse_matrix)
}

pub fn load_interval(path: &Path) -> Result<MatrixInterval> {
    load(path, parse_interval)
}

fn emit(cert_out: Option<&Path>, cert: Option<Certificate>) -> Result<()> {
    if let (Some(path), Some(cert)) = (cert_out, cert) {
        write(path, &render_certificate(&cert))?;
    }
    Ok(())
}

fn yes_no(answer: bool) -> &'static str {
    if answer {
        "YES"
    } else {
        "NO"
    }
}

/// Is there a cut of size at least `k`? The best cut is always printed;
/// it is written as a certificate only when the answer is yes.
pub fn maxcut(graph_file: &Path, k: u64, cert_out: Option<&Path>) -> Result<Output> {
    let graph = load_graph(graph_file)?;
    let best = max_cut_bruteforce(&graph)?;
    let answer = best.cut_size as u64 >= k;
    let cert = Certificate::Cut(best);
    let text = format!("{}\n{}", yes_no(answer), render_certificate(&cert));
    emit(cert_out, answer.then_some(cert))?;
    Ok(Output {
        text,
        outcome: Outcome::from_answer(answer),
    })
}

pub fn rnorm(matrix_file: &Path, k: Option<&str>, cert_out: Option<&Path>) -> Result<Output> {
    let a = load_matrix(matrix_file)?;
    match k {
        None => {
            let witness = r_norm(&a)?;
            let cert = Certificate::NormWitness(witness.clone());
            let text = format!("r={}\n{}", witness.value, render_certificate(&cert));
            emit(cert_out, Some(cert))?;
            Ok(Output {
                text,
                outcome: Outcome::Yes,
            })
        }
        Some(k) => {
            let k = parse_rational(k)?;
            let verdict = decide_r_norm(&a, &k)?;
            let mut text = format!("{}\n", yes_no(verdict.answer));
            let cert = verdict.certificate.map(Certificate::NormWitness);
            if let Some(c) = &cert {
                text.push_str(&render_certificate(c));
            }
            emit(cert_out, cert)?;
            Ok(Output {
                text,
                outcome: Outcome::from_answer(verdict.answer),
            })
        }
    }
}

pub fn interval_sing(interval_file: &Path, cert_out: Option<&Path>) -> Result<Output> {
    let iv = load_interval(interval_file)?;
    let verdict = is_singular_vertex_sign(&iv)?;
    let mut text = String::from(if verdict.answer { "SINGULAR\n" } else { "NONSINGULAR\n" });
    let cert = verdict.certificate.map(Certificate::from);
    if let Some(Certificate::SingularMatrix(b)) = &cert {
        text.push_str(&render_matrix(b));
    }
    emit(cert_out, cert)?;
    Ok(Output {
        text,
        outcome: Outcome::from_answer(verdict.answer),
    })
}

pub fn pmatrix(matrix_file: &Path, cert_out: Option<&Path>) -> Result<Output> {
    let m = load_matrix(matrix_file)?;
    let verdict = is_p_matrix(&m)?;
    let cert = verdict.certificate.map(Certificate::NonPMinor);
    let text = match &cert {
        Some(c) => render_certificate(c),
        None => "P\n".to_string(),
    };
    emit(cert_out, cert)?;
    Ok(Output {
        text,
        outcome: Outcome::from_answer(verdict.answer),
    })
}

fn reduced(text: String, out: Option<&Path>, body: &str) -> Result<Output> {
    let text = match out {
        Some(path) => {
            write(path, body)?;
            text
        }
        None => text + body,
    };
    Ok(Output {
        text,
        outcome: Outcome::Yes,
    })
}

/// Prints `threshold <t>` and the r-norm matrix (or writes it to `out`).
pub fn reduce_maxcut(graph_file: &Path, k: u64, out: Option<&Path>) -> Result<Output> {
    let graph = load_graph(graph_file)?;
    let (a, threshold) = graph_to_rnorm_instance(&graph, k)?;
    reduced(format!("threshold {threshold}\n"), out, &render_matrix(&a))
}

pub fn reduce_rnorm(matrix_file: &Path, k: &str, out: Option<&Path>) -> Result<Output> {
    let a = load_matrix(matrix_file)?;
    let iv = rnorm_to_interval_instance(&a, &parse_rational(k)?)?;
    reduced(String::new(), out, &render_interval(&iv))
}

pub fn reduce_interval(interval_file: &Path, out: Option<&Path>) -> Result<Output> {
    let iv = load_interval(interval_file)?;
    let m = interval_to_pmatrix_instance(&iv)?;
    reduced(String::new(), out, &render_matrix(&m))
}

/// Files written by `pipeline --cert-out <dir>`.
pub mod pipeline_files {
    pub const GRAPH: &str = "graph.txt";
    pub const RNORM: &str = "rnorm-matrix.txt";
    pub const INTERVAL: &str = "interval.txt";
    pub const PMATRIX: &str = "pmatrix.txt";
    pub const CUT: &str = "cut.cert";
    pub const NORM: &str = "norm-witness.cert";
    pub const SINGULAR: &str = "singular-matrix.cert";
    pub const NOT_P: &str = "non-p-minor.cert";
}

pub fn render_report(report: &PipelineReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "K {}", report.k);
    let _ = writeln!(
        out,
        "maxcut: {} (max cut {})",
        yes_no(report.max_cut.answer),
        report.max_cut.best.cut_size
    );
    let _ = writeln!(
        out,
        "rnorm: {} (r(A) {} vs threshold {})",
        yes_no(report.rnorm.answer),
        report.rnorm.witness.value,
        report.rnorm.threshold
    );
    let _ = writeln!(
        out,
        "interval: {} (singular)",
        yes_no(report.interval.answer)
    );
    let _ = writeln!(
        out,
        "pmatrix: {} (not a P-matrix; {}x{}{})",
        yes_no(report.pmatrix.answer),
        report.pmatrix.matrix.rows(),
        report.pmatrix.matrix.cols(),
        if report.pmatrix.singular_corner { ", singular corner" } else { "" }
    );
    let certs = [
        report.max_cut.answer.then(|| Certificate::Cut(report.max_cut.best.clone())),
        report
            .rnorm
            .answer
            .then(|| Certificate::NormWitness(report.rnorm.witness.clone())),
        report.interval.certificate.clone().map(Certificate::from),
        report.pmatrix.certificate.clone().map(Certificate::NonPMinor),
    ];
    for cert in certs.into_iter().flatten() {
        out.push_str(&render_certificate(&cert));
    }
    match report.first_disagreement() {
        None => out.push_str("CONSISTENT\n"),
        Some((a, b)) => {
            let _ = writeln!(out, "INCONSISTENT {a} vs {b}");
        }
    }
    out
}

fn write_pipeline_files(dir: &Path, graph: &Graph, report: &PipelineReport) -> Result<()> {
    use pipeline_files::*;
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    write(&dir.join(GRAPH), &render_graph(graph))?;
    write(&dir.join(RNORM), &render_matrix(&report.rnorm.matrix))?;
    write(&dir.join(INTERVAL), &render_interval(&report.interval.interval))?;
    write(&dir.join(PMATRIX), &render_matrix(&report.pmatrix.matrix))?;
    if report.max_cut.answer {
        write(&dir.join(CUT), &render_certificate(&Certificate::Cut(report.max_cut.best.clone())))?;
    }
    if report.rnorm.answer {
        let cert = Certificate::NormWitness(report.rnorm.witness.clone());
        write(&dir.join(NORM), &render_certificate(&cert))?;
    }
    if let Some(c) = &report.interval.certificate {
        write(&dir.join(SINGULAR), &render_certificate(&Certificate::from(c.clone())))?;
    }
    if let Some(c) = &report.pmatrix.certificate {
        write(&dir.join(NOT_P), &render_certificate(&Certificate::NonPMinor(c.clone())))?;
    }
    Ok(())
}

pub fn pipeline(graph_file: &Path, k: u64, max_n: usize, cert_out: Option<&Path>) -> Result<Output> {
    let graph = load_graph(graph_file)?;
    if graph.vertex_count() > max_n {
        return Err(CliError::Usage(format!(
            "graph has {} vertices, above --max-n {max_n}",
            graph.vertex_count()
        )));
    }
    if k == 0 {
        return Err(CliError::Usage("pipeline needs K >= 1; K = 0 is trivially YES".into()));
    }
    let report = run_pipeline(&graph, k)?;
    if let Some(dir) = cert_out {
        write_pipeline_files(dir, &graph, &report)?;
    }
    Ok(Output {
        text: render_report(&report),
        outcome: if report.consistent() {
            Outcome::Yes
        } else {
            Outcome::Inconsistent
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CertKind {
    Cut,
    NormWitness,
    SingularMatrix,
    NonPMinor,
}

/// Rechecks a certificate file against an instance file. `threshold` is the
/// cut target for `cut` and the norm threshold for `norm-witness`.
pub fn verify_file(
    kind: CertKind,
    instance_file: &Path,
    cert_file: &Path,
    threshold: Option<&str>,
) -> Result<Output> {
    let cert = match parse_certificate(&read(cert_file)?) {
        Ok(c) => c,
        Err(e) => return Ok(invalid(format!("malformed certificate: {e}"))),
    };
    let matches_kind = matches!(
        (kind, &cert),
        (CertKind::Cut, Certificate::Cut(_))
            | (CertKind::NormWitness, Certificate::NormWitness(_))
            | (CertKind::SingularMatrix, Certificate::SingularMatrix(_))
            | (CertKind::NonPMinor, Certificate::NonPMinor(_))
    );
    if !matches_kind {
        return Ok(invalid("certificate kind does not match".into()));
    }
    let check = match kind {
        CertKind::Cut => {
            let graph = load_graph(instance_file)?;
            let target = threshold
                .map(|t| t.parse::<u64>().map_err(|_| CliError::Usage(format!("invalid cut target `{t}`"))))
                .transpose()?;
            verify(&cert, &Instance::Graph(&graph, target))
        }
        CertKind::NormWitness | CertKind::NonPMinor => {
            let m = load_matrix(instance_file)?;
            let k: Option<Rational> = threshold.map(parse_rational).transpose()?;
            verify(&cert, &Instance::Matrix(&m, k.as_ref()))
        }
        CertKind::SingularMatrix => {
            let iv = load_interval(instance_file)?;
            verify(&cert, &Instance::Interval(&iv))
        }
    };
    Ok(match check {
        Ok(()) => Output {
            text: "VALID\n".into(),
            outcome: Outcome::Yes,
        },
        Err(reason) => invalid(reason.to_string()),
    })
}

fn invalid(reason: String) -> Output {
    Output {
        text: format!("INVALID: {reason}\n"),
        outcome: Outcome::No,
    }
}

/// Every graph on `n` vertices, one per edge subset.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..(1u64 << pairs.len())).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("distinct pairs")
    })
}

/// Exhaustive chain check on all graphs up to `max_n` vertices, plus
/// `random` seeded interval instances on which the vertex-sign oracle is
/// compared with the P-matrix route.
pub fn sweep(max_n: usize, random: usize, seed: u64) -> Result<Output> {
    let mut text = String::new();
    let mut failures = 0usize;
    let mut runs = 0usize;
    for n in 1..=max_n {
        for graph in all_graphs(n) {
            for k in 1..=graph.edge_count() as u64 {
                let report = run_pipeline(&graph, k)?;
                runs += 1;
                if let Some((a, b)) = report.first_disagreement() {
                    failures += 1;
                    let _ = writeln!(text, "INCONSISTENT {a} vs {b} K={k}\n{}", render_graph(&graph));
                }
                let cut = &report.max_cut.best;
                debug_assert_eq!(cut_size(&graph, &cut.subset()).ok(), Some(cut.cut_size));
            }
        }
    }
    let _ = writeln!(text, "chain: {runs} instances, {failures} inconsistent");

    let mut rng = SplitMix::new(seed);
    let mut random_failures = 0usize;
    for _ in 0..random {
        let n = 1 + rng.below(3) as usize;
        let a = loop {
            let a = RationalMatrix::from_fn(n, n, |_, _| rng.rational(5));
            if pmat_core::linalg::det(&a).map(|d| d != Rational::from_integer(0.into()))? {
                break a;
            }
        };
        let delta = RationalMatrix::from_fn(n, n, |_, _| {
            if rng.below(3) == 0 {
                Rational::from_integer(0.into())
            } else {
                rng.nonneg_rational(3)
            }
        });
        let iv = MatrixInterval::from_bounds(&a, &a.add(&delta)?)?;
        let singular = is_singular_vertex_sign(&iv)?.answer;
        let not_p = !is_p_matrix(&coxson_matrix(&a, &delta)?)?.answer;
        if singular != not_p {
            random_failures += 1;
            let _ = writeln!(text, "INCONSISTENT interval vs pmatrix\n{}", render_interval(&iv));
        }
    }
    let _ = writeln!(text, "random: {random} instances (seed {seed}), {random_failures} inconsistent");
    Ok(Output {
        text,
        outcome: if failures + random_failures == 0 {
            Outcome::Yes
        } else {
            Outcome::Inconsistent
        },
    })
}

/// Small deterministic generator for the `sweep` command.
struct SplitMix(u64);

impl SplitMix {
    fn new(seed: u64) -> Self {
        Self(seed)
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }

    fn rational(&mut self, bound: i64) -> Rational {
        let p = self.below(2 * bound as u64 + 1) as i64 - bound;
        let q = 1 + self.below(bound as u64) as i64;
        Rational::new(p.into(), q.into())
    }

    fn nonneg_rational(&mut self, bound: i64) -> Rational {
        let p = self.below(bound as u64 + 1) as i64;
        let q = 1 + self.below(bound as u64) as i64;
        Rational::new(p.into(), q.into())
    }
}
