//! Text formats for matrices, graphs, intervals and certificates.
//!
//! All numbers are exact: an integer `p` or a fraction `p/q` with `q > 0`.
//! Vertex and index labels are 1-based on the wire.

use std::fmt::Write as _;

use num_bigint::BigInt;
use pmat_core::certificate::Certificate;
use pmat_core::graph::{CutCertificate, Graph};
use pmat_core::interval::MatrixInterval;
use pmat_core::linalg::IndexSet;
use pmat_core::pmatrix::NonPCertificate;
use pmat_core::rnorm::{NormWitness, SignVector};
use pmat_core::{Rational, RationalMatrix};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("unexpected end of input while reading {0}")]
    Eof(&'static str),
    #[error("invalid {what} `{token}`")]
    Invalid { what: &'static str, token: String },
    #[error("trailing input `{0}`")]
    Trailing(String),
    #[error(transparent)]
    Core(#[from] pmat_core::Error),
}

type Result<T> = std::result::Result<T, FormatError>;

fn invalid(what: &'static str, token: &str) -> FormatError {
    FormatError::Invalid {
        what,
        token: token.to_string(),
    }
}

pub fn parse_rational(token: &str) -> Result<Rational> {
    let (numer, denom) = match token.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (token, None),
    };
    let numer: BigInt = numer.parse().map_err(|_| invalid("rational", token))?;
    let denom: BigInt = match denom {
        None => BigInt::from(1),
        Some(q) if !q.is_empty() && q.bytes().all(|b| b.is_ascii_digit()) => {
            q.parse().map_err(|_| invalid("rational", token))?
        }
        Some(_) => return Err(invalid("rational", token)),
    };
    if denom == BigInt::from(0) {
        return Err(invalid("rational", token));
    }
    Ok(Rational::new(numer, denom))
}

struct Tokens<'a> {
    inner: std::str::SplitWhitespace<'a>,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.split_whitespace(),
        }
    }

    fn next(&mut self, what: &'static str) -> Result<&'a str> {
        self.inner.next().ok_or(FormatError::Eof(what))
    }

    fn usize(&mut self, what: &'static str) -> Result<usize> {
        let t = self.next(what)?;
        t.parse().map_err(|_| invalid(what, t))
    }

    fn matrix(&mut self) -> Result<RationalMatrix> {
        let rows = self.usize("row count")?;
        let cols = self.usize("column count")?;
        let entries = (0..rows * cols)
            .map(|_| parse_rational(self.next("matrix entry")?))
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalMatrix::new(rows, cols, entries)?)
    }

    fn finish(mut self) -> Result<()> {
        match self.inner.next() {
            Some(t) => Err(FormatError::Trailing(t.to_string())),
            None => Ok(()),
        }
    }
}

/// `rows cols` followed by the entries in row-major order.
pub fn parse_matrix(text: &str) -> Result<RationalMatrix> {
    let mut tokens = Tokens::new(text);
    let m = tokens.matrix()?;
    tokens.finish()?;
    Ok(m)
}

pub fn render_matrix(m: &RationalMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    if m.cols() > 0 {
        for i in 0..m.rows() {
            let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

/// `n m` followed by `m` lines `u v` with `1 ≤ u < v ≤ n`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut tokens = Tokens::new(text);
    let n = tokens.usize("vertex count")?;
    let m = tokens.usize("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = tokens.usize("edge endpoint")?;
        let v = tokens.usize("edge endpoint")?;
        if u == 0 || v > n || u >= v {
            return Err(invalid("edge", &format!("{u} {v}")));
        }
        edges.push((u - 1, v - 1));
    }
    tokens.finish()?;
    Ok(Graph::new(n, edges)?)
}

pub fn render_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Two tagged matrices: `center`/`radius` or `lower`/`upper`, either order.
pub fn parse_interval(text: &str) -> Result<MatrixInterval> {
    let mut tokens = Tokens::new(text);
    let mut tagged = Vec::with_capacity(2);
    for _ in 0..2 {
        let tag = tokens.next("interval tag")?;
        if !matches!(tag, "center" | "radius" | "lower" | "upper") {
            return Err(invalid("interval tag", tag));
        }
        tagged.push((tag, tokens.matrix()?));
    }
    tokens.finish()?;
    tagged.sort_by_key(|(tag, _)| *tag);
    match (&tagged[0], &tagged[1]) {
        (("center", c), ("radius", r)) => Ok(MatrixInterval::new(c.clone(), r.clone())?),
        (("lower", l), ("upper", u)) => Ok(MatrixInterval::from_bounds(l, u)?),
        ((a, _), (b, _)) => Err(invalid("interval tag pair", &format!("{a}/{b}"))),
    }
}

pub fn render_interval(iv: &MatrixInterval) -> String {
    format!(
        "center\n{}radius\n{}",
        render_matrix(iv.center()),
        render_matrix(iv.radius())
    )
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn render_certificate(cert: &Certificate) -> String {
    match cert {
        Certificate::Cut(c) => format!("CUT cut_size={} side={}\n", c.cut_size, join(&c.side)),
        Certificate::NormWitness(w) => format!(
            "NORM_WITNESS value={} y={} z={}\n",
            w.value,
            join(w.y.as_slice()),
            join(w.z.as_slice())
        ),
        Certificate::SingularMatrix(b) => format!("SINGULAR\n{}", render_matrix(b)),
        Certificate::NonPMinor(c) => render_non_p(c),
    }
}

/// `NOT_P index_set=<i1,i2,...> minor=<p/q>`.
pub fn render_non_p(cert: &NonPCertificate) -> String {
    format!(
        "NOT_P index_set={} minor={}\n",
        join(cert.index_set.as_slice().iter().map(|i| i + 1)),
        cert.minor_value
    )
}

fn field<'a>(tokens: &mut Tokens<'a>, key: &'static str) -> Result<&'a str> {
    let t = tokens.next(key)?;
    match t.split_once('=') {
        Some((k, v)) if k == key => Ok(v),
        _ => Err(invalid(key, t)),
    }
}

fn list<T: std::str::FromStr>(value: &str, what: &'static str) -> Result<Vec<T>> {
    if value.is_empty() {
        return Ok(Vec::new());
    }
    value
        .split(',')
        .map(|t| t.parse().map_err(|_| invalid(what, t)))
        .collect()
}

pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let mut tokens = Tokens::new(text);
    let cert = match tokens.next("certificate tag")? {
        "CUT" => {
            let size = field(&mut tokens, "cut_size")?;
            let cut_size = size.parse().map_err(|_| invalid("cut_size", size))?;
            let side = list(field(&mut tokens, "side")?, "side label")?;
            Certificate::Cut(CutCertificate { side, cut_size })
        }
        "NORM_WITNESS" => {
            let value = parse_rational(field(&mut tokens, "value")?)?;
            let y = SignVector::new(list(field(&mut tokens, "y")?, "sign")?)?;
            let z = SignVector::new(list(field(&mut tokens, "z")?, "sign")?)?;
            Certificate::NormWitness(NormWitness { y, z, value })
        }
        "SINGULAR" => Certificate::SingularMatrix(tokens.matrix()?),
        "NOT_P" => {
            let indices: Vec<usize> = list(field(&mut tokens, "index_set")?, "index")?;
            if indices.contains(&0) {
                return Err(invalid("index", "0"));
            }
            let index_set = IndexSet::new(indices.into_iter().map(|i| i - 1).collect())?;
            let minor_value = parse_rational(field(&mut tokens, "minor")?)?;
            Certificate::NonPMinor(NonPCertificate {
                index_set,
                minor_value,
            })
        }
        other => return Err(invalid("certificate tag", other)),
    };
    tokens.finish()?;
    Ok(cert)
}
