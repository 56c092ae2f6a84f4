//! SIMPLE MAX CUT: graphs, a brute-force cut oracle, and the reduction to
//! MATRIX R-NORM.
//!
//! For a graph with `n` vertices and edge set `E`, the reduction builds
//! `A = ℓ·I - adj(G)` with `ℓ = 2|E| + 1`. For any `±1` vector `y` marking
//! a vertex subset, `yᵀAy = nℓ + 4·cut - 2|E|`, and the choice of `ℓ` makes
//! `r(A)` attained on the diagonal `z = y`. Hence a cut of size at least `K`
//! exists iff `r(A) ≥ nℓ - 2|E| + 4K`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::{int, Rational};

/// Largest vertex count accepted by the brute-force cut oracle.
pub const MAX_CUT_BRUTEFORCE_LIMIT: usize = 30;

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges may be given in either orientation; they are stored as `(u, v)`
    /// with `u < v`, sorted.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, bound: n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self {
            n,
            edges: seen.into_iter().collect(),
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacency(&self) -> RationalMatrix {
        let mut a = RationalMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a.set(u, v, Rational::one());
            a.set(v, u, Rational::one());
        }
        a
    }
}

/// Bipartition with its cut size. `side[v]` is 1 or 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCertificate {
    pub side: Vec<u8>,
    pub cut_size: usize,
}

impl CutCertificate {
    /// Vertices labelled 1.
    pub fn subset(&self) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == 1).collect()
    }
}

/// Number of edges with exactly one end in `subset`.
pub fn cut_size(graph: &Graph, subset: &[usize]) -> Result<usize> {
    let mut inside = alloc::vec![false; graph.n];
    for &v in subset {
        if v >= graph.n {
            return Err(Error::IndexOutOfRange {
                index: v,
                bound: graph.n,
            });
        }
        inside[v] = true;
    }
    Ok(crossing(graph, |v| inside[v]))
}

fn crossing(graph: &Graph, inside: impl Fn(usize) -> bool) -> usize {
    graph
        .edges
        .iter()
        .filter(|&&(u, v)| inside(u) != inside(v))
        .count()
}

/// Maximum cut by enumerating the `2ⁿ⁻¹` bipartitions with vertex 0 on side 1.
///
/// Side vectors are visited in lexicographic order, so the first maximiser
/// is the lexicographically smallest one.
pub fn max_cut_bruteforce(graph: &Graph) -> Result<CutCertificate> {
    let n = graph.n;
    if n > MAX_CUT_BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "vertex count",
            value: n,
            limit: MAX_CUT_BRUTEFORCE_LIMIT,
        });
    }
    if n == 0 {
        return Ok(CutCertificate {
            side: Vec::new(),
            cut_size: 0,
        });
    }
    // Bit (n-1-v) of `mask` set means vertex v is on side 2; vertex 0 never is.
    let on_side_two = |mask: u64, v: usize| (mask >> (n - 1 - v)) & 1 == 1;
    let mut best_mask = 0u64;
    let mut best = 0usize;
    for mask in 0..(1u64 << (n - 1)) {
        let size = crossing(graph, |v| on_side_two(mask, v));
        if size > best {
            best = size;
            best_mask = mask;
        }
    }
    Ok(CutCertificate {
        side: (0..n).map(|v| if on_side_two(best_mask, v) { 2 } else { 1 }).collect(),
        cut_size: best,
    })
}

/// `ℓ = 2|E| + 1`.
pub fn diagonal_weight(graph: &Graph) -> Rational {
    int(2 * graph.edge_count() as i64 + 1)
}

/// Builds `A = ℓ·I - adj(G)` and the threshold `nℓ - 2|E| + 4K`.
pub fn graph_to_rnorm_instance(graph: &Graph, k: u64) -> Result<(RationalMatrix, Rational)> {
    if k == 0 {
        return Err(Error::NotPositive("cut target K"));
    }
    let ell = diagonal_weight(graph);
    let a = RationalMatrix::identity(graph.n)
        .scale(&ell)
        .sub(&graph.adjacency())?;
    let threshold = int(graph.n as i64) * &ell - int(2 * graph.edge_count() as i64)
        + int(4) * int(k as i64);
    Ok((a, threshold))
}
