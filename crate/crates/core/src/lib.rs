//! Exact oracles, reductions and certificates for the chain
//! SIMPLE MAX CUT → MATRIX R-NORM → matrix interval singularity → P-MATRIX.
//!
//! Every quantity is an exact rational, so each equivalence between the
//! problems can be checked bit-for-bit on small instances:
//!
//! ```
//! use pmat_core::{graph::Graph, pipeline::run_pipeline};
//!
//! let triangle = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
//! let report = run_pipeline(&triangle, 2).unwrap();
//! assert!(report.consistent());
//! assert!(report.max_cut.answer);
//! ```
//!
//! The crate is `no_std` and only needs `alloc`. Text formats, certificate
//! files and the command line live in the `pmat` companion crate.
#![no_std]

extern crate alloc;

pub mod certificate;
pub mod error;
pub mod graph;
pub mod interval;
pub mod linalg;
pub mod matrix;
pub mod pipeline;
pub mod pmatrix;
pub mod rational;
pub mod rnorm;

pub use error::{Error, Result};
pub use matrix::RationalMatrix;
pub use rational::Rational;
