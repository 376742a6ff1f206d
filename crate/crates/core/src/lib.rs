//! Spectral analysis of non-uniform hypergraphs through the weighted clique
//! expansion.
//!
//! A hypergraph is turned into a weighted 2-graph whose edge weight `a_ij`
//! counts the hyperedges containing both `i` and `j`. The Laplacian
//! `L = diag(δ) - A`, with `δ_i` the row sums of `A`, is positive
//! semidefinite with zero row sums. This crate computes its spectrum with a
//! self-contained Jacobi eigensolver and evaluates the classical families of
//! upper bounds on the largest eigenvalue and the two-sided estimates of edge
//! boundaries, max-cut and the isoperimetric number, each checked against an
//! exact brute-force oracle.
//!
//! ```
//! use hyperspec::{Hypergraph, spectral};
//!
//! let h = Hypergraph::validate(vec![vec![0, 1, 2], vec![1, 2, 3]], 4).unwrap();
//! let spectrum = spectral::eigendecompose(&h.laplacian()).unwrap();
//! assert!(spectrum.lambda2().unwrap() > 0.0);
//! ```

pub mod battery;
pub mod bounds;
pub mod connectivity;
pub mod error;
pub mod format;
pub mod generators;
pub mod hypergraph;
pub mod matrix;
pub mod report;
pub mod spectral;

pub use error::{Error, Result};
pub use hypergraph::{DegreeProfile, Hypergraph};
pub use matrix::SymmetricMatrix;
pub use spectral::Spectrum;
