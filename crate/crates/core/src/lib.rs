//! Exact computation of Schubert and Grothendieck polynomials from pipe
//! dreams, a weight-raising surgery on pipe dreams of fireworks permutations,
//! and brute-force checkers for the support and M-convexity results built on it.

pub mod convex;
pub mod diagram;
pub mod error;
pub mod perm;
pub mod pipedream;
pub mod poly;
pub mod raise;
pub mod sweep;
pub mod vector;

pub use diagram::{rothe_diagram, Diagram};
pub use error::{Error, Result};
pub use perm::{layered_from_blocks, max_weight_formula, parse_permutation, pi_of, Permutation};
pub use pipedream::{drop_fakes, pipe_dreams, trace, PipeDream, TraceResult};
pub use vector::{ExponentVector, WeightVector};
pub use convex::LatticePointSet;
pub use poly::SparsePolynomial;
