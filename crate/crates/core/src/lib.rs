//! Exact computations around the moduli space of stable curves.
//!
//! The crate is organised by capability:
//!
//! * [`exact_math`]: rational univariate polynomials (gcd, Yun squarefree
//!   decomposition), binary and ternary forms, local jets of plane curves.
//! * [`git_stability`]: diagonal one-parameter subgroup weights, the
//!   root-multiplicity classification of binary forms under `SL(2)`, and
//!   point classification on plane curves (smooth point, node, worse).
//! * [`stable_graphs`]: dual graphs of nodal curves with node thickness,
//!   canonical forms, automorphism counts, exhaustive enumeration for small
//!   genus and the base change / resolve / stabilize reduction calculus.
//! * [`numerology`]: Hilbert polynomials of pluricanonical and Gieseker
//!   embeddings, Riemann–Hurwitz genus, dimension and boundary counts.
//! * [`cli`]: the `moduli` command-line front end.
//!
//! Every capability has a runnable program under `examples/`:
//!
//! ```bash
//! cargo run --example quartic_stability
//! cargo run --example stable_graph_census -- 3
//! ```

pub mod cli;
mod error;
pub mod exact_math;
pub mod git_stability;
pub mod numerology;
pub mod stable_graphs;

pub use error::{Error, Result};
pub use num::BigRational;
