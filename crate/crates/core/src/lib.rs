//! Nowhere-zero flows on signed graphs over finite abelian groups.
//!
//! The crate has two independent routes to the same numbers:
//!
//! * [`oracle`] enumerates flows directly, with per-vertex pruning;
//! * [`engine`] computes, for each 2-rank `d`, a polynomial `f_d` such that a
//!   group `Γ` with `ε₂(Γ) = d` and `|Γ| = 2^d·n` has exactly `f_d(n)`
//!   nowhere-zero flows. It works by deletion–contraction down to one-vertex
//!   graphs carrying only negative loops, which are counted in closed form by
//!   [`lemma`].
//!
//! Everything here is `no_std` with `alloc`; file formats and the command
//! line live in the `nzflow` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod abelian;
pub mod engine;
mod error;
pub mod graph;
pub mod lemma;
pub mod oracle;
pub mod poly;
pub mod quasi;

pub use abelian::{FiniteAbelianGroup, GroupElement};
pub use engine::{flow_polynomial, flow_polynomial_family, FlowPolynomialFamily};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeSubset, HalfEdge, Orientation, Sign, SignedGraph};
pub use oracle::Budget;
pub use poly::IntPolynomial;
pub use quasi::{fit_quasipolynomial, QuasiPolynomialFit, RatPolynomial};

pub use num_bigint;
pub use num_rational;
