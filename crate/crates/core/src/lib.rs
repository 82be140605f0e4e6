//! Exact Gröbner basis computation and Gröbner walk basis conversion over
//! the rationals and prime fields.
//!
//! The crate is organised bottom-up:
//!
//! - [`field`], [`monomial`], [`poly`], [`parse`]: exact coefficients and
//!   sparse polynomials;
//! - [`ordering`]: matrix term orderings, weight vectors and initial forms;
//! - [`groebner`]: division, Buchberger's algorithm and marked bases;
//! - [`walk`]: the standard and the generic Gröbner walk;
//! - [`io`], [`systems`], [`bench`], [`svg`]: ideal files, benchmark
//!   systems, the benchmark harness and fan-trace rendering.

pub mod bench;
pub mod error;
pub mod field;
pub mod groebner;
pub mod io;
pub mod monomial;
pub mod ordering;
pub mod parse;
pub mod poly;
#[cfg(test)]
mod proptests;
pub mod svg;
pub mod systems;
pub mod walk;

pub use error::{Error, Result};
pub use field::{Coeff, CoefficientField};
pub use groebner::{Ideal, MarkedGroebnerBasis, MarkedPolynomial};
pub use monomial::Monomial;
pub use ordering::{OrderingSpec, TermOrdering, WeightVector};
pub use parse::parse_polynomial;
pub use poly::{Polynomial, Ring};
