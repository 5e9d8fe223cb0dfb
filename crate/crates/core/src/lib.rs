//! Exact workbench for monomial derivations: Darboux polynomial search,
//! generalized cyclotomic structure detection, and certificates for the
//! root-of-unity symmetry that turns a Darboux polynomial into a rational
//! constant.

pub mod arith;
pub mod certfile;
pub mod certify;
pub mod darboux;
pub mod deriv;
pub mod dsl;
pub mod error;
mod lexer;
pub mod linalg;
pub mod poly;

pub use arith::{Coefficient, CyclotomicField, CyclotomicNumber, Rational, UniPoly};
pub use certify::{Certificate, CyclotomicStructure};
pub use darboux::{DarbouxPair, SearchOptions, SearchReport};
pub use deriv::{CyclotomicPartition, MonomialDerivation};
pub use error::{Error, Result};
pub use linalg::RationalMatrix;
pub use poly::{CyclotomicPoly, DiagonalAutomorphism, Monomial, Polynomial, QPoly, VariableContext};
