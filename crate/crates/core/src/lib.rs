//! Exact-arithmetic Hopf algebras, Hopf braces and their module categories.
//!
//! Everything is a dense matrix over an exact field (`Q` by default,
//! `GF(p)` for cross-checking): spaces and morphisms form a strict
//! symmetric monoidal category, and every structure (algebras, coalgebras,
//! Hopf algebras, skew braces, Hopf braces, brace modules, Doi-Hopf
//! modules) is a bundle of morphisms with explicit law checkers. The
//! `suites` module packages the checkers into verification runs over a
//! built-in catalog of desk-scale instances.

pub mod error;
pub mod scalar;
pub mod linalg;
pub mod report;
pub mod structures;
pub mod hopf;

pub use error::Error;
pub use scalar::{Gf, Rat, Scalar};
