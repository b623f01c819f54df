//! Exact arithmetic for numerical semigroups and the determinantal
//! structure of their defining toric ideals.
//!
//! The library computes the classical invariants of a numerical semigroup
//! (membership, gaps, Frobenius number, Apery sets, pseudo-Frobenius
//! numbers, type, almost symmetry), enumerates the row-factorization
//! matrices attached to pseudo-Frobenius numbers, decides when the defining
//! ideal of the semigroup ring is generated by the 2 x 2 minors of a cyclic
//! 2 x n matrix, builds that presentation together with its graded
//! Eagon-Northcott complex, and certifies every claim by independent exact
//! computations (Groebner bases, fiber graphs, rational linear algebra,
//! Hilbert series).
//!
//! Start with [`NumericalSemigroup`] and [`analysis::analyze`], or run the
//! examples:
//!
//! ```bash
//! cargo run --example semigroup_basics
//! cargo run --example theorem_pipeline
//! ```
//!
//! The `sgf` binary exposes the same pipeline as a command line with
//! machine-readable output; see the crate README.

pub mod analysis;
pub mod config;
pub mod en_complex;
pub mod error;
pub mod ideal;
pub mod rfmatrix;
pub mod scan;
pub mod semigroup;
pub mod theorem;

pub use analysis::{analyze, AnalysisDocument, AnalyzeOptions};
pub use config::Limits;
pub use error::{Error, Result};
pub use ideal::{Binomial, Monomial, MonomialOrder, Tiebreak};
pub use semigroup::NumericalSemigroup;
