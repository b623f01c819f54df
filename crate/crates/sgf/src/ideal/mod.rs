//! Exact engine for the defining toric ideal of a numerical semigroup ring:
//! weighted monomials and binomials, Groebner bases, fibers, minimal
//! generator counts, and Hilbert data.

pub mod binomial;
pub mod buchberger;
pub mod enumerate;
pub mod hilbert;
pub mod linalg;
pub mod monomial;
pub mod mu;
pub mod order;
pub mod presentation;
mod unionfind;

pub use binomial::{toric_membership, Binomial};
pub use buchberger::{buchberger, ideal_contains, normal_form, reduce_monomial};
pub use enumerate::{fiber, representations};
pub use hilbert::{hilbert_coefficients, monomial_count_table};
pub use monomial::Monomial;
pub use mu::{
    default_degree_bound, generator_count_by_linear_algebra, generator_count_in_degree, mu,
    MuReport,
};
pub use order::{MonomialOrder, Tiebreak};
pub use presentation::{ideal_equals_toric, IdealEqualityReport, PresentationIdeal};
