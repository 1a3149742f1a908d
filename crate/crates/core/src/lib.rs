//! Small-cancellation word problems and Zariski word-map checks.
//!
//! * [`word`]: freely reduced words over `a_1, a_2, …` and `x_1, x_2, …`.
//! * [`presentation`]: the relator family `w_i` of `Γ(k)`, pieces and `C'(λ)`.
//! * [`dehn`]: Dehn's algorithm with certified, re-checkable traces.
//! * [`word_maps`]: one-variable polynomials over `Γ(k)` and closed-set membership.
//! * [`zero_monoid`]: the monomial semigroup `⟨x_i, y_i | x_i y_i = 0⟩`.
//! * [`harness`]: seeded verification suites and their reports.

pub mod dehn;
pub mod error;
pub mod harness;
pub mod presentation;
pub mod word;
pub mod word_maps;
pub mod zero_monoid;

pub use error::{Error, Result};
