//! Closed (non-composite) multivariate polynomials over the rationals.
//!
//! A polynomial `f` is *closed* when it cannot be written as `F(g)` with
//! `deg F > 1`. Every non-constant `f` has a *generative* polynomial `h`:
//! the closed polynomial with `f = F(h)`, unique once `h(0) = 0` and the
//! leading coefficient of `h` is 1.
//!
//! * [`decompose`] computes `(h, F)` by coefficient matching, trying candidate
//!   degrees of `F` from the divisor sequences in [`newton`].
//! * [`dependence`] certifies that `f` and `h` are algebraically dependent.
//! * [`family`] factors `f + mu` through `(h, F)`.
//! * [`monoid`] saturates monomial subalgebras.

pub mod decompose;
pub mod dependence;
pub mod error;
pub mod family;
pub mod lp;
pub mod monoid;
pub mod monomial;
pub mod newton;
pub mod order;
pub mod poly;
pub mod unipoly;

/// Exact rational scalar; always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub use decompose::{generative, is_closed, DecompositionResult, Outcome, TraceEntry};
pub use error::{Error, Result};
pub use monomial::Monomial;
pub use order::OrderSpec;
pub use poly::{compose_uni, normalize, MultiPoly, NormalizedForm};
pub use unipoly::UniPoly;
