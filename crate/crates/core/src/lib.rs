//! Right restriction monoids, Boolean inverse monoids and their étale
//! companions, with the polycyclic/Cuntz/Thompson examples built from
//! prefix codes.
//!
//! - [`monoid`]: finite monoids given by tables; axioms, order theory,
//!   classification, isomorphism search.
//! - [`companion`]: acceptable sets, the completion `R(S)`, the closure
//!   nucleus and the companion `Etale(S)` of a finite Boolean inverse monoid.
//! - [`words`]: words, prefix codes, carets and the polycyclic monoid.
//! - [`cuntz`]: the monoids `H_n` and `C_n` as tables `f^X_Y`, Thompson
//!   group arithmetic and the Cantor algebra on total elements.

pub mod companion;
pub mod cuntz;
pub mod error;
pub mod monoid;
pub mod words;

pub use error::{Error, Result};
pub use monoid::FiniteRRMonoid;
