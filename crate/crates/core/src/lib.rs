//! Nonsymmetric Macdonald polynomials with permuted basements.
//!
//! The crate computes `E_μ^π` from non-attacking fillings, applies
//! Demazure–Lusztig operators, builds the partially symmetric polynomials
//! `P_{(λ|γ)}`, and checks the identities relating them with exact
//! arithmetic in ℚ(q,t).

pub mod coeff;
pub mod error;
pub mod fillings;
pub mod macdonald;
pub mod symgroup;
pub mod verify;
pub mod xpoly;

pub use coeff::{BiPoly, RationalQT, Q};
pub use error::{Error, Result};
pub use fillings::{AugFilling, Square};
pub use symgroup::{Composition, Perm};
pub use xpoly::{Monomial, SubstSpec, XPoly};
