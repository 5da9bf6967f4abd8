//! Highest-weight cones `X(w)` of simple algebraic groups, the commutativity
//! of the unipotent radicals acting on them, and the explicit commuting
//! locally nilpotent derivations on the quadric cones of types B and D.
//!
//! * [`root_system`]: Cartan data, positive roots, coroot pairings, Weyl
//!   dimension formula.
//! * [`classification`]: per `(type, weight)` verdicts and enumeration.
//! * [`poly`], [`derivation`], [`cone`]: exact polynomial arithmetic,
//!   derivations, and the symbolic verification of the explicit examples.
//! * [`selftest`]: randomized and exhaustive invariant suites.

pub mod classification;
pub mod cli;
pub mod cone;
pub mod derivation;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod root_system;
pub mod selftest;

pub use classification::{classify, enumerate, ClassificationReport};
pub use cone::{build_example, verify_presentation, ConePresentation, VerificationReport};
pub use derivation::{Derivation, Nilpotency};
pub use error::{Error, Result};
pub use poly::{Polynomial, Ring};
pub use root_system::{CartanType, Family, Root, RootSystem, SimpleType, Weight};
