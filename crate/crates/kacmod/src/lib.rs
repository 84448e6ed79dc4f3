//! Exact combinatorics of Kac modules over the Lie superalgebra gl(m/n).
//!
//! The crate computes, with exact integer arithmetic throughout:
//!
//! - weight-lattice primitives: the invariant bilinear form, the integral
//!   rho-shift, dominance, the partial order and finite order intervals
//!   ([`weight`]);
//! - atypicality data of a dominant weight: the atypicality matrix, the
//!   gamma chain, the maximal chain-closure sets Delta(gamma), the nabla
//!   partition with its k-vector, mu_0 and the odd-reflection walk
//!   ([`atypicality`]);
//! - the 2^r composition-factor columns lambda_theta of a Kac module and
//!   their q-coefficients (-q)^|theta| ([`multiplicity`]);
//! - triangular q-multiplicity matrices on weight windows, their exact
//!   unitriangular inverses (Kazhdan-Lusztig polynomials) and closed-form
//!   checks ([`kl`]);
//! - exact characters: gl(m)+gl(n) irreducibles by Gelfand-Tsetlin pattern
//!   enumeration, Kac modules via the odd product factor, simple modules
//!   via the inverted matrix on exact finite supports ([`characters`]);
//! - a verification harness covering the worked examples and identity
//!   suites ([`verify`]).
//!
//! Multiplicity statements beyond the proven cases are conjectural; every
//! inconsistency the code can detect is surfaced as a structured
//! falsification diagnostic instead of being swallowed.

pub mod atypicality;
pub mod caps;
pub mod characters;
pub mod error;
pub mod kl;
pub mod multiplicity;
pub mod qpoly;
pub mod report;
pub mod verify;
pub mod weight;

pub use caps::Caps;
pub use error::{Error, Falsification, Result};
pub use qpoly::QPolynomial;
pub use weight::{IntegralWeight, OddRoot, Root, Superalgebra};
