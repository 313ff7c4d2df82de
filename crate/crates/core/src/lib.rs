//! Exact computation around weighted generating functions of matchings.
//!
//! The library constructs the generating polynomial of the k-edge matchings
//! of a complete graph, the Artinian Gorenstein algebra obtained as the
//! quotient of the edge-variable polynomial ring by the annihilator of that
//! polynomial under Macaulay's inverse-system pairing, and the higher Hessian
//! matrices whose determinants decide the strong Lefschetz property.
//! Everything runs over arbitrary-precision rationals; no value is ever
//! estimated in floating point.
//!
//! The main entry points, by module:
//!
//! * [`combinatorics`] — vertex sets, edges, matchings, counting formulas.
//! * [`polynomial`] — sparse multivariate polynomials over exact rationals
//!   with differential-operator application.
//! * [`generators`] — the matching generating function, elementary symmetric
//!   polynomials, matching monomials, and the all-ones linear form.
//! * [`matrix`] — dense exact-rational matrices with fraction-free
//!   (Bareiss) determinant, rank, and kernel computations.
//! * [`inverse_system`] — catalecticants, Hilbert functions, annihilator
//!   kernels, the Poincaré pairing, and an independent multiplication-map
//!   rank oracle.
//! * [`hessian`] — higher Hessian matrices, disjointness matrices,
//!   determinant factorization, and the strong Lefschetz verdict.
//! * [`verification`] — a brute-force oracle suite that re-derives the
//!   supporting identities on small instances and reports
//!   verified / refuted / corrected per claim.
//!
//! ```
//! use matchlef::combinatorics::VertexSet;
//! use matchlef::generators::matching_generating_function;
//! use matchlef::hessian::strong_lefschetz_check;
//! use matchlef::inverse_system::{hilbert_function, ColumnStrategy};
//!
//! let u = VertexSet::first_n(6);
//! let phi = matching_generating_function(&u, 3);
//! assert_eq!(phi.term_count(), 15);
//! let h = hilbert_function(&phi, ColumnStrategy::MatchingMonomials)?;
//! assert_eq!(h.dims(), &[1, 15, 15, 1]);
//! let report = strong_lefschetz_check(&u, 3, None)?;
//! assert!(report.strong_lefschetz);
//! # Ok::<(), matchlef::Error>(())
//! ```

pub mod combinatorics;
mod error;
pub mod generators;
pub mod hessian;
pub mod inverse_system;
pub mod matrix;
pub mod polynomial;
pub(crate) mod rational;
pub mod verification;

pub use combinatorics::{Edge, Matching, Vertex, VertexSet};
pub use error::Error;
pub use hessian::{DetFactorization, HessianMatrix, LefschetzReport};
pub use inverse_system::{ColumnStrategy, HilbertFunction};
pub use matrix::ExactMatrix;
pub use polynomial::{Assignment, Monomial, Polynomial, VariableId};
pub use verification::{ClaimId, Status, VerificationReport};

pub type Result<T> = std::result::Result<T, Error>;
