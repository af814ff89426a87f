//! Exact max-plus (tropical) matrix algebra.
//!
//! Scalars are rationals extended by `-inf`, with `max` as addition and `+`
//! as multiplication. On top of dense matrices the crate provides:
//!
//! * spectral theory: maximum cycle mean, critical graph, cyclicity,
//!   eigenvectors and projective power orbits ([`spectral`]);
//! * the permanent, column/row rank and brute-force tropical and
//!   symmetrized ranks ([`ranks`]);
//! * the ultimate rank of a matrix and an orbit-based oracle
//!   ([`ultimate`]);
//! * the polynomial decision of maximal ultimate rank for a finitely
//!   generated semigroup, visualizations and fundamental cells
//!   ([`semigroup`]);
//! * a plain-text matrix format and structured reports ([`io`],
//!   [`report`]).
//!
//! Node indices are 0-based in the API; reports print them 1-based.
//!
//! ```
//! use maxplus::{io::parse_matrix, ultimate::ultimate_rank};
//!
//! let a = parse_matrix("3 3\n-1 0 0\n0 -1 0\n0 0 -1\n").unwrap();
//! assert_eq!(ultimate_rank(&a).unwrap().value, 1);
//! ```

pub mod digraph;
pub mod error;
pub mod io;
pub mod matrix;
pub mod ranks;
pub mod report;
pub mod scalar;
pub mod semigroup;
pub mod spectral;
pub mod ultimate;

pub use digraph::{Digraph, SccDecomposition};
pub use error::{Error, Result};
pub use matrix::{diag, projective_form, scalar_mul, trop_add, trop_mul, ProjectiveForm, TropMatrix, TropVector};
pub use ranks::{CappedRank, PermanentCertificate, RankReport};
pub use scalar::{Rational, Trop};
pub use semigroup::{GeneratorSet, SemigroupDecision};
pub use spectral::{EigenBasis, SpectralData};
pub use ultimate::UltimateRankResult;
