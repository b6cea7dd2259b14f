//! Schur multipliers of finite-dimensional nilpotent Lie algebras over Q.
//!
//! Algebras are given by structure constants on a fixed basis. The crate
//! builds the central extension by one symbol per basis pair, reads off the
//! multiplier dimension and an explicit cover presentation, evaluates the
//! multilinear γ maps on the lower central quotients, and checks the known
//! dimension bounds against the computed values.
//!
//! ```
//! use nilschur::{catalog, multiplier};
//!
//! let l = catalog::parse_spec("L5_8+A(1)").unwrap();
//! assert_eq!(multiplier::multiplier_dim(&l), 9);
//! ```

pub mod bounds;
pub mod catalog;
pub mod error;
pub mod exactla;
pub mod gammamaps;
pub mod liealg;
pub mod multiplier;

pub use error::{Error, Result};
pub use exactla::{Matrix, Rational, Subspace};
pub use liealg::{Bracket, LieAlgebra, SparseBracket, StructureReport};
