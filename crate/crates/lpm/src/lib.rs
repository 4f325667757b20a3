//! Lattice path matroid toolkit.
//!
//! Builds explicit representations of lattice path matroids over finite
//! fields by three deterministic constructions (algebraic extension, large
//! prime field, and a part-aware extension for matroids with few clonal
//! classes), verifies them exhaustively against brute-force matroid oracles,
//! and layers vector secret sharing on top for hierarchical access
//! structures.
//!
//! Modules:
//! - [`matroid`]: transversal/lattice-path matroid machinery (presentations,
//!   rank via matching, bases, ports, hierarchy, clones)
//! - [`weights`]: isolating weight functions and the matching-weight bounds
//! - [`ff`]: exact finite field arithmetic (prime and extension fields),
//!   primality, irreducible polynomial search, and exact linear algebra
//! - [`repr`]: the representation constructions and the exhaustive verifier
//! - [`sss`]: vector secret sharing on matroid ports
//! - [`sweep`]: desk-scale exhaustive property sweeps
//! - [`json`]: serialized interchange formats

pub mod ff;
pub mod json;
pub mod matroid;
pub mod repr;
pub mod sss;
pub mod sweep;
pub mod weights;

mod error;

pub use error::{Error, Result};

/// Largest ground-set size accepted by oracles that enumerate subsets of a
/// single given set.
pub const MAX_SINGLE_SUBSET_N: usize = 16;

/// Largest ground-set size accepted by oracles that sweep all subsets of the
/// ground set (clone detection, hierarchy, exhaustive verification).
pub const MAX_SWEEP_N: usize = 12;

/// Largest number of codewords enumerated by the secret sharing privacy
/// check and by field element enumeration.
pub const MAX_ENUMERATION: u64 = 2_000_000;
