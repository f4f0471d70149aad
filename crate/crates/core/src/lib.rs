//! Recovering pairs of set systems on a finite ground set.
//!
//! A pair of families `(A, B)` of subsets of `[n]` is *recovering* when every
//! difference `A \ B` determines the first set and every difference `B \ A`
//! determines the second one. This crate provides:
//!
//! * bitmask set systems and the recovering / cancellative predicates
//!   ([`sets`]),
//! * the constructive lemmas: canonical pairs, the hexad pair, disjoint-union
//!   products and uniformization ([`constructions`]),
//! * exact union/intersection statistics of a pair ([`stats`]),
//! * exhaustive extremal search at small ground sizes ([`search`]),
//! * the analytic machinery bounding the size of recovering pairs: binary
//!   entropy, its inverses, the two exponent bounds and the staircase
//!   certification of `2.284^n` ([`bounds`]).
//!
//! Numeric bound evaluation is generic over the scalar type via [`Real`];
//! [`Scalar`] is the concrete default used by the binaries and the tests.

pub mod bounds;
pub mod constructions;
mod real;
pub mod search;
pub mod sets;
pub mod stats;

pub use real::Real;

/// Default scalar for bound evaluation.
pub type Scalar = f64;
