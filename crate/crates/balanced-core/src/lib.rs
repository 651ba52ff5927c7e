//! Word calculus of the balanced algebra.
//!
//! Words over the letters `L` and `R` are considered up to *swaps*:
//! exchanging two adjacent nonempty balanced subwords. This crate provides
//! the computational side of that calculus:
//!
//! - [`word`]: words, balance, alphabetical order, elevation sequences and
//!   multisets;
//! - [`prime`]: prime words, unique factorization, upper/lower
//!   classification;
//! - [`reduce`]: reduced words, the closed-form elevation multiset, and the
//!   reduction algorithm computing the canonical (alphabetically minimal)
//!   form of a balanced word;
//! - [`swap`]: single-swap neighbors, finite equivalence classes with their
//!   swap graphs, and reachability under restricted swap types;
//! - [`gens`]: enumeration of primes and their classes, the minimal
//!   generating pairs built from class representatives, and bounded-length
//!   generation/minimality verification;
//! - [`graph`] and [`matrix`]: hypercubes and user graphs, raising/lowering
//!   matrices, intersection numbers, and the matrix-level check that
//!   balanced words in `R` and `L` commute.
//!
//! The crate is `no_std` (with `alloc`); all types are immutable values and
//! all operations are pure functions, so everything is safe to share across
//! threads.

#![cfg_attr(not(test), no_std)]
#![warn(missing_docs)]

extern crate alloc;

pub mod gens;
pub mod graph;
pub mod matrix;
pub mod prime;
pub mod reduce;
pub mod swap;
pub mod word;

pub use crate::gens::{GeneratorPair, PrimeClass, PrimeClassTable};
pub use crate::matrix::Matrix;
pub use crate::prime::{PrimeFactorization, PrimeKind};
pub use crate::reduce::ReducedParams;
pub use crate::swap::{EquivalenceClass, LimitExceeded, SwapType};
pub use crate::word::{ElevationMultiset, Letter, Word};
