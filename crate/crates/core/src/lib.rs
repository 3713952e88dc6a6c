//! Orders on `r`-multipartitions of `n` parametrised by a rational character,
//! and an exact verifier for the torus fixed points of the Gieseker moduli
//! space in its quiver (ADHM) description.
//!
//! * [`partition`]: partitions, boxes, multipartitions and their enumeration.
//! * [`order`]: shifted contents, the dominance order `≥`, adjacency, the
//!   order `▷`, and the asymptotic-chamber comparator.
//! * [`chamber`]: chambers of the character space and the exhaustive search
//!   for pairs with `Λ ≥ M` but not `Λ ▷ M`.
//! * [`quiver`]: exact rational matrices for fixed points, ADHM and stability
//!   checks, torus weights, determinant sections, and connecting orbits.

pub mod chamber;
pub mod error;
pub mod order;
pub mod partition;
pub mod quiver;
pub mod rational;
pub mod verify;

pub use error::{Error, ParseError, Result};
pub use partition::{
    enumerate_multipartitions, enumerate_partitions, Cell, Multipartition, Partition,
};
pub use rational::Rational;
