//! Crystal combinatorics for symplectic tableaux on the alphabet
//! 1 < ... < m < bar m < ... < bar 1: validation and enumeration of the
//! tableaux of a shape, the raising and lowering operators, the rotation
//! built from the simple reflections, exact q-counting polynomials, and a
//! complete cyclic sieving verdict with every intermediate claim checked
//! rather than assumed.
//!
//! Enumeration and the heavier scans run data-parallel under the
//! `parallel` feature (on by default); single-threaded reference
//! implementations are always compiled and exposed alongside them.

#![forbid(unsafe_code)]

pub mod crystal;
pub mod csp;
pub mod enumerate;
pub mod error;
pub mod letter;
pub mod partition;
pub mod qpoly;
pub mod tableau;
pub mod weight;
pub mod word;

pub use error::Error;
pub use letter::Letter;
pub use partition::{Cell, Partition};
pub use tableau::{KNTableau, Violation};
pub use weight::Weight;
