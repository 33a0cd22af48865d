//! Finite twisted virtual biracks and the counting invariants they define on
//! twisted virtual link diagrams.
//!
//! The crate is organised bottom-up:
//!
//! - [`birack`]: the structure itself (block-matrix encoding, axiom checks,
//!   derived sideways and kink maps, naming, subbiracks and homomorphisms);
//! - [`enumerate`]: exhaustive search for all structures of a given order and
//!   for the twist involutions compatible with a virtual birack;
//! - [`diagram`]: oriented twisted virtual link diagrams as port graphs, their
//!   text format, builtin examples, framing kinks and local moves;
//! - [`invariants`]: labeling counts, the integral counting invariant and its
//!   image, writhe and polynomial enhancements.
//!
//! Elements are 0-based internally and 1-based in every text format.

pub mod birack;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod invariants;

pub use birack::{Check, DerivedMaps, Structure, TwistedVirtualBirack, ValidationReport};
pub use diagram::{Diagram, FramingVector, Move, MoveKind, Node, Semiarc};
pub use error::{Error, Result};
