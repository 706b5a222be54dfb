//! Executable combinatorics of the simplex category: pushouts and balanced
//! squares, completeness checks for finite simplicial sets, acyclicity of
//! simplicial complexes, and filler construction for acyclic
//! configurations in databases, pseudometrics and joint distributions.

pub mod acyclic;
pub mod delta;
pub mod instances;
pub mod squares;
pub mod sset;
pub mod vee;

pub use delta::{enumerate_maps, DeltaError, Generator, MonotoneMap};
pub use squares::{Grid, Span, Square, SquareError, Tiling};
