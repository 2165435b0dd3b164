//! Non-zero sum Heffter arrays over cyclic groups.
//!
//! The crate builds the arrays (diagonal, rectangular, transversal sign-flip
//! and randomized constructions), certifies them, turns ordered arrays into
//! relative difference families of paths, develops those into cyclic
//! decompositions of complete multipartite graphs, and builds the
//! Archdeacon biembedding of the complete graph together with its genus.
//!
//! Coordinates exposed by the public API are 1-based, matching the array
//! text format.

pub mod array;
pub mod cli;
pub mod construct;
pub mod decomp;
pub mod embed;
mod error;
pub mod format;
pub mod params;
pub mod residue;
pub mod skeleton;
pub mod sums;
pub mod transversal;
pub mod verify;

pub use array::{Cell, PFArray};
pub use construct::{ConstructionReport, Method};
pub use decomp::{Axis, Circuit, Decomposition, DifferenceFamily, PathBlock};
pub use embed::{Embedding, Face, FaceColor, RotationSystem};
pub use error::{Error, Result};
pub use params::ArrayParams;
pub use residue::Residue;
pub use skeleton::Skeleton;
pub use transversal::Transversal;
pub use verify::{OrderingPair, SearchOutcome, Verdict, Violation};
