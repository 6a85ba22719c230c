//! Exact construction of graphs and trees whose adjacency spectra contain
//! prescribed totally real algebraic integers, with independent
//! certification by integer polynomial divisibility.

pub mod certificate;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod poly;
pub mod search;
pub mod spectral;
pub mod witness;

pub use certificate::{Certificate, Claim, Step, VerifyReport};
pub use constructions::{GadgetVariant, PrescribedSpectrum};
pub use error::{Error, ErrorKind};
pub use graph::{disjoint_union, Family, Graph, GraphError};
pub use matrix::IntegerMatrix;
pub use poly::{IntPoly, ProfileMode, RootBox};
pub use search::{JoinBound, SearchBound, SearchMode};
pub use spectral::{Certification, DivisibilityMode, Limits, NecessaryReport};
pub use witness::{WitnessCache, WitnessKind, WitnessOrigin, WitnessSource};
