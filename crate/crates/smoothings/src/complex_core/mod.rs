//! Simplicial complexes, free chain complexes, and cohomology with integer
//! and `Z/m` coefficients together with representative cocycles.

mod chain;
mod cohomology;
mod facets;
mod models;
mod reduction;
mod simplicial;

pub use chain::{ChainComplex, SparseMatrix};
pub use cohomology::{CohomClass, CohomologyEngine, CohomologyGroup, TopStructure};
pub use facets::{parse_facets, read_facet_file, write_facets};
pub use models::{boundary_of_simplex, projective_space, rp2_six_vertex};
pub use simplicial::{build_complex, product_complex, SimplicialComplex};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("facet list is empty")]
    NoFacets,
    #[error("facet {0} is empty")]
    EmptyFacet(usize),
    #[error("facet {facet} repeats vertex {vertex}")]
    DuplicateVertex { facet: usize, vertex: u32 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("ridge {ridge:?} lies in {count} facets, expected 2")]
    NotPseudomanifold { ridge: Vec<u32>, count: usize },
    #[error("complex is not pure")]
    NotPure,
    #[error("boundary composition into degree {0} is nonzero")]
    BoundarySquare(usize),
    #[error("malformed chain complex: {0}")]
    Shape(String),
    #[error("coefficient overflow during reduction")]
    CoefficientOverflow,
    #[error("degree {degree} is outside 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("cochain of degree {degree} is not a cocycle mod {modulus}")]
    NotACocycle { degree: usize, modulus: u64 },
    #[error("cochain has length {found}, expected {expected}")]
    CochainLength { expected: usize, found: usize },
    #[error("class belongs to a different complex")]
    ForeignClass,
}
