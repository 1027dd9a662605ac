//! Chord-diagram calculus for filling arc systems on a genus-g surface with
//! one marked point: orbit enumeration, the chain-complex boundary operator,
//! reduction of any class to translates of the single zigzag generator, and
//! machine verification of the genus-1 and genus-2 presentations.

pub mod acceptance;
pub mod diagram;
pub mod enumerate;
pub mod formal;
pub mod format;
pub mod homology;
pub mod labelled;
pub mod mapping_class;
pub mod matrix;
pub mod oriented;
pub mod presentation;
pub mod reduction;
pub mod rng;
pub mod words;

pub use diagram::{ChordDiagram, CycleDecomposition, DiagramError, SymmetryReport};
pub use enumerate::{max_arity_check, Matchings, OrbitCatalog};
pub use labelled::{
    boundary_labelled, boundary_labelled_sum, insert_chord, LabelledDiagram, LabelledSum,
    OrientedLabelled,
};
pub use mapping_class::{Genus2Classes, MappingClass, MappingClassSum};
pub use oriented::{
    boundary, boundary_squared_zero, boundary_terms, stabilizer_relation, ChainError, OrbitSum,
    OrientedDiagram,
};
pub use words::{GroupWord, SurfacePresentation, WordError};

/// The guide chapters from `book/`, included here so `cargo test` compiles
/// and runs every example they contain.
#[doc(hidden)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/chord-diagrams.md")]
    pub mod chord_diagrams {}
    #[doc = include_str!("../../../book/src/orbits.md")]
    pub mod orbits {}
    #[doc = include_str!("../../../book/src/boundary.md")]
    pub mod boundary {}
    #[doc = include_str!("../../../book/src/surface-words.md")]
    pub mod surface_words {}
    #[doc = include_str!("../../../book/src/reduction.md")]
    pub mod reduction {}
    #[doc = include_str!("../../../book/src/presentations.md")]
    pub mod presentations {}
    #[doc = include_str!("../../../book/src/homology.md")]
    pub mod homology {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
