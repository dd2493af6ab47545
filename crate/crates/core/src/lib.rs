//! Exact computations with 3-Hom-Lie algebras, their representations and
//! embedding tensors: axiom checkers, derived structures, the cochain complex
//! of an embedding tensor and linear deformations.

pub mod algebra;
pub mod cohomology;
pub mod deformation;
pub mod embedding;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod report;
pub mod representation;
pub mod scalar;
pub mod sparse;
pub mod wedge;

pub use algebra::{HomLeibnizAlgebra, ThreeHomLeibnizAlgebra, ThreeHomLieAlgebra};
pub use embedding::{EmbeddingTensor, EtMorphism, ExampleKind};
pub use error::{Error, Result};
pub use linalg::{Matrix, SubspaceBasis, Tensor, Vector};
pub use report::{CheckReport, Failure};
pub use representation::{LeibnizRepresentation, Representation};
pub use scalar::Scalar;
