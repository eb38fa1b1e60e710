//! K-theory of graph C*-algebras from edge-signed directed graphs.
//!
//! The pipeline is purely combinatorial: a [`SignedGraph`] is turned into
//! the integer matrix `ι − Aᵀ` (graded adjacency for the graded theory, the
//! plain adjacency restricted to regular vertices for the ungraded one) and
//! the K-groups are read off as its cokernel and kernel through an exact
//! Smith normal form. The [`clifford`] module provides exact arithmetic in
//! the complex Clifford algebras together with their low-dimensional matrix
//! models.

pub mod clifford;
pub mod error;
pub mod format;
pub mod graph;
pub mod ktheory;
pub mod linalg;
pub mod report;

pub use error::{Error, Result, Violation};
pub use graph::{
    classify, out_degree, validate, Count, CorrespondenceProperties, GraphBuilder,
    GraphProperties, SignedGraph, SignedMultiplicity, VertexId,
};
pub use ktheory::{
    experimental_graded_k_groups, graded_adjacency, graded_k_groups, k_matrix,
    ungraded_adjacency, ungraded_k_groups, KGroups, Mode,
};
pub use linalg::{
    cokernel, elementary_divisors_oracle, kernel_basis, smith_normal_form, AbelianGroup,
    IntMatrix, SmithDecomposition,
};
