//! Exact computation of chromatic quasisymmetric functions (CQFs) of
//! acyclically oriented graphs, together with the algebra needed to decide
//! symmetry and e-positivity, the mountain-style graph families whose CQFs
//! are symmetric, and executable ascent-preserving coloring maps with
//! exhaustive verification harnesses.
//!
//! All arithmetic is exact: polynomial coefficients are arbitrary-precision
//! integers, and a homogeneous degree-n quasisymmetric function is stored by
//! its finite set of composition-indexed coefficients, which determines it in
//! infinitely many variables.
//!
//! Module map:
//! - [`qpoly`]: univariate polynomials in q over the integers
//! - [`composition`]: compositions and partitions
//! - [`qsym`]: the quasisymmetric/symmetric function algebra (monomial basis,
//!   quasi-shuffle product, symmetry tests, e-expansion, palindromicity,
//!   Lyndon words and the determinant generators)
//! - [`graph`]: acyclically oriented labeled graphs and their poset structure
//! - [`engine`]: proper-coloring enumeration and the CQF itself
//! - [`families`]: mountain, bottomless and mixed mountain graphs, unit
//!   interval graphs, small oriented trees/stars/paths/cycles, and exhaustive
//!   enumeration of small connected DAGs
//! - [`bijections`]: the coloring maps (component swap, palette cycle,
//!   horizontal reflect, clique swap, chain recoloring) and their verifiers

pub mod bijections;
pub mod composition;
pub mod engine;
pub mod families;
pub mod graph;
pub mod qpoly;
pub mod qsym;

pub use composition::{Composition, Partition};
pub use engine::Coloring;
pub use graph::OrientedGraph;
pub use qpoly::QPoly;
pub use qsym::{QSymElement, SymExpansion};
