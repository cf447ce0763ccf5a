//! Exact combinatorics of curve classes on rational surfaces and of the
//! colored-graph posets indexing correspondence transforms.
//!
//! The crate has four layers:
//!
//! - [`surface`]: the degree-2 homology lattices of blow-ups of the plane
//!   and the two sphere bundles over the sphere, with exact intersection
//!   pairing, first Chern pairing and rational symplectic areas.
//! - [`classes`]: exhaustive enumeration of (-1) classes and fiber classes,
//!   Cremona reduction to reduced form, two-term (-1) decompositions,
//!   necessary uniruledness checks, and minimal-area searches.
//! - [`graph`] / [`order`]: colored weighted graphs with multiplicity
//!   partitions, their dimension formula, admissibility and standardness,
//!   and the partial order on disjoint unions.
//! - [`poset`] / [`triangular`]: finite lower sets under the graph order,
//!   the restricted index with a divisor point insertion, and exact
//!   lower-triangular transforms with forward-substitution inversion.
//!
//! Every operation is a pure function on immutable values; results are
//! deterministic and all arithmetic is arbitrary-precision.
//!
//! The `examples/` directory contains one runnable program per capability;
//! the `uniruled` binary exposes the same operations as batch subcommands.

pub mod classes;
pub mod error;
pub mod graph;
pub mod io;
pub mod order;
pub mod poset;
pub mod surface;
pub mod triangular;

pub use classes::{
    cremona_reduce, decompose_fiber_class, decompose_fiber_class_with, default_witnesses,
    enumerate_fiber_classes, enumerate_minus_one_classes, is_reduced, minimal_fiber_class,
    minimal_uniruled_for_bundle, plane_minimal_uniruled, uniruled_necessary, BundleMinimal,
    CremonaMove, FiberClass, MinusOneClass, PlaneMinimalUniruled, UniruledReport,
};
pub use error::{Error, Result};
pub use graph::{
    classify, dimension, disjoint_union, is_standard, lex_compare, size_compare, Admissibility,
    ClassData, CohWeight, ColoredGraph, GraphContext, GraphList, LexOrd, SizeOrd, StandardReport,
    WeightedPartition,
};
pub use order::{graph_compare, GraphOrd, ListKind};
pub use poset::{build_dpt_index, lower_set, GraphPoset};
pub use surface::{DivisorClass, SurfaceModel, SymplecticForm};
pub use triangular::{InvariantVector, TriangularMap};
