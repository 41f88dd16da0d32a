//! Compatible connectivity augmentation of isomorphic planar drawings.
//!
//! Given `k` isomorphic planar straight-line drawings of a disconnected
//! labelled graph, this crate computes a connected supergraph together with
//! `k` planar drawings of it, one extending each input drawing, all pairwise
//! isomorphic. The number of added vertices and edges is `O(n * r^(1-1/k))`
//! for `n` vertices and `r` components. It also generates the adversarial
//! nested-polygon instances on which that size is unavoidable, and measures
//! both against the theoretical envelope.

pub mod adversarial;
pub mod boundary;
pub mod drawing;
pub mod embedding;
pub mod error;
pub mod generator;
pub mod geom;
pub mod graph;
pub mod instance;
pub mod iso;
pub mod linf;
pub mod pipeline;
pub mod points;
pub mod route;
pub mod scalar;

pub use drawing::{validate_planar, PlanarDrawing, Violation};
pub use embedding::{derive_embedding, outer_boundary, BoundaryWalk, Embedding};
pub use error::{Error, Result};
pub use geom::{orient, Point2, Segment};
pub use graph::{LabelledGraph, VertexId};

pub use instance::Instance;
pub use iso::drawings_isomorphic;
pub use pipeline::{compatible_augment, AugmentOptions, CompatibleResult};

pub use scalar::Scalar;
