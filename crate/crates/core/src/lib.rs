//! Arc complexes, flip graphs and cluster seeds of ciliated surfaces.
//!
//! The crate builds the arc complex and flip graph of every surface whose
//! arcs can be listed explicitly (polygons, once-punctured polygons and a
//! winding window of the annulus with one marked point per boundary), and
//! explores flip graphs of arbitrary surfaces from gluing data. On top of
//! that it computes automorphism groups, the dihedral mapping class action,
//! and the signed adjacency matrices of triangulations with their mutations.

pub mod arcs;
pub mod cli;
pub mod cluster;
pub mod complexes;
pub mod error;
pub mod surface;
pub mod symmetry;
pub mod triangulation;

pub use arcs::{Arc, ArcModel};
pub use complexes::{FlipGraph, SimplicialComplex};
pub use error::{Error, Result};
pub use surface::{CiliatedSurface, ClassTag, SurfaceClass};
pub use triangulation::{ExplicitTriangulation, GluedTriangulation};
