//! Simplicial complexes, matching complexes, homology, and finite patches
//! of the Stein–Farley complex.

pub mod graph;
pub mod homology;
pub mod simplicial;
pub mod stein;

pub use graph::{edge_label, independence_complex, matching_complex, Graph};
pub use homology::{connectivity_report, homology, ConnectivityReport, HomologyGroup, Pi1};
pub use simplicial::{maximal_cliques, SimplicialComplex};
pub use stein::{
    ascending_link, cube_span, descending_link_shadow, patch_check, vertex_equal, vertex_link,
    Cube, CubePatchVertex, DescendingLinkShadow, Merge, Patch, PatchReport, VertexLink,
};
