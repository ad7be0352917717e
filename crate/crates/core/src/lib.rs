//! Combinatorial simplicial surfaces and their cubic face graphs.
//!
//! The crate covers the incidence model of closed simplicial surfaces
//! ([`surface`]), the graph algorithms used on face and edge graphs
//! ([`graph`], [`pattern`]), the bridges between the two ([`duality`]),
//! simplicial (strong) embeddings of cubic graphs via cycle double covers
//! ([`embedding`]), the classification of re-embeddings of simplicial spheres
//! on projective planes, tori and Klein bottles ([`reembed`]) and an
//! isomorph-free generator of simplicial spheres ([`generation`]).

pub mod canon;
pub mod duality;
pub mod embedding;
pub mod error;
pub mod format;
pub mod generation;
pub mod graph;
pub mod pattern;
pub mod reembed;
pub mod surface;
pub mod table;
pub mod waist;

pub use duality::{edge_graph, face_graph, rotation_system_from_sphere, DualArcMap};
pub use embedding::{
    enumerate_cdcs, enumerate_vertex_faithful_surfaces, is_strong, surface_from_cycles,
    trace_facial_walks, CycleDoubleCover, EmbeddingScheme, FacialWalk, RotationSystem, TraceResult,
    DEFAULT_MAX_CYCLES,
};
pub use error::{Error, Result};
pub use format::{
    parse_graph, parse_surface, parse_surfaces, write_faces, write_graph, write_umbrellas,
};
pub use generation::{
    double_ngon, generate_spheres, generate_spheres_up_to, prop45_family, tetrahedral_extension,
};
pub use graph::{AutomorphismGroup, Cycle, CyclicConnectivity, Graph};
pub use pattern::{find_pattern_subgraphs, PatternGraph, PatternMatch};
pub use reembed::{
    count as count_reembeddings, enumerate_reembeddings, oracle_reembeddings, prefilter,
    projective_bound_check, Prefilter, Realisation, ReembeddingClass, TargetSurface,
};
pub use surface::{Orientation, SimplicialSurface, SurfaceClass, SurfaceKind, UmbrellaDescriptor};
pub use table::{reembedding_table, write_tsv, Counting, TableRow};
pub use waist::{cut_along_3waist, find_waists, Waist};
