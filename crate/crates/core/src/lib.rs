//! Exact arithmetic for cluster-pattern mutation and the g-vector fans of
//! skew-symmetrizable exchange matrices.
//!
//! Directions, vertices and words are 1-based throughout the public API;
//! only [`IntMatrix`] storage is 0-based.

pub mod chebyshev;
pub mod corpus;
pub mod error;
pub mod exchange;
pub mod fan;
pub mod io;
pub mod matrix;
pub mod quadratic;
pub mod rank2;
pub mod rank3;
pub mod render;
pub mod seed;

pub use chebyshev::{chebyshev_u, ChebyshevTable, ChebyshevValue};
pub use error::{Error, Result};
pub use exchange::{skew_symmetrizer, CyclicPresentation, ExchangeMatrix};
pub use fan::{cone_contains, interiors_disjoint, ExploreOptions, Fan, Strictness};
pub use matrix::IntMatrix;
pub use quadratic::QuadraticNumber;
pub use rank2::{g_sequence, limit_vectors, rank2_matrices, Direction};
pub use rank3::{
    fan_type, find_band_index, lifted_sequences, limit_rays, pair_asymptotics, vertex_type, CaseLabel,
    FanTypeReport, VertexType, VertexTypeReport,
};
pub use render::{arc_polyline, project_ray, render_svg, RenderOptions, Rendering};
pub use seed::{ConeKey, GCone, Seed, SeedReport, Sign};
