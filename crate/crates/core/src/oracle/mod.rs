//! Invariants recomputed directly from a materialized graph with classical
//! graph algorithms. Nothing here consults the closed forms.

mod connectivity;
mod cycles;
mod distance;
mod domination;
mod matching;

pub use connectivity::{
    articulation_points, bridges, edge_connectivity_oracle, vertex_connectivity_oracle,
};
pub use cycles::{
    circuit_rank_oracle, component_count, degree_sequence_oracle, girth_oracle, omega_oracle,
    part_size, Girth,
};
pub use distance::{
    bfs, distance4_class_histogram, distance_histogram, eccentricity_profile, AllPairs, BfsResult,
    EccentricityProfile,
};
pub use domination::{is_dominating, min_dominating_set, Domination, DEFAULT_EXHAUSTIVE_LIMIT};
pub use matching::max_matching;
