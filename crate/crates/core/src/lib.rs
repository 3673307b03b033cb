//! Coloring graphs under neighborhood systems.
//!
//! A neighborhood system assigns every vertex `v` a set `Σ(v)` drawn from
//! its radius-`d` ball; a Σ-coloring gives distinct colors to any two
//! vertices that share some `Σ(w)`. Equivalently it is a proper coloring
//! of the auxiliary graph `G_Σ` built by [`build_sigma_graph`].
//!
//! The crate provides the auxiliary graph and its parameters, constructive
//! colorings (star-coloring pipeline, degeneracy greedy, pair products),
//! extremal generators and extractions, and exact oracles for desk-sized
//! instances. Every exact routine is guarded by a [`Caps`] limit and fails
//! with [`Error::InstanceTooLarge`] rather than approximating.

pub mod arrange;
pub mod color;
pub mod density;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod sigma;
pub mod star;
pub mod verify;

pub use arrange::{arrangeability_exact, arrangeability_of_ordering, ArrangeabilityCertificate};
pub use color::{
    choosability_check, color_with_strategy, is_sigma_valid, sigma_chromatic_exact,
    sigma_color_greedy, sigma_color_product, sigma_color_via_star, ColoringReport, Strategy,
};
pub use density::{densest_subgraph, max_average_degree};
pub use error::{Error, Result};
pub use exact::{chromatic_number_exact, clique_number_exact, Caps};
pub use graph::{
    degeneracy, degeneracy_ordering, greedy_coloring, is_proper, Coloring, Graph, Ordering,
};
pub use hypergraph::{
    extract_rank2_subhypergraph, extract_subdivided_clique, is_rank2_full_on, omega_sigma,
    sigma_clique_to_hypergraph, FullHypergraph,
};
pub use sigma::{build_sigma_graph, mad_sigma, rho, sigma_graph, NeighborhoodSystem, SigmaGraph};
pub use star::{
    acyclic_chromatic_exact, greedy_star_coloring, is_star_coloring,
    orientation_from_star_coloring, star_chromatic_exact, verify_in_orientation, InOrientation,
    ListAssignment, Palette,
};
