//! Generators and transformers of median graphs.

pub mod boxes;
pub mod fixtures;
pub mod lifted;
pub mod recubulation;
pub mod theorem2;
pub mod wallspace;

pub use boxes::{burling, burling_scene, intersection_graph, Box3, BoxFamily, BoxStats, BurlingScene, Probe};
pub use fixtures::{
    grid, path, random_branching_complex, random_square_complex, simplex_graph, square_union, staircase, RandomParams,
};
pub use lifted::{box_complex, lifted_complex, BoxGrid, LiftedComplex};
pub use recubulation::{recubulate, recubulation_degree_bound, verify_recubulation, Recubulation, RecubulationCheck};
pub use theorem2::{chain, theorem2_family, wedge, Chain, FamilyMember, FamilyStats, MAX_THEOREM2_N};
pub use wallspace::{dual_cube_complex, DualComplex, Wallspace};
