//! Colourings of contact graphs of two-dimensional complexes and the
//! generic colouring oracles.

pub mod ball;
pub mod basic;
pub mod canonical;
pub mod distance;
pub mod fathers;
pub mod grading;
pub mod upsilon;

pub use ball::{check_degree_bound, colour_ball, colour_contact_graph, palette_bound, BallColouring, ContactColouring};
pub use basic::{exact_chromatic_number, exact_colouring, greedy_colour, verify_colouring, Colouring};
pub use canonical::{canonical_path, canonical_paths, check_weak_combing, CanonicalPath};
pub use distance::hyperplane_distance;
pub use fathers::{fathers, FatherData};
pub use grading::{grade, Grading};
pub use upsilon::{build_upsilon, colour_upsilon, separating_osculator, UpsilonDecomposition};
