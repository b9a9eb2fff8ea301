//! Finite median graphs and CAT(0) cube complexes: hyperplanes, contact and
//! crossing graphs, colourings of contact graphs of two-dimensional
//! complexes, embeddings into products of trees, recubulation, box
//! constructions and event structures.

#![allow(clippy::needless_range_loop)]

pub mod colouring;
pub mod complex;
pub mod constructions;
pub mod dual;
pub mod embedding;
pub mod error;
pub mod events;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod median;

pub use complex::{theta_classes, Complex, ComplexStats, Hyperplane};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use median::{is_median_graph, MedianCheck, MedianGraph};
