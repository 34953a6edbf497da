//! Random online domination of paths and related graphs.
//!
//! Vertices of a graph are revealed in the order given by a permutation, and
//! each revealed vertex joins the dominating set unless a neighbour already
//! belongs to it. This crate runs the procedure, computes its exact expected
//! output size for paths, cycles, stars, wheels and complete multipartite
//! graphs, counts the revelation orders of the path that give the largest
//! and smallest possible sets, and samples the size distribution on long
//! paths.
//!
//! Counts are [`BigCount`]s and expectations are [`ExactRational`]s, so every
//! cross-check between independent routes is an exact equality.

pub mod domination;
pub mod enumerate;
pub mod error;
pub mod expectation;
pub mod extremal;
pub mod montecarlo;
pub mod oracle;
pub mod serde_util;
pub mod series;
pub mod verify;

pub use domination::{
    gamma, is_independent_dominating, run_online_domination, DominationOutcome, Family, GraphSpec, Permutation,
};
pub use enumerate::BruteForceOptions;
pub use error::{Error, Result};
pub use expectation::{ExactRational, ExpectationTable};
pub use extremal::{BigCount, BoundKind, ExtremalReport, Method};
pub use montecarlo::{Histogram, Normalization, SampleConfig};
pub use series::PowerSeries;
