//! Exact combinatorics on tournaments.
//!
//! * [`tournament`]: bit-row representation, generators and the
//!   `<n>:<bits>` text format.
//! * [`edge_scores`]: per-arc score tuples, the closed-form 5-cycle count
//!   and bounds derived from it.
//! * [`census`]: brute-force cycle oracles, the twelve classes of 5-vertex
//!   tournaments and the linear relations among edge-sum quantities.
//! * [`acyclic`]: transitive subtournament counts with their lower bound.
//! * [`scan`] / [`verify`]: Monte-Carlo sampling and property suites.
//!
//! Hot loops go through [`exec::Exec`], which uses rayon when the
//! `parallel` feature (on by default) is enabled.

pub mod acyclic;
pub mod census;
pub mod edge_scores;
pub mod error;
pub mod exec;
pub mod rational;
pub mod scan;
mod subsets;
pub mod tournament;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
pub use rational::Rational;
pub use tournament::{Seed, Tournament};
