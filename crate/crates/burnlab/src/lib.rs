//! burnlab: graph burning on grids.
//!
//! The burning process spreads fire to all neighbors of burning vertices
//! each round and ignites one new source per round; the burning number
//! `b(G)` is the fewest rounds that burn everything, and `b(G, S)` the
//! fewest that burn a chosen target set. This crate provides:
//!
//! - implicit grid geometry with O(1) distances and balls ([`grid`]),
//!   plus small explicit graphs for subgraph experiments ([`graph`]);
//! - an exact simulator for burning schedules ([`sim`]), covering
//!   certificates and their repair into strict schedules ([`cover`]);
//! - an exact solver for `b(G)` and `b(G, S)` with an independent
//!   brute-force oracle ([`solver`], [`oracle`]);
//! - closed-form lower/upper bound evaluators for fence grids ([`bounds`]);
//! - constructive strategies realizing the upper bounds, with interval
//!   metadata checkable on grids of a hundred million vertices ([`strategy`],
//!   [`scale`]);
//! - enumeration-level verification of the supporting lemmas ([`lemmas`]).

pub mod bounds;
pub mod cover;
pub mod error;
pub mod graph;
pub mod grid;
pub mod lemmas;
pub mod oracle;
pub mod scale;
pub mod sim;
pub mod solver;
pub mod strategy;
pub mod target;

pub use error::{Error, Result};
pub use graph::ExplicitGraph;
pub use grid::{GridSpec, HorizontalPath, Vertex};
pub use sim::{SimMode, SimulationTrace};
pub use solver::{SolveOutcome, SolveResult, SolverConfig};
pub use target::TargetSet;
