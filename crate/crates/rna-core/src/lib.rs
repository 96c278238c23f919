//! Parity signed graphs and their **rna** numbers.
//!
//! A parity labeling of a graph on `n` vertices is a bijection onto
//! `{1, ..., n}`; an edge is negative exactly when its endpoint labels have
//! different parity. The rna number `σ⁻(G)` is the minimum number of negative
//! edges over all parity labelings, which equals the minimum size of an edge
//! cut whose sides differ in order by at most one.
//!
//! The crate provides:
//!
//! * [`graph`] — a bitmask-adjacency graph type (up to 64 vertices), family
//!   generators (paths, cycles, stars, wheels, complete graphs, cycle powers,
//!   generalized Petersen graphs) and structural queries (bridges, edge
//!   connectivity, cuts).
//! * [`signing`] — parity labelings, induced edge signs, balance checking.
//! * [`solver`] — exact `σ⁻` computation (exhaustive, minimal-change, and
//!   branch-and-bound enumeration), closed forms, and cut non-existence
//!   verification.
//! * [`constructions`] — named cubic graphs with reference labelings, the
//!   odd-regular bridge constructions, and isomorphism-free enumeration of
//!   small cubic graphs.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod signing;
pub mod solver;

pub use error::{Error, Result};
