//! Lusternik-Schnirelmann category, topological complexity and wildness rank
//! for finite multigraphs and for a symbolic family of one-dimensional Peano
//! continua.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`]: multigraphs with exact rational points and paths, spanning
//!   forests, deforestation, and the closed-form graph invariants.
//! * [`cohomology`]: degree-one rational cohomology and the zero-divisor
//!   cup-length lower bound for topological complexity.
//! * [`planner`]: executable stratified motion plans with `TC(G) + 1` strata,
//!   product filtrations, and a sampling verifier.
//! * [`wild`]: the expression calculus for wild spaces, with iterated wild
//!   sets, wildness rank, `cat`, `TC` and filtration certificates.
//! * [`spacefile`] and [`report`]: the file format and the machine-readable
//!   report consumed by the `wildcat` command-line tool.

pub mod cohomology;
pub mod graph;
pub mod planner;
pub mod random;
pub mod report;
pub mod spacefile;
pub mod syntax;
pub mod wild;
