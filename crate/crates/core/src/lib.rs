//! Exact graph pebbling: solvability, critical distributions, the pebbling
//! parameters `p`, `o`, `c_r`, `c_g`, `c_u`, graph weight, and the
//! greedy/thrifty classification of small graphs.

pub mod graph;
pub mod parameters;
pub mod pebble;
pub mod reconstruct;
pub mod reference;
pub mod solver;
pub mod verify;

pub use graph::{distances, make_family, DistanceTable, Family, Graph, GraphError};
pub use pebble::{weight, Distribution, DistributionError, DyadicWeight, RootedDistribution};
pub use solver::{Classification, SolveCertificate, Solver, SolverError};
pub use parameters::{full_report, Analysis, Options, ParameterError, ParameterReport};
