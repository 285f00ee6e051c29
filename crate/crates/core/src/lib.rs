//! Motif correlation clustering and overlapping community detection with
//! edge-triangle clique covers.
//!
//! * [`graph`]: simple graphs, edge-list I/O, triangles, maximal cliques.
//! * [`instance`]: pair/triple similarity weights and the clustering cost.
//! * [`mmcc`]: LP relaxation, solvers, LP/MPS export and region-growing rounding.
//! * [`anneal`]: feature-assignment scores and the simulated annealing search.
//! * [`bounds`]: cover-number bounds and the randomized clique cover.
//! * [`oracles`]: exhaustive ground truth for small instances.
//! * [`cli`]: the `motifcc` command line.

pub mod anneal;
pub mod bitset;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod graph;
pub mod instance;
pub mod mmcc;
pub mod oracles;
pub mod tuples;

pub use error::{Error, Result};
pub use graph::{
    enumerate_triangles, maximal_cliques, parse_edge_list, turan_graph, EdgeListOptions, Graph,
    Triple,
};
pub use instance::{build_instance, mmcc_cost, Partition, WeightConfig, WeightedInstance};
