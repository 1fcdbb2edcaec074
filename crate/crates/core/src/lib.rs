//! Exact solvers for double domination and double coalitions in small graphs.
//!
//! Graphs have at most 64 vertices and vertex sets are single `u64` bitmasks.
//! The solvers are:
//!
//! * [`gamma_x2`]: the double domination number,
//! * [`d_x2`]: the double domatic number,
//! * [`dc_number`]: the double coalition number, by pruned set-partition search,
//! * [`construct_dc_partition`]: a dc-partition built from a maximum double
//!   domatic partition, with at least `2·d×2(G)` parts.
//!
//! [`closed_forms`] has the known family values and bounds, and [`scan`] checks
//! them over graph corpora.

pub mod closed_forms;
pub mod coalition;
pub mod ddset;
pub mod domatic;
pub mod edge_list;
mod error;
pub mod generators;
mod graph;
pub mod graph6;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
mod partition;
pub mod scan;
mod vertex_set;

pub use closed_forms::{check_bounds, dc_closed, gamma_x2_closed, BoundId, BoundReport, SolvedInvariants};
pub use coalition::{
    construct_dc_partition, dc_number, forms_double_coalition, max_coalitions_per_part, validate_dc_partition,
    Construction, DcReason, DcResult, DcValidation, SearchLimits,
};
pub use ddset::{
    closed_coverage, gamma_x2, is_double_dominating, is_k_tuple_dominating, is_minimal_dds, shrink_to_minimal,
    GammaResult,
};
pub use domatic::{d_x2, is_domatic_partition_x2, DomaticResult};
pub use edge_list::{parse_edge_list, to_edge_list};
pub use error::{Error, Result};
pub use generators::{enumerate_labeled_graphs, gen_family, gen_random, Family};
pub use graph::{DegreeStats, Graph, N_MAX};
pub use graph6::{parse_graph6, to_graph6};
pub use partition::{Partition, PartitionJson};
pub use vertex_set::VertexSet;
