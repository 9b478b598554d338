//! Lights Out on graphs: universal solvability over GF(2), uniform sampling
//! of unlabeled graphs, exact Burnside counts and Monte Carlo estimates.

pub mod cli;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod graph6;
pub mod montecarlo;
pub mod oracle;
pub mod output;
pub mod partition;
pub mod sampler;
pub mod selfcheck;

pub use error::{Error, Result};
pub use gf2::{Gf2Matrix, Gf2Vector};
pub use graph::{canonical_form, Configuration, Graph, Permutation};
pub use montecarlo::{
    margin_of_error, run_estimate, EstimateMode, EstimateRequest, EstimateResult,
};
pub use oracle::{exact_counts, ExactCountRow};
pub use partition::{ClassWeight, Partition};
pub use sampler::{compute_gn, GnSource, PartitionSelector};
