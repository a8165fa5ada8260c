//! Known treewidth bounds for graphs excluding a fixed minor, and exhaustive
//! or sampled checks of those bounds on small graphs.

mod catalog;
mod verify;

pub use catalog::{catalog, Bound, BoundEntry};
pub use verify::{
    empirical_f, random_samples, verify_bound, verify_bound_jobs, verify_tree_composition,
    verify_tree_composition_jobs, Verdict,
    VerificationMode, VerificationReport, COMPOSITION_MAX_N,
};
