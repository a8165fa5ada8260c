//! Exact treewidth, brambles, minor models and grid-minor constructions for
//! experimenting with excluded-minor treewidth bounds.

pub mod bounds;
pub mod bramble;
pub mod certificate;
pub mod constructions;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod minor;
pub mod rng;

pub use error::{Error, Result};
pub use graph::Graph;
pub use rng::SplitMix64;
