//! Explicit minor models: scaled grid embeddings of subdivisions, prisms in
//! grids, grids in twisted prisms, and the combinatorial helpers they use.

mod grid_cycles;
mod monotone;
mod packing;
mod phi;
mod prism;
mod twisted;

pub use grid_cycles::{grid_band_cycles, grid_hamiltonian_cycle};
pub use monotone::{es_monotone, Direction, MonotoneWitness};
pub use packing::{cycle_packing_exact, cycle_transversal_exact, CYCLE_PACKING_MAX_N};
pub use phi::{grid_scale, subdivision_grid_model};
pub use prism::{grid_prism_model, prism_model_from_cycles};
pub use twisted::{
    has_matching_four_cycle, twisted_prism_grid_model, twisted_prism_grid_model_traced, TwistedTrace, TWISTED_CORE,
};
