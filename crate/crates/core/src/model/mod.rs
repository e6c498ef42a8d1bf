//! A finite-scale realisability model: combinatory logic as the pca,
//! finite assemblies and the modest truncation.

pub mod assembly;
pub mod pca;
pub mod vectors;

/// Default reduction fuel.
pub const DEFAULT_FUEL: u64 = 100_000;
