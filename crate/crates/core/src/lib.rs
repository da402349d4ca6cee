//! Flexible labelings of graphs via NAC-colorings.
//!
//! A graph has an edge labeling with infinitely many non-congruent planar
//! realizations exactly when it has a NAC-coloring. This crate finds such
//! colorings, reports the structural reasons when none exist, builds explicit
//! motions from a coloring, and sweeps small Laman graphs.

pub mod canon;
pub mod error;
pub mod fixtures;
pub mod formats;
pub mod graph;
pub mod laman;
pub mod motion;
pub mod nac;
pub mod report;
pub mod structure;
pub mod svg;
mod unionfind;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, NamedGraph, VertexPartition, VertexSet};
pub use nac::{Color, EdgeColoring, NacColoring, NacVerdict, NacWitness};

/// Environment variable capping the worker threads used by searches.
pub const THREADS_ENV: &str = "NACRIG_THREADS";

/// Sizes the global thread pool from `NACRIG_THREADS`, if set. Call once,
/// before any parallel work.
pub fn configure_threads_from_env() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Error::Contract(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::Contract(format!("thread pool: {e}")))
}
