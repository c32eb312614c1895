//! Exact classification of two-distance sets through candidate Gram matrices.
//!
//! The crate is `no_std` and only needs `alloc`. Everything that touches the
//! file system, threads or the command line lives in the `distset` crate.

#![no_std]

extern crate alloc;

pub mod atlas;
pub mod dissolve;
mod error;
pub mod exact;
pub mod gram;
pub mod graph;

pub use error::Error;
pub use graph::{Graph, GraphCode};
