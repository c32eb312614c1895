//! File formats, table fixtures, parallel execution and the command line
//! for [`distset_core`].

pub mod catalog;
pub mod cli;
mod error;
pub mod exec;
pub mod fixtures;
pub mod table;
pub mod verify;

pub use error::DistsetError;
