//! Order-enriched formal concept analysis.

pub mod bits;
pub mod classic;
pub mod cli;
pub mod dm;
pub mod enriched;
pub mod equivalence;
pub mod error;
pub mod io;
pub mod laws;
pub mod order;
pub mod random;
pub mod relation;
pub mod sum;

pub use error::{Error, Result};
