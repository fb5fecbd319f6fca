pub mod algcore;
pub mod compjordan;
pub mod error;
pub mod exactla;
pub mod liecon;
pub mod lycore;
pub mod triples;
pub mod weights;

pub use error::{Error, Result};
