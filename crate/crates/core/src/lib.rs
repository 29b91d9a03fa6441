pub mod bwgroup;
pub mod cli;
pub mod contfrac;
pub mod error;
pub mod fibonacci;
pub mod fixtures;
pub mod iet;
pub mod numeric;
pub mod permsign;
pub mod sturmian;
pub mod words;

pub use error::{Error, Result};
