pub mod analysis;
pub mod enumerate;
pub mod eqsys;
pub mod error;
pub mod presentation;
pub mod series;
pub mod tree;

pub use error::{Error, Result};
