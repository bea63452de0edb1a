pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod fibers;
pub mod innerclass;
pub mod input;
pub mod intlin;
pub mod oracle;
pub mod rootdata;

pub use error::{Error, Result};
