pub mod error;
pub mod rootsys;

pub use error::{Error, Result};
pub mod weights;
pub mod chars;
pub mod oracle;
pub mod classify;
pub mod branching;
pub mod inductive;
pub mod cli;
