//! Corpus-driven verification of S-r-ideal theorems and the `ringlab` CLI.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod registry;
pub mod report;
pub mod runner;

pub use error::{Result, VerifierError};
