//! Command-line front end for the `franklin-core` algorithms.

pub mod app;
pub mod document;
pub mod error;

pub use app::{run, Io};
pub use document::{Format, SquareDocument, SCHEMA};
pub use error::CliError;
