//! Command-line front end for `cubix-core`: Betti tables of the cubical
//! complexes, verification suites, and a JSON format for custom modules.

pub mod custom;
pub mod error;
pub mod family;
pub mod info;
pub mod report;
pub mod suites;

pub use error::{CliError, Result};
pub use family::{compute, Family, Request};
