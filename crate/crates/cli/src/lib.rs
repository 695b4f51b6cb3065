//! Command-line front end for `seifert-cs`.
//!
//! Seifert data is read in the grammar of [`parse::parse_seifert`]; results
//! are printed as `key = value` lines or, with `--json`, as a JSON object
//! whose rationals are `"p/q"` strings. See the repository README for the
//! full output schema.

pub mod app;
pub mod catalog;
pub mod error;
pub mod parse;

pub use app::{run, Outcome};
pub use catalog::{Catalog, CatalogEntry};
pub use error::CliError;
pub use parse::parse_seifert;
