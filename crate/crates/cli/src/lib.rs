//! Command-line front end for `descartes-core`: argument parsing, the
//! JSON-lines record and cache formats, CSV output, database files and
//! rayon-parallel drivers.

pub mod cache;
pub mod cli;
pub mod commands;
pub mod csvout;
pub mod dbfile;
pub mod drivers;
pub mod error;
pub mod records;

pub use cli::Cli;
pub use commands::run;
pub use error::CliError;
