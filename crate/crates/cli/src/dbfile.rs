use std::fs;
use std::path::Path;

use descartes_core::realize::Database;
use descartes_core::Error;

use crate::error::CliError;

/// The database at `path`, or the embedded one when `path` is `None`.
pub fn load_database(path: Option<&Path>) -> Result<Database, CliError> {
    let Some(path) = path else {
        return Ok(Database::embedded());
    };
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    Database::parse(&text).map_err(|e| match e {
        Error::Database { line, message } => CliError::Corrupt {
            path: path.to_path_buf(),
            line,
            message,
        },
        other => CliError::Core(other),
    })
}
