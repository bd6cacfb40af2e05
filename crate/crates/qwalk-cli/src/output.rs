//! Output formatting and delivery.
//!
//! All numeric fields are serialized with 15 significant digits. CSV uses a
//! header row, comma delimiters, and `\n` line endings; JSON objects keep
//! fixed key names. Output goes to stdout unless `--out` names a file.

use std::fs;
use std::io::Write;
use std::path::Path;

/// Command failure with the exit code it maps to: 2 for usage or parse
/// errors, 3 for I/O errors.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<qwalk_core::Error> for CliError {
    fn from(err: qwalk_core::Error) -> Self {
        CliError::Usage(err.to_string())
    }
}

/// Scientific notation with 15 significant digits, e.g. `6.69265309219338e-1`.
/// Valid as both a CSV float and a JSON number.
pub fn fmt15(x: f64) -> String {
    format!("{x:.14e}")
}

/// Rounds to 15 significant digits for JSON serialization, so emitted
/// numbers never carry more precision than the documented schema.
pub fn round15(x: f64) -> f64 {
    fmt15(x).parse().unwrap()
}

/// Writes `contents` to `out` if given, else to stdout. File creation or
/// write failures map to exit code 3.
pub fn emit(out: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, contents)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(contents.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}"))),
    }
}

/// Assembles a CSV document from a header and preformatted rows.
pub fn csv_document(header: &str, rows: &[String]) -> String {
    let mut doc = String::with_capacity(rows.len() * 64 + header.len() + 1);
    doc.push_str(header);
    doc.push('\n');
    for row in rows {
        doc.push_str(row);
        doc.push('\n');
    }
    doc
}
