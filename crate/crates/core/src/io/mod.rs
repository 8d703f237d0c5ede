//! File formats: Burmeister `.cxt`, CSV cross tables, JSON and DOT.

pub mod cxt;
pub mod dot;
pub mod json;
pub mod table;

use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::classic::ClassicContext;

pub use cxt::{parse_cxt, write_cxt, CxtError};
pub use dot::emit_dot;
pub use json::emit_json;
pub use table::parse_csv;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Cxt,
    Csv,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Cxt => "cxt",
            Format::Csv => "csv",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub path: PathBuf,
    pub format: Format,
}

/// A named classical context, with where it was read from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextDocument {
    pub name: String,
    pub context: ClassicContext,
    pub source: Option<Provenance>,
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Cxt { path: String, source: CxtError },
    #[error("{path}: {message}")]
    Csv { path: String, message: String },
}

/// Reads a `.csv` cross table or, for any other extension, a `.cxt` file.
pub fn read_context(path: &Path) -> Result<ContextDocument, ReadError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| ReadError::Io { path: shown.clone(), source })?;
    let is_csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    let (mut doc, format) = if is_csv {
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        (parse_csv(&name, &text).map_err(|message| ReadError::Csv { path: shown, message })?, Format::Csv)
    } else {
        (parse_cxt(&text).map_err(|source| ReadError::Cxt { path: shown, source })?, Format::Cxt)
    };
    doc.source = Some(Provenance { path: path.to_path_buf(), format });
    Ok(doc)
}
