//! JSON file formats for algebras, modules and groups, the shipped catalog,
//! and the result document written by the CLI.
//!
//! Every number is a rational string such as `"3"` or `"-1/2"`; floats are
//! rejected. Polynomials are strings in `x1..xd` (and `y1..yd` for group
//! laws).

mod files;
mod loader;
mod pi1;
mod result;

pub use files::{
    cochain_json, lie_file_from_algebra, module_file_from_module, poly_group_file, BracketEntry, GroupFile, LeviSpec,
    LieFile, ModuleFile, Pi1Ref,
};
pub use loader::{catalog_dir, GroupSpec, Loader, LoadedModule, CATALOG_ENV};
pub use pi1::Pi1Catalog;
pub use result::{InputHash, ResultFile, Status, SCHEMA_VERSION};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}:{location}: {message}")]
    Parse { path: String, location: String, message: String },
    #[error("{path}: {message}")]
    Validation { path: String, message: String },
}

impl FormatError {
    pub(crate) fn io(path: &std::path::Path, e: &std::io::Error) -> Self {
        FormatError::Io { path: path.display().to_string(), message: e.to_string() }
    }

    pub(crate) fn parse(path: &str, location: impl Into<String>, message: impl Into<String>) -> Self {
        FormatError::Parse { path: path.to_string(), location: location.into(), message: message.into() }
    }

    pub(crate) fn invalid(path: &str, message: impl ToString) -> Self {
        FormatError::Validation { path: path.to_string(), message: message.to_string() }
    }

    pub(crate) fn json(path: &str, e: &serde_json::Error) -> Self {
        FormatError::parse(path, format!("{}:{}", e.line(), e.column()), e.to_string())
    }

    pub fn is_io(&self) -> bool {
        matches!(self, FormatError::Io { .. })
    }
}
