//! Named example manifolds.
//!
//! The default catalog is `crates/cli/catalog.json`, compiled into the
//! binary. `--catalog-file` loads a replacement with the same schema:
//!
//! ```json
//! [{ "name": "S3-hopf", "data": { "genus": 0, "n": 1, "pairs": [] }, "notes": "..." }]
//! ```
//!
//! Every entry must have a unique name and positive degree.
//!
//! Lens spaces `L(p, q)` with `q ≠ 1` are left out: their Seifert invariants
//! depend on orientation and normalization conventions that vary between
//! sources.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use seifert_cs::SeifertData;

use crate::error::CliError;

pub const DEFAULT_CATALOG: &str = include_str!("../catalog.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub data: SeifertData,
    #[serde(default)]
    pub notes: String,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn parse(json: &str) -> Result<Self, CliError> {
        let entries: Vec<CatalogEntry> =
            serde_json::from_str(json).map_err(|e| CliError::Catalog(e.to_string()))?;
        let mut seen = HashSet::new();
        for e in &entries {
            if !seen.insert(e.name.as_str()) {
                return Err(CliError::Catalog(format!("duplicate entry {:?}", e.name)));
            }
            if !e.data.degree().is_positive() {
                return Err(CliError::Catalog(format!(
                    "entry {:?} has non-positive degree {}",
                    e.name,
                    e.data.degree()
                )));
            }
        }
        Ok(Catalog { entries })
    }

    pub fn builtin() -> Self {
        Catalog::parse(DEFAULT_CATALOG).expect("bundled catalog is valid")
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io { path: path.to_path_buf(), message: e.to_string() })?;
        Catalog::parse(&text)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}
