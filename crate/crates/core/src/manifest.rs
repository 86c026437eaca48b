//! Versioned JSON export of the registry metadata.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::registry::{records, ProblemRecord};

pub const MANIFEST_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema_version: u32,
    pub problems: Vec<ProblemRecord>,
}

impl Manifest {
    /// Every registered problem with default parameters, sorted by name.
    pub fn from_registry() -> Self {
        Self {
            schema_version: MANIFEST_SCHEMA_VERSION,
            problems: records().cloned().collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serialises");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let m: Manifest = serde_json::from_str(text).map_err(|e| Error::Invalid {
            what: "manifest",
            detail: e.to_string(),
        })?;
        if m.schema_version != MANIFEST_SCHEMA_VERSION {
            return Err(Error::Invalid {
                what: "manifest",
                detail: format!("schema_version {} is not supported (expected {MANIFEST_SCHEMA_VERSION})", m.schema_version),
            });
        }
        Ok(m)
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_json())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid {
            what: "manifest",
            detail: format!("{}: {e}", path.display()),
        })?;
        Self::from_json(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_future_schema() {
        let text = r#"{"schema_version": 99, "problems": []}"#;
        assert!(Manifest::from_json(text).is_err());
    }

    #[test]
    fn labels_are_strings() {
        let m = Manifest::from_registry();
        let v: serde_json::Value = serde_json::from_str(&m.to_json()).unwrap();
        assert!(v["problems"][0]["labels"].is_string());
    }
}
