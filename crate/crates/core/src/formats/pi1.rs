use serde::{Deserialize, Serialize};

use super::{FormatError, Pi1Ref};
use crate::extension::FiniteAbelianGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Pi1Entry {
    #[serde(rename = "type")]
    pub kind: String,
    pub isogeny: String,
    pub invariant_factors: Vec<u64>,
}

/// Fundamental groups of simple groups by Cartan type and isogeny class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Pi1Catalog {
    pub version: u32,
    pub entries: Vec<Pi1Entry>,
}

impl Pi1Catalog {
    pub fn parse(text: &str, path: &str) -> Result<Self, FormatError> {
        let cat: Pi1Catalog = serde_json::from_str(text).map_err(|e| FormatError::json(path, &e))?;
        if cat.version != 1 {
            return Err(FormatError::invalid(path, format!("unsupported pi1 table version {}", cat.version)));
        }
        for e in &cat.entries {
            FiniteAbelianGroup::from_invariant_factors(e.invariant_factors.clone())
                .map_err(|err| FormatError::invalid(path, format!("{} {}: {err}", e.kind, e.isogeny)))?;
        }
        Ok(cat)
    }

    pub fn lookup(&self, kind: &str, isogeny: &str) -> Option<&[u64]> {
        self.entries.iter().find(|e| e.kind == kind && e.isogeny == isogeny).map(|e| e.invariant_factors.as_slice())
    }

    /// `pi_1` of a product of simple factors.
    pub fn product(&self, refs: &[Pi1Ref], path: &str) -> Result<FiniteAbelianGroup, FormatError> {
        let mut orders = Vec::new();
        for r in refs {
            let f = self
                .lookup(&r.kind, &r.isogeny)
                .ok_or_else(|| FormatError::invalid(path, format!("no pi1 entry for {} {}", r.kind, r.isogeny)))?;
            orders.extend_from_slice(f);
        }
        FiniteAbelianGroup::from_orders(&orders).map_err(|e| FormatError::invalid(path, e))
    }
}
