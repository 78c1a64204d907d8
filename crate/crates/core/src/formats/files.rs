use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::FormatError;
use crate::cohomology::{Cochain, ExteriorBasis};
use crate::lie::{LeviPair, LieAlgebra, LieModule};
use crate::linalg::{format_rational, parse_rational, RatMatrix, Rational};
use crate::vanest::{variable_names, PolyGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeviSpec {
    pub red: Vec<usize>,
    pub u: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// Output index `k` (as a string key) to coefficient.
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levi: Option<LeviSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    /// Name of the algebra the action refers to; `"*"` matches any.
    pub algebra: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub trivial: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub adjoint: bool,
    /// One `dim x dim` matrix per basis element of the algebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<String>>>>,
    /// Polynomial group action (entries in `x1..xd`) for unipotent groups.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_action: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Pi1Ref {
    #[serde(rename = "type")]
    pub kind: String,
    pub isogeny: String,
}

/// Group description. The kind is inferred from the fields present:
/// `law` for a polynomial group, `lie` for an algebraic group, otherwise a
/// coefficient group.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lie: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levi: Option<LeviSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi1_derived: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi1_catalog: Option<Vec<Pi1Ref>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center_torus_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub law: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse: Option<Vec<String>>,
}

fn rational_at(path: &str, location: impl FnOnce() -> String, s: &str) -> Result<Rational, FormatError> {
    parse_rational(s).ok_or_else(|| FormatError::parse(path, location(), format!("'{s}' is not a rational \"p\" or \"p/q\"")))
}

impl LieFile {
    pub fn to_algebra(&self, path: &str) -> Result<LieAlgebra, FormatError> {
        if self.basis.len() != self.dim {
            return Err(FormatError::invalid(path, format!("dim is {} but {} basis labels given", self.dim, self.basis.len())));
        }
        let mut seen = std::collections::HashSet::new();
        let mut brackets = Vec::new();
        for (e, entry) in self.brackets.iter().enumerate() {
            if !seen.insert((entry.i, entry.j)) {
                return Err(FormatError::parse(path, format!("brackets[{e}]"), format!("pair ({}, {}) listed twice", entry.i, entry.j)));
            }
            let mut coeffs = Vec::new();
            for (k, v) in &entry.coeffs {
                let k: usize = k
                    .parse()
                    .map_err(|_| FormatError::parse(path, format!("brackets[{e}].coeffs"), format!("'{k}' is not an index")))?;
                coeffs.push((k, rational_at(path, || format!("brackets[{e}].coeffs.{k}"), v)?));
            }
            brackets.push((entry.i, entry.j, coeffs));
        }
        LieAlgebra::from_brackets(self.name.clone(), self.basis.clone(), &brackets).map_err(|e| FormatError::invalid(path, e))
    }

    pub fn levi_pair(&self, g: Arc<LieAlgebra>, path: &str) -> Result<Option<LeviPair>, FormatError> {
        match &self.levi {
            None => Ok(None),
            Some(spec) => LeviPair::new(g, spec.red.clone(), spec.u.clone()).map(Some).map_err(|e| FormatError::invalid(path, e)),
        }
    }
}

pub fn lie_file_from_algebra(g: &LieAlgebra, levi: Option<&LeviPair>) -> LieFile {
    let n = g.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let coeffs: BTreeMap<String, String> = g
                .bracket_basis(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(k, c)| (k.to_string(), format_rational(c)))
                .collect();
            if !coeffs.is_empty() {
                brackets.push(BracketEntry { i, j, coeffs });
            }
        }
    }
    LieFile {
        name: g.name().to_string(),
        dim: n,
        basis: g.labels().to_vec(),
        brackets,
        levi: levi.map(|p| LeviSpec { red: p.red_indices().to_vec(), u: p.u_indices().to_vec() }),
    }
}

impl ModuleFile {
    pub fn to_module(&self, g: Arc<LieAlgebra>, path: &str) -> Result<LieModule, FormatError> {
        if self.algebra != "*" && self.algebra != g.name() {
            return Err(FormatError::invalid(
                path,
                format!("module is over '{}' but the algebra is '{}'", self.algebra, g.name()),
            ));
        }
        let kinds = [self.trivial, self.adjoint, self.action.is_some()].iter().filter(|&&b| b).count();
        if kinds != 1 {
            return Err(FormatError::invalid(path, "exactly one of trivial, adjoint, action must be given"));
        }
        if self.trivial {
            return Ok(LieModule::trivial(g, self.dim));
        }
        if self.adjoint {
            if self.dim != g.dim() {
                return Err(FormatError::invalid(path, format!("adjoint module of '{}' has dim {}", g.name(), g.dim())));
            }
            return Ok(LieModule::adjoint(g));
        }
        let action = self.action.as_ref().expect("checked above");
        let mut mats = Vec::new();
        for (b, m) in action.iter().enumerate() {
            if m.len() != self.dim || m.iter().any(|row| row.len() != self.dim) {
                return Err(FormatError::invalid(path, format!("action[{b}] is not {0}x{0}", self.dim)));
            }
            let mut mat = RatMatrix::zeros(self.dim, self.dim);
            for (r, row) in m.iter().enumerate() {
                for (c, s) in row.iter().enumerate() {
                    mat[(r, c)] = rational_at(path, || format!("action[{b}][{r}][{c}]"), s)?;
                }
            }
            mats.push(mat);
        }
        LieModule::new(g, self.dim, mats).map_err(|e| FormatError::invalid(path, e))
    }
}

pub fn module_file_from_module(m: &LieModule) -> ModuleFile {
    let action = m
        .actions()
        .iter()
        .map(|a| (0..a.rows()).map(|r| a.row(r).iter().map(format_rational).collect()).collect())
        .collect();
    ModuleFile {
        algebra: m.algebra().name().to_string(),
        dim: m.dim(),
        trivial: false,
        adjoint: false,
        action: Some(action),
        group_action: None,
    }
}

pub fn poly_group_file(g: &PolyGroup) -> GroupFile {
    let d = g.dim();
    GroupFile {
        name: g.name().to_string(),
        dim: Some(d),
        law: Some(g.law().iter().map(|p| p.to_string_with(&variable_names(d, true))).collect()),
        inverse: Some(g.inverse().iter().map(|p| p.to_string_with(&variable_names(d, false))).collect()),
        ..GroupFile::default()
    }
}

/// Coordinates plus the nonzero values labelled by basis tuples.
pub fn cochain_json(c: &Cochain, labels: &[String]) -> Value {
    let basis = ExteriorBasis::new(c.g_dim(), c.degree());
    let a = c.a_dim();
    let terms: Vec<Value> = basis
        .tuples()
        .iter()
        .enumerate()
        .filter_map(|(r, t)| {
            let block = &c.coords()[r * a..(r + 1) * a];
            if block.iter().all(num_traits::Zero::is_zero) {
                return None;
            }
            let args: Vec<&str> = t.iter().map(|&i| labels[i].as_str()).collect();
            Some(json!({ "args": args, "value": block.iter().map(format_rational).collect::<Vec<_>>() }))
        })
        .collect();
    json!({
        "p": c.degree(),
        "coords": c.coords().iter().map(format_rational).collect::<Vec<_>>(),
        "terms": terms,
    })
}
