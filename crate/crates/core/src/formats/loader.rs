use std::path::{Path, PathBuf};
use std::sync::Arc;

use sha2::{Digest, Sha256};

use super::{FormatError, GroupFile, InputHash, LieFile, ModuleFile, Pi1Catalog};
use crate::extension::FiniteAbelianGroup;
use crate::lie::{AlgGroupData, CoeffGroupData, LeviPair, LieAlgebra, LieModule};
use crate::vanest::{parse_poly, GroupAction, MultiPoly, PolyGroup, VanEstError};

pub const CATALOG_ENV: &str = "ALGEXT_CATALOG";

/// `$ALGEXT_CATALOG`, or the catalog shipped with the crate.
pub fn catalog_dir() -> PathBuf {
    match std::env::var_os(CATALOG_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/catalog")),
    }
}

/// A parsed module file, bound to an algebra or a group on use.
#[derive(Clone, Debug)]
pub struct LoadedModule {
    pub file: ModuleFile,
    pub label: String,
}

impl LoadedModule {
    pub fn bind(&self, g: Arc<LieAlgebra>) -> Result<LieModule, FormatError> {
        self.file.to_module(g, &self.label)
    }

    pub fn group_action(&self, group: &PolyGroup) -> Result<GroupAction, FormatError> {
        let d = group.dim();
        if self.file.trivial {
            return Ok(GroupAction::trivial(d, self.file.dim));
        }
        let Some(rows) = &self.file.group_action else {
            return Err(FormatError::invalid(&self.label, "a nontrivial module needs a group_action for polynomial groups"));
        };
        let mut matrix = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            let mut out = Vec::new();
            for (c, s) in row.iter().enumerate() {
                out.push(poly_at(&self.label, &format!("group_action[{r}][{c}]"), s, d, false)?);
            }
            matrix.push(out);
        }
        if matrix.len() != self.file.dim {
            return Err(FormatError::invalid(&self.label, format!("group_action has {} rows, dim is {}", matrix.len(), self.file.dim)));
        }
        GroupAction::new(group, matrix).map_err(|e| FormatError::invalid(&self.label, e))
    }
}

fn poly_at(path: &str, field: &str, s: &str, d: usize, with_y: bool) -> Result<MultiPoly, FormatError> {
    parse_poly(s, d, with_y).map_err(|e| match e {
        VanEstError::Parse { column, message } => FormatError::parse(path, format!("{field} column {column}"), message),
        other => FormatError::invalid(path, other),
    })
}

#[derive(Clone, Debug)]
pub enum GroupSpec {
    Algebraic { name: String, data: AlgGroupData },
    Coefficient { name: String, torus_dim: usize, module: Option<LoadedModule> },
    Poly { group: PolyGroup },
}

impl GroupSpec {
    pub fn name(&self) -> &str {
        match self {
            GroupSpec::Algebraic { name, .. } | GroupSpec::Coefficient { name, .. } => name,
            GroupSpec::Poly { group } => group.name(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GroupSpec::Algebraic { .. } => "algebraic",
            GroupSpec::Coefficient { .. } => "coefficient",
            GroupSpec::Poly { .. } => "poly",
        }
    }

    /// Coefficient data over the Levi pair of an algebraic group.
    pub fn coefficients(&self, levi: &LeviPair, label: &str) -> Result<CoeffGroupData, FormatError> {
        let GroupSpec::Coefficient { torus_dim, module, .. } = self else {
            return Err(FormatError::invalid(label, format!("expected a coefficient group, found a {} group", self.kind())));
        };
        match module {
            None => Ok(CoeffGroupData::torus(*torus_dim, levi.algebra().clone())),
            Some(m) => {
                let module = m.bind(levi.algebra().clone())?;
                CoeffGroupData::new(*torus_dim, module, levi).map_err(|e| FormatError::invalid(&m.label, e))
            }
        }
    }
}

/// Reads input files, resolving references against the referencing file's
/// directory, the working directory and the catalog, and records a hash of
/// every file read.
pub struct Loader {
    catalog: PathBuf,
    inputs: Vec<InputHash>,
    pi1: Option<Pi1Catalog>,
}

impl Default for Loader {
    fn default() -> Self {
        Self::new()
    }
}

impl Loader {
    pub fn new() -> Self {
        Self::with_catalog(catalog_dir())
    }

    pub fn with_catalog(catalog: PathBuf) -> Self {
        Loader { catalog, inputs: Vec::new(), pi1: None }
    }

    pub fn catalog(&self) -> &Path {
        &self.catalog
    }

    pub fn inputs(&self) -> &[InputHash] {
        &self.inputs
    }

    pub fn take_inputs(&mut self) -> Vec<InputHash> {
        std::mem::take(&mut self.inputs)
    }

    fn resolve(&self, reference: &str, base: Option<&Path>) -> Result<(PathBuf, String), FormatError> {
        let mut candidates = Vec::new();
        if let Some(b) = base {
            candidates.push(b.join(reference));
        }
        candidates.push(PathBuf::from(reference));
        candidates.push(self.catalog.join(reference));
        let path = candidates.into_iter().find(|p| p.is_file()).ok_or_else(|| FormatError::Io {
            path: reference.to_string(),
            message: "file not found (also looked in the catalog)".into(),
        })?;
        Ok((path.clone(), self.label_for(&path, reference)))
    }

    fn label_for(&self, path: &Path, reference: &str) -> String {
        let canon = |p: &Path| p.canonicalize().unwrap_or_else(|_| p.to_path_buf());
        match canon(path).strip_prefix(canon(&self.catalog)) {
            Ok(rel) => format!("catalog:{}", rel.display()),
            Err(_) => reference.to_string(),
        }
    }

    /// Reads a file and records its hash; returns (text, directory, label).
    pub fn read(&mut self, reference: &str, base: Option<&Path>) -> Result<(String, PathBuf, String), FormatError> {
        let (path, label) = self.resolve(reference, base)?;
        let bytes = std::fs::read(&path).map_err(|e| FormatError::io(&path, &e))?;
        let sha256 = hex::encode(Sha256::digest(&bytes));
        if !self.inputs.iter().any(|i| i.path == label) {
            self.inputs.push(InputHash { path: label.clone(), sha256 });
        }
        let text = String::from_utf8(bytes).map_err(|_| FormatError::parse(&label, "0:0", "file is not UTF-8"))?;
        let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok((text, dir, label))
    }

    pub fn load_lie(&mut self, reference: &str) -> Result<(Arc<LieAlgebra>, Option<LeviPair>), FormatError> {
        self.load_lie_from(reference, None)
    }

    pub fn load_lie_from(&mut self, reference: &str, base: Option<&Path>) -> Result<(Arc<LieAlgebra>, Option<LeviPair>), FormatError> {
        let (text, _, label) = self.read(reference, base)?;
        let file: LieFile = serde_json::from_str(&text).map_err(|e| FormatError::json(&label, &e))?;
        lie_from_file(&file, &label)
    }

    pub fn load_module(&mut self, reference: &str) -> Result<LoadedModule, FormatError> {
        self.load_module_from(reference, None)
    }

    pub fn load_module_from(&mut self, reference: &str, base: Option<&Path>) -> Result<LoadedModule, FormatError> {
        let (text, _, label) = self.read(reference, base)?;
        let file: ModuleFile = serde_json::from_str(&text).map_err(|e| FormatError::json(&label, &e))?;
        Ok(LoadedModule { file, label })
    }

    fn pi1_catalog(&mut self) -> Result<Pi1Catalog, FormatError> {
        if let Some(c) = &self.pi1 {
            return Ok(c.clone());
        }
        let (text, _, label) = self.read("pi1.json", Some(&self.catalog.clone()))?;
        let cat = Pi1Catalog::parse(&text, &label)?;
        self.pi1 = Some(cat.clone());
        Ok(cat)
    }

    pub fn load_group(&mut self, reference: &str) -> Result<GroupSpec, FormatError> {
        let (text, dir, label) = self.read(reference, None)?;
        let file: GroupFile = serde_json::from_str(&text).map_err(|e| FormatError::json(&label, &e))?;
        self.group_from_file(&file, &dir, &label)
    }

    pub fn group_from_file(&mut self, file: &GroupFile, dir: &Path, label: &str) -> Result<GroupSpec, FormatError> {
        if let Some(law) = &file.law {
            if file.lie.is_some() || file.torus_dim.is_some() || file.pi1_derived.is_some() || file.pi1_catalog.is_some() {
                return Err(FormatError::invalid(label, "a polynomial group takes only name, dim, law and inverse"));
            }
            let d = file.dim.unwrap_or(law.len());
            if d != law.len() {
                return Err(FormatError::invalid(label, format!("dim is {d} but the law has {} coordinates", law.len())));
            }
            let law = law
                .iter()
                .enumerate()
                .map(|(i, s)| poly_at(label, &format!("law[{i}]"), s, d, true))
                .collect::<Result<Vec<_>, _>>()?;
            let inverse = match &file.inverse {
                None => None,
                Some(inv) => Some(
                    inv.iter()
                        .enumerate()
                        .map(|(i, s)| poly_at(label, &format!("inverse[{i}]"), s, d, false))
                        .collect::<Result<Vec<_>, _>>()?,
                ),
            };
            let group = PolyGroup::new(file.name.clone(), law, inverse).map_err(|e| FormatError::invalid(label, e))?;
            return Ok(GroupSpec::Poly { group });
        }
        if let Some(lie) = &file.lie {
            let (g, file_levi) = match lie {
                serde_json::Value::String(reference) => self.load_lie_from(reference, Some(dir))?,
                inline => {
                    let lf: LieFile = serde_json::from_value(inline.clone()).map_err(|e| FormatError::json(label, &e))?;
                    lie_from_file(&lf, label)?
                }
            };
            let levi = match (&file.levi, file_levi) {
                (Some(spec), _) => {
                    LeviPair::new(g.clone(), spec.red.clone(), spec.u.clone()).map_err(|e| FormatError::invalid(label, e))?
                }
                (None, Some(levi)) => levi,
                (None, None) => return Err(FormatError::invalid(label, "an algebraic group needs a Levi decomposition")),
            };
            let pi1 = match (&file.pi1_derived, &file.pi1_catalog) {
                (Some(factors), _) => {
                    FiniteAbelianGroup::from_invariant_factors(factors.clone()).map_err(|e| FormatError::invalid(label, e))?
                }
                (None, Some(refs)) => self.pi1_catalog()?.product(refs, label)?,
                (None, None) => return Err(FormatError::invalid(label, "an algebraic group needs pi1_derived or pi1_catalog")),
            };
            let data = AlgGroupData::new(levi, pi1, file.center_torus_dim.unwrap_or(0))
                .map_err(|e| FormatError::invalid(label, e))?;
            return Ok(GroupSpec::Algebraic { name: file.name.clone(), data });
        }
        if let Some(torus_dim) = file.torus_dim {
            let module = match &file.module {
                None => None,
                Some(serde_json::Value::String(reference)) => Some(self.load_module_from(reference, Some(dir))?),
                Some(inline) => {
                    let mf: ModuleFile = serde_json::from_value(inline.clone()).map_err(|e| FormatError::json(label, &e))?;
                    Some(LoadedModule { file: mf, label: label.to_string() })
                }
            };
            return Ok(GroupSpec::Coefficient { name: file.name.clone(), torus_dim, module });
        }
        Err(FormatError::invalid(label, "cannot tell the group kind: expected law, lie or torus_dim"))
    }
}

fn lie_from_file(file: &LieFile, label: &str) -> Result<(Arc<LieAlgebra>, Option<LeviPair>), FormatError> {
    let g = Arc::new(file.to_algebra(label)?);
    let levi = file.levi_pair(g.clone(), label)?;
    Ok((g, levi))
}
