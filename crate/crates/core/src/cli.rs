//! The `algext` command-line tool.
//!
//! Every command writes a [`ResultFile`] to stdout (or `--out`) and exits
//! with 0 on success, 1 on invalid input, 2 on a mathematical mismatch and 3
//! on an I/O error.

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cohomology::{restriction_injectivity_check, CeComplex, CohomologyError, CohomologyResult};
use crate::extension::{ext_alg, ExtError, ExtResult};
use crate::formats::{
    cochain_json, FormatError, GroupSpec, InputHash, LoadedModule, Loader, Pi1Catalog, ResultFile, Status, SCHEMA_VERSION,
};
use crate::lie::{LeviPair, LieAlgebra, LieModule};
use crate::par;
use crate::vanest::{vanest_compare, GroupAction, PolyGroup, VanEstError};

#[derive(Debug, Parser)]
#[command(name = "algext", version, about = "Extensions of algebraic groups and relative Lie algebra cohomology")]
pub struct Cli {
    /// Write the result document here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (1 runs sequentially).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Record wall-clock time in the result (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chevalley-Eilenberg cohomology H^p(g, a).
    Cohomology(CohomologyArgs),
    /// Relative cohomology H^p(g, g_red, a).
    Relative(RelativeArgs),
    /// Ext_alg(G, A) as finite part plus vector part.
    Ext(ExtArgs),
    /// Truncated group cohomology of a unipotent group against the Lie side.
    Vanest(VanestArgs),
    /// Parse and validate description files.
    Validate(ValidateArgs),
    /// Inspect or exercise the shipped catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Args)]
pub struct CohomologyArgs {
    #[arg(long)]
    pub lie: String,
    #[arg(long)]
    pub module: String,
    /// Single degree; all degrees when omitted.
    #[arg(long)]
    pub p: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RelativeArgs {
    #[arg(long)]
    pub lie: String,
    #[arg(long)]
    pub module: String,
    /// Take the Levi decomposition from the algebra file.
    #[arg(long, conflicts_with = "red", required_unless_present = "red")]
    pub red_from_file: bool,
    /// Basis indices of the reductive part, e.g. `0,1,2`; the rest is the
    /// nilpotent ideal.
    #[arg(long, value_delimiter = ',')]
    pub red: Option<Vec<usize>>,
    #[arg(long)]
    pub p: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ExtArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub coeff: String,
}

#[derive(Debug, Args)]
pub struct VanestArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub module: String,
    #[arg(long)]
    pub p: usize,
    #[arg(long, default_value_t = 4)]
    pub max_degree: usize,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// `.lie`, `.mod`, `.grp` files or a pi1 table (`.json`).
    #[arg(required = true)]
    pub files: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// List the catalog files.
    List,
    /// Validate every catalog file.
    Check,
    /// Run the reference computations over the catalog.
    Suite,
}

#[derive(Debug)]
enum Failure {
    Format(FormatError),
    Invalid(String, Value),
    Mismatch(String, Value),
}

impl Failure {
    fn status(&self) -> Status {
        match self {
            Failure::Format(e) if e.is_io() => Status::IoError,
            Failure::Format(_) | Failure::Invalid(..) => Status::ValidationError,
            Failure::Mismatch(..) => Status::Mismatch,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Format(e) => e.to_string(),
            Failure::Invalid(m, _) | Failure::Mismatch(m, _) => m.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Failure::Invalid(m, detail) | Failure::Mismatch(m, detail) if !detail.is_null() => {
                json!({ "error": m, "detail": detail })
            }
            other => json!({ "error": other.message() }),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure::Invalid(message.into(), Value::Null)
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Format(e)
    }
}

impl From<CohomologyError> for Failure {
    fn from(e: CohomologyError) -> Self {
        match e {
            CohomologyError::SubcomplexViolation { .. }
            | CohomologyError::InjectivityFailure { .. }
            | CohomologyError::WitnessCheckFailed(_) => Failure::Mismatch(e.to_string(), Value::Null),
            other => invalid(other.to_string()),
        }
    }
}

impl From<ExtError> for Failure {
    fn from(e: ExtError) -> Self {
        match e {
            ExtError::Cohomology(c) => c.into(),
            other => invalid(other.to_string()),
        }
    }
}

impl From<VanEstError> for Failure {
    fn from(e: VanEstError) -> Self {
        match e {
            VanEstError::Mismatch { group_dim, lie_dim } => {
                Failure::Mismatch(e.to_string(), json!({ "group_dim": group_dim, "lie_dim": lie_dim }))
            }
            VanEstError::DeltaSquaredViolation { .. } => Failure::Mismatch(e.to_string(), Value::Null),
            VanEstError::Cohomology(c) => c.into(),
            other => invalid(other.to_string()),
        }
    }
}

type Outcome = Result<Value, Failure>;

/// Parses `argv` (including the program name), runs the command, writes the
/// result and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let echo = command_echo(&argv);
    let result = execute(&cli, echo);
    let text = result.to_json();
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("algext: cannot write {}: {e}", path.display());
                return Status::IoError.exit_code();
            }
        }
        None => print!("{text}"),
    }
    if result.status != Status::Ok {
        if let Some(msg) = result.result.get("error").and_then(Value::as_str) {
            eprintln!("algext: {msg}");
        }
    }
    result.status.exit_code()
}

/// The arguments after the program name, minus the flags that do not
/// affect the computed result.
fn command_echo(argv: &[std::ffi::OsString]) -> Vec<String> {
    let mut echo = Vec::new();
    let mut args = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned());
    while let Some(a) = args.next() {
        match a.as_str() {
            "--timing" => {}
            "--out" | "--jobs" => {
                args.next();
            }
            s if s.starts_with("--out=") || s.starts_with("--jobs=") => {}
            _ => echo.push(a),
        }
    }
    echo
}

/// Runs a parsed command and assembles its result document.
pub fn execute(cli: &Cli, command: Vec<String>) -> ResultFile {
    let start = Instant::now();
    let mut loader = Loader::new();
    let outcome = par::with_jobs(cli.jobs, || dispatch(&cli.command, &mut loader));
    let mut inputs = loader.take_inputs();
    let (status, result) = match outcome {
        Ok((value, extra)) => {
            inputs.extend(extra);
            (Status::Ok, value)
        }
        Err(f) => (f.status(), f.to_json()),
    };
    inputs.sort_by(|a, b| a.path.cmp(&b.path));
    inputs.dedup_by(|a, b| a.path == b.path);
    ResultFile {
        schema: SCHEMA_VERSION,
        command,
        inputs,
        status,
        result,
        elapsed_ms: cli.timing.then(|| start.elapsed().as_millis() as u64),
    }
}

fn dispatch(command: &Command, loader: &mut Loader) -> Result<(Value, Vec<InputHash>), Failure> {
    let value = match command {
        Command::Cohomology(a) => cohomology_cmd(a, loader)?,
        Command::Relative(a) => relative_cmd(a, loader)?,
        Command::Ext(a) => ext_cmd(&a.group, &a.coeff, loader)?,
        Command::Vanest(a) => vanest_cmd(&a.group, &a.module, a.p, a.max_degree, loader)?,
        Command::Validate(a) => validate_cmd(&a.files, loader)?,
        Command::Catalog(CatalogCommand::List) => catalog_list(loader)?,
        Command::Catalog(CatalogCommand::Check) => catalog_check(loader)?,
        Command::Catalog(CatalogCommand::Suite) => return catalog_suite(loader.catalog()),
    };
    Ok((value, Vec::new()))
}

fn cohomology_json(r: &CohomologyResult, labels: &[String]) -> Value {
    json!({
        "p": r.p,
        "dim": r.dim,
        "z_dim": r.z_dim,
        "b_dim": r.b_dim,
        "representatives": r.representatives.iter().map(|c| cochain_json(c, labels)).collect::<Vec<_>>(),
    })
}

fn degrees(p: Option<usize>, n: usize) -> Vec<usize> {
    match p {
        Some(p) => vec![p],
        None => (0..=n).collect(),
    }
}

fn algebra_json(g: &LieAlgebra) -> Value {
    json!({ "name": g.name(), "dim": g.dim(), "basis": g.labels() })
}

fn cohomology_cmd(a: &CohomologyArgs, loader: &mut Loader) -> Outcome {
    let (g, _) = loader.load_lie(&a.lie)?;
    let module = loader.load_module(&a.module)?.bind(g.clone())?;
    Ok(absolute_json(&g, &module, degrees(a.p, g.dim()))?)
}

fn absolute_json(g: &Arc<LieAlgebra>, module: &LieModule, ps: Vec<usize>) -> Outcome {
    let cx = CeComplex::new(module.clone());
    let results = par::map(&ps, |&p| cx.cohomology(p));
    let mut out = Vec::new();
    for r in results {
        out.push(cohomology_json(&r?, g.labels()));
    }
    Ok(json!({
        "algebra": algebra_json(g),
        "module_dim": module.dim(),
        "betti": out.iter().map(|r| r["dim"].clone()).collect::<Vec<_>>(),
        "degrees": out,
    }))
}

fn relative_cmd(a: &RelativeArgs, loader: &mut Loader) -> Outcome {
    let (g, file_levi) = loader.load_lie(&a.lie)?;
    let pair = match &a.red {
        Some(red) => {
            let u = (0..g.dim()).filter(|i| !red.contains(i)).collect();
            LeviPair::new(g.clone(), red.clone(), u).map_err(|e| invalid(e.to_string()))?
        }
        None => file_levi.ok_or_else(|| invalid(format!("{} has no levi annotation", a.lie)))?,
    };
    let module = loader.load_module(&a.module)?.bind(g.clone())?;
    Ok(relative_json(&pair, &module, degrees(a.p, g.dim()))?)
}

fn relative_json(pair: &LeviPair, module: &LieModule, ps: Vec<usize>) -> Outcome {
    let g = pair.algebra();
    let cx = CeComplex::new(module.clone());
    let results = par::map(&ps, |&p| cx.relative_cohomology(p, pair));
    let mut out = Vec::new();
    for r in results {
        out.push(cohomology_json(&r?, g.labels()));
    }
    let mut value = json!({
        "algebra": algebra_json(g),
        "levi": { "red": pair.red_indices(), "u": pair.u_indices() },
        "module_dim": module.dim(),
        "dims": out.iter().map(|r| r["dim"].clone()).collect::<Vec<_>>(),
        "degrees": out,
    });
    if ps.contains(&2) && g.dim() >= 2 {
        let report = restriction_injectivity_check(pair, module)?;
        value["injectivity"] = json!({
            "relative_cocycle_dim": report.relative_cocycle_dim,
            "relative_coboundary_dim": report.relative_coboundary_dim,
            "absolute_coboundary_meet_dim": report.absolute_coboundary_meet_dim,
            "witnesses_checked": report.witnesses.len(),
        });
    }
    Ok(value)
}

fn ext_json(group_name: &str, coeff_name: &str, r: &ExtResult, labels: &[String]) -> Value {
    json!({
        "group": group_name,
        "coeff": coeff_name,
        "finite_part": r.finite_part.invariant_factors(),
        "finite_part_text": r.finite_part.to_string(),
        "vector_part_dim": r.vector_part_dim,
        "vector_representatives": r.vector_representatives.iter().map(|c| cochain_json(c, labels)).collect::<Vec<_>>(),
        "exact_sequence": "0 -> Hom(pi1([G,G]), A) -> Ext(G, A) -> H^2(g, g_red, a_u) -> 0",
    })
}

fn ext_cmd(group: &str, coeff: &str, loader: &mut Loader) -> Outcome {
    let GroupSpec::Algebraic { name, data } = loader.load_group(group)? else {
        return Err(invalid(format!("{group}: expected an algebraic group (with a lie field)")));
    };
    let coeff_spec = loader.load_group(coeff)?;
    let coeff_data = coeff_spec.coefficients(data.levi(), coeff)?;
    let r = ext_alg(&data, &coeff_data)?;
    Ok(ext_json(&name, coeff_spec.name(), &r, data.levi().algebra().labels()))
}

fn poly_group(spec: GroupSpec, reference: &str) -> Result<PolyGroup, Failure> {
    match spec {
        GroupSpec::Poly { group } => Ok(group),
        other => Err(invalid(format!("{reference}: expected a polynomial group, found a {} group", other.kind()))),
    }
}

/// Builds the group action and, when the module file also carries a Lie
/// action, checks that it is the derivative of the group action.
fn checked_action(module: &LoadedModule, group: &PolyGroup) -> Result<GroupAction, Failure> {
    let action = module.group_action(group)?;
    if module.file.action.is_some() {
        let lie = Arc::new(group.lie_algebra().with_name(module.file.algebra.clone()));
        let declared = module.bind(lie.clone())?;
        let derived = action.derived_module(lie)?;
        if declared.actions() != derived.actions() {
            return Err(invalid(format!("{}: action is not the derivative of group_action", module.label)));
        }
    }
    Ok(action)
}

fn vanest_cmd(group: &str, module: &str, p: usize, max_degree: usize, loader: &mut Loader) -> Outcome {
    let g = poly_group(loader.load_group(group)?, group)?;
    let module = loader.load_module(module)?;
    let action = checked_action(&module, &g)?;
    let report = vanest_compare(&g, &action, p, max_degree)?;
    let side = &report.group_side;
    Ok(json!({
        "group": g.name(),
        "p": p,
        "max_degree": max_degree,
        "h_of_d": side.h_of_d,
        "history": side.history.iter().map(|(d, h)| json!({ "max_degree": d, "h": h })).collect::<Vec<_>>(),
        "stabilized": side.stabilized,
        "lie_dim": report.lie_dim,
        "conclusive": report.conclusive,
        "matches": report.conclusive && side.h_of_d == report.lie_dim,
        "representatives": side.representatives.iter().map(|c| c.to_strings()).collect::<Vec<_>>(),
    }))
}

fn kind_of(path: &str) -> &'static str {
    match Path::new(path).extension().and_then(|e| e.to_str()) {
        Some("lie") => "lie",
        Some("mod") => "module",
        Some("grp") => "group",
        Some("json") => "pi1_table",
        _ => "unknown",
    }
}

fn validate_one(path: &str, loader: &mut Loader) -> Result<Value, Failure> {
    match kind_of(path) {
        "lie" => {
            let (g, levi) = loader.load_lie(path)?;
            let mut v = algebra_json(&g);
            if let Some(l) = levi {
                v["levi"] = json!({ "red": l.red_indices(), "u": l.u_indices() });
            }
            Ok(v)
        }
        "module" => {
            let m = loader.load_module(path)?;
            let dir = Path::new(path).parent().map(Path::to_path_buf);
            validate_module(&m, dir.as_deref(), loader)
        }
        "group" => {
            let spec = loader.load_group(path)?;
            let mut v = json!({ "name": spec.name(), "kind": spec.kind() });
            match &spec {
                GroupSpec::Algebraic { data, .. } => {
                    v["lie"] = algebra_json(data.levi().algebra());
                    v["pi1_derived"] = json!(data.pi1_derived().invariant_factors());
                    v["center_torus_dim"] = json!(data.center_torus_dim());
                }
                GroupSpec::Coefficient { torus_dim, module, .. } => {
                    v["torus_dim"] = json!(torus_dim);
                    if let Some(m) = module {
                        v["module"] = validate_module(m, None, loader)?;
                    }
                }
                GroupSpec::Poly { group } => {
                    v["dim"] = json!(group.dim());
                    v["lie"] = algebra_json(&group.lie_algebra());
                }
            }
            Ok(v)
        }
        "pi1_table" => {
            let (text, _, label) = loader.read(path, None)?;
            let cat = Pi1Catalog::parse(&text, &label)?;
            Ok(json!({ "version": cat.version, "entries": cat.entries.len() }))
        }
        _ => Err(invalid(format!("{path}: unknown file kind (expected .lie, .mod, .grp or .json)"))),
    }
}

/// A module naming an algebra `X` is bound to `X.lie`; a group action is
/// checked against the polynomial group `X.grp`. `"*"` accepts any algebra
/// and is checked for shape only.
fn validate_module(m: &LoadedModule, dir: Option<&Path>, loader: &mut Loader) -> Result<Value, Failure> {
    let f = &m.file;
    let mut v = json!({ "algebra": f.algebra, "dim": f.dim });
    if f.algebra == "*" {
        if !f.trivial {
            return Err(invalid(format!("{}: only trivial modules may use algebra \"*\"", m.label)));
        }
        if f.group_action.is_some() {
            return Err(invalid(format!("{}: a trivial module takes no group_action", m.label)));
        }
        return Ok(v);
    }
    let (g, _) = loader.load_lie_from(&format!("{}.lie", f.algebra), dir)?;
    m.bind(g)?;
    if f.group_action.is_some() {
        let (text, gdir, label) = loader.read(&format!("{}.grp", f.algebra), dir)?;
        let file = serde_json::from_str(&text).map_err(|e| invalid(format!("{label}: {e}")))?;
        let group = poly_group(loader.group_from_file(&file, &gdir, &label)?, &label)?;
        checked_action(m, &group)?;
        v["group_action_checked"] = json!(true);
    }
    Ok(v)
}

fn validate_cmd(files: &[String], loader: &mut Loader) -> Outcome {
    let mut out = Vec::new();
    let mut io_failure = None;
    let mut invalid = 0usize;
    for path in files {
        match validate_one(path, loader) {
            Ok(details) => out.push(json!({ "path": path, "kind": kind_of(path), "valid": true, "details": details })),
            Err(e) => {
                out.push(json!({ "path": path, "kind": kind_of(path), "valid": false, "error": e.message() }));
                match e {
                    Failure::Format(f) if f.is_io() => io_failure = io_failure.or(Some(f)),
                    _ => invalid += 1,
                }
            }
        }
    }
    if let Some(f) = io_failure {
        return Err(Failure::Format(f));
    }
    if invalid > 0 {
        return Err(Failure::Invalid(format!("{invalid} of {} files are invalid", files.len()), json!({ "files": out })));
    }
    Ok(json!({ "files": out }))
}

fn catalog_files(dir: &Path) -> Result<Vec<String>, Failure> {
    let entries = std::fs::read_dir(dir).map_err(|e| Failure::Format(FormatError::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    }))?;
    let mut names: Vec<String> = entries
        .filter_map(|e| e.ok())
        .filter(|e| e.path().is_file())
        .filter_map(|e| e.file_name().to_str().map(str::to_string))
        .filter(|n| kind_of(n) != "unknown")
        .collect();
    names.sort();
    Ok(names)
}

fn catalog_list(loader: &mut Loader) -> Outcome {
    let names = catalog_files(loader.catalog())?;
    let files: Vec<Value> = names.iter().map(|n| json!({ "file": n, "kind": kind_of(n) })).collect();
    Ok(json!({ "files": files }))
}

fn catalog_check(loader: &mut Loader) -> Outcome {
    let dir = loader.catalog().to_path_buf();
    let names = catalog_files(&dir)?;
    let paths: Vec<String> = names.iter().map(|n| dir.join(n).display().to_string()).collect();
    let mut value = validate_cmd(&paths, loader)?;
    // report catalog-relative names rather than absolute paths
    if let Some(files) = value["files"].as_array_mut() {
        for (f, n) in files.iter_mut().zip(&names) {
            f["path"] = json!(n);
        }
    }
    Ok(value)
}

/// One reference computation of the catalog suite.
#[derive(Clone, Copy, Debug)]
enum SuiteJob {
    Absolute(&'static str, &'static str),
    Relative(&'static str, &'static str),
    Ext(&'static str, &'static str),
    Vanest(&'static str, &'static str, usize, usize),
}

const SUITE: &[SuiteJob] = &[
    SuiteJob::Absolute("sl2.lie", "triv.mod"),
    SuiteJob::Absolute("sl2.lie", "adj_sl2.mod"),
    SuiteJob::Absolute("sl2.lie", "std_sl2.mod"),
    SuiteJob::Absolute("gl2.lie", "triv.mod"),
    SuiteJob::Absolute("h3.lie", "triv.mod"),
    SuiteJob::Absolute("ga.lie", "triv.mod"),
    SuiteJob::Absolute("ga2.lie", "triv2.mod"),
    SuiteJob::Absolute("borel.lie", "triv.mod"),
    SuiteJob::Absolute("sl2semi.lie", "triv.mod"),
    SuiteJob::Relative("sl2semi.lie", "triv.mod"),
    SuiteJob::Relative("sl2semi.lie", "std_semi.mod"),
    SuiteJob::Relative("sl2semi.lie", "adj_semi.mod"),
    SuiteJob::Relative("jacobi.lie", "triv.mod"),
    SuiteJob::Relative("torheis.lie", "triv.mod"),
    SuiteJob::Relative("borel.lie", "triv.mod"),
    SuiteJob::Relative("h3.lie", "triv.mod"),
    SuiteJob::Ext("sl2.grp", "ga_trivial.grp"),
    SuiteJob::Ext("pgl2.grp", "torus1.grp"),
    SuiteJob::Ext("pgl2.grp", "torus2.grp"),
    SuiteJob::Ext("pgl2.grp", "ga_x_gm.grp"),
    SuiteJob::Ext("sl2xgm.grp", "torus1.grp"),
    SuiteJob::Ext("vsl2.grp", "ga_trivial.grp"),
    SuiteJob::Ext("h3.grp", "ga_trivial.grp"),
    SuiteJob::Ext("h3.grp", "torus1.grp"),
    SuiteJob::Vanest("ga.grp", "triv.mod", 1, 3),
    SuiteJob::Vanest("ga.grp", "triv.mod", 2, 4),
    SuiteJob::Vanest("ga.grp", "ga_jordan.mod", 1, 4),
    SuiteJob::Vanest("ga2.grp", "triv.mod", 2, 4),
    SuiteJob::Vanest("heisenberg.grp", "triv.mod", 1, 4),
    SuiteJob::Vanest("heisenberg.grp", "triv.mod", 2, 5),
];

impl SuiteJob {
    fn describe(&self) -> Value {
        match *self {
            SuiteJob::Absolute(l, m) => json!({ "command": "cohomology", "lie": l, "module": m }),
            SuiteJob::Relative(l, m) => json!({ "command": "relative", "lie": l, "module": m }),
            SuiteJob::Ext(g, c) => json!({ "command": "ext", "group": g, "coeff": c }),
            SuiteJob::Vanest(g, m, p, d) => {
                json!({ "command": "vanest", "group": g, "module": m, "p": p, "max_degree": d })
            }
        }
    }

    fn run(&self, loader: &mut Loader) -> Outcome {
        match *self {
            SuiteJob::Absolute(l, m) => {
                let (g, _) = loader.load_lie(l)?;
                let module = loader.load_module(m)?.bind(g.clone())?;
                absolute_json(&g, &module, degrees(None, g.dim()))
            }
            SuiteJob::Relative(l, m) => {
                let (g, levi) = loader.load_lie(l)?;
                let pair = levi.ok_or_else(|| invalid(format!("{l} has no levi annotation")))?;
                let module = loader.load_module(m)?.bind(g.clone())?;
                relative_json(&pair, &module, degrees(None, g.dim()))
            }
            SuiteJob::Ext(g, c) => ext_cmd(g, c, loader),
            SuiteJob::Vanest(g, m, p, d) => vanest_cmd(g, m, p, d, loader),
        }
    }
}

/// Runs every suite job (in parallel when jobs allow); entries keep the
/// fixed suite order and a failing job is recorded, not fatal.
fn catalog_suite(catalog: &Path) -> Result<(Value, Vec<InputHash>), Failure> {
    let catalog = catalog.to_path_buf();
    let runs = par::map(SUITE, |job| {
        let mut loader = Loader::with_catalog(catalog.clone());
        let outcome = job.run(&mut loader);
        (outcome, loader.take_inputs())
    });
    let mut entries = Vec::new();
    let mut inputs = Vec::new();
    let mut failed = 0usize;
    let mut worst = Status::Ok;
    for (job, (outcome, used)) in SUITE.iter().zip(runs) {
        inputs.extend(used);
        let mut entry = job.describe();
        match outcome {
            Ok(v) => {
                entry["status"] = json!(Status::Ok);
                entry["result"] = v;
            }
            Err(f) => {
                failed += 1;
                if f.status().exit_code() > worst.exit_code() {
                    worst = f.status();
                }
                entry["status"] = json!(f.status());
                entry["result"] = f.to_json();
            }
        }
        entries.push(entry);
    }
    let summary = json!({ "jobs": SUITE.len(), "failed": failed, "entries": entries });
    if failed > 0 {
        let msg = format!("{failed} of {} suite jobs failed", SUITE.len());
        return Err(match worst {
            Status::Mismatch => Failure::Mismatch(msg, summary),
            _ => Failure::Invalid(msg, summary),
        });
    }
    Ok((summary, inputs))
}
