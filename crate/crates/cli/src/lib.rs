//! The `vbetti` command line: every pipeline of `vbetti-core` with JSON in
//! and JSON out.
//!
//! Exit codes: `0` success, `2` input error (malformed JSON, invalid or
//! unsupported input), `3` when `--strict` is set and the answer contains an
//! `"unknown"` semidecision outcome.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};
use vbetti_core::filtration::{filtration_certificate, induced_homology_action, is_nilpotent_action};
use vbetti_core::linalg::parse_rat;
use vbetti_core::sigma::{
    finite_dimensional_is_fully_tame, m_tame_witness, newton_polytope, sigma_complement, sigma_witness_search,
    tensor_power_fg_check, FgCheck, SigmaComplement, WitnessOutcome,
};
use vbetti_core::spectral::{
    abelian_homology, betti_numbers, e3_homology, equivariant_page_free, homology_free_nilpotent_c2, Page,
};
use vbetti_core::vbscan::{hirsch_bound, hypothesis_report, vb_scan};
use vbetti_core::{
    ConeUnion, CyclicModuleSpec, Error, FreeNilpotentSpec, Group, GroupSpec, QModuleFD, ValuationVector,
};

pub const SCHEMA_VERSION: &str = "v1";

#[derive(Parser, Debug)]
#[command(name = "vbetti", version, about = "Exact homology, Σ-invariants and virtual Betti scans")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON document to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Exit with status 3 when the result contains an "unknown" outcome.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rational (and optionally integral) Betti numbers.
    Betti(BettiArgs),
    /// The E² page with its d² differentials and E³ dimensions.
    Pages(GroupArgs),
    /// Tensor-degree filtration certificates for H_j.
    Filtration(FiltrationArgs),
    /// Σ-complement of a module, optionally tested along a direction.
    Sigma(SigmaArgs),
    /// m-tameness and finite generation of tensor powers.
    Tame(TameArgs),
    /// Finite-index homology scan over the subgroups Q^m.
    Vbscan(VbscanArgs),
    /// The tameness hypothesis for finiteness of vb_j, j ≤ n.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    /// Group description as inline JSON.
    #[arg(long, conflicts_with = "input")]
    pub group: Option<String>,
    /// File holding the group description ("-" for stdin).
    #[arg(long)]
    pub input: Option<String>,
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Also report integral invariant factors per E³ cell.
    #[arg(long)]
    pub integral: bool,
}

#[derive(Args, Debug)]
pub struct FiltrationArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Homological degree; all degrees up to the Hirsch length when omitted (class ≤ 2).
    #[arg(long)]
    pub j: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ModuleArgs {
    /// Module as inline JSON: {"nvars", "ideal"} or {"dim", "generators"}.
    #[arg(long, conflicts_with = "input")]
    pub module: Option<String>,
    /// File holding the module ("-" for stdin).
    #[arg(long)]
    pub input: Option<String>,
}

#[derive(Args, Debug)]
pub struct SigmaArgs {
    #[command(flatten)]
    pub module: ModuleArgs,
    /// Valuation direction, comma separated rationals such as "1,-1/2".
    #[arg(long, allow_hyphen_values = true)]
    pub direction: Option<String>,
    /// Multiplier degree bound for witness searches.
    #[arg(long, default_value_t = 8)]
    pub degree_bound: usize,
}

#[derive(Args, Debug)]
pub struct TameArgs {
    /// Module as inline JSON.
    #[arg(long, conflicts_with_all = ["sigma_complement", "input"])]
    pub module: Option<String>,
    /// Σ-complement as an inline JSON cone union.
    #[arg(long, conflicts_with = "input")]
    pub sigma_complement: Option<String>,
    /// File holding the module ("-" for stdin).
    #[arg(long)]
    pub input: Option<String>,
    /// Number of directions summing to zero (at least 2).
    #[arg(long)]
    pub m: usize,
    /// Orbit-closure bound for the tensor-power check.
    #[arg(long, default_value_t = 8)]
    pub degree_bound: usize,
}

#[derive(Args, Debug)]
pub struct VbscanArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long)]
    pub j: usize,
    #[arg(long, default_value_t = 64)]
    pub m_max: u64,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    /// Nilpotency class of N.
    #[arg(long)]
    pub c: usize,
    /// Rank of the free abelian quotient Q.
    #[arg(long)]
    pub n: usize,
    /// Σ-complement of N/N′ ⊗ ℚ as an inline JSON cone union.
    #[arg(long, conflicts_with_all = ["module", "input"])]
    pub sigma_complement: Option<String>,
    /// N/N′ ⊗ ℚ as a module, from which the Σ-complement is computed.
    #[arg(long, conflicts_with = "input")]
    pub module: Option<String>,
    /// File holding the Σ-complement ("-" for stdin).
    #[arg(long)]
    pub input: Option<String>,
}

/// A failed run: exit status and message for stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::input(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// The JSON document of a successful run.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub document: Value,
    /// Some part of the answer is an honest "unknown".
    pub unknown: bool,
}

/// Result of [`run`]: exit status and the bytes meant for stdout/stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read_source(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{path}: {e}")))
    }
}

fn parse_json(label: &str, text: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| CliError::input(format!("{label}: malformed JSON: {e}")))
}

fn typed<T: serde::de::DeserializeOwned>(label: &str, v: &Value) -> CliResult<T> {
    serde_json::from_value(v.clone()).map_err(|e| CliError::input(format!("{label}: {e}")))
}

/// Inline flag value or `--input` file, parsed as JSON.
fn document(label: &str, inline: &Option<String>, input: &Option<String>) -> CliResult<Value> {
    match (inline, input) {
        (Some(text), _) => parse_json(&format!("--{label}"), text),
        (None, Some(path)) => parse_json(path, &read_source(path)?),
        (None, None) => Err(CliError::input(format!("missing input: pass --{label} or --input"))),
    }
}

fn group(args: &GroupArgs) -> CliResult<(Value, Group)> {
    let raw = document("group", &args.group, &args.input)?;
    let spec: GroupSpec = typed("--group", &raw)?;
    Ok((raw, spec.resolve()?))
}

enum Module {
    Cyclic(CyclicModuleSpec),
    Finite(QModuleFD),
}

fn module(label: &str, raw: &Value) -> CliResult<Module> {
    match raw {
        Value::Object(o) if o.contains_key("nvars") => Ok(Module::Cyclic(typed(label, raw)?)),
        Value::Object(o) if o.contains_key("dim") => Ok(Module::Finite(typed(label, raw)?)),
        _ => Err(CliError::input(format!("{label}: expected {{\"nvars\", \"ideal\"}} or {{\"dim\", \"generators\"}}"))),
    }
}

fn direction(text: &str) -> CliResult<ValuationVector> {
    let parts = text.split(',').map(|s| parse_rat(s.trim())).collect::<vbetti_core::Result<Vec<_>>>()?;
    Ok(ValuationVector::new(parts)?)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("results serialize")
}

fn merge(into: &mut Map<String, Value>, v: Value) {
    if let Value::Object(o) = v {
        into.extend(o);
    }
}

struct Doc {
    fields: Map<String, Value>,
    unknown: bool,
}

impl Doc {
    fn new() -> Self {
        Self { fields: Map::new(), unknown: false }
    }

    fn set(&mut self, k: &str, v: Value) {
        self.fields.insert(k.to_string(), v);
    }
}

fn betti(args: &BettiArgs, doc: &mut Doc) -> CliResult<()> {
    let (_, g) = group(&args.group)?;
    let spec = match &g {
        Group::FreeNilpotent(s) => *s,
        Group::Action(a) => a.target,
        Group::Extension(ext) => {
            let page = Page::e2(ext)?;
            let h = ext.q_rank() + ext.a_rank();
            let totals: Vec<Value> = (0..=h).map(|j| to_value(&e3_homology(&page, j))).collect();
            doc.set("betti_upper_bounds", json!((0..=h).map(|j| page.e3_total(j)).collect::<Vec<_>>()));
            doc.set("exact", json!(false));
            doc.set("homology", Value::Array(totals));
            return Ok(());
        }
    };
    let b = betti_numbers(&spec)?;
    let h = spec.hirsch_length();
    doc.set("betti", json!(b));
    doc.set("hirsch_length", json!(h));
    doc.set("exact", json!(true));
    doc.set("hirsch_bounds", json!((0..=h).map(|j| hirsch_bound(h, j)).collect::<Vec<_>>()));
    let homology: Vec<Value> = (0..=h)
        .map(|j| -> CliResult<Value> {
            Ok(match spec.class {
                1 => {
                    let mut r = abelian_homology(&vbetti_core::nilgroup::AbelianFG::free(spec.rank), j);
                    if args.integral {
                        let mut v = to_value(&r);
                        v["integral"] = json!({"free_rank": r.rational_dimension, "torsion": [], "per_cell": []});
                        return Ok(v);
                    }
                    r.integral = None;
                    to_value(&r)
                }
                _ => to_value(&homology_free_nilpotent_c2(spec.rank, j, args.integral)?),
            })
        })
        .collect::<CliResult<_>>()?;
    doc.set("homology", Value::Array(homology));
    if let Group::Action(act) = &g {
        let actions = (0..=h)
            .map(|j| Ok(json!({"j": j, "matrices": to_value(&induced_homology_action(act, j)?)})))
            .collect::<CliResult<Vec<_>>>()?;
        doc.set("action_on_homology", Value::Array(actions));
    }
    Ok(())
}

fn pages(args: &GroupArgs, doc: &mut Doc) -> CliResult<()> {
    let (_, g) = group(args)?;
    let page = match &g {
        Group::FreeNilpotent(s) => Page::free_nilpotent(s)?,
        Group::Extension(e) => Page::e2(e)?,
        Group::Action(a) => equivariant_page_free(a)?,
    };
    let e3: Vec<Value> = page.cells().map(|(&(p, q), _)| json!({"p": p, "q": q, "dim": page.e3_dim(p, q)})).collect();
    doc.set("page", to_value(&page));
    doc.set("e3", Value::Array(e3));
    doc.set("d_squared_vanishes", json!(page.d_squared_vanishes()));
    Ok(())
}

fn filtration(args: &FiltrationArgs, doc: &mut Doc) -> CliResult<()> {
    let (_, g) = group(&args.group)?;
    let (spec, act): (FreeNilpotentSpec, _) = match &g {
        Group::FreeNilpotent(s) => (*s, None),
        Group::Action(a) => (a.target, Some(a)),
        Group::Extension(_) => {
            return Err(CliError::input("filtration certificates need a free nilpotent group"));
        }
    };
    let degrees: Vec<usize> = match args.j {
        Some(j) => vec![j],
        None if spec.class <= 2 => (0..=spec.hirsch_length()).collect(),
        None => return Err(CliError::input(format!("class {}: pass --j explicitly", spec.class))),
    };
    let certs =
        degrees.iter().map(|&j| Ok(to_value(&filtration_certificate(&spec, j)?))).collect::<CliResult<Vec<_>>>()?;
    doc.set("certificates", Value::Array(certs));
    if let Some(act) = act {
        let reports = degrees
            .iter()
            .map(|&j| {
                let ops = induced_homology_action(act, j)?;
                Ok(json!({"j": j, "report": to_value(&is_nilpotent_action(&ops)?)}))
            })
            .collect::<CliResult<Vec<_>>>()?;
        doc.set("action_nilpotency", Value::Array(reports));
    }
    Ok(())
}

fn sigma(args: &SigmaArgs, doc: &mut Doc) -> CliResult<()> {
    let raw = document("module", &args.module.module, &args.module.input)?;
    match module("--module", &raw)? {
        Module::Finite(m) => {
            let cert = finite_dimensional_is_fully_tame(m.dim(), m.generators())?;
            doc.set("sigma_complement", json!({"status": "exact", "cones": to_value(&cert.sigma_complement)}));
            doc.set("certificate", to_value(&cert));
            if let Some(d) = &args.direction {
                let v = direction(d)?;
                doc.set("direction", json!({"v": to_value(&v), "in_sigma_complement": false}));
            }
        }
        Module::Cyclic(spec) => {
            let sc = sigma_complement(&spec)?;
            doc.set("sigma_complement", to_value(&sc));
            if let [f] = spec.ideal.as_slice() {
                doc.set("newton_polytope", json!(newton_polytope(f)?));
            }
            if let Some(d) = &args.direction {
                let v = direction(d)?;
                let outcome = sigma_witness_search(&spec, &v, args.degree_bound)?;
                let membership = match (&sc, &outcome) {
                    (SigmaComplement::Exact { cones }, _) => json!(cones.contains(v.as_slice())),
                    (_, WitnessOutcome::Found(_)) => json!(false),
                    _ => {
                        doc.unknown = true;
                        json!("unknown")
                    }
                };
                doc.set(
                    "direction",
                    json!({"v": to_value(&v), "in_sigma_complement": membership, "witness_search": to_value(&outcome)}),
                );
            }
            if matches!(sc, SigmaComplement::Unresolved { .. }) && args.direction.is_none() {
                doc.unknown = true;
            }
        }
    }
    Ok(())
}

fn tame(args: &TameArgs, doc: &mut Doc) -> CliResult<()> {
    if args.m < 2 {
        return Err(CliError::input(format!("--m must be at least 2, got {}", args.m)));
    }
    let sc: Option<ConeUnion> = if let Some(text) = &args.sigma_complement {
        Some(typed("--sigma-complement", &parse_json("--sigma-complement", text)?)?)
    } else {
        let raw = document("module", &args.module, &args.input)?;
        match module("--module", &raw)? {
            Module::Finite(m) => Some(finite_dimensional_is_fully_tame(m.dim(), m.generators())?.sigma_complement),
            Module::Cyclic(spec) => {
                let fg = tensor_power_fg_check(&spec, args.m, args.degree_bound)?;
                if matches!(fg, FgCheck::Unknown { .. }) {
                    doc.unknown = true;
                }
                doc.set("tensor_power_fg", to_value(&fg));
                sigma_complement(&spec)?.exact().cloned()
            }
        }
    };
    doc.set("m", json!(args.m));
    match sc {
        Some(sc) => {
            let witness = m_tame_witness(&sc, args.m)?;
            doc.set("tame", json!(witness.is_none()));
            if let Some(w) = witness {
                doc.set("witness", to_value(&w));
            }
        }
        None => {
            doc.unknown = true;
            doc.set("tame", json!("unknown"));
        }
    }
    Ok(())
}

fn vbscan(args: &VbscanArgs, doc: &mut Doc) -> CliResult<()> {
    let (_, g) = group(&args.group)?;
    let Group::Action(act) = g else {
        return Err(CliError::input("vbscan needs a group of type \"action\""));
    };
    merge(&mut doc.fields, to_value(&vb_scan(&act, args.j, args.m_max)?));
    Ok(())
}

fn report(args: &ReportArgs, doc: &mut Doc) -> CliResult<()> {
    let sc: Option<ConeUnion> = match (&args.sigma_complement, &args.module, &args.input) {
        (Some(text), _, _) => Some(typed("--sigma-complement", &parse_json("--sigma-complement", text)?)?),
        (None, Some(text), _) => match module("--module", &parse_json("--module", text)?)? {
            Module::Finite(m) => Some(finite_dimensional_is_fully_tame(m.dim(), m.generators())?.sigma_complement),
            Module::Cyclic(spec) => sigma_complement(&spec)?.exact().cloned(),
        },
        (None, None, Some(path)) => Some(typed(path, &parse_json(path, &read_source(path)?)?)?),
        (None, None, None) => {
            return Err(CliError::input("missing input: pass --sigma-complement, --module or --input"));
        }
    };
    if args.c == 0 || args.n == 0 {
        return Err(CliError::input("--c and --n must be at least 1"));
    }
    match sc {
        Some(sc) => merge(&mut doc.fields, to_value(&hypothesis_report(args.c, args.n, &sc)?)),
        None => {
            doc.unknown = true;
            doc.set("requirement", json!(vbetti_core::sigma::tame_requirement(args.c, args.n)));
            doc.set("holds", json!("unknown"));
        }
    }
    Ok(())
}

fn config(cli: &Cli) -> CliResult<(String, Value)> {
    let opt_json = |label: &str, s: &Option<String>| -> CliResult<Value> {
        s.as_deref().map_or(Ok(Value::Null), |t| parse_json(label, t))
    };
    let input = |s: &Option<String>| json!(s);
    let (name, mut cfg) = match &cli.command {
        Command::Betti(a) => (
            "betti",
            json!({"group": opt_json("--group", &a.group.group)?, "input": input(&a.group.input), "integral": a.integral}),
        ),
        Command::Pages(a) => ("pages", json!({"group": opt_json("--group", &a.group)?, "input": input(&a.input)})),
        Command::Filtration(a) => (
            "filtration",
            json!({"group": opt_json("--group", &a.group.group)?, "input": input(&a.group.input), "j": a.j}),
        ),
        Command::Sigma(a) => (
            "sigma",
            json!({
                "module": opt_json("--module", &a.module.module)?,
                "input": input(&a.module.input),
                "direction": a.direction,
                "degree_bound": a.degree_bound,
            }),
        ),
        Command::Tame(a) => (
            "tame",
            json!({
                "module": opt_json("--module", &a.module)?,
                "sigma_complement": opt_json("--sigma-complement", &a.sigma_complement)?,
                "input": input(&a.input),
                "m": a.m,
                "degree_bound": a.degree_bound,
            }),
        ),
        Command::Vbscan(a) => (
            "vbscan",
            json!({"group": opt_json("--group", &a.group.group)?, "input": input(&a.group.input), "j": a.j, "m_max": a.m_max}),
        ),
        Command::Report(a) => (
            "report",
            json!({
                "c": a.c,
                "n": a.n,
                "sigma_complement": opt_json("--sigma-complement", &a.sigma_complement)?,
                "module": opt_json("--module", &a.module)?,
                "input": input(&a.input),
            }),
        ),
    };
    cfg["strict"] = json!(cli.strict);
    if let Value::Object(o) = &mut cfg {
        o.retain(|_, v| !v.is_null());
    }
    Ok((name.to_string(), cfg))
}

/// Runs a parsed command and builds its JSON document.
pub fn execute(cli: &Cli) -> CliResult<Output> {
    let (name, cfg) = config(cli)?;
    let mut doc = Doc::new();
    match &cli.command {
        Command::Betti(a) => betti(a, &mut doc)?,
        Command::Pages(a) => pages(a, &mut doc)?,
        Command::Filtration(a) => filtration(a, &mut doc)?,
        Command::Sigma(a) => sigma(a, &mut doc)?,
        Command::Tame(a) => tame(a, &mut doc)?,
        Command::Vbscan(a) => vbscan(a, &mut doc)?,
        Command::Report(a) => report(a, &mut doc)?,
    }
    let mut out = Map::new();
    out.insert("schema".into(), json!(SCHEMA_VERSION));
    out.insert("command".into(), json!(name));
    out.insert("config".into(), cfg);
    out.extend(doc.fields);
    Ok(Output { document: Value::Object(out), unknown: doc.unknown })
}

/// Parses `args` (including the program name), runs the command and renders
/// the outcome. Writes the document to `--output` when given.
pub fn run<I, T>(args: I) -> RunResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                RunResult { code, stdout: text, stderr: String::new() }
            } else {
                RunResult { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let mut text = serde_json::to_string_pretty(&out.document).expect("JSON value renders");
            text.push('\n');
            let code = if cli.strict && out.unknown { 3 } else { 0 };
            match &cli.output {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => RunResult { code, stdout: String::new(), stderr: String::new() },
                    Err(e) => RunResult {
                        code: 2,
                        stdout: String::new(),
                        stderr: format!("error: {}: {e}\n", path.display()),
                    },
                },
                None => RunResult { code, stdout: text, stderr: String::new() },
            }
        }
        Err(e) => RunResult { code: e.code, stdout: String::new(), stderr: format!("error: {}\n", e.message) },
    }
}
