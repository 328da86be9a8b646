//! Command line front end. `run_cli` does all the work so tests can call it
//! without spawning a process; the `ssb` binary only forwards its arguments.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path as FsPath;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::classify::{classify, Auditor, Relation};
use crate::dsl::{self, SourceDocument};
use crate::engine::{build_algebra_with, BuildOptions, FiniteAlgebra, Presentation};
use crate::error::{Result, SsbError};
use crate::families::{validate_structure, FamilySpec};
use crate::hochschild::{hh_table, max_hh_degree};
use crate::invariants::{cartan_determinant, cartan_invariants, cartan_matrix, centre, kulshammer_report};
use crate::suite::{self, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "ssb", version, about = "Symmetric special biserial algebra workbench")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Characteristic of the ground field (0 or a prime).
    #[arg(long = "char", global = true)]
    characteristic: Option<u64>,
    #[arg(long, global = true)]
    json: bool,
    /// Print the quiver as Graphviz.
    #[arg(long, global = true)]
    dot: bool,
    /// Recompute the separating invariant of a verdict.
    #[arg(long, global = true)]
    audit: bool,
    /// Longest path the basis closure may reach. Overrides SSB_LEN_BOUND.
    #[arg(long = "len-bound", global = true)]
    len_bound: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an algebra and report its basis and projectives.
    Build { source: String },
    /// Dimension, Cartan data, centre, HH^0, HH^1 and the Külshammer quotient.
    Invariants { source: String },
    /// Hochschild cohomology dimensions.
    Hh {
        source: String,
        #[arg(long = "max-degree", default_value_t = 2)]
        max_degree: usize,
    },
    /// Decide isomorphism, derived equivalence or stable equivalence of Morita type.
    Classify { relation: RelationArg, left: String, right: String },
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyTarget {
    /// Check the published closed forms over a parameter grid.
    PaperSuite {
        #[arg(long, default_value_t = 4)]
        max: u32,
        /// Comma separated characteristics, e.g. 0,2,3.
        #[arg(long, value_delimiter = ',')]
        chars: Option<Vec<u64>>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RelationArg {
    Derived,
    Stable,
    Iso,
}

impl From<RelationArg> for Relation {
    fn from(r: RelationArg) -> Relation {
        match r {
            RelationArg::Derived => Relation::Derived,
            RelationArg::Stable => Relation::StableMorita,
            RelationArg::Iso => Relation::Iso,
        }
    }
}

/// Exit code and the text written to each stream.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Run the tool on `argv` (program name first).
pub fn run_cli<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CliOutput { code: 0, stdout: text, stderr: String::new() }
                }
                _ => CliOutput { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, stdout)) => CliOutput { code, stdout, stderr: String::new() },
        Err(e) => CliOutput { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(cli: &Cli) -> Result<(i32, String)> {
    let c = &cli.common;
    match &cli.command {
        Command::Build { source } => build_cmd(c, source).map(|s| (0, s)),
        Command::Invariants { source } => invariants_cmd(c, source).map(|s| (0, s)),
        Command::Hh { source, max_degree } => hh_cmd(c, source, *max_degree).map(|s| (0, s)),
        Command::Classify { relation, left, right } => classify_cmd(c, (*relation).into(), left, right),
        Command::Verify { target: VerifyTarget::PaperSuite { max, chars } } => verify_cmd(c, *max, chars.clone()),
    }
}

/// A source argument: a family string, or a path to a presentation document.
struct Loaded {
    name: String,
    doc: SourceDocument,
    characteristic: u64,
}

impl Loaded {
    fn presentation(&self) -> Result<Presentation> {
        self.doc.presentation(self.characteristic)
    }

    fn family(&self) -> Option<FamilySpec> {
        self.doc.family()
    }
}

fn load(c: &Common, source: &str) -> Result<Loaded> {
    let default_char = c.characteristic.unwrap_or(0);
    let (name, text) = if FsPath::new(source).is_file() {
        let text = std::fs::read_to_string(source)
            .map_err(|e| SsbError::InvalidParams(format!("cannot read {source}: {e}")))?;
        (source.to_string(), text)
    } else {
        (source.to_string(), source.to_string())
    };
    let doc = dsl::parse_document(&text, default_char)?;
    let characteristic = match (doc.declared_char, c.characteristic) {
        (Some(d), Some(f)) if d != f => {
            return Err(SsbError::ValidationError(format!("{name} declares char {d} but --char {f} was given")))
        }
        (Some(d), _) => d,
        (None, f) => f.unwrap_or(0),
    };
    let name = doc.family().map_or(name, |f| f.to_string());
    Ok(Loaded { name, doc, characteristic })
}

fn build_options(c: &Common) -> BuildOptions {
    let mut opts = BuildOptions::from_env();
    if c.len_bound.is_some() {
        opts.len_bound = c.len_bound;
    }
    opts
}

fn load_algebra(c: &Common, source: &str) -> Result<(Loaded, FiniteAlgebra)> {
    let l = load(c, source)?;
    let a = build_algebra_with(&l.presentation()?, &build_options(c))?;
    Ok((l, a))
}

fn big(x: &BigInt) -> Value {
    i64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn build_cmd(c: &Common, source: &str) -> Result<String> {
    let (l, a) = load_algebra(c, source)?;
    if c.dot {
        return Ok(dsl::to_dot(a.presentation(), &l.name));
    }
    let projectives: Vec<Value> = a
        .projective_structure()
        .iter()
        .map(|p| {
            json!({
                "vertex": a.presentation().quiver.vertex_label(p.vertex),
                "dimension": p.dimension,
                "radical_layers": p.radical_layers,
                "uniserial": p.uniserial,
            })
        })
        .collect();
    let structure = l.family().map(|_| validate_structure(&a));
    if c.json {
        let mut v = json!({
            "spec": l.name,
            "char": l.characteristic,
            "dimension": a.dim(),
            "vertices": a.num_vertices(),
            "arrows": a.presentation().quiver.arrows().len(),
            "relations": a.presentation().relations.len(),
            "projectives": projectives,
            "presentation": dsl::emit(a.presentation()),
        });
        if let Some(s) = structure {
            v["structure"] = serde_json::to_value(s).expect("report serializes");
        }
        return Ok(pretty(&v));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{} over char {}", l.name, l.characteristic);
    let _ = writeln!(out, "dimension: {}", a.dim());
    let _ = writeln!(
        out,
        "quiver: {} vertices, {} arrows, {} relations",
        a.num_vertices(),
        a.presentation().quiver.arrows().len(),
        a.presentation().relations.len()
    );
    for p in a.projective_structure() {
        let _ = writeln!(
            out,
            "P{}: dim {}, radical layers {:?}{}",
            a.presentation().quiver.vertex_label(p.vertex),
            p.dimension,
            p.radical_layers,
            if p.uniserial { ", uniserial" } else { "" }
        );
    }
    if let Some(s) = structure {
        let _ = writeln!(
            out,
            "special biserial: {}, weakly symmetric: {}, symmetrizing form: {}, non-uniserial projectives: {}",
            s.special_biserial, s.weakly_symmetric, s.symmetric_form_ok, s.nonuniserial_count
        );
    }
    Ok(out)
}

fn invariants_cmd(c: &Common, source: &str) -> Result<String> {
    let (l, a) = load_algebra(c, source)?;
    if c.dot {
        return Ok(dsl::to_dot(a.presentation(), &l.name));
    }
    let cartan = cartan_matrix(&a);
    let inv = cartan_invariants(&a);
    let det = cartan_determinant(&a);
    let centre_dim = centre(&a).dim();
    let hh = hh_table(&a, 1)?;
    let kul = if l.characteristic > 0 { kulshammer_report(&a, 1).ok() } else { None };

    if c.json {
        let hh: BTreeMap<String, usize> = hh.dims.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        let mut v = json!({
            "spec": l.name,
            "char": l.characteristic,
            "dimension": a.dim(),
            "cartan": cartan.data().iter().map(|r| r.iter().map(big).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "cartan_invariants": inv.iter().map(big).collect::<Vec<_>>(),
            "cartan_det": big(&det),
            "centre_dim": centre_dim,
            "hh": hh,
        });
        if let Some(k) = kul {
            v["kulshammer"] = serde_json::to_value(k).expect("report serializes");
        }
        return Ok(pretty(&v));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{} over char {}", l.name, l.characteristic);
    let _ = writeln!(out, "dimension: {}", a.dim());
    let _ = writeln!(out, "cartan: {:?}", cartan.to_i64());
    let _ = writeln!(out, "cartan invariants: {}", join(&inv));
    let _ = writeln!(out, "cartan determinant: {det}");
    let _ = writeln!(out, "centre: {centre_dim}");
    for (n, d) in &hh.dims {
        let _ = writeln!(out, "HH^{n}: {d}");
    }
    if let Some(k) = kul {
        let _ = writeln!(
            out,
            "Külshammer: dim κ {}, dim T_1^⊥ {}, quotient Z/T_1^⊥ dim {} with radical layers {:?}",
            k.commutator_dim, k.t_perp_dim, k.quotient_dim, k.quotient_radical_layers
        );
    }
    Ok(out)
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn hh_cmd(c: &Common, source: &str, max_degree: usize) -> Result<String> {
    let (l, a) = load_algebra(c, source)?;
    if max_degree > max_hh_degree(&a) {
        return Err(SsbError::UnsupportedDegree {
            degree: max_degree,
            reason: format!("{} supports Hochschild degrees up to {}", l.name, max_hh_degree(&a)),
        });
    }
    let t = hh_table(&a, max_degree)?;
    if c.json {
        let dims: BTreeMap<String, usize> = t.dims.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        return Ok(pretty(&json!({ "spec": l.name, "char": l.characteristic, "hh": dims })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{} over char {}", l.name, l.characteristic);
    for (n, d) in &t.dims {
        let _ = writeln!(out, "HH^{n}: {d}");
    }
    Ok(out)
}

fn family_of(c: &Common, source: &str) -> Result<(FamilySpec, u64)> {
    let l = load(c, source)?;
    let f =
        l.family().ok_or_else(|| SsbError::InvalidParams(format!("{source} is not one of gamma, lambda, nakayama")))?;
    Ok((f, l.characteristic))
}

fn classify_cmd(c: &Common, relation: Relation, left: &str, right: &str) -> Result<(i32, String)> {
    let (x, cx) = family_of(c, left)?;
    let (y, cy) = family_of(c, right)?;
    if cx != cy {
        return Err(SsbError::ValidationError(format!("characteristics differ: {cx} and {cy}")));
    }
    let v = classify(relation, x, y, cx)?;
    let audit = if c.audit { Some(Auditor::new().audit(&v)?) } else { None };
    let code = if audit.as_ref().is_some_and(|r| !r.passed()) { 1 } else { 0 };

    if c.json {
        let mut out = serde_json::to_value(&v).expect("verdict serializes");
        out["result"] = Value::from(result_word(v.is_equivalent()));
        if let Some((inv, l, r)) = v.separator() {
            out["separator"] = json!({ "invariant": inv.to_string(), "left": l, "right": r });
        }
        if let Some(a) = &audit {
            out["audit"] = json!({ "passed": a.passed(), "lines": a.lines });
        }
        return Ok((code, pretty(&out)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{}", result_word(v.is_equivalent()));
    let _ = writeln!(out, "{v}");
    let _ = writeln!(out, "normal forms: {} and {}", v.normal_forms.0, v.normal_forms.1);
    for f in &v.cited_facts {
        let _ = writeln!(out, "[{}] {}: {}", f.key, f.citation, f.statement);
    }
    if let Some(a) = &audit {
        for line in &a.lines {
            let _ = writeln!(
                out,
                "audit {}: computed {} vs {}, closed form {} vs {}: {}",
                line.invariant,
                line.computed.0,
                line.computed.1,
                opt(line.predicted.0),
                opt(line.predicted.1),
                if line.ok { "ok" } else { "MISMATCH" }
            );
        }
        let _ = writeln!(out, "audit {}", if a.passed() { "passed" } else { "failed" });
    }
    Ok((code, out))
}

fn result_word(eq: bool) -> &'static str {
    if eq {
        "equivalent"
    } else {
        "inequivalent"
    }
}

fn opt(x: Option<u64>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

fn verify_cmd(c: &Common, max: u32, chars: Option<Vec<u64>>) -> Result<(i32, String)> {
    if max == 0 {
        return Err(SsbError::InvalidParams("--max must be at least 1".into()));
    }
    if let Some(ch) = &chars {
        for &x in ch {
            crate::kernel::Field::new(x)?;
        }
    }
    let cfg = SuiteConfig { max, chars, ..SuiteConfig::default() };
    let results = suite::run(&cfg);
    let code = if results.iter().all(|r| r.passed()) { 0 } else { 1 };
    if c.json {
        return Ok((code, pretty(&serde_json::to_value(&results).expect("results serialize"))));
    }
    let mut out = String::new();
    for r in &results {
        let _ = writeln!(out, "{r}");
        for f in r.failures.iter().take(5) {
            let _ = writeln!(out, "    {f}");
        }
        if r.failures.len() > 5 {
            let _ = writeln!(out, "    ... {} more", r.failures.len() - 5);
        }
    }
    Ok((code, out))
}
