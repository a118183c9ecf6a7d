//! Command-line front end. [`run`] does all the work and returns what to
//! print and the exit status, so it can be driven from tests.

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use radzero_core::constructions::{self, gen_cycle, gen_loops, gen_random, gen_random_valued};
use radzero_core::oracle::{self, build_simple_at, colimit_hom_dim, stable_hom_space, syzygy_rep};
use radzero_core::syzygy::SingularityData;
use radzero_core::{
    bratteli, classify, cyclicize, default_horizon, gamma_blocks, hom_finite, omega_iterate, stable_hom_dim,
    syzygy_step, verify_theorem_a, BigUint, DimVector, Error, HomDimResult, HomStatus, RemovalKind, Valuation,
    ValuedQuiver, VertexId,
};
use serde_json::{json, Value};

use crate::dot::{bratteli_to_dot, quiver_to_dot};
use crate::dsl::{self, serialize_quiver, ParseError, QuiverDocument};
use crate::report::{self, envelope};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUSED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "radzero", version, about = "Singularity-category invariants of radical-square-zero algebras")]
pub struct Cli {
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Quiver file; standard input when omitted or `-`.
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AdjoinArgs {
    #[command(flatten)]
    pub input: Input,
    /// Label of the new vertex.
    #[arg(long)]
    pub id: String,
    /// Neighbour of the new vertex, as `v` or `v:a,b`; repeatable.
    #[arg(long = "arrow")]
    pub arrows: Vec<String>,
    /// Weight of the new vertex; derived from the valuations when omitted.
    #[arg(long)]
    pub weight: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate quiver files.
    Validate { files: Vec<PathBuf> },
    /// Vertices, arrows, weights and the vertex classification.
    Info(Input),
    /// Peel sources and sinks down to the cyclic-like core.
    Cyclicize(Input),
    /// Decide Hom-finiteness of the singularity category.
    HomFinite(Input),
    /// Bratteli diagram of the associated regular algebra.
    Bratteli {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        depth: usize,
    },
    /// dim Hom(q S_from, q S_to [shift]) in the singularity category.
    #[command(allow_negative_numbers = true)]
    HomDim {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        shift: i64,
        #[arg(long)]
        horizon: Option<usize>,
    },
    /// dim K^shift = dim Hom(q(A/r), q(A/r)[shift]).
    #[command(allow_negative_numbers = true)]
    KDim {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        shift: i64,
        #[arg(long)]
        horizon: Option<usize>,
    },
    /// Blocks of the regular algebra and the shift permutation.
    Sigma(Input),
    /// Check the shift permutation and dim K^n over a range `lo..hi`.
    VerifyTheoremA {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        range: String,
    },
    /// Add a source with arrows to the given vertices.
    AdjoinSource(AdjoinArgs),
    /// Add a sink with arrows from the given vertices.
    AdjoinSink(AdjoinArgs),
    /// Quiver of the trivial extension A/r ⊕ r^{⊗n}.
    TrivialExt {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: u32,
    },
    /// Disjoint union of two quivers.
    Union {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
    /// Generate a quiver.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Cross-check combinatorial answers against linear algebra over GF(p).
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = oracle::DEFAULT_PRIME)]
        prime: u32,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Export as Graphviz DOT.
    Export {
        #[command(flatten)]
        input: Input,
        #[arg(long, required = true)]
        dot: bool,
        /// Export the Bratteli diagram to this depth instead of the quiver.
        #[arg(long)]
        bratteli: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Oriented cycle of the given length.
    Cycle { len: usize },
    /// One vertex with n loops.
    Loops { n: u64 },
    /// Seeded random quiver.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, default_value_t = 2)]
        max_a: u64,
        /// Allow weights 2 and non-symmetric valuations.
        #[arg(long)]
        valued: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Info(_) => "info",
            Command::Cyclicize(_) => "cyclicize",
            Command::HomFinite(_) => "hom-finite",
            Command::Bratteli { .. } => "bratteli",
            Command::HomDim { .. } => "hom-dim",
            Command::KDim { .. } => "k-dim",
            Command::Sigma(_) => "sigma",
            Command::VerifyTheoremA { .. } => "verify-theorem-a",
            Command::AdjoinSource(_) => "adjoin-source",
            Command::AdjoinSink(_) => "adjoin-sink",
            Command::TrivialExt { .. } => "trivial-ext",
            Command::Union { .. } => "union",
            Command::Gen(_) => "gen",
            Command::Verify { .. } => "verify",
            Command::Export { .. } => "export",
        }
    }
}

/// What to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    json: Value,
    text: String,
    /// Nonzero when the command ran but a check it performs failed.
    code: i32,
}

impl Report {
    fn ok(json: Value, text: impl Into<String>) -> Self {
        Report { json, text: text.into(), code: EXIT_OK }
    }
}

#[derive(Debug)]
enum Failure {
    Parse { path: String, error: ParseError },
    Usage(String),
    Refused(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Refused(_) => EXIT_REFUSED,
            _ => EXIT_INVALID,
        }
    }

    fn json(&self) -> Value {
        match self {
            Failure::Parse { path, error } => json!({
                "kind": error.kind.as_str(),
                "message": error.message,
                "file": path,
                "line": error.pos.line,
                "column": error.pos.column,
            }),
            Failure::Usage(m) => json!({"kind": "usage", "message": m}),
            Failure::Refused(m) => json!({"kind": "refused", "message": m}),
        }
    }

    fn text(&self) -> String {
        match self {
            Failure::Parse { path, error } => {
                format!("{path}:{}:{}: {}", error.pos.line, error.pos.column, error.message)
            }
            Failure::Usage(m) | Failure::Refused(m) => m.clone(),
        }
    }
}

/// Core errors caused by bad arguments are usage errors; the rest are
/// refusals to compute.
fn core_failure(e: Error) -> Failure {
    match e {
        Error::Quiver(_)
        | Error::UnknownVertex(_)
        | Error::InvalidHorizon
        | Error::InvalidDepth
        | Error::InvalidPower
        | Error::Invalid(_) => Failure::Usage(e.to_string()),
        Error::NotHomFinite(_) | Error::VanishingSingularityCategory | Error::Overflow | Error::Oracle(_) => {
            Failure::Refused(e.to_string())
        }
    }
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    fn load(&mut self, path: Option<&Path>) -> Result<QuiverDocument, Failure> {
        let (label, text) = match path {
            Some(p) if p != Path::new("-") => {
                let text =
                    fs::read_to_string(p).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?;
                (p.display().to_string(), text)
            }
            _ => {
                let mut text = String::new();
                self.stdin.read_to_string(&mut text).map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
                ("<stdin>".to_owned(), text)
            }
        };
        dsl::parse(&text).map_err(|error| Failure::Parse { path: label, error })
    }
}

fn vertex(q: &ValuedQuiver, label: &str) -> Result<usize, Failure> {
    q.index_of(&VertexId::new(label)).ok_or_else(|| Failure::Usage(format!("unknown vertex `{label}`")))
}

fn parse_range(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Usage(format!("range `{s}` is not of the form lo..hi"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn parse_neighbour(s: &str) -> Result<(VertexId, Valuation), Failure> {
    let bad = || Failure::Usage(format!("arrow `{s}` is not of the form v or v:a,b"));
    match s.rsplit_once(':') {
        None => Ok((VertexId::new(s), Valuation::TRIVIAL)),
        Some((v, val)) => {
            let (a, b) = val.split_once(',').ok_or_else(bad)?;
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            Ok((VertexId::new(v), Valuation::new(a, b)))
        }
    }
}

fn quiver_report(name: &str, q: &ValuedQuiver) -> Report {
    let text = serialize_quiver(name, q);
    Report::ok(json!({"quiver": report::quiver(name, q), "text": text}), text)
}

fn hom_text(r: &HomDimResult) -> String {
    let dims: Vec<String> = r.level_dims.iter().map(BigUint::to_string).collect();
    let head = match (&r.status, &r.value) {
        (HomStatus::Finite | HomStatus::Zero, Some(v)) => format!("{} {v} (certified)", r.status.as_str()),
        (HomStatus::Unbounded, _) => "unbounded (certified)".to_owned(),
        _ => format!("horizon: no certificate within {} levels", r.level_dims.len()),
    };
    format!("{head}\nlevel dims from m = {}: {}\n", r.first_level, dims.join(" "))
}

fn execute(cmd: &Command, ctx: &mut Ctx<'_>) -> Result<Report, Failure> {
    match cmd {
        Command::Validate { files } => {
            let paths: Vec<Option<&Path>> =
                if files.is_empty() { vec![None] } else { files.iter().map(|p| Some(p.as_path())).collect() };
            let mut entries = Vec::new();
            let mut text = String::new();
            let mut first_failure = None;
            for path in paths {
                let label = path.map_or("<stdin>".to_owned(), |p| p.display().to_string());
                match ctx.load(path) {
                    Ok(doc) => {
                        text.push_str(&format!(
                            "{label}: ok ({} vertices, {} arrows)\n",
                            doc.body.len(),
                            doc.body.arrow_count()
                        ));
                        entries.push(json!({"file": label, "valid": true, "name": doc.name,
                            "vertices": doc.body.len(), "arrows": doc.body.arrow_count()}));
                    }
                    Err(f) => {
                        text.push_str(&format!("{}\n", f.text()));
                        entries.push(json!({"file": label, "valid": false, "error": f.json()}));
                        first_failure.get_or_insert(f);
                    }
                }
            }
            match first_failure {
                // Report every file, but exit as the first failure dictates.
                Some(f) if files.len() <= 1 => Err(f),
                Some(f) => Ok(Report { json: json!({"files": entries, "error": f.json()}), text, code: f.code() }),
                None => Ok(Report::ok(json!({"files": entries}), text)),
            }
        }
        Command::Info(input) => {
            let doc = ctx.load(input.file.as_deref())?;
            let q = &doc.body;
            let c = classify(q);
            let hf = hom_finite(q);
            let names = |idx: &[usize]| idx.iter().map(|&i| q.vertex(i).to_string()).collect::<Vec<_>>().join(" ");
            let text = format!(
                "quiver {}\nvertices: {}\narrows: {}\nsources: {}\nsinks: {}\ncyclic-like: {}\nhom-finite: {hf}\n",
                doc.name,
                q.len(),
                q.arrow_count(),
                names(&c.sources),
                names(&c.sinks),
                names(&c.cyclic_like),
            );
            Ok(Report::ok(
                json!({
                    "quiver": report::quiver(&doc.name, q),
                    "classification": report::classification(q, &c),
                    "hom_finite": report::hom_finite(&hf),
                }),
                text,
            ))
        }
        Command::Cyclicize(input) => {
            let doc = ctx.load(input.file.as_deref())?;
            let r = cyclicize(&doc.body);
            let mut text = serialize_quiver(&doc.name, &r.core);
            for (v, kind) in &r.trace {
                let kind = if matches!(kind, RemovalKind::Source) { "source" } else { "sink" };
                text.push_str(&format!("# removed {} ({kind})\n", doc.body.vertex(*v)));
            }
            Ok(Report::ok(report::cyclicization(&doc.body, &r), text))
        }
        Command::HomFinite(input) => {
            let doc = ctx.load(input.file.as_deref())?;
            let r = hom_finite(&doc.body);
            Ok(Report::ok(report::hom_finite(&r), format!("{r}\n")))
        }
        Command::Bratteli { input, depth } => {
            let doc = ctx.load(input.file.as_deref())?;
            let q = &doc.body;
            let d = bratteli(q, *depth).map_err(core_failure)?;
            let mut text = String::new();
            for (i, level) in d.levels.iter().enumerate() {
                let blocks: Vec<String> = level.iter().map(|(v, c)| format!("{}:{c}", q.vertex(*v))).collect();
                text.push_str(&format!("level {i}: {} (dim {})\n", blocks.join(" "), d.level_dims[i]));
            }
            Ok(Report::ok(report::bratteli(q, &d), text))
        }
        Command::HomDim { input, from, to, shift, horizon } => {
            let doc = ctx.load(input.file.as_deref())?;
            let q = &doc.body;
            let (a, b) = (vertex(q, from)?, vertex(q, to)?);
            let h = horizon.unwrap_or_else(|| default_horizon(q, *shift));
            let r = SingularityData::new(q).hom_dim(a, b, *shift, h).map_err(core_failure)?;
            let mut json = report::hom_dim(&r);
            json["from"] = json!(from);
            json["to"] = json!(to);
            json["shift"] = json!(shift);
            json["horizon"] = json!(h);
            Ok(Report::ok(json, hom_text(&r)))
        }
        Command::KDim { input, shift, horizon } => {
            let doc = ctx.load(input.file.as_deref())?;
            let q = &doc.body;
            let h = horizon.unwrap_or_else(|| default_horizon(q, *shift));
            let r = SingularityData::new(q).k_dim(*shift, h).map_err(core_failure)?;
            let mut json = report::hom_dim(&r);
            json["shift"] = json!(shift);
            json["horizon"] = json!(h);
            Ok(Report::ok(json, hom_text(&r)))
        }
        Command::Sigma(input) => {
            let doc = ctx.load(input.file.as_deref())?;
            let q = &doc.body;
            let s = gamma_blocks(q).map_err(core_failure)?;
            let mut text = String::new();
            for b in &s.blocks {
                text.push_str(&format!("block {}: size {}, weight {}\n", b.id, b.size, b.weight));
            }
            let arrows: Vec<String> = (0..s.blocks.len())
                .map(|u| format!("{} -> {}", s.blocks[u].id, s.blocks[s.sigma_perm.apply(u)].id))
                .collect();
            text.push_str(&format!("sigma: {}\norder: {}\n", arrows.join(", "), s.order));
            Ok(Report::ok(report::sigma(q, &s), text))
        }
        Command::VerifyTheoremA { input, range } => {
            let doc = ctx.load(input.file.as_deref())?;
            let (lo, hi) = parse_range(range)?;
            let r = verify_theorem_a(&doc.body, lo..=hi).map_err(core_failure)?;
            let mut text = format!("{}\n", r.summary());
            for c in &r.k_dims {
                let k = c.k_dim.as_ref().map_or("-".to_owned(), BigUint::to_string);
                text.push_str(&format!("n = {}: k_dim {k}, pairing {}\n", c.shift, c.pairing));
            }
            Ok(Report { json: report::theorem_a(&r), text, code: if r.passes() { EXIT_OK } else { EXIT_REFUSED } })
        }
        Command::AdjoinSource(args) | Command::AdjoinSink(args) => {
            let doc = ctx.load(args.input.file.as_deref())?;
            if !dsl::is_valid_label(&args.id) {
                return Err(Failure::Usage(format!("`{}` is not a valid vertex label", args.id)));
            }
            let arrows = args.arrows.iter().map(|s| parse_neighbour(s)).collect::<Result<Vec<_>, _>>()?;
            let q = if matches!(cmd, Command::AdjoinSource(_)) {
                constructions::adjoin_source(&doc.body, args.id.as_str(), &arrows, args.weight)
            } else {
                constructions::adjoin_sink(&doc.body, args.id.as_str(), &arrows, args.weight)
            }
            .map_err(core_failure)?;
            Ok(quiver_report(&doc.name, &q))
        }
        Command::TrivialExt { input, n } => {
            let doc = ctx.load(input.file.as_deref())?;
            let q = constructions::trivial_ext_power(&doc.body, *n).map_err(core_failure)?;
            Ok(quiver_report(&format!("{}^{n}", doc.name), &q))
        }
        Command::Union { first, second, name } => {
            let a = ctx.load(Some(first))?;
            let b = ctx.load(Some(second))?;
            let name = name.clone().unwrap_or_else(|| format!("{}+{}", a.name, b.name));
            Ok(quiver_report(&name, &constructions::disjoint_union(&a.body, &b.body)))
        }
        Command::Gen(g) => {
            let (name, q) = match g {
                GenCommand::Cycle { len } if *len >= 1 => (format!("cycle{len}"), gen_cycle(*len)),
                GenCommand::Loops { n } if *n >= 1 => (format!("loops{n}"), gen_loops(*n)),
                GenCommand::Random { seed, max_vertices, max_a, valued } if *max_vertices >= 1 && *max_a >= 1 => {
                    let q = if *valued {
                        gen_random_valued(*seed, *max_vertices, *max_a)
                    } else {
                        gen_random(*seed, *max_vertices, *max_a)
                    };
                    (format!("random{seed}"), q)
                }
                _ => return Err(Failure::Usage("sizes must be at least 1".to_owned())),
            };
            Ok(quiver_report(&name, &q))
        }
        Command::Verify { input, prime, depth } => {
            let doc = ctx.load(input.file.as_deref())?;
            verify(&doc.body, *prime, *depth)
        }
        Command::Export { input, bratteli: depth, .. } => {
            let doc = ctx.load(input.file.as_deref())?;
            let dot = match depth {
                Some(d) => bratteli_to_dot(&doc.name, &doc.body, &bratteli(&doc.body, *d).map_err(core_failure)?),
                None => quiver_to_dot(&doc.name, &doc.body),
            };
            Ok(Report::ok(json!({"format": "dot", "dot": dot}), dot))
        }
    }
}

/// Largest explicit module the oracle is asked to build.
const ORACLE_BUDGET: u64 = 48;

#[derive(Default)]
struct Tally {
    checks: usize,
    skipped: usize,
    mismatches: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.mismatches.push(what());
        }
    }

    fn json(&self) -> Value {
        json!({"checks": self.checks, "skipped": self.skipped, "mismatches": self.mismatches})
    }
}

fn verify(q: &ValuedQuiver, prime: u32, depth: Option<usize>) -> Result<Report, Failure> {
    let refuse = |e: oracle::OracleError| Failure::Refused(e.to_string());
    oracle::check_prime(prime).map_err(refuse)?;
    oracle::arrow_list(q).map_err(refuse)?;
    let n = q.len();
    let small = |v: &DimVector| v.total_length(q) <= BigUint::from(ORACLE_BUDGET);

    let mut syz = Tally::default();
    for a in 0..n {
        let mut module = build_simple_at(q, a, prime).map_err(refuse)?;
        let mut v = DimVector::unit(n, a);
        for step in 1..=6 {
            v = syzygy_step(q, &v);
            if !small(&v) {
                syz.skipped += 1;
                break;
            }
            module = syzygy_rep(&module);
            let dims = DimVector::from_counts(&module.dims().iter().map(|&d| d as u64).collect::<Vec<_>>());
            syz.check(dims == v && module.satisfies_radical_square_zero(), || {
                format!("syzygy {step} of S_{}", q.vertex(a))
            });
        }
    }

    let mut stable = Tally::default();
    for a in 0..n {
        for b in 0..n {
            let sa = build_simple_at(q, a, prime).map_err(refuse)?;
            let sb = build_simple_at(q, b, prime).map_err(refuse)?;
            let d = stable_hom_space(&sa, &sb).map_err(refuse)?.dim();
            let expected = stable_hom_dim(q, &DimVector::unit(n, a), &DimVector::unit(n, b));
            stable.check(BigUint::from(d) == expected, || format!("stable Hom(S_{}, S_{})", q.vertex(a), q.vertex(b)));
        }
    }

    let mut colim = Tally::default();
    let data = SingularityData::new(q);
    for shift in -2i64..=2 {
        let needed = shift.max(0) as usize + 2 * n + 3;
        let d = depth.unwrap_or(needed);
        for a in 0..n {
            for b in 0..n {
                let r = data.hom_dim(a, b, shift, default_horizon(q, shift)).map_err(core_failure)?;
                let far = |v: usize, m: usize| omega_iterate(q, &DimVector::unit(n, v), m);
                if !r.is_certified_finite() || !small(&far(a, d)) || !small(&far(b, d + 2)) {
                    colim.skipped += 1;
                    continue;
                }
                let got = colimit_hom_dim(q, a, b, shift, d, prime).map_err(refuse)?;
                colim.check(r.value == Some(BigUint::from(got)), || {
                    format!("Hom(S_{}, S_{}[{shift}])", q.vertex(a), q.vertex(b))
                });
            }
        }
    }

    let mismatches = syz.mismatches.len() + stable.mismatches.len() + colim.mismatches.len();
    let text = format!(
        "GF({prime}) oracle\nsyzygies: {} checks, {} skipped\nstable Hom: {} checks\ncolimits: {} checks, {} skipped\n{}\n",
        syz.checks,
        syz.skipped,
        stable.checks,
        colim.checks,
        colim.skipped,
        if mismatches == 0 {
            "all agree".to_owned()
        } else {
            format!(
                "MISMATCH: {}",
                [&syz.mismatches, &stable.mismatches, &colim.mismatches]
                    .iter()
                    .flat_map(|m| m.iter().cloned())
                    .collect::<Vec<_>>()
                    .join("; ")
            )
        }
    );
    Ok(Report {
        json: json!({
            "prime": prime,
            "agree": mismatches == 0,
            "syzygy": syz.json(),
            "stable_hom": stable.json(),
            "colimit": colim.json(),
        }),
        text,
        code: if mismatches > 0 { EXIT_REFUSED } else { EXIT_OK },
    })
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code, stdout: rendered, stderr: String::new() }
            };
        }
    };
    let name = cli.command.name();
    let mut ctx = Ctx { stdin };
    match execute(&cli.command, &mut ctx) {
        Ok(r) => {
            let code = r.code;
            let stdout = if cli.json { format!("{}\n", envelope(name, r.json)) } else { r.text };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(f) => {
            let (stdout, stderr) = if cli.json {
                (format!("{}\n", envelope(name, json!({"error": f.json()}))), String::new())
            } else {
                (String::new(), format!("error: {}\n", f.text()))
            };
            Outcome { code: f.code(), stdout, stderr }
        }
    }
}
