//! Command-line front end. Every command prints one JSON report on stdout;
//! diagnostics go to stderr.
//!
//! Exit status: 0 on success, 1 when a computation fails, 2 on usage or
//! input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use milnor_core::deform::{
    combine_samples, family_jump_with, make_family_with, sample_mu, FamilyOptions, Mode,
};
use milnor_core::local::{certificate_holds, standard_basis_with, BasisOptions};
use milnor_core::newton::{
    face_verdicts, make_convenient, newton_number, newton_polygon, support_points,
};
use milnor_core::search::{base_hash, DEFAULT_BUDGET};
use milnor_core::{
    local_reduce, milnor_with, versal_basis, Error, IdealGens, Method, MilnorOptions, Poly,
    Rational, Ring,
};
use serde_json::{json, Value};

use crate::{cache, grid, json as js, search, svg, verify};

pub const SCHEMA_VERSION: u32 = 1;
/// Prefix of the environment variables that override flag defaults.
pub const ENV_PREFIX: &str = "MILNOR_";

pub const GRAMMAR: &str = "Polynomial grammar: terms joined by + or -; a term is a product of \
integer or p/q coefficients, variables and parameters, joined by * and raised to \
non-negative integer powers with ^; parentheses group sums. Symbols must be declared \
with --vars or --params.";

#[derive(Debug, Parser)]
#[command(
    name = "milnor",
    version,
    about = "Exact Milnor numbers, Newton polygons and deformation jumps of plane and space germs",
    after_help = GRAMMAR
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Main variables, comma separated.
    #[arg(long, global = true, env = "MILNOR_VARS", default_value = "x,y", value_delimiter = ',')]
    pub vars: Vec<String>,
    /// Generic parameters, comma separated.
    #[arg(long, global = true, env = "MILNOR_PARAMS", value_delimiter = ',')]
    pub params: Vec<String>,
    #[arg(long, global = true, env = "MILNOR_METHOD", value_enum, default_value = "standard-basis")]
    pub method: MethodArg,
    /// Largest jet order tried by the jets method.
    #[arg(long, global = true, env = "MILNOR_JET_CAP", default_value_t = 32, value_parser = clap::value_parser!(u32).range(1..))]
    pub jet_cap: u32,
    /// Largest degree bound of the standard-basis engine.
    #[arg(long, global = true, env = "MILNOR_DEGREE_CAP", default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    pub degree_cap: u32,
    /// Seed of the random coordinate changes of the resultant method.
    #[arg(long, global = true, env = "MILNOR_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Values of the deformation symbol used with --sampled.
    #[arg(
        long,
        global = true,
        env = "MILNOR_SAMPLES",
        value_delimiter = ',',
        default_value = "1/101,1/103,1/107,1/109,1/113"
    )]
    pub samples: Vec<String>,
    /// Report wall-clock time in elapsed_ms (otherwise null, keeping output reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    #[value(alias = "sb", alias = "standard_basis")]
    StandardBasis,
    Jets,
    Resultant,
    All,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::StandardBasis => Method::StandardBasis,
            MethodArg::Jets => Method::Jets,
            MethodArg::Resultant => Method::Resultant,
            MethodArg::All => Method::All,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdealArg {
    /// m·(∇f), whose quotient is spanned by the versal basis.
    MaxJacobian,
    /// The jacobian ideal (∇f).
    Jacobian,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Milnor number of a germ.
    Mu { germ: String },
    /// Newton polygon, Newton number and non-degeneracy of a plane germ.
    Newton {
        germ: String,
        /// Also write the polygon as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Add x^N and y^N before computing.
        #[arg(long, value_name = "N")]
        make_convenient: Option<u16>,
    },
    /// Kouchnirenko non-degeneracy with per-face certificates.
    Nondeg { germ: String },
    /// Monomial basis of m/m·(∇f).
    Versal { germ: String },
    /// Local normal form of a polynomial modulo an ideal built from a germ.
    Reduce {
        poly: String,
        #[arg(long)]
        germ: String,
        #[arg(long, value_enum, default_value = "max-jacobian")]
        ideal: IdealArg,
    },
    /// Generic Milnor number and jump of a one-parameter family.
    Jump {
        #[arg(long)]
        base: String,
        #[arg(long)]
        total: String,
        #[arg(long, default_value = "s")]
        sym: String,
        /// Sample values of the symbol instead of treating it as generic.
        #[arg(long)]
        sampled: bool,
    },
    /// Search a grid of curve deformations for the smallest nonzero jump.
    Search {
        germ: String,
        /// Grid TOML file.
        #[arg(long)]
        grid: PathBuf,
        /// JSON-lines result cache to append to.
        #[arg(long, env = "MILNOR_CACHE")]
        cache: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Cached search results for a base germ.
    Cache {
        germ: String,
        #[arg(long, env = "MILNOR_CACHE")]
        cache: PathBuf,
    },
    /// Write the Newton polygon of a plane germ as SVG.
    Render {
        germ: String,
        #[arg(long)]
        svg: PathBuf,
        #[arg(long, value_name = "N")]
        make_convenient: Option<u16>,
    },
    /// Recompute every published value and print a pass/fail table.
    VerifyPaper {
        /// Run only the checks with this tag or id (X9, W10, corpus, search, ...).
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        workers: Option<usize>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Mu { .. } => "mu",
            Command::Newton { .. } => "newton",
            Command::Nondeg { .. } => "nondeg",
            Command::Versal { .. } => "versal",
            Command::Reduce { .. } => "reduce",
            Command::Jump { .. } => "jump",
            Command::Search { .. } => "search",
            Command::Cache { .. } => "cache",
            Command::Render { .. } => "render",
            Command::VerifyPaper { .. } => "verify-paper",
        }
    }
}

/// Failure of a command, with the exit status it maps to.
#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(String),
    Usage(String),
    /// The command ran and produced a report, but some check failed.
    Checks(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

struct Ctx {
    global: Global,
}

impl Ctx {
    fn ring_with(&self, extra: &[&str]) -> Result<Arc<Ring>, Error> {
        let mut params: Vec<String> = self.global.params.iter().filter(|p| !p.is_empty()).cloned().collect();
        for e in extra {
            if !params.iter().any(|p| p == e) {
                params.push((*e).to_string());
            }
        }
        Ring::new(&self.global.vars, &params)
    }

    fn ring(&self) -> Result<Arc<Ring>, Error> {
        self.ring_with(&[])
    }

    fn parse(&self, text: &str) -> Result<Poly, Error> {
        Poly::parse(&self.ring()?, text)
    }

    fn milnor(&self) -> MilnorOptions {
        MilnorOptions {
            degree_cap: self.global.degree_cap,
            jet_cap: self.global.jet_cap,
            seed: self.global.seed,
        }
    }

    fn family(&self) -> FamilyOptions {
        FamilyOptions {
            method: Method::from(self.global.method),
            milnor: self.milnor(),
        }
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// the report. Returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let echo: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let name = cli.command.name();
    let timings = cli.global.timings;
    let ctx = Ctx { global: cli.global };
    let start = Instant::now();
    let result = dispatch(&ctx, &cli.command, err);
    let elapsed = timings.then(|| start.elapsed().as_millis() as u64);
    let mut report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": {"name": name, "argv": echo},
        "versions": {
            "milnor": env!("CARGO_PKG_VERSION"),
            "milnor-core": milnor_core::VERSION,
        },
        "elapsed_ms": elapsed,
    });
    let code = match result {
        Ok(v) => {
            report["result"] = v;
            0
        }
        Err(Failure::Checks(v)) => {
            report["result"] = v;
            1
        }
        Err(f) => {
            let (class, kind, message, code) = match &f {
                Failure::Core(e) if e.is_input_error() => {
                    let class = match e {
                        Error::Syntax { .. } | Error::NegativeExponent { .. } => "SyntaxError",
                        _ => "InputError",
                    };
                    (class, e.kind(), e.to_string(), 2)
                }
                Failure::Core(e) => ("ComputationError", e.kind(), e.to_string(), 1),
                Failure::Io(m) => ("IoError", "Io", m.clone(), 1),
                Failure::Usage(m) => ("UsageError", "Usage", m.clone(), 2),
                Failure::Checks(_) => unreachable!(),
            };
            let _ = writeln!(err, "error: {message}");
            if code == 2 {
                let _ = writeln!(err, "{GRAMMAR}");
            }
            report["error"] = json!({"class": class, "kind": kind, "message": message});
            code
        }
    };
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"));
    code
}

fn dispatch(ctx: &Ctx, cmd: &Command, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Mu { germ } => mu(ctx, germ),
        Command::Newton {
            germ,
            svg,
            make_convenient: n,
        } => newton(ctx, germ, svg.as_deref(), *n),
        Command::Nondeg { germ } => nondeg(ctx, germ),
        Command::Versal { germ } => versal(ctx, germ),
        Command::Reduce { poly, germ, ideal } => reduce(ctx, poly, germ, *ideal),
        Command::Jump {
            base,
            total,
            sym,
            sampled,
        } => jump(ctx, base, total, sym, *sampled),
        Command::Search {
            germ,
            grid,
            cache,
            budget,
            workers,
        } => run_search(ctx, germ, grid, cache.as_deref(), *budget, *workers),
        Command::Cache { germ, cache } => cache_query(ctx, germ, cache),
        Command::Render {
            germ,
            svg,
            make_convenient: n,
        } => render(ctx, germ, svg, *n),
        Command::VerifyPaper { only, workers } => verify_paper(ctx, only.as_deref(), *workers, err),
    }
}

fn mu(ctx: &Ctx, germ: &str) -> Outcome {
    let f = ctx.parse(germ)?;
    let method = Method::from(ctx.global.method);
    let m = milnor_with(&f, method, &ctx.milnor())?;
    let per: serde_json::Map<String, Value> = m
        .per_method
        .iter()
        .map(|(k, v)| (k.name().to_string(), js::colength(*v)))
        .collect();
    Ok(json!({
        "input": f.to_text(),
        "method": method.name(),
        "value": js::colength(m.value),
        "per_method": per,
        "cap_used": m.cap_used,
    }))
}

fn plane_germ(ctx: &Ctx, germ: &str, n: Option<u16>) -> Result<Poly, Error> {
    let f = ctx.parse(germ)?;
    if f.arity() != 2 {
        return Err(Error::ArityUnsupported { arity: f.arity() });
    }
    Ok(match n {
        Some(n) => make_convenient(&f, n),
        None => f,
    })
}

fn newton(ctx: &Ctx, germ: &str, svg_path: Option<&std::path::Path>, n: Option<u16>) -> Outcome {
    let f = plane_germ(ctx, germ, n)?;
    let poly = newton_polygon(&f)?;
    if let Some(path) = svg_path {
        std::fs::write(path, svg::polygon_svg(&poly, &support_points(&f)))?;
    }
    let nu = newton_number(&f)?;
    let verdicts = face_verdicts(&f)?;
    let mut v = js::polygon(&poly);
    v["input"] = json!(f.to_text());
    v["nu"] = json!(nu);
    v["nondegenerate"] = json!(verdicts.iter().all(|v| v.nondegenerate));
    v["per_segment"] = verdicts.iter().map(|x| js::verdict(x, f.ring())).collect();
    Ok(v)
}

fn nondeg(ctx: &Ctx, germ: &str) -> Outcome {
    let f = plane_germ(ctx, germ, None)?;
    let verdicts = face_verdicts(&f)?;
    Ok(json!({
        "input": f.to_text(),
        "nondegenerate": verdicts.iter().all(|v| v.nondegenerate),
        "per_segment": verdicts.iter().map(|x| js::verdict(x, f.ring())).collect::<Vec<_>>(),
    }))
}

fn versal(ctx: &Ctx, germ: &str) -> Outcome {
    let f = ctx.parse(germ)?;
    let basis = versal_basis(&f)?;
    let r = f.ring();
    Ok(json!({
        "input": f.to_text(),
        "basis": basis.iter().map(|e| js::monomial(r, e)).collect::<Vec<_>>(),
        "exps": basis.iter().map(|e| js::exps(e, r.arity())).collect::<Vec<_>>(),
        "count": basis.len(),
    }))
}

fn reduce(ctx: &Ctx, text: &str, germ: &str, which: IdealArg) -> Outcome {
    let f = ctx.parse(germ)?;
    let g = ctx.parse(text)?;
    let ideal = match which {
        IdealArg::MaxJacobian => IdealGens::max_times_jacobian(&f),
        IdealArg::Jacobian => IdealGens::jacobian(&f),
    };
    let b = standard_basis_with(
        &ideal,
        BasisOptions {
            degree_cap: ctx.global.degree_cap,
            track_representations: true,
        },
    )?;
    let red = local_reduce(&g, &b, true)?;
    let verified = red
        .generator_cofactors
        .as_ref()
        .is_some_and(|c| certificate_holds(&g, ideal.generators(), c, &red.normal_form, red.bound));
    let mut v = js::reduction(&red, ideal.generators(), verified);
    v["input"] = json!(g.to_text());
    v["germ"] = json!(f.to_text());
    v["ideal"] = json!(match which {
        IdealArg::MaxJacobian => "max_jacobian",
        IdealArg::Jacobian => "jacobian",
    });
    Ok(v)
}

fn jump(ctx: &Ctx, base: &str, total: &str, sym: &str, sampled: bool) -> Outcome {
    let big = ctx.ring_with(&[sym])?;
    let total = Poly::parse(&big, total)?;
    let base = ctx.parse(base)?;
    let fo = ctx.family();
    let fam = make_family_with(&total, &base, sym, &fo)?;
    let (mu_generic, samples) = if sampled {
        let mut values = Vec::new();
        let mut listed = Vec::new();
        for s in &ctx.global.samples {
            let v: Rational = s
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("sample {s:?} is not rational")))?;
            let m = sample_mu(&fam, &v, &fo)?;
            listed.push(json!({"s": v.to_string(), "mu": m}));
            values.push(m);
        }
        (combine_samples(&values)?, Some(listed))
    } else {
        (milnor_core::deform::generic_mu_with(&fam, Mode::Symbolic, &fo)?, None)
    };
    let jump = family_jump_with(&fam, &fo)?;
    let mu_base = mu_generic + jump;
    let mut v = json!({
        "base": fam.base.to_text(),
        "total": fam.total.to_text(),
        "symbol": sym,
        "mode": if sampled { "sampled" } else { "symbolic" },
        "mu_base": mu_base,
        "mu_generic": mu_generic,
        "jump": jump,
    });
    if let Some(s) = samples {
        v["samples"] = json!(s);
    }
    Ok(v)
}

fn record_json(r: &milnor_core::search::SearchRecord, arity: usize) -> Value {
    serde_json::to_value(cache::RecordLine::from_record(r, arity)).expect("json")
}

fn run_search(
    ctx: &Ctx,
    germ: &str,
    grid_path: &std::path::Path,
    cache_path: Option<&std::path::Path>,
    budget: Option<u64>,
    workers: Option<usize>,
) -> Outcome {
    let f0 = ctx.parse(germ)?;
    let text = std::fs::read_to_string(grid_path)?;
    let spec = grid::parse_grid(&text, f0.ring())?;
    let budget = budget.or(spec.budget).unwrap_or(DEFAULT_BUDGET);
    let out = search::parallel_search(&f0, &spec.grid, budget, &ctx.family(), workers)?;
    let arity = f0.arity();
    let appended = match cache_path {
        Some(p) => Some(cache::store(p, &out.records, arity)?),
        None => None,
    };
    let failed = out.records.iter().filter(|r| r.jump.is_none()).count();
    Ok(json!({
        "input": f0.to_text(),
        "base_hash": base_hash(&f0),
        "mu_base": out.mu_base,
        "grid_size": spec.grid.size(),
        "evaluated": out.records.len(),
        "without_jump": failed,
        "min_nonzero_jump": out.min_nonzero_jump,
        "witness": out.witness.as_ref().map(|w| record_json(w, arity)),
        "histogram": out.histogram.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
        "cache": cache_path.map(|p| json!({"path": p.display().to_string(), "appended": appended})),
    }))
}

fn cache_query(ctx: &Ctx, germ: &str, path: &std::path::Path) -> Outcome {
    let f0 = ctx.parse(germ)?;
    let hash = base_hash(&f0);
    let l = cache::query(path, &hash)?;
    let h = l.histogram();
    Ok(json!({
        "input": f0.to_text(),
        "base_hash": hash,
        "records": l.records.len(),
        "corrupt": l.corrupt,
        "min_nonzero_jump": h.keys().copied().find(|&j| j > 0),
        "histogram": h.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
    }))
}

fn render(ctx: &Ctx, germ: &str, path: &std::path::Path, n: Option<u16>) -> Outcome {
    let f = plane_germ(ctx, germ, n)?;
    let poly = newton_polygon(&f)?;
    let doc = svg::polygon_svg(&poly, &support_points(&f));
    std::fs::write(path, &doc)?;
    Ok(json!({
        "input": f.to_text(),
        "svg": path.display().to_string(),
        "bytes": doc.len(),
        "polygon": js::polygon(&poly),
    }))
}

fn verify_paper(ctx: &Ctx, only: Option<&str>, workers: Option<usize>, err: &mut dyn Write) -> Outcome {
    let opts = verify::VerifyOptions {
        milnor: ctx.milnor(),
        workers,
    };
    if let Some(tag) = only {
        let known = verify::checks()
            .iter()
            .any(|c| c.id == tag || c.tags.iter().any(|t| t.eq_ignore_ascii_case(tag)));
        if !known {
            return Err(Failure::Usage(format!("no check is tagged {tag:?}")));
        }
    }
    let outcomes = verify::run(only, &opts);
    let _ = writeln!(err, "{:<28} {:<6} claim", "check", "result");
    for o in &outcomes {
        let _ = writeln!(
            err,
            "{:<28} {:<6} {} ({})",
            o.id,
            if o.passed { "pass" } else { "FAIL" },
            o.claim,
            o.detail
        );
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let mut checks = serde_json::to_value(&outcomes).expect("json");
    if ctx.global.timings {
        for (c, o) in checks.as_array_mut().expect("array").iter_mut().zip(&outcomes) {
            c["elapsed_ms"] = json!(o.elapsed_ms as u64);
        }
    }
    let v = json!({
        "checks": checks,
        "passed": passed,
        "failed": outcomes.len() - passed,
    });
    if passed == outcomes.len() {
        Ok(v)
    } else {
        Err(Failure::Checks(v))
    }
}
