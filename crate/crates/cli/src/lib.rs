//! The `qqmod` command line. [`run`] does all the work and returns the exit
//! code and output streams, so the binary is a thin wrapper.

use std::cmp::Ordering;
use std::ffi::OsString;
use std::fmt::Display;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use qqmod_core::char2_hahn::two_squares;
use qqmod_core::char2_modules::seg_compare;
use qqmod_core::gauss_series::{pan_axiom_report, parse_series, sqrt_strict_unit};
use qqmod_core::oracle::{
    axiom_pairs, bounded_realization_search, char2_catalog, module_catalog, run_suite, sample_closure_elements,
    SampleConfig, Sampler,
};
use qqmod_core::qq_modules::{decompose_check, square_class_decompose, psi_classify, rho, sigma};
use qqmod_core::{
    Char2Module, Classifier, Cone, Descriptor, DyadicSeries, Error, FinalSegment, GaussRat, LevelFamily, QQModule,
    Result, Series,
};

pub const MAX_PRECISION: u32 = 64;
pub const MAX_GENERATORS: usize = 32;
pub const MAX_COUNT: usize = 1_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "qqmod",
    version,
    about = "Quasi-quadratic modules over A = R + X·C[[X]]: normal forms, lattice operations and invariant suites"
)]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized commands.
    #[arg(long, global = true, env = "QQMOD_SEED", default_value_t = 0)]
    seed: u64,
    /// Sample count for randomized commands.
    #[arg(long, global = true)]
    count: Option<usize>,
    /// Number of known coefficients for series written as text.
    #[arg(long, global = true)]
    precision: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ModuleArg {
    /// Module as JSON or `levels(m; lead; next)` / `zero`.
    #[arg(long)]
    module: String,
}

#[derive(Args, Debug)]
struct PairArg {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
}

#[derive(Args, Debug)]
struct SeriesArg {
    /// Series as text such as `1 + (2-i)X^3`, or JSON.
    #[arg(long, allow_hyphen_values = true)]
    series: String,
}

#[derive(Args, Debug)]
struct GensArg {
    /// Generators, as series text or JSON.
    #[arg(required = true, allow_hyphen_values = true, num_args = 1..)]
    gens: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a series belongs to a module.
    Member {
        #[command(flatten)]
        module: ModuleArg,
        #[command(flatten)]
        series: SeriesArg,
    },
    /// Intersection of two modules.
    Intersect(PairArg),
    /// Sum of two modules.
    Sum(PairArg),
    /// Level cone `M_g`.
    Level {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long)]
        g: u32,
    },
    /// Largest submodule closed under negation.
    Symmetric(ModuleArg),
    /// Whether the module is an ideal of A.
    Ideal(ModuleArg),
    /// Whether the module is finitely generated.
    Fg(ModuleArg),
    /// A finite generating set.
    Generators(ModuleArg),
    /// Level cones of a module.
    Sigma(ModuleArg),
    /// Module of a level family, given as JSON.
    Rho {
        #[arg(long)]
        family: String,
    },
    /// Classify a series against `Ψ(M, g)` for a cone `M`.
    Psi {
        #[arg(long)]
        cone: String,
        #[arg(long)]
        g: u32,
        #[command(flatten)]
        series: SeriesArg,
    },
    /// Write a series as `(α + iβ)·X^e·s²` and over the eight basic generators.
    Decompose(SeriesArg),
    /// Compare direct membership with the Ψ-union on seeded samples.
    DecomposeCheck(ModuleArg),
    /// Module generated by a list of series.
    FromGens(GensArg),
    /// Random closure elements `Σ aᵢ²·sᵢ` of the generators.
    Sample(GensArg),
    /// Search for an explicit representation of a target in the closure.
    Realize {
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[command(flatten)]
        gens: GensArg,
    },
    /// Check the pseudo-angular component axioms on seeded pairs.
    VerifyAxioms,
    /// Arithmetic and valuation data of series.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Operations on plane cones.
    #[command(subcommand)]
    Cone(ConeCmd),
    /// The characteristic-two model.
    #[command(subcommand)]
    Char2(Char2Cmd),
    /// List the module catalog used by the suites.
    Catalog {
        /// List the characteristic-two catalog instead.
        #[arg(long)]
        char2: bool,
    },
    /// Run a named invariant suite.
    Suite {
        #[arg(value_enum)]
        name: SuiteName,
    },
}

#[derive(Subcommand, Debug)]
enum SeriesCmd {
    Add(PairArg),
    Sub(PairArg),
    Mul(PairArg),
    Div(PairArg),
    Val(SeriesArg),
    Pan(SeriesArg),
    InA(SeriesArg),
    /// Square root of a strict unit.
    Sqrt(SeriesArg),
}

#[derive(Args, Debug)]
struct ConeArg {
    /// Cone as JSON or text such as `fan[co](1,0;0,1)`.
    #[arg(long)]
    cone: String,
}

#[derive(Subcommand, Debug)]
enum ConeCmd {
    Member {
        #[command(flatten)]
        cone: ConeArg,
        /// A Gaussian rational such as `1/2-3i`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    Intersect(PairArg),
    Sum(PairArg),
    ClFull(ConeArg),
    Symmetric(ConeArg),
    Fg(ConeArg),
    Generators(ConeArg),
    RestrictReal(ConeArg),
}

#[derive(Subcommand, Debug)]
enum Char2Cmd {
    /// Membership of a descriptor `(v, p)`.
    Member {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long)]
        descriptor: String,
    },
    Intersect(PairArg),
    Sum(PairArg),
    /// Classifier `(segment, level at the minimum)` of a module.
    Phi(ModuleArg),
    /// Module of a classifier, given as JSON.
    Psi {
        #[arg(long)]
        classifier: String,
    },
    /// Module generated by descriptors.
    FromGens {
        #[arg(required = true, num_args = 1..)]
        descriptors: Vec<String>,
    },
    Add(PairArg),
    Mul(PairArg),
    ValPan(SeriesArg),
    Sqrt(SeriesArg),
    /// Write an element of the maximal ideal as `u² + v²`.
    TwoSquares(SeriesArg),
    /// Compare two final segments by inclusion.
    SegCompare(PairArg),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    Bijection,
    Decomp,
    Lattice,
    Fg,
    Axioms,
    Char2,
    Closure,
    All,
}

impl SuiteName {
    fn as_str(self) -> &'static str {
        match self {
            SuiteName::Bijection => "bijection",
            SuiteName::Decomp => "decomp",
            SuiteName::Lattice => "lattice",
            SuiteName::Fg => "fg",
            SuiteName::Axioms => "axioms",
            SuiteName::Char2 => "char2",
            SuiteName::Closure => "closure",
            SuiteName::All => "all",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A successful result: JSON and text renderings, and whether it reports a pass.
struct Reply {
    json: Value,
    text: String,
    pass: bool,
}

fn reply<T: Serialize + Display>(x: &T) -> Reply {
    Reply { json: serde_json::to_value(x).expect("results serialize"), text: x.to_string(), pass: true }
}

fn reply_with<T: Serialize>(x: &T, text: String) -> Reply {
    Reply { json: serde_json::to_value(x).expect("results serialize"), text, pass: true }
}

fn lines<T: Display>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join("\n")
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Outcome { code: e.exit_code(), stdout, stderr };
        }
    };
    match execute(&cli) {
        Ok(r) => {
            let mut stdout =
                if cli.json { serde_json::to_string_pretty(&r.json).expect("JSON values print") } else { r.text };
            stdout.push('\n');
            Outcome { code: if r.pass { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(e) => {
            if cli.json {
                let body = json!({"error": {"code": e.code(), "message": e.to_string()}});
                Outcome { code: 1, stdout: format!("{body}\n"), stderr: String::new() }
            } else {
                Outcome { code: 1, stdout: String::new(), stderr: format!("error[{}]: {e}\n", e.code()) }
            }
        }
    }
}

struct Ctx {
    precision: Option<u32>,
    seed: u64,
    count: Option<usize>,
}

impl Ctx {
    fn series(&self, text: &str) -> Result<Series> {
        let s = if text.trim_start().starts_with('{') {
            serde_json::from_str(text)?
        } else {
            parse_series(text, self.precision)?
        };
        if s.precision() > MAX_PRECISION {
            return Err(Error::Limit(format!(
                "series precision {} exceeds {MAX_PRECISION}; pass a smaller --precision",
                s.precision()
            )));
        }
        Ok(s)
    }

    fn gens(&self, texts: &[String]) -> Result<Vec<Series>> {
        if texts.len() > MAX_GENERATORS {
            return Err(Error::Limit(format!("{} generators given, at most {MAX_GENERATORS} allowed", texts.len())));
        }
        texts.iter().map(|t| self.series(t)).collect()
    }

    fn count(&self, default: usize) -> usize {
        self.count.unwrap_or(default)
    }
}

fn module(text: &str) -> Result<QQModule> {
    QQModule::parse_any(text)
}

fn char2_module(text: &str) -> Result<Char2Module> {
    Char2Module::parse_json(text)
}

fn segment(text: &str) -> Result<FinalSegment> {
    Ok(serde_json::from_str(text)?)
}

fn family(text: &str) -> Result<QQModule> {
    match serde_json::from_str::<LevelFamily>(text) {
        Ok(f) => f.to_module(),
        Err(_) => rho(&serde_json::from_str::<Vec<(u32, Cone)>>(text)?),
    }
}

fn execute(cli: &Cli) -> Result<Reply> {
    if let Some(p) = cli.precision {
        if p == 0 || p > MAX_PRECISION {
            return Err(Error::Limit(format!("--precision must be between 1 and {MAX_PRECISION}, got {p}")));
        }
    }
    if let Some(c) = cli.count {
        if c == 0 || c > MAX_COUNT {
            return Err(Error::Limit(format!("--count must be between 1 and {MAX_COUNT}, got {c}")));
        }
    }
    let ctx = Ctx { precision: cli.precision, seed: cli.seed, count: cli.count };
    Ok(match &cli.command {
        Command::Member { module: m, series } => {
            let b = module(&m.module)?.member(&ctx.series(&series.series)?)?;
            reply(&b)
        }
        Command::Intersect(p) => reply(&module(&p.a)?.intersect(&module(&p.b)?)),
        Command::Sum(p) => reply(&module(&p.a)?.sum(&module(&p.b)?)),
        Command::Level { module: m, g } => reply(&module(&m.module)?.level(*g)),
        Command::Symmetric(m) => reply(&module(&m.module)?.symmetric_part()),
        Command::Ideal(m) => reply(&module(&m.module)?.is_ideal()),
        Command::Fg(m) => reply(&module(&m.module)?.is_fg()),
        Command::Generators(m) => {
            let gens = module(&m.module)?.fg_generators()?;
            reply_with(&gens, lines(&gens))
        }
        Command::Sigma(m) => {
            let fam = sigma(&module(&m.module)?);
            let mut text: Vec<String> = fam.levels.iter().map(|(g, c)| format!("{g}: {c}")).collect();
            text.push(format!("beyond: {}", fam.beyond));
            reply_with(&fam, text.join("\n"))
        }
        Command::Rho { family: f } => reply(&family(f)?),
        Command::Psi { cone, g, series } => {
            let class = psi_classify(&Cone::parse_any(cone)?, *g, &ctx.series(&series.series)?)?;
            reply_with(&class, format!("{class:?}"))
        }
        Command::Decompose(s) => decompose(&ctx.series(&s.series)?)?,
        Command::DecomposeCheck(m) => {
            let m = module(&m.module)?;
            let mut rng = Sampler::new(ctx.seed, 5);
            let top = m.min_level().unwrap_or(0) + 4;
            let samples: Vec<Series> = (0..ctx.count(1000)).map(|_| rng.probe_series(top, 3)).collect();
            let rep = decompose_check(&m, &samples);
            let text = format!(
                "checked {} skipped {} disagreements {}\n{}",
                rep.checked,
                rep.skipped,
                rep.disagreements.len(),
                lines(&rep.disagreements)
            );
            Reply { pass: rep.ok(), ..reply_with(&json!({"seed": ctx.seed, "report": rep}), text.trim_end().into()) }
        }
        Command::FromGens(g) => reply(&QQModule::from_generators(&ctx.gens(&g.gens)?)?),
        Command::Sample(g) => {
            let gens = ctx.gens(&g.gens)?;
            for s in &gens {
                s.require_in_a()?;
            }
            let cfg = SampleConfig {
                seed: ctx.seed,
                count: ctx.count(5),
                precision: ctx.precision.unwrap_or(SampleConfig::default().precision),
                ..SampleConfig::default()
            };
            cfg.validate()?;
            let xs = sample_closure_elements(&gens, &cfg);
            reply_with(&json!({"seed": ctx.seed, "samples": xs}), lines(&xs))
        }
        Command::Realize { target, gens } => {
            let gens = ctx.gens(&gens.gens)?;
            let t = ctx.series(target)?;
            let r = bounded_realization_search(&t, &gens);
            let text = if r.found {
                let terms: Vec<String> =
                    r.terms.iter().map(|tm| format!("({})^2 * [{}]", tm.coefficient, tm.generator)).collect();
                format!("found through X^{}: {}", r.precision.saturating_sub(1), terms.join(" + "))
            } else {
                "not found".into()
            };
            reply_with(&r, text)
        }
        Command::VerifyAxioms => {
            let rep = pan_axiom_report(&axiom_pairs(ctx.seed, ctx.count(1000)));
            let text: Vec<String> = rep
                .checks
                .iter()
                .map(|c| {
                    let mark = if c.ok() { "PASS" } else { "FAIL" };
                    let first = c.first_failure.as_deref().map(|f| format!(" first failure: {f}")).unwrap_or_default();
                    format!("[{mark}] {} {}/{}{first}", c.name, c.passed, c.applicable)
                })
                .collect();
            Reply { pass: rep.ok(), ..reply_with(&json!({"seed": ctx.seed, "report": rep}), text.join("\n")) }
        }
        Command::Series(cmd) => series_cmd(&ctx, cmd)?,
        Command::Cone(cmd) => cone_cmd(cmd)?,
        Command::Char2(cmd) => char2_cmd(cmd)?,
        Command::Catalog { char2 } => {
            if *char2 {
                let cat = char2_catalog();
                reply_with(&cat, lines(&cat))
            } else {
                let cat = module_catalog();
                reply_with(&cat, lines(&cat))
            }
        }
        Command::Suite { name } => {
            let reports = run_suite(name.as_str(), ctx.seed, ctx.count)?;
            let text: Vec<String> = reports
                .iter()
                .map(|r| {
                    let mark = if r.ok() { "PASS" } else { "FAIL" };
                    let mut s = format!(
                        "[{mark}] {} seed={} checked={} skipped={} failed={}",
                        r.name, r.seed, r.checked, r.skipped, r.failed
                    );
                    for f in &r.failures {
                        s.push_str("\n    ");
                        s.push_str(f);
                    }
                    s
                })
                .collect();
            let pass = reports.iter().all(|r| r.ok());
            Reply { pass, ..reply_with(&reports, text.join("\n")) }
        }
    })
}

fn decompose(f: &Series) -> Result<Reply> {
    let d = square_class_decompose(f)?;
    let terms = d.generator_terms()?;
    let text = format!(
        "({}) * X^{} * ({})^2\n{}",
        GaussRat::new(d.alpha.clone(), d.beta.clone()),
        d.base,
        d.s,
        terms.terms.iter().map(|(a, g)| format!("({a})^2 * ({g})")).collect::<Vec<_>>().join(" + ")
    );
    let terms: Vec<Value> = terms.terms.iter().map(|(a, g)| json!({"a": a, "g": g})).collect();
    Ok(reply_with(&json!({"record": d, "generator_terms": terms}), text))
}

fn series_cmd(ctx: &Ctx, cmd: &SeriesCmd) -> Result<Reply> {
    let pair = |p: &PairArg| -> Result<(Series, Series)> { Ok((ctx.series(&p.a)?, ctx.series(&p.b)?)) };
    Ok(match cmd {
        SeriesCmd::Add(p) => {
            let (a, b) = pair(p)?;
            reply(&(&a + &b))
        }
        SeriesCmd::Sub(p) => {
            let (a, b) = pair(p)?;
            reply(&(&a - &b))
        }
        SeriesCmd::Mul(p) => {
            let (a, b) = pair(p)?;
            reply(&(&a * &b))
        }
        SeriesCmd::Div(p) => {
            let (a, b) = pair(p)?;
            reply(&a.checked_div(&b)?)
        }
        SeriesCmd::Val(s) => {
            let v = ctx.series(&s.series)?.val();
            reply_with(&v, format!("{v:?}"))
        }
        SeriesCmd::Pan(s) => reply(&ctx.series(&s.series)?.pan()?),
        SeriesCmd::InA(s) => reply(&ctx.series(&s.series)?.in_a()),
        SeriesCmd::Sqrt(s) => reply(&sqrt_strict_unit(&ctx.series(&s.series)?)?),
    })
}

fn cone_cmd(cmd: &ConeCmd) -> Result<Reply> {
    let one = |c: &ConeArg| Cone::parse_any(&c.cone);
    let pair = |p: &PairArg| -> Result<(Cone, Cone)> { Ok((Cone::parse_any(&p.a)?, Cone::parse_any(&p.b)?)) };
    Ok(match cmd {
        ConeCmd::Member { cone, point } => {
            let z: GaussRat = point.parse()?;
            reply(&one(cone)?.contains(&z))
        }
        ConeCmd::Intersect(p) => {
            let (a, b) = pair(p)?;
            reply(&a.intersect(&b))
        }
        ConeCmd::Sum(p) => {
            let (a, b) = pair(p)?;
            reply(&a.sum(&b))
        }
        ConeCmd::ClFull(c) => reply(&one(c)?.cl_full()),
        ConeCmd::Symmetric(c) => reply(&one(c)?.is_symmetric()),
        ConeCmd::Fg(c) => reply(&one(c)?.is_fg()),
        ConeCmd::Generators(c) => {
            let g = one(c)?.generators()?;
            reply_with(&g, lines(&g))
        }
        ConeCmd::RestrictReal(c) => reply(&one(c)?.restrict_real()),
    })
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

fn char2_cmd(cmd: &Char2Cmd) -> Result<Reply> {
    let dy = |t: &str| DyadicSeries::parse_any(t);
    let mods = |p: &PairArg| -> Result<(Char2Module, Char2Module)> { Ok((char2_module(&p.a)?, char2_module(&p.b)?)) };
    Ok(match cmd {
        Char2Cmd::Member { module: m, descriptor } => {
            reply(&char2_module(&m.module)?.member(&Descriptor::parse_any(descriptor)?))
        }
        Char2Cmd::Intersect(p) => {
            let (a, b) = mods(p)?;
            reply(&a.intersect(&b))
        }
        Char2Cmd::Sum(p) => {
            let (a, b) = mods(p)?;
            reply(&a.sum(&b))
        }
        Char2Cmd::Phi(m) => {
            let c = char2_module(&m.module)?.phi();
            let text = match c.level {
                Some(l) => format!("{} {l}", c.segment),
                None => c.segment.to_string(),
            };
            reply_with(&c, text)
        }
        Char2Cmd::Psi { classifier } => reply(&Char2Module::psi(&Classifier::parse_json(classifier)?)?),
        Char2Cmd::FromGens { descriptors } => {
            if descriptors.len() > MAX_GENERATORS {
                return Err(Error::Limit(format!(
                    "{} generators given, at most {MAX_GENERATORS} allowed",
                    descriptors.len()
                )));
            }
            let ds = descriptors.iter().map(|d| Descriptor::parse_any(d)).collect::<Result<Vec<_>>>()?;
            reply(&Char2Module::from_generators(&ds)?)
        }
        Char2Cmd::Add(p) => reply(&(&dy(&p.a)? + &dy(&p.b)?)),
        Char2Cmd::Mul(p) => reply(&(&dy(&p.a)? * &dy(&p.b)?)),
        Char2Cmd::ValPan(s) => {
            let d = dy(&s.series)?.val_pan();
            reply(&d)
        }
        Char2Cmd::Sqrt(s) => reply(&dy(&s.series)?.sqrt()),
        Char2Cmd::TwoSquares(s) => {
            let (u, v) = two_squares(&dy(&s.series)?)?;
            reply_with(&json!({"u": u, "v": v}), format!("u = {u}\nv = {v}"))
        }
        Char2Cmd::SegCompare(p) => {
            let o = ordering_name(seg_compare(&segment(&p.a)?, &segment(&p.b)?));
            reply_with(&o, o.into())
        }
    })
}
