//! The `qnlab` command line: batch verification with text or JSON reports.
//!
//! Exit codes: `0` when no check fails, `1` when one does (its witness is
//! printed), `2` on input errors.

use std::fmt::{self, Display, Write as _};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::banach::{
    banach_run, geometric_cauchy_certificate, iterate_to_fixed_point, AnalyticMap, BanachError,
    DEFAULT_CONTRACTION_SAMPLES,
};
use crate::cauchy::{
    find_normed_colimits, presheaf_cauchy_colimit, splitting_report, verify_normed_colimit,
    MorphSequence, MorphTail, PresheafOptions, PresheafSequence,
};
use crate::dist::{check_distributor, choice_norm, hausdorff_lift_dist, hausdorff_norm};
use crate::enumerate::{DEFAULT_CHOICE_CAP, DEFAULT_POWERSET_CAP};
use crate::io::{self, BanachScenario, IoError};
use crate::normed_cat::{check_normed_category, symmetry_conditions_report};
use crate::quantale::{
    check_conditions, check_quantale_axioms, AnyQuantale, AnyValue, ExtReal, LawvereTimes, Quantale,
};
use crate::report::{Check, Status, ValidationReport};
use crate::snvec::{colimit_weights, log_norm, sampled_log_norm, verify_no_separated_colimit};
use crate::vcat::{check_vcategory, lipschitz_norm, met_infty_norm, symmetry_report, VCategory};

pub const REPORT_SCHEMA: &str = "qnlab.report/v1";
pub const MAX_ENUM_ENV: &str = "QNLAB_MAX_ENUM";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "qnlab", version, about = "Verify quantale-enriched structures and normed colimits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text, global = true)]
    pub report: ReportFormat,
    /// Seed for sampling-based checks.
    #[arg(long, default_value_t = 0, global = true)]
    pub rng_seed: u64,
    /// Cap on enumerated maps and transformations; `QNLAB_MAX_ENUM` overrides the default.
    #[arg(long, global = true)]
    pub max_enum: Option<u64>,
    /// Largest carrier whose powerset is enumerated.
    #[arg(long, default_value_t = DEFAULT_POWERSET_CAP, global = true)]
    pub max_powerset: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quantale axioms of a table file or a built-in quantale.
    CheckQuantale { quantale: String },
    /// Conditions (A), (B) and complete distributivity.
    CheckConditions {
        quantale: String,
        /// Treat a failing (B) as a failure rather than advisory.
        #[arg(long = "strict-B", alias = "strict-b")]
        strict_b: bool,
        /// Enumerate even when built-in answers exist.
        #[arg(long)]
        enumerate: bool,
    },
    /// V-category axioms and symmetry.
    CheckVcat { file: PathBuf },
    /// Lipschitz norm of a map between V-categories.
    LipNorm {
        source: PathBuf,
        target: PathBuf,
        /// Images of the source points, comma separated.
        #[arg(long)]
        map: String,
    },
    /// Met∞ norm of a map between Lawvere metric spaces, with the change-of-base check.
    MetNorm {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// Hausdorff and choice norms of a distributor.
    Hausdorff { distributor: PathBuf },
    /// Normed-category axioms and symmetry conditions.
    CheckNcat { file: PathBuf },
    /// Whether a sequence is Cauchy.
    CauchyCheck { sequence: PathBuf },
    /// Whether a cocone is a normed colimit.
    NcolimVerify { sequence: PathBuf, cocone: PathBuf },
    /// All normed colimits of a sequence.
    NcolimFind { sequence: PathBuf },
    /// Cauchy colimit of a sequence of presheaves.
    PresheafColim {
        file: PathBuf,
        /// Largest set in the enumerated target family.
        #[arg(long, default_value_t = 2)]
        max_target_size: usize,
    },
    /// Banach fixed-point iteration, analytic or on a finite host.
    Banach {
        scenario: Option<PathBuf>,
        #[arg(long)]
        map: Option<String>,
        #[arg(long = "L")]
        lipschitz: Option<f64>,
        /// Starting point.
        #[arg(long, allow_negative_numbers = true)]
        seed: Option<f64>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = 10_000)]
        max_iter: usize,
        #[arg(long, default_value_t = DEFAULT_CONTRACTION_SAMPLES)]
        samples: usize,
    },
    /// Weighted-ℓ1 seminormed spaces.
    Snvec {
        #[command(subcommand)]
        command: SnvecCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum SnvecCommand {
    /// Log-norm of a monomial map, checked against sampling.
    #[command(name = "log-norm", alias = "logNorm")]
    LogNorm {
        source: PathBuf,
        target: PathBuf,
        map: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Colimit weights of a chain of identities.
    Colim { tails: PathBuf },
    /// The chain R_{1/n} has no colimit in a separated target R_c, c > 0.
    Witness {
        #[arg(long)]
        c: f64,
    },
}

/// Machine-readable run summary.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub inputs_digest: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub result: Map<String, Value>,
    pub timing_ms: f64,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            ReportFormat::Text => self.to_string(),
        }
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qnlab {}  ({})", self.command, self.inputs_digest)?;
        write!(
            f,
            "{}",
            ValidationReport {
                checks: self.checks.clone()
            }
        )?;
        for (k, v) in &self.result {
            match v {
                Value::String(s) => writeln!(f, "{k}: {s}")?,
                Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
                    writeln!(f, "{k}:")?;
                    for r in rows {
                        writeln!(f, "  {r}")?;
                    }
                }
                other => writeln!(f, "{k}: {other}")?,
            }
        }
        Ok(())
    }
}

/// An input that could not be read or makes no sense.
#[derive(Debug, Clone, PartialEq)]
pub struct InputError(pub String);

impl Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<IoError> for InputError {
    fn from(e: IoError) -> Self {
        InputError(e.to_string())
    }
}

fn input<E: Display>(context: &str) -> impl Fn(E) -> InputError + '_ {
    move |e| InputError(format!("{context}: {e}"))
}

struct Outcome {
    checks: ValidationReport,
    result: Map<String, Value>,
}

impl Outcome {
    fn new(checks: ValidationReport) -> Self {
        Outcome {
            checks,
            result: Map::new(),
        }
    }

    fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.result.insert(key.to_string(), value.into());
        self
    }
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                RunOutput { code, stdout: text, stderr: String::new() }
            } else {
                RunOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let format = cli.report;
    match execute(&cli, &args) {
        Ok(report) => RunOutput {
            code: report.exit_code(),
            stdout: report.render(format),
            stderr: String::new(),
        },
        Err(e) => RunOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Runs a parsed command; `args` feed the inputs digest.
pub fn execute(cli: &Cli, args: &[std::ffi::OsString]) -> Result<Report, InputError> {
    let start = Instant::now();
    let (name, files) = command_inputs(&cli.command);
    let digest = inputs_digest(args, &files);
    let outcome = dispatch(cli)?;
    Ok(Report {
        schema: REPORT_SCHEMA,
        command: name.to_string(),
        inputs_digest: digest,
        checks: outcome.checks.checks,
        result: outcome.result,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn command_inputs(c: &Command) -> (&'static str, Vec<PathBuf>) {
    let p = |x: &PathBuf| x.clone();
    let maybe = |s: &str| Path::new(s).is_file().then(|| PathBuf::from(s));
    match c {
        Command::CheckQuantale { quantale } => ("check-quantale", maybe(quantale).into_iter().collect()),
        Command::CheckConditions { quantale, .. } => ("check-conditions", maybe(quantale).into_iter().collect()),
        Command::CheckVcat { file } => ("check-vcat", vec![p(file)]),
        Command::LipNorm { source, target, .. } => ("lip-norm", vec![p(source), p(target)]),
        Command::MetNorm { source, target, .. } => ("met-norm", vec![p(source), p(target)]),
        Command::Hausdorff { distributor } => ("hausdorff", vec![p(distributor)]),
        Command::CheckNcat { file } => ("check-ncat", vec![p(file)]),
        Command::CauchyCheck { sequence } => ("cauchy-check", vec![p(sequence)]),
        Command::NcolimVerify { sequence, cocone } => ("ncolim-verify", vec![p(sequence), p(cocone)]),
        Command::NcolimFind { sequence } => ("ncolim-find", vec![p(sequence)]),
        Command::PresheafColim { file, .. } => ("presheaf-colim", vec![p(file)]),
        Command::Banach { scenario, .. } => ("banach", scenario.iter().cloned().collect()),
        Command::Snvec { command } => match command {
            SnvecCommand::LogNorm { source, target, map, .. } => ("snvec log-norm", vec![p(source), p(target), p(map)]),
            SnvecCommand::Colim { tails } => ("snvec colim", vec![p(tails)]),
            SnvecCommand::Witness { .. } => ("snvec witness", vec![]),
        },
    }
}

/// SHA-256 over the arguments and the bytes of every input file.
pub fn inputs_digest(args: &[std::ffi::OsString], files: &[PathBuf]) -> String {
    let mut h = Sha256::new();
    for a in args.iter().skip(1) {
        h.update(a.to_string_lossy().as_bytes());
        h.update([0]);
    }
    for f in files {
        h.update(std::fs::read(f).unwrap_or_default());
        h.update([0]);
    }
    format!("sha256:{:x}", h.finalize())
}

fn enum_cap(cli: &Cli, default: u64) -> u64 {
    cli.max_enum
        .or_else(|| std::env::var(MAX_ENUM_ENV).ok().and_then(|v| v.parse().ok()))
        .unwrap_or(default)
}

/// Failed symmetry is a property, not a defect.
fn advisory(mut r: ValidationReport) -> ValidationReport {
    for c in &mut r.checks {
        if c.status == Status::Fail {
            c.status = Status::Advisory;
        }
    }
    r
}

fn fmt_value<Q: Quantale>(q: &Q, v: &Q::Value) -> String {
    q.format_value(v)
}

fn load_quantale_arg(reference: &str) -> Result<AnyQuantale, InputError> {
    Ok(io::resolve_quantale(reference, None)?)
}

fn dispatch(cli: &Cli) -> Result<Outcome, InputError> {
    match &cli.command {
        Command::CheckQuantale { quantale } => check_quantale_cmd(quantale),
        Command::CheckConditions {
            quantale,
            strict_b,
            enumerate,
        } => {
            let q = load_quantale_arg(quantale)?;
            let c = check_conditions(&q, *enumerate).map_err(input("conditions"))?;
            Ok(Outcome::new(c.to_validation_report(*strict_b))
                .with("quantale", c.quantale.clone())
                .with("A", c.condition_a.holds)
                .with("B", c.condition_b.holds)
                .with("completely_distributive", c.completely_distributive.holds))
        }
        Command::CheckVcat { file } => {
            let f = io::load_vcat(file)?;
            let mut r = check_vcategory(&f.quantale, &f.space);
            r.extend(advisory(symmetry_report(&f.space)));
            Ok(Outcome::new(r).with("quantale", f.quantale.name()).with("points", f.space.len()))
        }
        Command::LipNorm { source, target, map } => {
            let (x, y) = (io::load_vcat(source)?, io::load_vcat(target)?);
            if x.quantale != y.quantale {
                return Err(InputError("source and target use different quantales".into()));
            }
            let q = &x.quantale;
            let phi = io::parse_point_map(map, &x.space, &y.space)?;
            let norm = lipschitz_norm(q, &phi, &x.space, &y.space).map_err(input("map"))?;
            let mut r = ValidationReport::new();
            r.record("V-functor", vfunctor_witness(q, &phi, &x.space, &y.space));
            Ok(Outcome::new(r).with("lipschitz_norm", fmt_value(q, &norm)))
        }
        Command::MetNorm { source, target, map } => met_norm_cmd(source, target, map),
        Command::Hausdorff { distributor } => hausdorff_cmd(cli, distributor),
        Command::CheckNcat { file } => {
            let c = io::load_category(file)?;
            let mut r = check_normed_category(&c.quantale, &c.host);
            r.extend(advisory(symmetry_conditions_report(&c.quantale, &c.host)));
            Ok(Outcome::new(r)
                .with("objects", c.host.object_count())
                .with("morphisms", c.host.morphism_count()))
        }
        Command::CauchyCheck { sequence } => {
            let s = io::load_sequence(sequence)?;
            let q = &s.category.quantale;
            let seq = MorphSequence::new(&s.category.host, s.start, s.prefix.clone(), s.tail)
                .map_err(input("sequence"))?;
            let v = seq.cauchy_value(q);
            let mut r = ValidationReport::new();
            r.record(
                "sequence is Cauchy",
                (!v.cauchy).then(|| format!("⋁_N ⋀_(n≥m≥N) |s_mn| = {}, not above k", fmt_value(q, &v.value))),
            );
            Ok(Outcome::new(r).with("cauchy_value", fmt_value(q, &v.value)))
        }
        Command::NcolimVerify { sequence, cocone } => {
            let s = io::load_sequence(sequence)?;
            let host = &s.category.host;
            let q = &s.category.quantale;
            let seq = MorphSequence::new(host, s.start, s.prefix.clone(), s.tail).map_err(input("sequence"))?;
            let c = io::load_cocone(cocone, host)?;
            let v = verify_normed_colimit(q, &seq, &c).map_err(input("cocone"))?;
            Ok(Outcome::new(v.report.clone())
                .with("vertex", host.objects[c.vertex].clone())
                .with("cocone_value", fmt_value(q, &v.cocone_value))
                .with("normed_colimit", v.is_normed_colimit()))
        }
        Command::NcolimFind { sequence } => {
            let s = io::load_sequence(sequence)?;
            let host = &s.category.host;
            let q = &s.category.quantale;
            let seq = MorphSequence::new(host, s.start, s.prefix.clone(), s.tail).map_err(input("sequence"))?;
            let found = find_normed_colimits(q, &seq);
            let mut r = ValidationReport::new();
            r.record(
                "normed colimit exists",
                found.colimits.is_empty().then(|| "no cocone passes C1, C2a and C2b".to_string()),
            );
            r.extend(found.uniqueness.clone());
            if let (true, MorphTail::Idempotent(e)) = (s.prefix.is_empty(), &s.tail) {
                r.extend(splitting_report(q, host, *e));
            }
            let colimits: Vec<Value> = found
                .colimits
                .iter()
                .map(|c| {
                    json!({
                        "vertex": host.objects[c.vertex],
                        "legs": c.legs.iter().map(|&l| host.name(l)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(Outcome::new(r).with("colimits", colimits))
        }
        Command::PresheafColim { file, max_target_size } => {
            let f = io::load_presheaf_sequence(file)?;
            let q = &f.category.quantale;
            let seq = PresheafSequence::new(&f.category.host, f.stages.clone(), f.maps.clone(), f.tail.clone())
                .map_err(input("presheaf sequence"))?;
            let opts = PresheafOptions {
                max_target_size: *max_target_size,
                cap: enum_cap(cli, PresheafOptions::<AnyValue>::default().cap),
                ..Default::default()
            };
            let c = presheaf_cauchy_colimit(q, &seq, &opts).map_err(input("presheaf colimit"))?;
            let index = &f.category.host;
            let sets: Map<String, Value> = index
                .objects
                .iter()
                .zip(&c.colimit.sets)
                .map(|(o, s)| {
                    let norms: Map<String, Value> = s
                        .elements
                        .iter()
                        .zip(&s.norm)
                        .map(|(e, v)| (e.clone(), Value::String(fmt_value(q, v))))
                        .collect();
                    (o.clone(), Value::Object(norms))
                })
                .collect();
            Ok(Outcome::new(c.report.clone())
                .with("colimit", Value::Object(sets))
                .with("targets_checked", c.targets_checked)
                .with("transformations_checked", c.transformations_checked))
        }
        Command::Banach {
            scenario,
            map,
            lipschitz,
            seed,
            tol,
            max_iter,
            samples,
        } => {
            let sc = match scenario {
                Some(path) => io::load_banach_scenario(path)?,
                None => BanachScenario::Analytic {
                    map: map.clone().ok_or_else(|| InputError("--map or a scenario file is required".into()))?,
                    lipschitz: lipschitz.ok_or_else(|| InputError("--L is required".into()))?,
                    seed: seed.unwrap_or(0.0),
                    tolerance: tol.unwrap_or(1e-9),
                },
            };
            banach_cmd(cli, sc, *max_iter, *samples)
        }
        Command::Snvec { command } => snvec_cmd(cli, command),
    }
}

fn check_quantale_cmd(reference: &str) -> Result<Outcome, InputError> {
    let table = if Path::new(reference).is_file() {
        io::load_quantale_table(Path::new(reference))?.0
    } else {
        match load_quantale_arg(reference)? {
            AnyQuantale::Finite(q) => q.table().clone(),
            q => {
                let mut r = ValidationReport::new();
                r.push("quantale axioms", Status::Pass, None);
                return Ok(Outcome::new(r.with_detail("built-in analytic quantale")).with("quantale", q.name()));
            }
        }
    };
    Ok(Outcome::new(check_quantale_axioms(&table)).with("elements", table.len()))
}

fn vfunctor_witness<Q: Quantale>(q: &Q, phi: &[usize], x: &VCategory<Q::Value>, y: &VCategory<Q::Value>) -> Option<String> {
    let n = x.len();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| !q.leq(x.dist(a, b), y.dist(phi[a], phi[b])))
        .map(|(a, b)| {
            format!(
                "X({},{}) = {} ≰ Y({},{}) = {}",
                x.points[a],
                x.points[b],
                fmt_value(q, x.dist(a, b)),
                y.points[phi[a]],
                y.points[phi[b]],
                fmt_value(q, y.dist(phi[a], phi[b]))
            )
        })
}

fn reals(f: &io::VCatFile, which: &str) -> Result<VCategory<ExtReal>, InputError> {
    if !f.quantale.is_lawvere_plus() {
        return Err(InputError(format!("{which} must be a space over the lawvere quantale")));
    }
    Ok(VCategory {
        points: f.space.points.clone(),
        d: f
            .space
            .d
            .iter()
            .map(|r| r.iter().map(|v| v.as_real().expect("lawvere value")).collect())
            .collect(),
    })
}

fn met_norm_cmd(source: &Path, target: &Path, map: &str) -> Result<Outcome, InputError> {
    let (fx, fy) = (io::load_vcat(source)?, io::load_vcat(target)?);
    let (x, y) = (reals(&fx, "source")?, reals(&fy, "target")?);
    let phi = io::parse_point_map(map, &fx.space, &fy.space)?;
    let met = met_infty_norm(&phi, &x, &y).map_err(input("map"))?;
    let times = lipschitz_norm(&LawvereTimes, &phi, &x, &y).map_err(input("map"))?;
    let mut r = ValidationReport::new();
    r.record(
        "change of base",
        (met != times.log_circ()).then(|| format!("Met∞ norm {met} ≠ log°({times}) = {}", times.log_circ())),
    );
    Ok(Outcome::new(r)
        .with("met_infty_norm", met.to_string())
        .with("lipschitz_norm_times", times.to_string()))
}

fn hausdorff_cmd(cli: &Cli, path: &Path) -> Result<Outcome, InputError> {
    let f = io::load_distributor(path)?;
    let q = &f.quantale;
    let rho = &f.matrix;
    let mut r = check_distributor(q, &f.source, &f.target, rho);
    let h = hausdorff_norm(q, rho);
    let c = choice_norm(q, rho, f.target.len(), enum_cap(cli, DEFAULT_CHOICE_CAP)).map_err(input("choice norm"))?;
    r.record(
        "choice ≤ Hausdorff",
        (!q.leq(&c, &h)).then(|| format!("choice {} ≰ Hausdorff {}", fmt_value(q, &c), fmt_value(q, &h))),
    );
    let ccd = check_conditions(q, false).map(|c| c.completely_distributive.holds).unwrap_or(false);
    let equal = q.equiv(&c, &h);
    let status = match (equal, ccd) {
        (true, _) => Status::Pass,
        (false, true) => Status::Fail,
        (false, false) => Status::Advisory,
    };
    r.push(
        "choice = Hausdorff",
        status,
        (!equal).then(|| format!("choice {} ≠ Hausdorff {}", fmt_value(q, &c), fmt_value(q, &h))),
    );
    let lifted = hausdorff_lift_dist(q, rho, f.target.len(), cli.max_powerset).map_err(input("powerset"))?;
    let hl = hausdorff_norm(q, &lifted);
    r.record(
        "|ρ| ≤ |Hρ|",
        (!q.leq(&h, &hl)).then(|| format!("|ρ| = {} ≰ |Hρ| = {}", fmt_value(q, &h), fmt_value(q, &hl))),
    );
    Ok(Outcome::new(r)
        .with("hausdorff_norm", fmt_value(q, &h))
        .with("choice_norm", fmt_value(q, &c))
        .with("lifted_norm", fmt_value(q, &hl)))
}

fn banach_cmd(cli: &Cli, sc: BanachScenario, max_iter: usize, samples: usize) -> Result<Outcome, InputError> {
    match sc {
        BanachScenario::Analytic {
            map,
            lipschitz,
            seed,
            tolerance,
        } => {
            let m = AnalyticMap::from_expr(&map, lipschitz).map_err(input("--map"))?;
            let radius = 100.0 * (1.0 + seed.abs());
            let mut r = match m.check_contraction(samples, (seed - radius, seed + radius), cli.rng_seed) {
                Ok(r) => r,
                Err(BanachError::NonContractiveSample { x, y, ratio }) => {
                    let mut r = ValidationReport::new();
                    r.record("contraction", Some(format!("x = {x}, y = {y}: ratio {ratio} > L = {lipschitz}")));
                    return Ok(Outcome::new(r));
                }
                Err(e) => return Err(InputError(e.to_string())),
            };
            let cert = match iterate_to_fixed_point(&m, seed, tolerance, max_iter) {
                Ok(c) => c,
                Err(e @ BanachError::IterationLimit(_)) => {
                    r.record("converged", Some(e.to_string()));
                    return Ok(Outcome::new(r));
                }
                Err(e) => return Err(InputError(e.to_string())),
            };
            r.record("converged", None);
            let bounds = geometric_cauchy_certificate(&m, seed, cert.iterations, Some(cert.point));
            r.record(
                "certificate dominates",
                bounds
                    .iter()
                    .find(|b| !b.holds())
                    .map(|b| format!("m = {}, n = {:?}: measured {:e} > bound {:e}", b.m, b.n, b.measured, b.bound)),
            );
            let steps: Vec<Value> = cert
                .steps
                .iter()
                .map(|s| json!({"m": s.m, "x_m": s.point, "bound": s.bound, "residual": s.residual}))
                .collect();
            Ok(Outcome::new(r)
                .with("fixed_point", cert.point)
                .with("iterations", cert.iterations)
                .with("seed_norm", cert.seed_norm)
                .with("certificate", steps))
        }
        BanachScenario::Finite {
            host,
            functor,
            lipschitz,
            seed,
        } => {
            let run = banach_run(&host, &functor, lipschitz, seed).map_err(input("banach"))?;
            let mut out = Outcome::new(run.report.clone())
                .with("orbit", run.prefix.iter().map(|&f| host.name(f).to_string()).collect::<Vec<_>>())
                .with("cauchy_value", run.cauchy_value.to_string());
            if let Some(v) = run.vertex {
                out = out.with("vertex", host.objects[v].clone());
            }
            if let Some(c) = &run.class {
                out = out.with("fixed_point_kind", c.label());
            }
            Ok(out)
        }
    }
}

fn snvec_cmd(cli: &Cli, c: &SnvecCommand) -> Result<Outcome, InputError> {
    match c {
        SnvecCommand::LogNorm {
            source,
            target,
            map,
            samples,
        } => {
            let (s, t, f) = (io::load_weighted_space(source)?, io::load_weighted_space(target)?, io::load_monomial_map(map)?);
            let exact = log_norm(&f, &s, &t).map_err(input("map"))?;
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(cli.rng_seed);
            let sampled = sampled_log_norm(&mut rng, &f, &s, &t, *samples);
            let mut r = ValidationReport::new();
            r.record(
                "sampled ≤ closed form",
                (sampled > exact).then(|| format!("sampled {sampled} > closed form {exact}")),
            );
            let close = exact.is_infinite() && sampled.is_infinite() || (exact.value() - sampled.value()).abs() <= 1e-6;
            r.push("sampling attains closed form", if close { Status::Approx } else { Status::Advisory }, None);
            let mut detail = String::new();
            let _ = write!(detail, "{samples} samples, best {sampled}");
            Ok(Outcome::new(r.with_detail(detail))
                .with("log_norm", exact.to_string())
                .with("sampled", sampled.to_string()))
        }
        SnvecCommand::Colim { tails } => {
            let tails = io::load_weight_tails(tails)?;
            let w = colimit_weights(&tails).map_err(input("colimit"))?;
            let mut r = ValidationReport::new();
            r.record("colimit weights", None);
            Ok(Outcome::new(r).with("weights", w.weights.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
        }
        SnvecCommand::Witness { c } => {
            if !(c.is_finite() && *c >= 0.0) {
                return Err(InputError(format!("--c must be a finite non-negative weight, got {c}")));
            }
            Ok(Outcome::new(verify_no_separated_colimit(*c)).with("c", *c))
        }
    }
}
