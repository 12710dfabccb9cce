//! Command-line front end: JSON run configuration, flag overrides, subcommands and
//! provenance-stamped output files.

use crate::bafield::{fmt_sig15, sample_curve, sample_q, FieldContext, GridSpec, SymMethod};
use crate::closure::{critical_lambda, phase_check, quantized_period, search_phase, BranchFamily, ClosureReport, Kind};
use crate::error::{Error, Result};
use crate::spectral::{genus1_spectral, BranchData, Divisor, SpectralData};
use crate::verify::{
    closure_residual, geometry_residuals, lax_propagation_residual, plr_equation_residual, sym_agreement_residual,
    zero_curvature_residual, Direction, ResidualReport,
};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

pub const TOOL: &str = "plr";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_RESIDUAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Reconstruction point: a fixed value or the critical point of Ω₁ (s) or Ω₂ (t).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Lambda0Spec {
    Value(f64),
    AutoCritical(Kind),
}

impl FromStr for Lambda0Spec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Some(k) = s.strip_prefix("auto-critical:") {
            return Ok(Lambda0Spec::AutoCritical(k.parse()?));
        }
        s.parse::<f64>()
            .map(Lambda0Spec::Value)
            .map_err(|_| Error::Config(format!("Lambda0 must be a number or auto-critical:s|t, got '{s}'")))
    }
}

impl std::fmt::Display for Lambda0Spec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Lambda0Spec::Value(v) => write!(f, "{v}"),
            Lambda0Spec::AutoCritical(Kind::S) => f.write_str("auto-critical:s"),
            Lambda0Spec::AutoCritical(Kind::T) => f.write_str("auto-critical:t"),
        }
    }
}

impl Serialize for Lambda0Spec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Lambda0Spec::Value(v) => s.serialize_f64(*v),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Lambda0Spec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Lambda0Spec::Value(v)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    pub crit: f64,
    pub phase: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { crit: crate::closure::TOL_CRIT, phase: crate::closure::TOL_PHASE }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyConfig {
    pub lax_span: f64,
    pub grid: GridSpec,
    pub closure_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            lax_span: 1.0,
            grid: GridSpec { s_range: [-1.0, 1.0], t_range: [-1.0, 1.0], s_steps: 20, t_steps: 20 },
            closure_samples: 40,
        }
    }
}

/// Effective run configuration; its canonical JSON is hashed into every output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    pub divisor: Divisor,
    #[serde(rename = "Lambda0")]
    pub lambda0: Lambda0Spec,
    /// Index into the ascending positive critical points.
    pub root_index: usize,
    pub kind: Kind,
    /// n for kind s, m for kind t.
    pub n: u32,
    pub grid: GridSpec,
    /// One-parameter family for `search`; derived from the branch points when absent.
    pub family: Option<BranchFamily>,
    pub bracket: Option<[f64; 2]>,
    pub search_tol: f64,
    pub tolerances: Tolerances,
    pub verify: VerifyConfig,
    pub output: Option<PathBuf>,
    pub format: Option<Format>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            lambda1: Complex64::new(0.454, 0.324),
            lambda2: Complex64::new(-0.454, 0.095),
            divisor: Divisor::default(),
            lambda0: Lambda0Spec::AutoCritical(Kind::S),
            root_index: 0,
            kind: Kind::S,
            n: 1,
            grid: GridSpec { s_range: [-5.0, 5.0], t_range: [0.0, 0.0], s_steps: 200, t_steps: 1 },
            family: None,
            bracket: None,
            search_tol: 1e-12,
            tolerances: Tolerances::default(),
            verify: VerifyConfig::default(),
            output: None,
            format: None,
        }
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        self.grid.validate()?;
        self.verify.grid.validate()?;
        if self.n == 0 {
            return Err(Error::Config("n must be at least 1".into()));
        }
        if !(self.search_tol > 0.0) {
            return Err(Error::Config("search_tol must be positive".into()));
        }
        if !(self.tolerances.crit > 0.0 && self.tolerances.phase > 0.0) {
            return Err(Error::Config("tolerances must be positive".into()));
        }
        if !(self.verify.lax_span.is_finite() && self.verify.lax_span >= 0.0) {
            return Err(Error::Config("verify.lax_span must be finite and non-negative".into()));
        }
        if self.verify.closure_samples == 0 {
            return Err(Error::Config("verify.closure_samples must be positive".into()));
        }
        if let Lambda0Spec::Value(v) = self.lambda0 {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidReconstructionPoint(format!("Lambda0 = {v} must be real and positive")));
            }
        }
        Ok(())
    }

    /// The configuration without its output location.
    pub fn canonical(&self) -> RunConfig {
        RunConfig { output: None, ..self.clone() }
    }

    /// Lowercase hex SHA-256 of the canonical JSON form.
    pub fn hash(&self) -> String {
        let bytes = serde_json::to_vec(&self.canonical()).unwrap_or_default();
        hex::encode(Sha256::digest(&bytes))
    }

    pub fn spectral(&self) -> Result<SpectralData> {
        genus1_spectral(BranchData::new(self.lambda1, self.lambda2)?, self.divisor)
    }

    pub fn resolve_lambda0(&self, data: &SpectralData) -> Result<f64> {
        match self.lambda0 {
            Lambda0Spec::Value(v) => Ok(v),
            Lambda0Spec::AutoCritical(kind) => {
                let roots = critical_lambda(kind, data)?;
                roots.get(self.root_index).copied().ok_or_else(|| {
                    Error::Config(format!("root_index {} out of range ({} critical points)", self.root_index, roots.len()))
                })
            }
        }
    }

    pub fn context(&self) -> Result<FieldContext> {
        let data = self.spectral()?;
        let l0 = self.resolve_lambda0(&data)?;
        FieldContext::new(data, l0)
    }

    /// Configured family, or Im λ₂ varied (s) / common Im λ varied (t).
    pub fn search_family(&self) -> Result<BranchFamily> {
        let mut fam = match self.family {
            Some(f) => f,
            None => {
                let (l1, l2) = (self.lambda1, self.lambda2);
                let i = Complex64::new(0.0, 1.0);
                let z = Complex64::new(0.0, 0.0);
                let bracket = self.bracket.ok_or_else(|| Error::Config("search requires a bracket or a family".into()))?;
                match self.kind {
                    Kind::S => BranchFamily { lambda1: l1, lambda2: Complex64::new(l2.re, 0.0), d_lambda1: z, d_lambda2: i, bracket, divisor: self.divisor },
                    Kind::T => BranchFamily {
                        lambda1: Complex64::new(l1.re, 0.0),
                        lambda2: Complex64::new(l2.re, l2.im - l1.im),
                        d_lambda1: i,
                        d_lambda2: i,
                        bracket,
                        divisor: self.divisor,
                    },
                }
            }
        };
        if let Some(b) = self.bracket {
            fam.bracket = b;
        }
        Ok(fam)
    }
}

fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected 're,im', got '{s}'"))?;
    Ok(Complex64::new(a.trim().parse().map_err(|e| format!("{e}"))?, b.trim().parse().map_err(|e| format!("{e}"))?))
}

fn parse_range(s: &str) -> std::result::Result<[f64; 2], String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected 'lo,hi', got '{s}'"))?;
    Ok([a.trim().parse().map_err(|e| format!("{e}"))?, b.trim().parse().map_err(|e| format!("{e}"))?])
}

fn parse_lambda0(s: &str) -> std::result::Result<Lambda0Spec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_kind(s: &str) -> std::result::Result<Kind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Flags shared by every subcommand; each overrides the matching config field.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct Overrides {
    /// JSON run configuration
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub lambda1: Option<Complex64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub lambda2: Option<Complex64>,
    #[arg(long)]
    pub epsilon: Option<u8>,
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<f64>,
    /// number or auto-critical:s|t
    #[arg(long = "lambda0", value_parser = parse_lambda0, allow_hyphen_values = true)]
    pub lambda0: Option<Lambda0Spec>,
    #[arg(long)]
    pub root_index: Option<usize>,
    #[arg(long, value_parser = parse_kind)]
    pub kind: Option<Kind>,
    /// n (kind s) or m (kind t)
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub s_range: Option<[f64; 2]>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub t_range: Option<[f64; 2]>,
    #[arg(long)]
    pub s_steps: Option<usize>,
    #[arg(long)]
    pub t_steps: Option<usize>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub bracket: Option<[f64; 2]>,
    #[arg(long)]
    pub search_tol: Option<f64>,
    #[arg(long)]
    pub lax_span: Option<f64>,
    #[arg(long)]
    pub closure_samples: Option<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

impl Overrides {
    /// Loads the config file (or defaults) and applies the flags.
    pub fn resolve(&self) -> Result<RunConfig> {
        let mut c = match &self.config {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
                serde_json::from_str(&text)?
            }
            None => RunConfig::default(),
        };
        macro_rules! set {
            ($field:expr, $flag:expr) => {
                if let Some(v) = $flag {
                    $field = v;
                }
            };
        }
        set!(c.lambda1, self.lambda1);
        set!(c.lambda2, self.lambda2);
        set!(c.divisor.epsilon, self.epsilon);
        set!(c.divisor.y, self.y);
        set!(c.lambda0, self.lambda0);
        set!(c.root_index, self.root_index);
        set!(c.kind, self.kind);
        set!(c.n, self.n);
        set!(c.grid.s_range, self.s_range);
        set!(c.grid.t_range, self.t_range);
        set!(c.grid.s_steps, self.s_steps);
        set!(c.grid.t_steps, self.t_steps);
        set!(c.search_tol, self.search_tol);
        set!(c.verify.lax_span, self.lax_span);
        set!(c.verify.closure_samples, self.closure_samples);
        if self.bracket.is_some() {
            c.bracket = self.bracket;
        }
        if self.output.is_some() {
            c.output = self.output.clone();
        }
        if self.format.is_some() {
            c.format = self.format;
        }
        c.validate()?;
        Ok(c)
    }
}

#[derive(Debug, Parser)]
#[command(name = "plr", version, about = "Genus-one PLR potentials, Sym curves and closure search")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectral data of the genus-one curve (JSON)
    Spectral(Overrides),
    /// Sym curve γ on the grid (CSV or JSON)
    Curve(Overrides),
    /// Potential q and its first derivatives on the grid (CSV or JSON)
    SampleQ(Overrides),
    /// Closure report at Λ₀ for the quantized period
    Closure(Overrides),
    /// Tune a one-parameter family until the phase quantizes
    Search(Overrides),
    /// Residual suite (JSON list)
    Verify(Overrides),
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    tool: &'static str,
    version: &'static str,
    config_sha256: String,
    config: RunConfig,
    result: T,
}

/// Pretty JSON with tool, version, config hash and the effective config.
pub fn envelope_json<T: Serialize>(cfg: &RunConfig, result: T) -> Result<String> {
    let env = Envelope { tool: TOOL, version: VERSION, config_sha256: cfg.hash(), config: cfg.canonical(), result };
    let mut s = serde_json::to_string_pretty(&env).map_err(|e| Error::Domain(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_preamble(cfg: &RunConfig, extra: &[(&str, String)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# tool={TOOL} version={VERSION}");
    let _ = writeln!(out, "# config_sha256={}", cfg.hash());
    for (k, v) in extra {
        let _ = writeln!(out, "# {k}={v}");
    }
    out
}

/// Output of a subcommand: file contents and whether every check passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

#[derive(Serialize)]
struct ClosureOut {
    report: ClosureReport,
}

#[derive(Serialize)]
struct SearchOut<'a> {
    theta: f64,
    evaluations: usize,
    lambda1: Complex64,
    lambda2: Complex64,
    report: &'a ClosureReport,
}

fn apply_tolerances(rep: &mut ClosureReport, tol: &Tolerances) {
    rep.tol_crit = tol.crit;
    rep.tol_phase = tol.phase;
    rep.passed = rep.critical_residual < tol.crit && rep.phase_distance < tol.phase;
}

fn closure_report(cfg: &RunConfig, data: &SpectralData, lambda0: f64) -> Result<ClosureReport> {
    let period = quantized_period(cfg.kind, cfg.n, data)?;
    let mut rep = phase_check(cfg.kind, lambda0, period, data)?;
    apply_tolerances(&mut rep, &cfg.tolerances);
    Ok(rep)
}

fn grid_format(cfg: &RunConfig) -> Format {
    cfg.format.unwrap_or_else(|| match cfg.output.as_ref().and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("json") => Format::Json,
        _ => Format::Csv,
    })
}

pub fn cmd_spectral(cfg: &RunConfig) -> Result<Outcome> {
    let data = cfg.spectral()?;
    Ok(Outcome { text: envelope_json(cfg, &data)?, passed: true })
}

pub fn cmd_curve(cfg: &RunConfig) -> Result<Outcome> {
    let ctx = cfg.context()?;
    let grid = sample_curve(&ctx, &cfg.grid, SymMethod::Analytic)?;
    let text = match grid_format(cfg) {
        Format::Json => envelope_json(cfg, &grid)?,
        Format::Csv => {
            let q0 = grid.q_origin.map(|q| format!("{},{}", fmt_sig15(q.re), fmt_sig15(q.im))).unwrap_or_default();
            let pre = csv_preamble(
                cfg,
                &[
                    ("Lambda0", fmt_sig15(ctx.lambda0())),
                    ("q_origin", q0),
                    ("arclength_max_deviation", fmt_sig15(grid.arclength_max_deviation)),
                    ("skipped", grid.skipped.len().to_string()),
                ],
            );
            pre + &grid.to_csv()
        }
    };
    Ok(Outcome { text, passed: true })
}

pub fn cmd_sample_q(cfg: &RunConfig) -> Result<Outcome> {
    let ctx = cfg.context()?;
    let grid = sample_q(&ctx, &cfg.grid)?;
    let text = match grid_format(cfg) {
        Format::Json => envelope_json(cfg, &grid)?,
        Format::Csv => {
            let pre = csv_preamble(cfg, &[("Lambda0", fmt_sig15(ctx.lambda0())), ("skipped", grid.skipped.len().to_string())]);
            pre + &grid.to_csv()
        }
    };
    Ok(Outcome { text, passed: true })
}

pub fn cmd_closure(cfg: &RunConfig) -> Result<Outcome> {
    let data = cfg.spectral()?;
    let l0 = cfg.resolve_lambda0(&data)?;
    let report = closure_report(cfg, &data, l0)?;
    Ok(Outcome { text: envelope_json(cfg, ClosureOut { report })?, passed: report.passed })
}

pub fn cmd_search(cfg: &RunConfig) -> Result<Outcome> {
    let fam = cfg.search_family()?;
    let res = search_phase(cfg.kind, &fam, cfg.n, cfg.root_index, cfg.search_tol)?;
    let mut report = res.report;
    apply_tolerances(&mut report, &cfg.tolerances);
    let out = SearchOut {
        theta: res.theta,
        evaluations: res.evaluations,
        lambda1: res.data.branch.lambda1,
        lambda2: res.data.branch.lambda2,
        report: &report,
    };
    Ok(Outcome { text: envelope_json(cfg, out)?, passed: report.passed })
}

/// Lax propagation in s and t, zero curvature, the PLR equation, geometry, Sym agreement,
/// and closure when Λ₀ is the critical point of the configured kind.
pub fn verify_suite(cfg: &RunConfig) -> Result<Vec<ResidualReport>> {
    let ctx = cfg.context()?;
    let g = &cfg.verify.grid;
    let mut out = vec![
        lax_propagation_residual(&ctx, Direction::S, cfg.verify.lax_span)?,
        lax_propagation_residual(&ctx, Direction::T, cfg.verify.lax_span)?,
        zero_curvature_residual(&ctx, ctx.lambda0(), g)?,
        plr_equation_residual(&ctx, g)?,
    ];
    out.extend(geometry_residuals(&ctx, g)?);
    out.push(sym_agreement_residual(&ctx, g)?);
    if cfg.lambda0 == Lambda0Spec::AutoCritical(cfg.kind) {
        let rep = closure_report(cfg, &ctx.data, ctx.lambda0())?;
        if rep.passed {
            out.push(closure_residual(&ctx, &rep, cfg.verify.closure_samples)?);
        }
    }
    Ok(out)
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome> {
    let reports = verify_suite(cfg)?;
    let passed = reports.iter().all(|r| r.passed);
    Ok(Outcome { text: envelope_json(cfg, &reports)?, passed })
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => EXIT_IO,
        Error::Config(_)
        | Error::Domain(_)
        | Error::InvalidBranch(_)
        | Error::AtBranchPoint { .. }
        | Error::ModulusDegenerate(_)
        | Error::NonUnitaryDivisor(_)
        | Error::InvalidReconstructionPoint(_) => EXIT_INVALID,
        _ => EXIT_RESIDUAL,
    }
}

/// Runs one subcommand and writes its output; returns the configuration and outcome.
pub fn execute(command: &Command) -> Result<(RunConfig, Outcome)> {
    let (ov, f): (&Overrides, fn(&RunConfig) -> Result<Outcome>) = match command {
        Command::Spectral(o) => (o, cmd_spectral),
        Command::Curve(o) => (o, cmd_curve),
        Command::SampleQ(o) => (o, cmd_sample_q),
        Command::Closure(o) => (o, cmd_closure),
        Command::Search(o) => (o, cmd_search),
        Command::Verify(o) => (o, cmd_verify),
    };
    let cfg = ov.resolve()?;
    let outcome = f(&cfg)?;
    Ok((cfg, outcome))
}

/// Parses arguments, runs and writes output; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = execute(&cli.command).and_then(|(cfg, out)| {
        match &cfg.output {
            Some(p) => std::fs::write(p, &out.text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
            None => print!("{}", out.text),
        }
        Ok(out.passed)
    });
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => {
            eprintln!("plr: checks did not pass");
            EXIT_RESIDUAL
        }
        Err(e) => {
            eprintln!("plr: {e}");
            exit_code(&e)
        }
    }
}
