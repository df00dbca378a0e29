//! Command-line front end.
//!
//! Exit codes: 0 success, 1 input or parse error, 2 mathematical
//! precondition failure, 3 identity or internal-consistency failure.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;

use crate::chow::{eval_chow_expr, Ambient, ChowClass, ChowError, ClassVector};
use crate::classes::{
    chi_complement, csm_hypersurface, euler, fulton_divisor, mu_class_isolated, ClassError, HypersurfaceSpec,
};
use crate::milnor::{
    format_point, milnor_at, parse_points, total_milnor_affine, MilnorError, SingularityData, DEFAULT_MAX_CUTOFF,
};
use crate::poly::{fmt_rational, parse_poly, Poly, PolyError, Rational};
use crate::verify::{
    verify_aluffi_nc, verify_cor13, verify_multilog, verify_thm12_identity_map, verify_thm12_point_blowup,
    ReportJson, VerificationReport,
};

pub const EXIT_INPUT: u8 = 1;
pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "charclass", version, about = "Characteristic classes of singular projective hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fulton, Milnor and CSM classes of a hypersurface, with Euler characteristics.
    Csm(HypersurfaceArgs),
    /// Euler characteristic of the complement of a hypersurface.
    ChiComplement(HypersurfaceArgs),
    /// Milnor number of an affine polynomial at the origin.
    Milnor(MilnorArgs),
    /// Check CSM identities on concrete geometries.
    Verify(VerifyArgs),
    /// Evaluate an expression in the Chow ring of an ambient.
    Chow(ChowArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Common {
    /// Largest truncation degree tried by the Milnor engine.
    #[arg(long, env = "CHARCLASS_MAX_CUTOFF", default_value_t = DEFAULT_MAX_CUTOFF)]
    max_cutoff: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct HypersurfaceArgs {
    /// `P<n>` or `BlPt(P<n>, m)`; inferred from `--vars` when omitted.
    #[arg(long)]
    ambient: Option<String>,
    /// Comma-separated homogeneous coordinates.
    #[arg(long)]
    vars: Option<String>,
    /// Homogeneous defining polynomial.
    #[arg(long)]
    poly: Option<String>,
    /// Divisor class expression (instead of `--poly`), e.g. `e` or `3*h`.
    #[arg(long)]
    divisor: Option<String>,
    /// Singular points, e.g. `0:0:1;1:0:0`.
    #[arg(long, default_value = "")]
    sing: String,
    /// Milnor numbers of the listed points when no polynomial is given
    /// (default 1 each).
    #[arg(long)]
    mu: Option<String>,
    /// Chart index used for every singular point.
    #[arg(long)]
    chart: Option<usize>,
    /// Compare the listed points against the total Milnor number of each chart.
    #[arg(long)]
    check_complete: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct MilnorArgs {
    #[arg(long)]
    vars: String,
    #[arg(long)]
    poly: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scenario {
    Thm12Blowup,
    Thm12Identity,
    AluffiNc,
    Multilog,
    Cor13,
    All,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    scenario: Scenario,
    /// Dimension or inclusive range `a..b`.
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    d: Option<String>,
    #[arg(long)]
    d1: Option<String>,
    #[arg(long)]
    d2: Option<String>,
    #[arg(long, default_value = "")]
    sing: String,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    vars: Option<String>,
    #[arg(long)]
    poly: Option<String>,
    #[arg(long)]
    chart: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct ChowArgs {
    #[arg(long)]
    ambient: String,
    #[arg(long)]
    expr: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<ChowError> for CliError {
    fn from(e: ChowError) -> Self {
        let code = match e {
            ChowError::NotUnit(_) | ChowError::NotBlowup(_) | ChowError::NotDivisor => EXIT_PRECONDITION,
            ChowError::NonIntegral { .. } => EXIT_MISMATCH,
            _ => EXIT_INPUT,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<MilnorError> for CliError {
    fn from(e: MilnorError) -> Self {
        let code = match e {
            MilnorError::Poly(_) | MilnorError::InvalidPoint(_) => EXIT_INPUT,
            _ => EXIT_PRECONDITION,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<ClassError> for CliError {
    fn from(e: ClassError) -> Self {
        match e {
            ClassError::Chow(c) => c.into(),
            ClassError::Milnor(m) => m.into(),
            ClassError::Inconsistent { .. } | ClassError::NonIntegralNumber(_) => {
                CliError { code: EXIT_MISMATCH, message: e.to_string() }
            }
            _ => CliError { code: EXIT_PRECONDITION, message: e.to_string() },
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run(args: &[String]) -> CliOutput {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutput { code, stdout: text, stderr: String::new() }
            } else {
                CliOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.cmd) {
        Ok((code, stdout)) => CliOutput { code, stdout, stderr: String::new() },
        Err(e) => CliOutput { code: e.code, stdout: String::new(), stderr: format!("error: {}\n", e.message) },
    }
}

fn dispatch(cmd: Command) -> Result<(u8, String), CliError> {
    match cmd {
        Command::Csm(a) => cmd_csm(&a),
        Command::ChiComplement(a) => cmd_chi_complement(&a),
        Command::Milnor(a) => cmd_milnor(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Chow(a) => cmd_chow(&a),
    }
}

fn emit<T: Serialize>(format: Format, report: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Text => text(report),
    }
}

fn split_vars(vars: &str) -> Vec<String> {
    vars.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect()
}

fn parse_mus(text: Option<&str>, count: usize) -> Result<Vec<u64>, CliError> {
    match text {
        None => Ok(vec![1; count]),
        Some(t) => {
            let mus: Vec<u64> = t
                .split([';', ','])
                .map(|s| s.trim().parse().map_err(|_| CliError::input(format!("invalid Milnor number '{s}'"))))
                .collect::<Result<_, _>>()?;
            if mus.len() != count {
                return Err(CliError::input(format!("{} Milnor numbers given for {count} points", mus.len())));
            }
            Ok(mus)
        }
    }
}

fn parse_range(text: &str) -> Result<Vec<i64>, CliError> {
    let bad = || CliError::input(format!("invalid range '{text}'"));
    match text.split_once("..") {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![text.trim().parse().map_err(|_| bad())?]),
    }
}

fn range_or(text: &Option<String>, default: &str) -> Result<Vec<i64>, CliError> {
    parse_range(text.as_deref().unwrap_or(default))
}

fn to_dim(n: i64) -> Result<usize, CliError> {
    usize::try_from(n).ok().filter(|&n| n >= 1).ok_or_else(|| CliError::input(format!("invalid dimension {n}")))
}

/// A hypersurface resolved from command-line arguments.
struct Resolved {
    spec: HypersurfaceSpec,
    poly: Option<Poly>,
}

fn check_points_dim(points: &[Vec<Rational>], n: usize) -> Result<(), CliError> {
    if let Some(p) = points.iter().find(|p| p.len() != n + 1) {
        return Err(CliError::input(format!(
            "point {} has {} coordinates, expected {}",
            format_point(p),
            p.len(),
            n + 1
        )));
    }
    Ok(())
}

fn resolve_hypersurface(a: &HypersurfaceArgs) -> Result<Resolved, CliError> {
    let points = parse_points(&a.sing)?;
    match (&a.poly, &a.divisor) {
        (Some(text), None) => {
            let vars = split_vars(a.vars.as_deref().ok_or_else(|| CliError::input("--poly requires --vars"))?);
            if vars.len() < 2 {
                return Err(CliError::input("at least two homogeneous coordinates are required"));
            }
            let ambient = match &a.ambient {
                Some(s) => s.parse::<Ambient>()?,
                None => Ambient::projective(vars.len() - 1)?,
            };
            if !matches!(ambient, Ambient::ProjectiveSpace { .. }) {
                return Err(CliError::input("a defining polynomial requires a projective space ambient"));
            }
            if ambient.dim() + 1 != vars.len() {
                return Err(CliError::input(format!(
                    "ambient {ambient} needs {} variables, got {}",
                    ambient.dim() + 1,
                    vars.len()
                )));
            }
            if a.mu.is_some() {
                return Err(CliError::input("--mu is only accepted without --poly"));
            }
            let f = parse_poly(text, &vars)?;
            if f.is_zero() || !f.is_homogeneous() {
                return Err(CliError { code: EXIT_PRECONDITION, message: "polynomial must be nonzero and homogeneous".into() });
            }
            check_points_dim(&points, ambient.dim())?;
            let sing = SingularityData::compute(&f, &points, a.chart, a.common.max_cutoff)?;
            let d = f.total_degree().unwrap_or(0) as i64;
            let spec = HypersurfaceSpec::new(ChowClass::hyperplane_multiple(ambient, d), sing)?;
            Ok(Resolved { spec, poly: Some(f) })
        }
        (None, Some(text)) => {
            let ambient: Ambient =
                a.ambient.as_deref().ok_or_else(|| CliError::input("--divisor requires --ambient"))?.parse()?;
            let divisor = eval_chow_expr(text, ambient)?;
            check_points_dim(&points, ambient.dim())?;
            let mus = parse_mus(a.mu.as_deref(), points.len())?;
            let sing = SingularityData::asserted(&points, &mus)?;
            let spec = HypersurfaceSpec::new(divisor, sing).map_err(|e| match e {
                ClassError::BadDivisor => CliError::input(e.to_string()),
                other => other.into(),
            })?;
            Ok(Resolved { spec, poly: None })
        }
        (Some(_), Some(_)) => Err(CliError::input("--poly and --divisor are mutually exclusive")),
        (None, None) => Err(CliError::input("one of --poly or --divisor is required")),
    }
}

#[derive(Debug, Serialize)]
struct PointReport {
    point: String,
    chart: usize,
    milnor: u64,
    cutoff: usize,
    certified: bool,
}

#[derive(Debug, Serialize)]
struct ChartCheck {
    chart: usize,
    total_milnor: u64,
    listed_milnor: u64,
    complete: bool,
}

#[derive(Debug, Serialize)]
struct CsmReport {
    ambient: Ambient,
    #[serde(skip_serializing_if = "Option::is_none")]
    polynomial: Option<String>,
    divisor: ClassVector,
    singularities: Vec<PointReport>,
    fulton: ClassVector,
    mu_class: ClassVector,
    csm: ClassVector,
    euler: i64,
    chi_complement: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    completeness: Option<Vec<ChartCheck>>,
    #[serde(skip)]
    rendered: [String; 4],
}

fn point_reports(sing: &SingularityData) -> Vec<PointReport> {
    sing.points()
        .iter()
        .map(|p| PointReport {
            point: format_point(&p.point),
            chart: p.chart,
            milnor: p.milnor.mu,
            cutoff: p.milnor.cutoff,
            certified: p.milnor.certified,
        })
        .collect()
}

/// Compares the listed points with the total Milnor number of every
/// standard chart.
fn completeness(f: &Poly, sing: &SingularityData, max_cutoff: usize) -> Result<Vec<ChartCheck>, CliError> {
    (0..f.nvars())
        .map(|chart| {
            let total = total_milnor_affine(&f.dehomogenize(chart)?, max_cutoff)?;
            let listed =
                sing.points().iter().filter(|p| !p.point[chart].is_zero()).map(|p| p.milnor.mu).sum::<u64>();
            Ok(ChartCheck { chart, total_milnor: total, listed_milnor: listed, complete: total == listed })
        })
        .collect()
}

fn cmd_csm(a: &HypersurfaceArgs) -> Result<(u8, String), CliError> {
    let r = resolve_hypersurface(a)?;
    let spec = &r.spec;
    let checks = if a.check_complete {
        let f = r.poly.as_ref().ok_or_else(|| CliError::input("--check-complete requires --poly"))?;
        Some(completeness(f, spec.singularities(), a.common.max_cutoff)?)
    } else {
        None
    };
    let fulton = fulton_divisor(spec)?;
    let mu = mu_class_isolated(spec.singularities(), spec.ambient())?;
    let csm = csm_hypersurface(spec)?;
    let report = CsmReport {
        ambient: spec.ambient(),
        polynomial: r.poly.as_ref().map(Poly::to_string),
        divisor: spec.divisor().into(),
        singularities: point_reports(spec.singularities()),
        fulton: (&fulton).into(),
        mu_class: (&mu).into(),
        csm: (&csm).into(),
        euler: euler(&csm)?,
        chi_complement: chi_complement(spec)?,
        rendered: [spec.divisor().to_string(), fulton.to_string(), mu.to_string(), csm.to_string()],
        completeness: checks,
    };
    let incomplete = report.completeness.as_ref().is_some_and(|c| c.iter().any(|x| !x.complete));
    let out = emit(a.common.format, &report, render_csm);
    Ok((if incomplete { EXIT_PRECONDITION } else { 0 }, out))
}

fn render_csm(r: &CsmReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ambient: {}", r.ambient);
    if let Some(p) = &r.polynomial {
        let _ = writeln!(s, "polynomial: {p}");
    }
    let _ = writeln!(s, "divisor: {}", r.rendered[0]);
    if r.singularities.is_empty() {
        let _ = writeln!(s, "singular points: none");
    } else {
        let _ = writeln!(s, "singular points:");
        for p in &r.singularities {
            let cert = if p.cutoff == 0 { "asserted".to_string() } else { format!("certified at D={}", p.cutoff) };
            let _ = writeln!(s, "  {}  chart {}  mu {}  ({cert})", p.point, p.chart, p.milnor);
        }
    }
    let _ = writeln!(s, "fulton: {}", r.rendered[1]);
    let _ = writeln!(s, "mu_class: {}", r.rendered[2]);
    let _ = writeln!(s, "csm: {}", r.rendered[3]);
    let _ = writeln!(s, "euler: {}", r.euler);
    let _ = writeln!(s, "chi_complement: {}", r.chi_complement);
    if let Some(checks) = &r.completeness {
        for c in checks {
            let _ = writeln!(
                s,
                "chart {}: total milnor {} listed {} {}",
                c.chart,
                c.total_milnor,
                c.listed_milnor,
                if c.complete { "complete" } else { "INCOMPLETE" }
            );
        }
    }
    s
}

#[derive(Debug, Serialize)]
struct ChiReport {
    ambient: Ambient,
    divisor: ClassVector,
    total_milnor: u64,
    chi_complement: i64,
}

fn cmd_chi_complement(a: &HypersurfaceArgs) -> Result<(u8, String), CliError> {
    let r = resolve_hypersurface(a)?;
    let report = ChiReport {
        ambient: r.spec.ambient(),
        divisor: r.spec.divisor().into(),
        total_milnor: r.spec.singularities().total_milnor(),
        chi_complement: chi_complement(&r.spec)?,
    };
    Ok((0, emit(a.common.format, &report, |r| format!("chi_complement: {}\n", r.chi_complement))))
}

#[derive(Debug, Serialize)]
struct MilnorReport {
    polynomial: String,
    mu: u64,
    cutoff: usize,
    certified: bool,
}

fn cmd_milnor(a: &MilnorArgs) -> Result<(u8, String), CliError> {
    let vars = split_vars(&a.vars);
    let f = parse_poly(&a.poly, &vars)?;
    let res = milnor_at(&f, a.common.max_cutoff)?;
    let report = MilnorReport { polynomial: f.to_string(), mu: res.mu, cutoff: res.cutoff, certified: res.certified };
    Ok((
        0,
        emit(a.common.format, &report, |r| {
            format!("mu: {}\ncutoff: {}\ncertified: {}\n", r.mu, r.cutoff, r.certified)
        }),
    ))
}

/// Singularity data for the identity-map and complement scenarios.
fn scenario_singularities(a: &VerifyArgs, n: usize) -> Result<(Option<i64>, SingularityData), CliError> {
    let points = parse_points(&a.sing)?;
    check_points_dim(&points, n)?;
    match &a.poly {
        Some(text) => {
            let vars = split_vars(a.vars.as_deref().ok_or_else(|| CliError::input("--poly requires --vars"))?);
            if vars.len() != n + 1 {
                return Err(CliError::input(format!("P({n}) needs {} variables, got {}", n + 1, vars.len())));
            }
            let f = parse_poly(text, &vars)?;
            if f.is_zero() || !f.is_homogeneous() {
                return Err(CliError { code: EXIT_PRECONDITION, message: "polynomial must be nonzero and homogeneous".into() });
            }
            let sing = SingularityData::compute(&f, &points, a.chart, a.common.max_cutoff)?;
            Ok((f.total_degree().map(i64::from), sing))
        }
        None => {
            let mus = parse_mus(a.mu.as_deref(), points.len())?;
            Ok((None, SingularityData::asserted(&points, &mus)?))
        }
    }
}

fn hypersurface_reports(
    a: &VerifyArgs,
    default_n: &str,
    default_d: &str,
    check: fn(usize, i64, SingularityData) -> Result<VerificationReport, ClassError>,
) -> Result<Vec<VerificationReport>, CliError> {
    let mut out = Vec::new();
    for n in range_or(&a.n, default_n)? {
        let n = to_dim(n)?;
        let (poly_degree, sing) = scenario_singularities(a, n)?;
        let degrees = match (poly_degree, &a.d) {
            (Some(pd), Some(d)) if parse_range(d)? != vec![pd] => {
                return Err(CliError::input(format!("--d {d} disagrees with the polynomial degree {pd}")))
            }
            (Some(pd), _) => vec![pd],
            (None, d) => range_or(d, default_d)?,
        };
        for d in degrees {
            out.push(check(n, d, sing.clone())?);
        }
    }
    Ok(out)
}

fn scenario_reports(a: &VerifyArgs, scenario: Scenario) -> Result<Vec<VerificationReport>, CliError> {
    let mut out = Vec::new();
    match scenario {
        Scenario::Thm12Blowup => {
            for n in range_or(&a.n, "2..5")? {
                let n = to_dim(n)?;
                if n < 2 {
                    return Err(CliError::input("point blowups need n >= 2"));
                }
                out.push(verify_thm12_point_blowup(n)?);
            }
        }
        Scenario::Thm12Identity => out = hypersurface_reports(a, "3", "4", verify_thm12_identity_map)?,
        Scenario::Cor13 => out = hypersurface_reports(a, "3", "4", verify_cor13)?,
        Scenario::AluffiNc => {
            for n in range_or(&a.n, "2..4")? {
                let n = to_dim(n)?;
                if let Some(d) = &a.d {
                    for d in parse_range(d)? {
                        out.push(verify_aluffi_nc(n, &[d])?);
                    }
                } else {
                    for d1 in range_or(&a.d1, "1..3")? {
                        for d2 in range_or(&a.d2, "1..3")? {
                            out.push(verify_aluffi_nc(n, &[d1, d2])?);
                        }
                    }
                }
            }
        }
        Scenario::Multilog => {
            for n in range_or(&a.n, "2..4")? {
                let n = to_dim(n)?;
                for d1 in range_or(&a.d1, "1..3")? {
                    for d2 in range_or(&a.d2, "1..3")? {
                        out.push(verify_multilog(n, d1, d2)?);
                    }
                }
            }
        }
        Scenario::All => {
            let defaults = VerifyArgs {
                scenario: Scenario::All,
                n: None,
                d: None,
                d1: None,
                d2: None,
                sing: String::new(),
                mu: None,
                vars: None,
                poly: None,
                chart: None,
                common: Common { max_cutoff: a.common.max_cutoff, format: a.common.format },
            };
            for s in [Scenario::Thm12Blowup, Scenario::AluffiNc, Scenario::Multilog] {
                out.extend(scenario_reports(&defaults, s)?);
            }
            for n in 3..=5 {
                let mut node = vec![Rational::zero(); n + 1];
                node[n] = Rational::from_integer(1.into());
                let nodal = SingularityData::asserted(&[node], &[1])?;
                for d in 2..=4 {
                    out.push(verify_thm12_identity_map(n, d, SingularityData::empty())?);
                    out.push(verify_thm12_identity_map(n, d, nodal.clone())?);
                    out.push(verify_cor13(n, d, nodal.clone())?);
                }
            }
        }
    }
    Ok(out)
}

fn render_reports(reports: &[ReportJson], originals: &[VerificationReport]) -> String {
    let mut s = String::new();
    let width = originals.iter().map(|r| r.scenario.len()).max().unwrap_or(0);
    for r in originals {
        let _ = writeln!(
            s,
            "{:<width$}  {}  lhs = {}  rhs = {}",
            r.scenario,
            if r.equal { "EQUAL" } else { "MISMATCH" },
            r.lhs,
            r.rhs
        );
        for (k, gen, v) in r.diff_by_codimension() {
            let _ = writeln!(s, "{:<width$}    diff codim {k} {gen}: {v}", "");
        }
    }
    let bad = reports.iter().filter(|r| !r.equal).count();
    let _ = writeln!(s, "{} scenarios, {} mismatches", reports.len(), bad);
    s
}

fn cmd_verify(a: &VerifyArgs) -> Result<(u8, String), CliError> {
    let reports = scenario_reports(a, a.scenario)?;
    let json: Vec<ReportJson> = reports.iter().map(ReportJson::from).collect();
    let code = if reports.iter().all(|r| r.equal) { 0 } else { EXIT_MISMATCH };
    let out = emit(a.common.format, &json, |j| render_reports(j, &reports));
    Ok((code, out))
}

#[derive(Debug, Serialize)]
struct ChowReport {
    ambient: Ambient,
    class: ClassVector,
    rendered: String,
    degree: String,
}

fn cmd_chow(a: &ChowArgs) -> Result<(u8, String), CliError> {
    let ambient: Ambient = a.ambient.parse()?;
    let c = eval_chow_expr(&a.expr, ambient)?;
    let report =
        ChowReport { ambient, class: (&c).into(), rendered: c.to_string(), degree: fmt_rational(&c.degree()) };
    Ok((0, emit(a.format, &report, |r| format!("class: {}\ndegree: {}\n", r.rendered, r.degree))))
}
