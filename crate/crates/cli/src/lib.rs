//! The `dualis` command line: curve analysis and duals, Plücker-type
//! identity checks, Euler characteristics, and corpus runs.
//!
//! Exit codes: 0 on success or when every check holds, 1 when a
//! verification fails, 2 on usage or input errors.

pub mod corpus;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dualis::charclass::{
    chi_smooth_complete_intersection, chi_standard, dual_hypersurface_package, hypersurface_package, linear_package,
    StandardVariety,
};
use dualis::curvelab::{curve_report, CurveReport, PlaneCurve};
use dualis::dualgeom::{default_witness, dual_degree_oracle, dual_equation, effective_guardrail};
use dualis::exact::Rational;
use dualis::flopcalc::{
    check_identity, classical_plucker, detect_dual_codim, dual_c0m, dual_degree_from_invariants, quadric_pair_check,
    solve_unknown, FlopCheckReport, Identity, IdentityForm, VarietyInvariants,
};
use serde::Serialize;
use serde_json::json;

use corpus::{load_corpus, load_curve, load_package, parse_json, run_corpus, save_report, witness_point, RunOptions};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("schema error in {}{}: {message}", file.display(), if path.is_empty() { String::new() } else { format!(" at `{path}`") })]
    Schema { file: PathBuf, path: String, message: String },
    #[error("missing file {}", .0.display())]
    MissingFile(PathBuf),
    #[error("invalid file {}: {message}", file.display())]
    InvalidFile { file: PathBuf, message: String },
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] dualis::Error),
}

/// What a command printed and how it exits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "dualis", version, about = "Exact projective duality and Plücker-type identities")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Leave timestamps and timings out of reports.
    #[arg(long, global = true)]
    no_timestamps: bool,
    /// Degree guardrail for duals; values above the hard cap are clamped.
    #[arg(long, global = true, value_name = "INT")]
    max_degree: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Plane curves: invariants, dual curves, dual degrees.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Plücker-type identities and their consequences.
    #[command(subcommand)]
    Plucker(PluckerCommand),
    /// Euler characteristics and invariant packages.
    #[command(subcommand)]
    Chi(ChiCommand),
    /// Corpus runs.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct CurveInput {
    /// File holding one polynomial in x, y, z.
    file: Option<PathBuf>,
    /// The polynomial itself.
    #[arg(short, long)]
    equation: Option<String>,
}

impl CurveInput {
    fn load(&self) -> Result<PlaneCurve, CliError> {
        match (&self.file, &self.equation) {
            (Some(path), _) => load_curve(path),
            (None, Some(text)) => Ok(PlaneCurve::parse(text)?),
            (None, None) => Err(CliError::Usage("a curve file or --equation is required".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
enum CurveCommand {
    /// Singular points, genus, Euler characteristic and c0m.
    Analyze(CurveInput),
    /// The dual curve.
    Dual {
        #[command(flatten)]
        input: CurveInput,
        /// Also analyze the dual curve.
        #[arg(long)]
        report: bool,
    },
    /// Dual degree as the number of tangents through a witness point.
    DualDegree {
        #[command(flatten)]
        input: CurveInput,
        /// Witness point as `a,b,c`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        witness: Option<Vec<i64>>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormChoice {
    Conormal,
    Intro,
    Quadric,
    Both,
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
enum PluckerCommand {
    /// Dual degree, dual cusps and nodes, and genus of a plane curve.
    Classical {
        #[arg(short)]
        d: i64,
        #[arg(long, default_value_t = 0)]
        nodes: i64,
        #[arg(long, default_value_t = 0)]
        cusps: i64,
    },
    /// Evaluates the identity on package files.
    Check {
        #[arg(long)]
        s1: PathBuf,
        /// Not used with the quadric form.
        #[arg(long)]
        s2: Option<PathBuf>,
        #[arg(long)]
        d1: PathBuf,
        #[arg(long)]
        d2: Option<PathBuf>,
        /// chi(S1 ∩ S2), or chi(S ∩ Q) for the quadric form.
        #[arg(long, allow_hyphen_values = true)]
        chi_s: Rational,
        /// chi(D1 ∩ D2), or chi(S∨ ∩ Q∨) for the quadric form.
        #[arg(long, allow_hyphen_values = true)]
        chi_d: Rational,
        #[arg(long, value_enum, default_value_t = FormChoice::Both)]
        form: FormChoice,
    },
    /// Codimension, degree and c0m of the dual of a package.
    DetectCodim { package: PathBuf },
    /// Solves an identity file with one field set to "?".
    Solve { identity: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StdKind {
    ProjectiveSpace,
    Quadric,
    Grassmannian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PackageKind {
    Hypersurface,
    Linear,
    DualHypersurface,
}

#[derive(Debug, Subcommand)]
enum ChiCommand {
    /// Projective spaces, smooth quadrics, Grassmannians.
    Std {
        #[arg(long, value_enum)]
        kind: StdKind,
        #[arg(short)]
        n: i64,
        /// Grassmannian of k-planes.
        #[arg(short)]
        k: Option<i64>,
    },
    /// Smooth complete intersections in P^n.
    Ci {
        #[arg(short)]
        n: i64,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<i64>,
    },
    /// Invariant packages of standard varieties.
    Package {
        #[arg(long, value_enum)]
        kind: PackageKind,
        #[arg(short)]
        n: i64,
        /// Degree of the hypersurface.
        #[arg(short)]
        d: Option<i64>,
        /// Dimension of the linear space.
        #[arg(short)]
        k: Option<i64>,
    },
}

#[derive(Debug, Subcommand)]
enum CorpusCommand {
    /// Runs every case of a corpus directory or manifest.
    Run {
        path: PathBuf,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A result ready to print in either format.
struct Rendered {
    json: serde_json::Value,
    text: String,
    code: i32,
}

impl Rendered {
    fn ok<T: Serialize>(value: &T, text: String) -> Self {
        Rendered { json: serde_json::to_value(value).expect("serializable"), text, code: 0 }
    }
}

fn report_text(r: &CurveReport) -> String {
    let mut t = format!(
        "degree {}\nnodes {}\ncusps {}\ngenus {}\nchi {}\nc0m {}\n",
        r.d, r.delta, r.kappa, r.genus, r.chi, r.c0m
    );
    for p in r.singular_points.iter().chain(&r.other_singularities) {
        let kind = serde_json::to_value(p.kind).expect("serializable");
        let _ = writeln!(
            t,
            "singular {} {} multiplicity {} Eu {}",
            p.point,
            kind.as_str().unwrap_or("?"),
            p.multiplicity,
            p.euler_obstruction
        );
    }
    t
}

fn check_text(reports: &[FlopCheckReport]) -> String {
    reports
        .iter()
        .map(|r| {
            let form = serde_json::to_value(r.form).expect("serializable");
            format!(
                "{} {} {} {}\n",
                form.as_str().unwrap_or("?"),
                r.lhs,
                if r.holds { "=" } else { "≠" },
                r.rhs
            )
        })
        .collect()
}

fn package_text(p: &VarietyInvariants) -> String {
    let slices: Vec<String> = p
        .chi_slices
        .iter()
        .map(|s| s.map_or("?".to_string(), |v| v.to_string()))
        .collect();
    format!(
        "{}\nn {}\ndim {}\ndegree {}\nc0m {}\nchi_slices [{}]\n",
        p.label,
        p.n,
        p.dim,
        p.degree,
        p.c0m,
        slices.join(", ")
    )
}

fn run_curve(cmd: CurveCommand, max_degree: Option<u32>) -> Result<Rendered, CliError> {
    match cmd {
        CurveCommand::Analyze(input) => {
            let report = curve_report(&input.load()?)?;
            let text = report_text(&report);
            Ok(Rendered::ok(&report, text))
        }
        CurveCommand::Dual { input, report } => {
            let curve = input.load()?;
            let limit = effective_guardrail(max_degree);
            if curve.degree() > limit {
                return Err(dualis::Error::GuardrailExceeded { degree: curve.degree() as usize, limit: limit as usize }.into());
            }
            let dual = dual_equation(&curve)?;
            let mut text = format!("{}\ndegree {}\n", dual.equation, dual.degree);
            for f in &dual.removed_factors {
                let _ = writeln!(text, "removed ({})^{}", f.factor, f.exponent);
            }
            let mut json = serde_json::to_value(&dual).expect("serializable");
            if report {
                if dual.degree > limit {
                    return Err(dualis::Error::GuardrailExceeded { degree: dual.degree as usize, limit: limit as usize }.into());
                }
                let r = curve_report(&dual.curve()?)?;
                text.push_str(&report_text(&r));
                json["report"] = serde_json::to_value(&r).expect("serializable");
            }
            Ok(Rendered { json, text, code: 0 })
        }
        CurveCommand::DualDegree { input, witness } => {
            let curve = input.load()?;
            let witness = match witness {
                Some(coords) => witness_point(&coords)?,
                None => default_witness(&curve, None).ok_or(dualis::Error::ChartExhausted)?,
            };
            let degree = dual_degree_oracle(&curve, &witness)?;
            let json = json!({ "dual_degree": degree, "witness": witness });
            Ok(Rendered { json, text: format!("{degree}\n"), code: 0 })
        }
    }
}

fn verdict(reports: Vec<FlopCheckReport>) -> Rendered {
    let code = if reports.iter().all(|r| r.holds) { 0 } else { 1 };
    let text = check_text(&reports);
    Rendered { code, ..Rendered::ok(&reports, text) }
}

fn run_plucker(cmd: PluckerCommand) -> Result<Rendered, CliError> {
    match cmd {
        PluckerCommand::Classical { d, nodes, cusps } => {
            let p = classical_plucker(d, nodes, cusps)?;
            let text = format!("d∨={} δ∨={} κ∨={} g={}\n", p.d_dual, p.delta_dual, p.kappa_dual, p.g);
            Ok(Rendered::ok(&p, text))
        }
        PluckerCommand::Check { s1, s2, d1, d2, chi_s, chi_d, form } => {
            let (s1, d1) = (load_package(&s1)?, load_package(&d1)?);
            if form == FormChoice::Quadric {
                return Ok(verdict(vec![quadric_pair_check(&s1, &d1, &chi_s, &chi_d)?]));
            }
            let need = |p: Option<PathBuf>, flag: &str| {
                p.ok_or_else(|| CliError::Usage(format!("--{flag} is required for this form")))
                    .and_then(|p| load_package(&p))
            };
            let (s2, d2) = (need(s2, "s2")?, need(d2, "d2")?);
            let forms = match form {
                FormChoice::Conormal => vec![IdentityForm::Conormal],
                FormChoice::Intro => vec![IdentityForm::Intro],
                _ => vec![IdentityForm::Conormal, IdentityForm::Intro],
            };
            let reports = forms
                .into_iter()
                .map(|f| check_identity(&s1, &s2, &d1, &d2, &chi_s, &chi_d, f))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(verdict(reports))
        }
        PluckerCommand::DetectCodim { package } => {
            let p = load_package(&package)?;
            let codim = detect_dual_codim(&p)?;
            let degree = dual_degree_from_invariants(&p, 0, codim)?;
            let c0m = dual_c0m(&p, 0, Some(codim))?;
            let json = json!({ "label": p.label, "dual_codim": codim, "dual_degree": degree, "dual_c0m": c0m });
            let text = format!("dual codimension {codim}\ndual degree {degree}\ndual c0m {c0m}\n");
            Ok(Rendered { json, text, code: 0 })
        }
        PluckerCommand::Solve { identity } => {
            let text = std::fs::read_to_string(&identity).map_err(|_| CliError::MissingFile(identity.clone()))?;
            let id: Identity = parse_json(&identity, &text)?;
            let value = solve_unknown(&id)?;
            Ok(Rendered::ok(&json!({ "value": value }), format!("{value}\n")))
        }
    }
}

fn run_chi(cmd: ChiCommand) -> Result<Rendered, CliError> {
    let need = |v: Option<i64>, flag: &str| v.ok_or_else(|| CliError::Usage(format!("-{flag} is required")));
    match cmd {
        ChiCommand::Std { kind, n, k } => {
            let variety = match kind {
                StdKind::ProjectiveSpace => StandardVariety::ProjectiveSpace { n },
                StdKind::Quadric => StandardVariety::Quadric { n },
                StdKind::Grassmannian => StandardVariety::Grassmannian { k: need(k, "k")?, n },
            };
            let chi = chi_standard(variety)?;
            Ok(Rendered::ok(&json!({ "variety": variety, "chi": chi }), format!("{chi}\n")))
        }
        ChiCommand::Ci { n, degrees } => {
            let chi = chi_smooth_complete_intersection(n, &degrees)?;
            Ok(Rendered::ok(&json!({ "n": n, "degrees": degrees, "chi": chi }), format!("{chi}\n")))
        }
        ChiCommand::Package { kind, n, d, k } => {
            let p = match kind {
                PackageKind::Hypersurface => hypersurface_package(n, need(d, "d")?)?,
                PackageKind::DualHypersurface => dual_hypersurface_package(n, need(d, "d")?)?,
                PackageKind::Linear => linear_package(n, need(k, "k")?)?,
            };
            let text = package_text(&p);
            Ok(Rendered::ok(&p, text))
        }
    }
}

fn run_corpus_command(cmd: CorpusCommand, opts: RunOptions) -> Result<Rendered, CliError> {
    let CorpusCommand::Run { path, out } = cmd;
    let corpus = load_corpus(&path)?;
    let report = run_corpus(&corpus, opts);
    if let Some(out) = out {
        save_report(&report, &out)?;
    }
    let mut text = String::new();
    for case in &report.cases {
        let verdict = serde_json::to_value(case.verdict).expect("serializable");
        let _ = write!(text, "{} {}", verdict.as_str().unwrap_or("?").to_uppercase(), case.id);
        for c in &case.checks {
            let _ = write!(text, " {}={}", c.lhs, c.rhs);
        }
        if let Some(v) = &case.value {
            let _ = write!(text, " {v}");
        }
        if let Some(m) = &case.message {
            let _ = write!(text, " ({m})");
        }
        if let Some(ms) = case.elapsed_ms {
            let _ = write!(text, " [{ms} ms]");
        }
        text.push('\n');
    }
    let s = report.summary;
    let _ = writeln!(text, "{} cases: {} pass, {} fail, {} error", s.total, s.pass, s.fail, s.error);
    let code = if report.all_pass() { 0 } else { 1 };
    Ok(Rendered { code, ..Rendered::ok(&report, text) })
}

/// Parses `argv` (program name first) and runs the command.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                CommandOutput { code, stdout: rendered, stderr: String::new() }
            } else {
                CommandOutput { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    let Cli { format, no_timestamps, max_degree, command } = cli;
    let result = match command {
        Command::Curve(c) => run_curve(c, max_degree),
        Command::Plucker(c) => run_plucker(c),
        Command::Chi(c) => run_chi(c),
        Command::Corpus(c) => run_corpus_command(c, RunOptions { timestamps: !no_timestamps, max_degree }),
    };
    match result {
        Ok(r) => {
            let stdout = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&r.json).expect("serializable");
                    s.push('\n');
                    s
                }
                Format::Text => r.text,
            };
            CommandOutput { code: r.code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let mut stderr = format!("error: {e}\n");
            if matches!(e, CliError::Usage(_)) {
                stderr.push_str("Usage: dualis <COMMAND>; see `dualis --help`\n");
            }
            CommandOutput { code: 2, stdout: String::new(), stderr }
        }
    }
}
