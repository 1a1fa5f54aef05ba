//! Corpus manifests, their loading and validation, and the case runner.
//!
//! A corpus is a directory holding `corpus.json`, a list of cases whose
//! file references are resolved relative to that directory.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use dualis::curvelab::{curve_report, PlaneCurve, ProjPoint};
use dualis::dualgeom::{default_witness, dual_degree_oracle, effective_guardrail};
use dualis::exact::Rational;
use dualis::flopcalc::{
    check_identity, classical_plucker, quadric_pair_check, solve_unknown, FlopCheckReport, Identity,
    IdentityForm, PluckerDualData, VarietyInvariants,
};
use dualis::pipeline::curve_pair_check;
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const MANIFEST_NAME: &str = "corpus.json";

/// A curve given by file or inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CurveRef {
    File(String),
    Inline { equation: String },
}

/// A package given by file or inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PackageRef {
    File(String),
    Inline(VarietyInvariants),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CaseInput {
    /// Two plane curves; packages, duals and intersections are computed.
    CurvePair {
        curves: [CurveRef; 2],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_degree: Option<u32>,
    },
    /// Packages of `S1, S2` and their duals, with both intersection `chi`.
    PackagePair {
        packages: [PackageRef; 4],
        chi_s: Rational,
        chi_d: Rational,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        form: Option<IdentityForm>,
    },
    /// Classical Plücker counts, optionally confirmed on an explicit curve.
    ClassicalPlucker {
        d: i64,
        nodes: i64,
        cusps: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        curve: Option<CurveRef>,
    },
    /// `S` and its dual against a smooth quadric and its dual.
    QuadricPair {
        packages: [PackageRef; 2],
        chi_s_cap_q: Rational,
        chi_d_cap_qd: Rational,
    },
    SolveUnknown { identity: Identity },
}

impl CaseInput {
    pub fn kind(&self) -> &'static str {
        match self {
            CaseInput::CurvePair { .. } => "curve_pair",
            CaseInput::PackagePair { .. } => "package_pair",
            CaseInput::ClassicalPlucker { .. } => "classical_plucker",
            CaseInput::QuadricPair { .. } => "quadric_pair",
            CaseInput::SolveUnknown { .. } => "solve_unknown",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plucker: Option<PluckerDualData>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusCase {
    pub id: String,
    /// Where the expected values come from.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub input: CaseInput,
    #[serde(default)]
    pub expected: Expected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub dir: PathBuf,
    pub cases: Vec<CorpusCase>,
}

/// Deserializes JSON, reporting the path of the offending field.
pub fn parse_json<T: DeserializeOwned>(file: &Path, text: &str) -> Result<T, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CliError::Schema {
            file: file.to_path_buf(),
            path: if path == "." { String::new() } else { path },
            message: e.into_inner().to_string(),
        }
    })
}

fn read(path: &Path) -> Result<String, CliError> {
    if !path.exists() {
        return Err(CliError::MissingFile(path.to_path_buf()));
    }
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn check_package(file: &Path, prefix: &str, p: &VarietyInvariants) -> Result<(), CliError> {
    match p.field_violation() {
        Some((field, message)) => Err(CliError::Schema {
            file: file.to_path_buf(),
            path: if prefix.is_empty() { field } else { format!("{prefix}.{field}") },
            message,
        }),
        None => Ok(()),
    }
}

pub fn load_package(path: &Path) -> Result<VarietyInvariants, CliError> {
    let package: VarietyInvariants = parse_json(path, &read(path)?)?;
    check_package(path, "", &package)?;
    Ok(package)
}

pub fn load_curve(path: &Path) -> Result<PlaneCurve, CliError> {
    let text = read(path)?;
    PlaneCurve::parse(text.trim()).map_err(|e| CliError::InvalidFile {
        file: path.to_path_buf(),
        message: e.to_string(),
    })
}

/// Everything a case refers to, loaded.
enum Resolved {
    Curves([PlaneCurve; 2], Option<u32>),
    Packages(Vec<VarietyInvariants>),
    Plucker(Option<PlaneCurve>),
    Solve,
}

struct Resolver<'a> {
    dir: &'a Path,
    manifest: &'a Path,
}

impl Resolver<'_> {
    fn curve(&self, r: &CurveRef) -> Result<PlaneCurve, CliError> {
        match r {
            CurveRef::File(name) => load_curve(&self.dir.join(name)),
            CurveRef::Inline { equation } => PlaneCurve::parse(equation).map_err(|e| CliError::InvalidFile {
                file: self.manifest.to_path_buf(),
                message: format!("{equation}: {e}"),
            }),
        }
    }

    fn package(&self, r: &PackageRef, field: &str) -> Result<VarietyInvariants, CliError> {
        match r {
            PackageRef::File(name) => load_package(&self.dir.join(name)),
            PackageRef::Inline(p) => {
                check_package(self.manifest, field, p)?;
                Ok(p.clone())
            }
        }
    }

    fn packages(&self, index: usize, refs: &[PackageRef]) -> Result<Vec<VarietyInvariants>, CliError> {
        refs.iter()
            .enumerate()
            .map(|(j, p)| self.package(p, &format!("[{index}].input.packages[{j}]")))
            .collect()
    }

    fn resolve(&self, index: usize, case: &CorpusCase) -> Result<Resolved, CliError> {
        let missing = |field: &str| CliError::Schema {
            file: self.manifest.to_path_buf(),
            path: format!("[{index}].expected.{field}"),
            message: format!("{} cases need an expected {field}", case.input.kind()),
        };
        Ok(match &case.input {
            CaseInput::CurvePair { curves, max_degree } => {
                Resolved::Curves([self.curve(&curves[0])?, self.curve(&curves[1])?], *max_degree)
            }
            CaseInput::PackagePair { packages, .. } => Resolved::Packages(self.packages(index, packages)?),
            CaseInput::QuadricPair { packages, .. } => Resolved::Packages(self.packages(index, packages)?),
            CaseInput::ClassicalPlucker { curve, .. } => {
                if case.expected.plucker.is_none() {
                    return Err(missing("plucker"));
                }
                Resolved::Plucker(curve.as_ref().map(|c| self.curve(c)).transpose()?)
            }
            CaseInput::SolveUnknown { .. } => {
                if case.expected.value.is_none() {
                    return Err(missing("value"));
                }
                Resolved::Solve
            }
        })
    }
}

fn manifest_path(path: &Path) -> PathBuf {
    if path.is_dir() {
        path.join(MANIFEST_NAME)
    } else {
        path.to_path_buf()
    }
}

/// Loads a manifest (or the `corpus.json` of a directory) and checks that
/// ids are unique and every referenced file exists and parses.
pub fn load_corpus(path: &Path) -> Result<Corpus, CliError> {
    let manifest = manifest_path(path);
    let cases: Vec<CorpusCase> = parse_json(&manifest, &read(&manifest)?)?;
    let mut seen = BTreeSet::new();
    for (i, case) in cases.iter().enumerate() {
        if !seen.insert(case.id.as_str()) {
            return Err(CliError::Schema {
                file: manifest.clone(),
                path: format!("[{i}].id"),
                message: format!("duplicate case id `{}`", case.id),
            });
        }
    }
    let dir = manifest.parent().unwrap_or(Path::new(".")).to_path_buf();
    let resolver = Resolver { dir: &dir, manifest: &manifest };
    for (i, case) in cases.iter().enumerate() {
        resolver.resolve(i, case)?;
    }
    Ok(Corpus { dir, cases })
}

/// Writes the manifest of a corpus; loading it back gives the same cases.
pub fn save_corpus(cases: &[CorpusCase], path: &Path) -> Result<(), CliError> {
    write_json(cases, &manifest_path(path))
}

fn write_json<T: Serialize + ?Sized>(value: &T, path: &Path) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseResult {
    pub id: String,
    pub kind: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<FlopCheckReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_unix: Option<u64>,
    pub summary: Summary,
    pub cases: Vec<CaseResult>,
}

impl RunReport {
    pub fn all_pass(&self) -> bool {
        self.summary.pass == self.summary.total
    }
}

pub fn save_report(report: &RunReport, path: &Path) -> Result<(), CliError> {
    write_json(report, path)
}

pub fn load_report(path: &Path) -> Result<RunReport, CliError> {
    parse_json(path, &read(path)?)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub timestamps: bool,
    pub max_degree: Option<u32>,
}

struct Evaluation {
    verdict: Verdict,
    checks: Vec<FlopCheckReport>,
    value: Option<String>,
    message: Option<String>,
}

impl Evaluation {
    fn checks(checks: Vec<FlopCheckReport>, expected: &Expected) -> Self {
        let want = expected.holds.unwrap_or(true);
        let ok = checks.iter().all(|c| c.holds == want);
        Evaluation {
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            message: (!ok).then(|| format!("expected holds = {want}")),
            checks,
            value: None,
        }
    }

    fn value(value: String, ok: bool, message: Option<String>) -> Self {
        Evaluation {
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            checks: Vec::new(),
            value: Some(value),
            message,
        }
    }
}

fn forms(form: Option<IdentityForm>) -> Vec<IdentityForm> {
    match form {
        Some(f) => vec![f],
        None => vec![IdentityForm::Conormal, IdentityForm::Intro],
    }
}

fn evaluate(case: &CorpusCase, resolved: Resolved, opts: RunOptions) -> Result<Evaluation, CliError> {
    Ok(match (&case.input, resolved) {
        (CaseInput::CurvePair { .. }, Resolved::Curves([c1, c2], case_limit)) => {
            let limit = effective_guardrail(opts.max_degree.or(case_limit));
            let labels = ["S1", "S2"];
            let out = curve_pair_check(labels, [&c1, &c2], limit)?;
            Evaluation::checks(vec![out.conormal, out.intro], &case.expected)
        }
        (CaseInput::PackagePair { chi_s, chi_d, form, .. }, Resolved::Packages(p)) => {
            let checks = forms(*form)
                .into_iter()
                .map(|f| check_identity(&p[0], &p[1], &p[2], &p[3], chi_s, chi_d, f))
                .collect::<Result<Vec<_>, _>>()?;
            Evaluation::checks(checks, &case.expected)
        }
        (CaseInput::QuadricPair { chi_s_cap_q, chi_d_cap_qd, .. }, Resolved::Packages(p)) => {
            let report = quadric_pair_check(&p[0], &p[1], chi_s_cap_q, chi_d_cap_qd)?;
            Evaluation::checks(vec![report], &case.expected)
        }
        (CaseInput::ClassicalPlucker { d, nodes, cusps, .. }, Resolved::Plucker(curve)) => {
            let got = classical_plucker(*d, *nodes, *cusps)?;
            let expected = case.expected.plucker.expect("checked at load");
            let mut problems = Vec::new();
            if got != expected {
                problems.push(format!("expected {expected:?}"));
            }
            if let Some(c) = curve {
                let report = curve_report(&c)?;
                if (report.d, report.delta, report.kappa) != (*d, *nodes, *cusps) {
                    problems.push(format!(
                        "curve has (d, nodes, cusps) = ({}, {}, {})",
                        report.d, report.delta, report.kappa
                    ));
                }
                let witness = default_witness(&c, None).ok_or(dualis::Error::ChartExhausted)?;
                let oracle = dual_degree_oracle(&c, &witness)?;
                if oracle as i64 != got.d_dual {
                    problems.push(format!("tangent count through {witness} is {oracle}"));
                }
            }
            let value = format!("d∨={} δ∨={} κ∨={} g={}", got.d_dual, got.delta_dual, got.kappa_dual, got.g);
            let ok = problems.is_empty();
            Evaluation::value(value, ok, (!ok).then(|| problems.join("; ")))
        }
        (CaseInput::SolveUnknown { identity }, Resolved::Solve) => {
            let value = solve_unknown(identity)?;
            let expected = case.expected.value.clone().expect("checked at load");
            let ok = value == expected;
            Evaluation::value(value.to_string(), ok, (!ok).then(|| format!("expected {expected}")))
        }
        _ => unreachable!("resolution matches the case kind"),
    })
}

fn run_case(corpus: &Corpus, index: usize, opts: RunOptions) -> CaseResult {
    let case = &corpus.cases[index];
    let start = Instant::now();
    let manifest = corpus.dir.join(MANIFEST_NAME);
    let resolver = Resolver { dir: &corpus.dir, manifest: &manifest };
    let outcome = resolver.resolve(index, case).and_then(|r| evaluate(case, r, opts));
    let elapsed_ms = opts.timestamps.then(|| start.elapsed().as_millis() as u64);
    let base = CaseResult {
        id: case.id.clone(),
        kind: case.input.kind().to_string(),
        verdict: Verdict::Error,
        checks: Vec::new(),
        value: None,
        message: None,
        elapsed_ms,
    };
    match outcome {
        Ok(e) => CaseResult { verdict: e.verdict, checks: e.checks, value: e.value, message: e.message, ..base },
        Err(e) => CaseResult { message: Some(e.to_string()), ..base },
    }
}

/// Runs every case in parallel; results are ordered by case id.
pub fn run_corpus(corpus: &Corpus, opts: RunOptions) -> RunReport {
    let mut cases: Vec<CaseResult> = (0..corpus.cases.len())
        .into_par_iter()
        .map(|i| run_case(corpus, i, opts))
        .collect();
    cases.sort_by(|a, b| a.id.cmp(&b.id));
    let count = |v: Verdict| cases.iter().filter(|c| c.verdict == v).count();
    let summary = Summary {
        total: cases.len(),
        pass: count(Verdict::Pass),
        fail: count(Verdict::Fail),
        error: count(Verdict::Error),
    };
    let generated_unix = opts.timestamps.then(|| {
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    });
    RunReport { generated_unix, summary, cases }
}

/// A point given as three integers.
pub fn witness_point(coords: &[i64]) -> Result<ProjPoint, CliError> {
    match coords {
        [a, b, c] => ProjPoint::from_i64(*a, *b, *c).ok_or_else(|| CliError::Usage("witness must be nonzero".into())),
        _ => Err(CliError::Usage("witness needs three coordinates".into())),
    }
}
