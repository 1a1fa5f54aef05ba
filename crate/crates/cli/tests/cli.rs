use std::fs;
use std::path::{Path, PathBuf};

use dualis_cli::corpus::{
    load_corpus, load_report, run_corpus, save_corpus, save_report, CorpusCase, RunOptions, Verdict,
};
use dualis_cli::{run_command, CliError, CommandOutput};
use serde_json::Value;

fn run(args: &[&str]) -> CommandOutput {
    run_command(std::iter::once("dualis").chain(args.iter().copied()))
}

fn cases_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../cases")
}

fn case_file(rel: &str) -> String {
    cases_dir().join(rel).to_string_lossy().into_owned()
}

fn json(out: &CommandOutput) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn classical_plucker_for_nodal_cubic() {
    let out = run(&["plucker", "classical", "-d", "3", "--nodes", "1", "--cusps", "0"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("d∨=4 δ∨=0 κ∨=3"), "{}", out.stdout);
    let out = run(&["plucker", "classical", "-d", "3", "--nodes", "1", "--format", "json"]);
    assert_eq!(json(&out)["kappa_dual"], 3);
}

#[test]
fn chi_commands() {
    assert_eq!(run(&["chi", "ci", "-n", "5", "--degrees", "3"]).stdout, "27\n");
    assert_eq!(run(&["chi", "ci", "-n", "3", "--degrees", "2,2"]).stdout, "0\n");
    assert_eq!(run(&["chi", "std", "--kind", "grassmannian", "-k", "2", "-n", "6"]).stdout, "15\n");
    assert_eq!(run(&["chi", "std", "--kind", "quadric", "-n", "4"]).stdout, "6\n");
    let out = run(&["chi", "package", "--kind", "hypersurface", "-n", "3", "-d", "2", "--format", "json"]);
    assert_eq!(json(&out)["chi_slices"], serde_json::json!([0, 2, 2, 4]));
    let out = run(&["chi", "std", "--kind", "grassmannian", "-n", "6"]);
    assert_eq!(out.code, 2);
}

#[test]
fn curve_commands() {
    let out = run(&["curve", "analyze", &case_file("curves/nodal_cubic.curve"), "--format", "json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report = json(&out);
    assert_eq!((report["delta"].as_i64(), report["c0m"].as_i64()), (Some(1), Some(2)));
    assert_eq!(report["singular_points"][0]["kind"], "node");

    let out = run(&["curve", "dual", "-e", "y^2*z - x^3", "--format", "json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(json(&out)["degree"], 3);

    let out = run(&["curve", "dual-degree", "-e", "x^4 + y^4 + z^4"]);
    assert_eq!(out.stdout, "12\n");
    let out = run(&["curve", "dual-degree", "-e", "x^2 + y^2 - z^2", "--witness", "1,0,1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("witness"), "{}", out.stderr);
}

#[test]
fn guardrail_is_capped() {
    let nodal = case_file("curves/nodal_cubic.curve");
    let refused = run(&["curve", "dual", &nodal, "--report"]);
    assert_eq!(refused.code, 2);
    assert!(refused.stderr.contains("guardrail"), "{}", refused.stderr);
    let allowed = run(&["curve", "dual", &nodal, "--report", "--max-degree", "4", "--format", "json"]);
    assert_eq!(allowed.code, 0, "{}", allowed.stderr);
    assert_eq!(json(&allowed)["report"]["kappa"], 3);
    // above the hard cap the request is clamped, so quartics stay refused
    let quartic = run(&["curve", "dual", "-e", "x^4 + y^4 + z^4", "--max-degree", "100"]);
    assert_eq!(quartic.code, 0, "{}", quartic.stderr);
    let report = run(&["curve", "dual", "-e", "x^4 + y^4 + z^4", "--max-degree", "100", "--report"]);
    assert_eq!(report.code, 2);
}

#[test]
fn plucker_check_exit_codes() {
    let p = |name: &str| case_file(&format!("packages/{name}.json"));
    let (q, l, qd, ld) = (p("quadric_surface"), p("line_p3"), p("quadric_surface_dual"), p("line_p3_dual"));
    let base = ["plucker", "check", "--s1", &q, "--s2", &l, "--d1", &qd, "--d2", &ld];
    let mut holds: Vec<&str> = base.to_vec();
    holds.extend(["--chi-s", "2", "--chi-d", "2"]);
    let out = run(&holds);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "conormal 0 = 0\nintro 0 = 0\n");
    let mut fails: Vec<&str> = base.to_vec();
    fails.extend(["--chi-s", "3", "--chi-d", "2", "--form", "intro"]);
    let out = run(&fails);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains('≠'));

    let quadric = run(&[
        "plucker", "check", "--form", "quadric", "--s1", &p("line_p2"), "--d1", &p("point_p2"), "--chi-s", "2",
        "--chi-d", "0",
    ]);
    assert_eq!(quadric.code, 0, "{}", quadric.stderr);
    assert_eq!(quadric.stdout, "quadric 2/3 = 2/3\n");
}

#[test]
fn detect_codim_and_solve() {
    let out = run(&["plucker", "detect-codim", &case_file("packages/cubic_fourfold.json"), "--format", "json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = json(&out);
    assert_eq!((v["dual_codim"].as_i64(), v["dual_degree"].as_i64(), v["dual_c0m"].as_i64()), (Some(1), Some(48), Some(171)));

    let dir = tempfile::tempdir().unwrap();
    let id = dir.path().join("bd.json");
    fs::write(
        &id,
        r#"{"identity": "flop", "n": 14, "form": "intro", "dims": [13, 5, 8, 8],
            "chi_s": 27, "chi_d": 24, "c0m": ["?", 6, 15, 9]}"#,
    )
    .unwrap();
    assert_eq!(run(&["plucker", "solve", id.to_str().unwrap()]).stdout, "30\n");
}

#[test]
fn usage_errors_exit_two_with_synopsis() {
    let out = run(&["plucker", "frobnicate"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("Usage"), "{}", out.stderr);
    assert!(out.stdout.is_empty());
    let out = run(&["chi", "ci", "-n", "5"]);
    assert_eq!(out.code, 2);
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("corpus"));
}

#[test]
fn corpus_run_passes_and_is_deterministic() {
    let dir = case_file("");
    let first = run(&["corpus", "run", &dir, "--format", "json", "--no-timestamps"]);
    assert_eq!(first.code, 0, "{}{}", first.stdout, first.stderr);
    let second = run(&["corpus", "run", &dir, "--format", "json", "--no-timestamps"]);
    assert_eq!(first.stdout, second.stdout);
    let report = json(&first);
    let s = &report["summary"];
    let total = s["total"].as_u64().unwrap();
    assert!(total >= 20);
    assert_eq!(s["pass"].as_u64().unwrap() + s["fail"].as_u64().unwrap() + s["error"].as_u64().unwrap(), total);
    let ids: Vec<&str> = report["cases"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(!first.stdout.contains("elapsed_ms"));
}

fn copy_corpus(dir: &Path) {
    for sub in ["curves", "packages"] {
        fs::create_dir_all(dir.join(sub)).unwrap();
        for entry in fs::read_dir(cases_dir().join(sub)).unwrap() {
            let entry = entry.unwrap();
            fs::copy(entry.path(), dir.join(sub).join(entry.file_name())).unwrap();
        }
    }
    fs::copy(cases_dir().join("corpus.json"), dir.join("corpus.json")).unwrap();
}

#[test]
fn wrong_slice_length_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    copy_corpus(dir.path());
    let pkg = dir.path().join("packages/quadric_surface.json");
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&pkg).unwrap()).unwrap();
    v["chi_slices"].as_array_mut().unwrap().pop();
    fs::write(&pkg, v.to_string()).unwrap();
    match load_corpus(dir.path()) {
        Err(CliError::Schema { path, .. }) => assert_eq!(path, "chi_slices"),
        other => panic!("{other:?}"),
    }
    let out = run(&["corpus", "run", dir.path().to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("chi_slices"), "{}", out.stderr);

    let out = run(&["plucker", "detect-codim", pkg.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("chi_slices"));
}

#[test]
fn manifest_errors() {
    let dir = tempfile::tempdir().unwrap();
    copy_corpus(dir.path());
    let manifest = dir.path().join("corpus.json");
    let cases: Vec<Value> = serde_json::from_str(&fs::read_to_string(&manifest).unwrap()).unwrap();

    let mut dup = cases.clone();
    dup.push(cases[0].clone());
    fs::write(&manifest, serde_json::to_string(&dup).unwrap()).unwrap();
    match load_corpus(dir.path()) {
        Err(CliError::Schema { path, message, .. }) => {
            assert_eq!(path, format!("[{}].id", cases.len()));
            assert!(message.contains("duplicate"));
        }
        other => panic!("{other:?}"),
    }

    let mut bad = cases.clone();
    bad[2]["input"]["chi_s"] = Value::from(1);
    bad[2]["expected"]["bogus"] = Value::from(true);
    fs::write(&manifest, serde_json::to_string(&bad).unwrap()).unwrap();
    match load_corpus(dir.path()) {
        Err(CliError::Schema { path, .. }) => assert!(path.starts_with("[2]"), "{path}"),
        other => panic!("{other:?}"),
    }

    fs::write(&manifest, serde_json::to_string(&cases).unwrap()).unwrap();
    fs::remove_file(dir.path().join("curves/line_a.curve")).unwrap();
    assert!(matches!(load_corpus(dir.path()), Err(CliError::MissingFile(_))));
}

#[test]
fn failing_and_erroring_cases_are_counted() {
    let dir = tempfile::tempdir().unwrap();
    copy_corpus(dir.path());
    let manifest = dir.path().join("corpus.json");
    let mut cases: Vec<Value> = serde_json::from_str(&fs::read_to_string(&manifest).unwrap()).unwrap();
    let find = |cases: &[Value], id: &str| cases.iter().position(|c| c["id"] == id).unwrap();
    let i = find(&cases, "package-quadric-line");
    cases[i]["input"]["chi_s"] = Value::from(3);
    let j = find(&cases, "curve-line-conic");
    cases[j]["input"]["curves"][1] = Value::from("curves/line_a.curve");
    fs::write(&manifest, serde_json::to_string(&cases).unwrap()).unwrap();

    let corpus = load_corpus(dir.path()).unwrap();
    let report = run_corpus(&corpus, RunOptions { timestamps: false, max_degree: None });
    let s = report.summary;
    assert_eq!((s.fail, s.error), (1, 1));
    assert_eq!(s.pass + s.fail + s.error, s.total);
    let verdict = |id: &str| report.cases.iter().find(|c| c.id == id).unwrap().verdict;
    assert_eq!(verdict("package-quadric-line"), Verdict::Fail);
    assert_eq!(verdict("curve-line-conic"), Verdict::Error);
    let out = run(&["corpus", "run", dir.path().to_str().unwrap()]);
    assert_eq!(out.code, 1);
}

#[test]
fn save_and_load_round_trip() {
    let corpus = load_corpus(&cases_dir()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    copy_corpus(dir.path());
    save_corpus(&corpus.cases, dir.path()).unwrap();
    let back: Vec<CorpusCase> = load_corpus(dir.path()).unwrap().cases;
    assert_eq!(back, corpus.cases);

    let report = run_corpus(&corpus, RunOptions { timestamps: true, max_degree: None });
    let path = dir.path().join("report.json");
    save_report(&report, &path).unwrap();
    assert_eq!(load_report(&path).unwrap(), report);

    let out = run(&["corpus", "run", dir.path().to_str().unwrap(), "--out", path.to_str().unwrap(), "--no-timestamps"]);
    assert_eq!(out.code, 0);
    assert!(load_report(&path).unwrap().generated_unix.is_none());
}
