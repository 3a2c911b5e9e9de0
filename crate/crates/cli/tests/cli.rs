use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nevgcd::exactpoly::parse_rational;
use nevgcd::Rational;
use serde_json::Value;

fn nevgcd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nevgcd"))
        .args(args)
        .env_remove("NEVGCD_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn shipped_corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Data rows of a CSV report, comment lines dropped.
fn csv_rows(text: &str) -> Vec<csv::StringRecord> {
    let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    csv::Reader::from_reader(body.as_bytes()).records().map(Result::unwrap).collect()
}

#[test]
fn sweep_over_sixty_k() {
    let o = nevgcd(&[
        "gcd-sweep",
        "--F",
        "x1-1",
        "--G",
        "x2-1",
        "--g",
        "z",
        "--g",
        "z+1",
        "--kmin",
        "1",
        "--kmax",
        "60",
        "--epsilon",
        "1/10",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("# nevgcd gcd-sweep seed=0\n"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 60);
    let tenth = Rational::new(1.into(), 10.into());
    for r in &rows {
        let k: u32 = r[0].parse().unwrap();
        let deg: u64 = r[1].parse().unwrap();
        assert_eq!(deg, if k.is_multiple_of(6) { 2 } else { 0 }, "k = {k}");
        let ratio = parse_rational(&r[3]).unwrap();
        assert_eq!(ratio, Rational::new(deg.into(), k.into()));
        if k >= 20 {
            assert!(ratio < tenth);
        }
    }
    let summary = text.lines().last().unwrap().strip_prefix("# summary: ").unwrap();
    let v: Value = serde_json::from_str(summary).unwrap();
    assert_eq!(v["stable_from"], 19);
}

#[test]
fn dependent_gate_reports_witness() {
    let o = nevgcd(&["indep", "--g", "z^2", "--g", "z^3", "--gate"]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["report"]["independent"], false);
    assert_eq!(v["report"]["witness"], serde_json::json!(["3", "-2"]));
    let o = nevgcd(&["indep", "--g", "z^2", "--g", "z^3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn sweep_rejection_carries_certificate() {
    let o = nevgcd(&["gcd-sweep", "--F", "x1-1", "--G", "x2-1", "--g", "z^2", "--g", "z^3", "--kmax", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["report"]["kind"], "dependent");
    assert_eq!(v["report"]["witness"], serde_json::json!(["3", "-2"]));
}

#[test]
fn basis_slice_report() {
    let o = nevgcd(&["basis", "--F1", "x0", "--F2", "x1", "--m", "2", "--order", "lex"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(v["report"]["constants"]["M"], "3");
    assert_eq!(v["report"]["basis_check"]["rank"], 3);
    assert_eq!(v["report"]["slice"]["B"].as_array().unwrap().len(), 3);
}

#[test]
fn local_checks() {
    let o = nevgcd(&["wronskian-check", "--eta", "z^2", "--eta", "z^3", "--place", "z"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!((v["report"]["lhs"].as_i64(), v["report"]["rhs"].as_i64()), (Some(4), Some(4)));
    let o = nevgcd(&["wronskian-check", "--eta", "z^3", "--eta", "1/z^3", "--place", "z"]);
    assert_eq!(o.status.code(), Some(1));
    let o = nevgcd(&[
        "bs-check", "--F", "x0", "--G", "x1", "--m", "2", "--g", "z", "--g", "z+1", "--place", "z",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["report"]["weights"], serde_json::json!([1, 0]));
}

#[test]
fn exp_slopes_table() {
    let o = nevgcd(&["exp-slopes", "--a", "1", "--b", "3/2", "--kmax", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| &r[3] == "1/3"));
    assert_eq!(&rows[3][1], "2");
    let rows = csv_rows(&stdout(&nevgcd(&["exp-slopes", "--a", "-1", "--b", "1+2*sqrt5", "--kmax", "2"])));
    assert_eq!(&rows[1][2], "2+4*sqrt5");
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(nevgcd(&["no-such-command"]).status.code(), Some(3));
    assert_eq!(nevgcd(&["basis", "--F1", "x0"]).status.code(), Some(3));
    assert_eq!(nevgcd(&["basis", "--F1", "x0 +", "--F2", "x1", "--m", "2"]).status.code(), Some(3));
    assert_eq!(nevgcd(&["suite", "--name", "nope"]).status.code(), Some(3));
    assert_eq!(nevgcd(&["--help"]).status.code(), Some(0));
}

#[test]
fn seeded_runs_are_byte_identical() {
    let a = nevgcd(&["--seed", "5", "suite", "--name", "fmt"]);
    let b = nevgcd(&["--seed", "5", "suite", "--name", "fmt"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 5);
    let c = nevgcd(&["--seed", "5", "--sequential", "suite", "--name", "fmt"]);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn output_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_nevgcd"))
        .args(["exp-slopes", "--a", "1", "--b", "2", "--kmax", "3"])
        .env("NEVGCD_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(dir.path().join("exp-slopes.csv")).unwrap();
    assert!(text.starts_with("# nevgcd exp-slopes seed=0\nk,ngcd_slope,maxT_slope,ratio\n1,1,2,1/2\n"));
}

#[test]
fn shipped_corpus_passes() {
    let dir = shipped_corpus();
    let o = nevgcd(&["corpus", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    let cases = v["report"]["cases"].as_array().unwrap();
    assert!(cases.len() >= 20);
    let names: Vec<&str> = cases.iter().map(|c| c["file"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn corrupted_case_fails_the_corpus() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(shipped_corpus().join("01_basis_linear.toml"), dir.path().join("a.toml")).unwrap();
    std::fs::write(
        dir.path().join("b_broken.toml"),
        "command = \"basis\"\nargs = [\"--F1\", \"x0*x1\", \"--F2\", \"x0\", \"--m\", \"2\"]\n",
    )
    .unwrap();
    let o = nevgcd(&["corpus", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["report"]["failures"], serde_json::json!(["b_broken.toml"]));
    assert!(String::from_utf8_lossy(&o.stderr).contains("b_broken.toml"));
}

#[test]
fn empty_corpus_passes_with_warning() {
    let dir = tempfile::tempdir().unwrap();
    let o = nevgcd(&["corpus", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    assert_eq!(json(&o)["report"]["cases"], serde_json::json!([]));
    assert_eq!(nevgcd(&["corpus", "/nonexistent/corpus"]).status.code(), Some(3));
}

#[test]
fn in_process_run_matches_binary() {
    let args = [
        "nevgcd",
        "--seed",
        "3",
        "exp-slopes",
        "--a",
        "sqrt3",
        "--b",
        "2*sqrt3",
        "--kmax",
        "3",
    ];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = nevgcd_cli::run(args, &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, nevgcd(&args[1..]).stdout);
}
