//! Directory runner: every `*.toml` file is one case, run in filename order.
//!
//! ```toml
//! command = "basis"
//! args = ["--F1", "x0", "--F2", "x1", "--m", "2"]
//! expect = 0        # exit status, default 0
//! seed = 7          # optional, overrides the corpus seed
//! ```

use std::path::{Path, PathBuf};

use clap::Parser;
use serde::{Deserialize, Serialize};

use nevgcd::par;

use crate::{execute, json, write_report, Cli, Command, Context, Outcome, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CaseFile {
    command: String,
    #[serde(default)]
    args: Vec<String>,
    #[serde(default)]
    expect: i32,
    seed: Option<u64>,
    #[serde(default)]
    description: String,
}

#[derive(Debug, Serialize)]
struct CaseResult {
    file: String,
    command: String,
    description: String,
    expected: i32,
    exit: i32,
    pass: bool,
    /// First diagnostic when the exit status differs from the expectation.
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Debug, Serialize)]
struct CorpusReport {
    dir: String,
    cases: Vec<CaseResult>,
    failures: Vec<String>,
}

fn case_files(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "toml"))
        .collect();
    files.sort();
    Ok(files)
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn run_case(path: &Path, ctx: &Context) -> (CaseResult, Option<crate::Report>) {
    let file = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let fail = |command: String, description: String, expected: i32, exit: i32, detail: String| CaseResult {
        file: file.clone(),
        command,
        description,
        expected,
        exit,
        pass: false,
        detail: Some(detail),
    };
    let case: CaseFile = match std::fs::read_to_string(path)
        .map_err(|e| e.to_string())
        .and_then(|s| toml::from_str(&s).map_err(|e| e.to_string()))
    {
        Ok(c) => c,
        Err(e) => return (fail(String::new(), String::new(), EXIT_PASS, EXIT_USAGE, e), None),
    };
    let seed = case.seed.unwrap_or(ctx.seed).to_string();
    let argv = ["nevgcd", "--seed", &seed, &case.command]
        .into_iter()
        .map(String::from)
        .chain(case.args.iter().cloned());
    let outcome = match Cli::try_parse_from(argv) {
        Ok(Cli {
            command: Command::Corpus { .. },
            ..
        }) => Outcome::usage("corpus cases cannot nest".into()),
        Ok(cli) => {
            let inner = Context {
                seed: cli.seed,
                exec: ctx.exec,
                out_dir: None,
            };
            execute(&cli.command, &inner)
        }
        Err(e) => Outcome::usage(e.render().to_string().lines().next().unwrap_or_default().to_string()),
    };
    let pass = outcome.code == case.expect;
    let result = CaseResult {
        file: file.clone(),
        command: case.command,
        description: case.description,
        expected: case.expect,
        exit: outcome.code,
        pass,
        detail: if pass {
            None
        } else {
            Some(
                outcome
                    .notes
                    .first()
                    .cloned()
                    .unwrap_or_else(|| format!("exit {} (expected {})", outcome.code, case.expect)),
            )
        },
    };
    (result, outcome.report)
}

pub(crate) fn run_corpus(dir: &Path, ctx: &Context) -> Outcome {
    let files = match case_files(dir) {
        Ok(f) => f,
        Err(e) => return Outcome::usage(format!("error: cannot read corpus directory {}: {e}", dir.display())),
    };
    let mut notes = Vec::new();
    if files.is_empty() {
        notes.push(format!("warning: no *.toml cases in {}", dir.display()));
    }
    let results = par::map(ctx.exec, files.clone(), |p| run_case(&p, ctx));
    let mut cases = Vec::with_capacity(results.len());
    for (path, (res, rep)) in files.iter().zip(results) {
        if let (Some(out), Some(rep)) = (&ctx.out_dir, rep) {
            if let Err(e) = write_report(out, &stem(path), &rep) {
                notes.push(format!("error: {e}"));
            }
        }
        if !res.pass {
            notes.push(format!("FAIL {}: {}", res.file, res.detail.as_deref().unwrap_or("")));
        }
        cases.push(res);
    }
    let failures: Vec<String> = cases.iter().filter(|c| !c.pass).map(|c| c.file.clone()).collect();
    let pass = failures.is_empty();
    let report = CorpusReport {
        dir: dir.display().to_string(),
        cases,
        failures,
    };
    Outcome {
        code: if pass { EXIT_PASS } else { EXIT_FAIL },
        report: Some(json("corpus", ctx.seed, pass, &report)),
        notes,
    }
}
