//! Replays a directory of problem files against `<stem>.expected.json`
//! sidecars holding `{"exit": …, "output": …}`.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use similar::TextDiff;

use crate::problem::Problem;
use crate::run::{file_command, run, Outcome};

const SIDECAR: &str = ".expected.json";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    MissingSidecar,
    Mismatch { diff: String },
    Blessed,
}

#[derive(Debug, Clone)]
pub struct CaseResult {
    pub name: String,
    pub verdict: Verdict,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Pass | Verdict::Blessed)
    }
}

/// Problem files in `dir`, sorted by file name.
pub fn problem_files(dir: &Path) -> io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<io::Result<_>>()?;
    files.retain(|p| {
        let name = p.file_name().and_then(|n| n.to_str()).unwrap_or("");
        p.is_file() && name.ends_with(".json") && !name.ends_with(SIDECAR)
    });
    files.sort();
    Ok(files)
}

fn sidecar_path(problem: &Path) -> PathBuf {
    let stem = problem.file_stem().and_then(|s| s.to_str()).unwrap_or("");
    problem.with_file_name(format!("{stem}{SIDECAR}"))
}

/// The pretty-printed record for one problem file. Messages name the file
/// by its base name so records do not depend on where the corpus lives.
pub fn evaluate(path: &Path) -> String {
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("").to_string();
    let result = fs::read_to_string(path)
        .map_err(|e| crate::run::unreadable(format!("{name}: {e}")))
        .and_then(|text| Problem::parse(&name, &text))
        .and_then(|p| run(&p, file_command(&p)?, None));
    serde_json::to_string_pretty(&Outcome::record(&result)).expect("records serialize") + "\n"
}

fn run_case(path: &Path, bless: bool) -> CaseResult {
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("").to_string();
    let actual = evaluate(path);
    let sidecar = sidecar_path(path);
    if bless {
        let verdict = match fs::write(&sidecar, &actual) {
            Ok(()) => Verdict::Blessed,
            Err(e) => Verdict::Mismatch {
                diff: format!("cannot write {}: {e}\n", sidecar.display()),
            },
        };
        return CaseResult { name, verdict };
    }
    let verdict = match fs::read_to_string(&sidecar) {
        Err(_) => Verdict::MissingSidecar,
        Ok(expected) if expected == actual => Verdict::Pass,
        Ok(expected) => Verdict::Mismatch {
            diff: TextDiff::from_lines(&expected, &actual)
                .unified_diff()
                .header("expected", "actual")
                .to_string(),
        },
    };
    CaseResult { name, verdict }
}

/// Runs every case; results come back in file-name order either way.
pub fn run_corpus(dir: &Path, parallel: bool, bless: bool) -> io::Result<Vec<CaseResult>> {
    let files = problem_files(dir)?;
    Ok(if parallel {
        files.par_iter().map(|p| run_case(p, bless)).collect()
    } else {
        files.iter().map(|p| run_case(p, bless)).collect()
    })
}

pub fn summary(results: &[CaseResult]) -> String {
    let mut out = String::new();
    for r in results {
        match &r.verdict {
            Verdict::Pass => out.push_str(&format!("PASS  {}\n", r.name)),
            Verdict::Blessed => out.push_str(&format!("BLESS {}\n", r.name)),
            Verdict::MissingSidecar => out.push_str(&format!("FAIL  {} (missing sidecar)\n", r.name)),
            Verdict::Mismatch { diff } => {
                out.push_str(&format!("FAIL  {} (output differs)\n", r.name));
                out.push_str(diff);
            }
        }
    }
    let passed = results.iter().filter(|r| r.passed()).count();
    out.push_str(&format!(
        "{} cases: {passed} passed, {} failed\n",
        results.len(),
        results.len() - passed
    ));
    out
}
