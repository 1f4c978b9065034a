use std::str::FromStr;

use clap::ValueEnum;
use obsl::{
    annulus_sharpness, be_check, bennequin_foliation, binding_twist_check, euler_char_from_foliation,
    johnson_twist_check, permutation_check, self_linking, solve_seifert_class, sqp_sharpness, surgery_transform,
    FoliationData, RelClass,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::problem::{Failure, Instance, Problem, EXIT_CONCLUSION_FAILS, EXIT_INPUT, EXIT_OK, EXIT_UNDETERMINED};

/// A finished run: exit code and the JSON report.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub exit: i32,
    pub output: Value,
}

impl Outcome {
    fn new(exit: i32, report: &impl Serialize) -> Self {
        Self {
            exit,
            output: serde_json::to_value(report).expect("reports serialize"),
        }
    }

    fn verdict(holds: bool, report: &impl Serialize) -> Self {
        Self::new(if holds { EXIT_OK } else { EXIT_CONCLUSION_FAILS }, report)
    }

    /// The record stored in corpus sidecars.
    pub fn record(result: &Result<Outcome, Failure>) -> Value {
        match result {
            Ok(o) => json!({ "exit": o.exit, "output": o.output }),
            Err(f) => json!({ "exit": f.exit, "output": { "error": f.message } }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Be,
    Sharpness,
    Permutation,
    Surgery,
    Johnson,
    BindingTwist,
}

/// What a problem file asks for when run from a corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Sl,
    Check(Check),
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        match parts.as_slice() {
            ["sl"] => Ok(Command::Sl),
            ["check", which] => Check::from_str(which, true).map(Command::Check),
            _ => Err(format!("unknown command `{s}`; expected `sl` or `check <which>`")),
        }
    }
}

pub fn run(problem: &Problem, command: Command, seifert: Option<&[i64]>) -> Result<Outcome, Failure> {
    match command {
        Command::Sl => sl(problem, seifert),
        Command::Check(which) => check(problem, which),
    }
}

/// The command named inside the file, `sl` when absent.
pub fn file_command(problem: &Problem) -> Result<Command, Failure> {
    match &problem.file.command {
        None => Ok(Command::Sl),
        Some(c) => c.parse().map_err(|e| problem.anchored("command", e)),
    }
}

pub fn sl(problem: &Problem, seifert: Option<&[i64]>) -> Result<Outcome, Failure> {
    let inst = problem.instance(seifert)?;
    let report = self_linking(&inst.surface, &inst.phi, &inst.word, inst.seifert_class.as_ref())?;
    let exit = if report.sl.is_some() {
        EXIT_OK
    } else {
        EXIT_UNDETERMINED
    };
    Ok(Outcome::new(exit, &report))
}

fn seifert_class(inst: &Instance) -> Result<RelClass, Failure> {
    match &inst.seifert_class {
        Some(a) => Ok(a.clone()),
        None => Ok(solve_seifert_class(&inst.phi, &inst.word, &inst.surface)?.particular),
    }
}

pub fn check(problem: &Problem, which: Check) -> Result<Outcome, Failure> {
    let inst = problem.instance(None)?;
    let extras = &problem.file.extras;
    let Instance { surface, phi, word, .. } = &inst;
    match which {
        Check::Be => {
            let report = self_linking(surface, phi, word, inst.seifert_class.as_ref())?;
            let Some(sl) = report.sl else {
                return Ok(Outcome::new(EXIT_UNDETERMINED, &json!({ "self_linking": report })));
            };
            let (chi, source) = match (&extras.foliation, extras.chi) {
                (Some(f), _) => (euler_char_from_foliation(&FoliationData::from(f)), "foliation"),
                (None, Some(chi)) => (chi, "given"),
                (None, None) => (
                    euler_char_from_foliation(&bennequin_foliation(surface, word)?),
                    "bennequin",
                ),
            };
            let be = be_check(sl, chi);
            let report = json!({
                "sl": sl,
                "chi": chi,
                "chi_source": source,
                "holds": be.holds,
                "deficiency": be.deficiency,
                "sharp": be.sharp,
                "self_linking": report,
            });
            Ok(Outcome::verdict(be.holds, &report))
        }
        Check::Sharpness => match &extras.bands {
            Some(bands) => {
                if !surface.classify().is_disk {
                    return Err(Failure::precondition(format!(
                        "band words live on the disk page, not {surface}"
                    )));
                }
                let report = sqp_sharpness(bands, word.strands())?;
                Ok(Outcome::verdict(report.sharp, &report))
            }
            None => {
                if !surface.classify().is_annulus {
                    return Err(Failure::precondition(format!(
                        "annulus sharpness needs the annulus page, not {surface}"
                    )));
                }
                let k = phi.abs_difference_map(surface)?[(0, 0)];
                let report = annulus_sharpness(k, word)?;
                Ok(Outcome::verdict(report.sharp == report.predicted_sharp, &report))
            }
        },
        Check::Permutation => {
            let tau = problem.permutation(problem.extra("permutation", &extras.permutation)?)?;
            let report = permutation_check(surface, phi, word, &tau, inst.seifert_class.as_ref())?;
            Ok(Outcome::verdict(report.equal, &report))
        }
        Check::Surgery => {
            let s = problem.extra("surgery", &extras.surgery)?;
            let curve = problem.abs_class("extras.surgery.curve", surface, &s.curve)?;
            let a = seifert_class(&inst)?;
            let report = surgery_transform(surface, phi, word, &a, &curve, s.sign)?;
            Ok(Outcome::verdict(report.preserved, &report))
        }
        Check::Johnson => {
            let psi = problem.twist_word("extras.psi", surface, problem.extra("psi", &extras.psi)?)?;
            let report = johnson_twist_check(surface, phi, word, &psi, inst.seifert_class.as_ref())?;
            Ok(Outcome::verdict(report.equal, &report))
        }
        Check::BindingTwist => {
            let f = FoliationData::from(problem.extra("foliation", &extras.foliation)?);
            let k = *problem.extra("twist", &extras.twist)?;
            let report = binding_twist_check(&f, &problem.file.braid.word, word.strands(), k)?;
            Ok(Outcome::verdict(report.preserved, &report))
        }
    }
}

/// `key: value` lines for the top level of a report.
pub fn render_text(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}\n"),
                other => format!("{k}: {other}\n"),
            })
            .collect(),
        other => format!("{other}\n"),
    }
}

/// Exit code for a problem that could not be read at all.
pub fn unreadable(message: String) -> Failure {
    Failure {
        exit: EXIT_INPUT,
        message,
    }
}
