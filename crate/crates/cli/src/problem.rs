//! Problem files: JSON input, validated into library types with errors
//! anchored to the line of the offending field.

use std::fmt;

use obsl::{
    parse_word, AbsClass, BindingRecord, BraidWord, Error, FoliationData, Permutation, RelClass, SurfaceSpec,
    TwistFactor, TwistWord,
};
use serde::Deserialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONCLUSION_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNDETERMINED: i32 = 3;
pub const EXIT_NOT_NULL_HOMOLOGOUS: i32 = 4;
pub const EXIT_PRECONDITION: i32 = 5;

/// A run that stopped before producing a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub exit: i32,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            exit: EXIT_INPUT,
            message: message.into(),
        }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        Self {
            exit: EXIT_PRECONDITION,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self {
            exit: exit_code(&e),
            message: e.to_string(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotNullHomologous => EXIT_NOT_NULL_HOMOLOGOUS,
        Error::InvalidSeifertClass
        | Error::ZeroGenus
        | Error::NonPlanarSurface(_)
        | Error::NonzeroIntersection(_)
        | Error::NonSeparatingFactor { .. }
        | Error::PreconditionFailed(_) => EXIT_PRECONDITION,
        _ => EXIT_INPUT,
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    /// Used by the corpus runner: `"sl"` (default) or `"check <which>"`.
    #[serde(default)]
    pub command: Option<String>,
    pub surface: SurfaceInput,
    #[serde(default)]
    pub monodromy: Vec<FactorInput>,
    pub braid: BraidInput,
    #[serde(default)]
    pub seifert_class: Option<Vec<i64>>,
    #[serde(default)]
    pub extras: Extras,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceInput {
    pub genus: u32,
    pub boundary: u32,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorInput {
    pub curve: Vec<i64>,
    pub power: i64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidInput {
    pub strands: usize,
    pub word: String,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Extras {
    /// One-based images of the expanded letter positions.
    pub permutation: Option<Vec<usize>>,
    pub surgery: Option<SurgeryInput>,
    pub psi: Option<Vec<FactorInput>>,
    pub foliation: Option<FoliationInput>,
    pub chi: Option<i64>,
    /// Binding twist power.
    pub twist: Option<i64>,
    /// Band generators `σ_{i,j}` of a strongly quasi-positive word.
    pub bands: Option<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurgeryInput {
    pub curve: Vec<i64>,
    pub sign: i64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FoliationInput {
    pub e_plus: u64,
    pub e_minus: u64,
    pub h_plus: u64,
    pub h_minus: u64,
    #[serde(default)]
    pub binding: Option<BindingInput>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BindingInput {
    pub a_plus: u64,
    pub b_plus: u64,
    pub b_minus: u64,
}

impl From<&FoliationInput> for FoliationData {
    fn from(f: &FoliationInput) -> Self {
        let data = FoliationData::new(f.e_plus, f.e_minus, f.h_plus, f.h_minus);
        match &f.binding {
            Some(b) => data.with_binding(BindingRecord {
                a_plus: b.a_plus,
                b_plus: b.b_plus,
                b_minus: b.b_minus,
            }),
            None => data,
        }
    }
}

/// A parsed file together with its source, for line anchors.
pub struct Problem {
    pub origin: String,
    pub text: String,
    pub file: ProblemFile,
}

/// The validated core of a problem: page, monodromy, braid, class.
pub struct Instance {
    pub surface: SurfaceSpec,
    pub phi: TwistWord,
    pub word: BraidWord,
    pub seifert_class: Option<RelClass>,
}

impl Problem {
    pub fn parse(origin: &str, text: &str) -> Result<Self, Failure> {
        let file: ProblemFile = serde_json::from_str(text).map_err(|e| {
            let msg = e.to_string();
            let msg = msg.rsplit_once(" at line ").map_or(msg.as_str(), |(m, _)| m);
            Failure::input(format!("{origin}:{}:{}: {msg}", e.line(), e.column()))
        })?;
        Ok(Self {
            origin: origin.to_string(),
            text: text.to_string(),
            file,
        })
    }

    pub fn read(path: &std::path::Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        Self::parse(&path.display().to_string(), &text)
    }

    /// `origin:line: field: message`, with the line of the first occurrence
    /// of `"field"` in the source.
    pub fn anchored(&self, field: &str, err: impl fmt::Display) -> Failure {
        let needle = format!("\"{}\"", field.rsplit('.').next().unwrap_or(field));
        let line = self.text.lines().position(|l| l.contains(&needle)).map_or(1, |i| i + 1);
        Failure::input(format!("{}:{line}: {field}: {err}", self.origin))
    }

    fn lift<T>(&self, field: &str, r: obsl::Result<T>) -> Result<T, Failure> {
        r.map_err(|e| match exit_code(&e) {
            EXIT_INPUT => self.anchored(field, &e),
            _ => Failure::from(e),
        })
    }

    pub fn instance(&self, seifert_override: Option<&[i64]>) -> Result<Instance, Failure> {
        let f = &self.file;
        let surface = self.lift("surface", SurfaceSpec::new(f.surface.genus, f.surface.boundary))?;
        let phi = self.twist_word("monodromy", &surface, &f.monodromy)?;
        let word = self.lift("braid.word", parse_word(&f.braid.word, f.braid.strands, &surface))?;
        let seifert_class = match seifert_override.or(f.seifert_class.as_deref()) {
            Some(v) => Some(self.lift("seifert_class", surface.rel_class(v.to_vec()))?),
            None => None,
        };
        Ok(Instance {
            surface,
            phi,
            word,
            seifert_class,
        })
    }

    pub fn twist_word(&self, field: &str, s: &SurfaceSpec, factors: &[FactorInput]) -> Result<TwistWord, Failure> {
        let factors = factors
            .iter()
            .map(|f| TwistFactor::new(s.abs_class(f.curve.clone())?, f.power))
            .collect::<obsl::Result<Vec<_>>>();
        Ok(TwistWord::new(self.lift(field, factors)?))
    }

    pub fn abs_class(&self, field: &str, s: &SurfaceSpec, v: &[i64]) -> Result<AbsClass, Failure> {
        self.lift(field, s.abs_class(v.to_vec()))
    }

    pub fn permutation(&self, images: &[usize]) -> Result<Permutation, Failure> {
        self.lift("extras.permutation", Permutation::from_one_based(images))
    }

    pub fn extra<'a, T>(&self, name: &str, v: &'a Option<T>) -> Result<&'a T, Failure> {
        v.as_ref()
            .ok_or_else(|| Failure::input(format!("{}: extras.{name} is required for this check", self.origin)))
    }
}
