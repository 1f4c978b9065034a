//! Self-linking numbers of closed braids in open books.
//!
//! `sl(b̂, [Σ_a]) = -n + êxp(b) - φ_*(a)·[b] + c([φ], a)`.
//!
//! The first three terms are always exact; when `c` is undetermined the
//! report still carries them as `partial_sl`.

use serde::Serialize;

use crate::braid::{BraidWord, Generator};
use crate::cfun::{c_eval, CValue};
use crate::error::{Error, Result};
use crate::monodromy::TwistWord;
use crate::seifert::{check_seifert_class, solve_integer_system};
use crate::surface::{RelClass, SurfaceSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlReport {
    pub strands: usize,
    pub exp_sum: i64,
    pub gen_exp: i64,
    /// `φ_*(a) · [b]`.
    pub pairing_term: i64,
    pub c_value: CValue,
    /// Present iff `c_value` is determined.
    pub sl: Option<i64>,
    /// `-n + êxp(b) - φ_*(a)·[b]`.
    pub partial_sl: i64,
    pub seifert_class: RelClass,
    /// Rank of the lattice of admissible Seifert classes (0: `a` unique).
    pub kernel_rank: usize,
    pub kernel_basis: Vec<RelClass>,
}

pub fn self_linking(
    surface: &SurfaceSpec,
    phi: &TwistWord,
    word: &BraidWord,
    seifert_class: Option<&RelClass>,
) -> Result<SlReport> {
    phi.check_surface(surface)?;
    word.check_surface(surface)?;
    let d = phi.abs_difference_map(surface)?;
    let b = word.homology_class(surface)?;
    let (particular, kernel) = solve_integer_system(&d, b.coords())?.ok_or(Error::NotNullHomologous)?;
    let a = match seifert_class {
        Some(a) => {
            check_seifert_class(phi, word, surface, a)?;
            a.clone()
        }
        None => surface.rel_class(particular)?,
    };

    let gen_exp = word.gen_exp_sum(surface)?;
    let pushed = phi.act_rel(surface, &a)?;
    let pairing_term = surface.rel_abs_pairing(&pushed, &b)?;
    let partial_sl = -(word.strands() as i64) + gen_exp - pairing_term;
    let c_value = c_eval(phi, &a, surface)?;
    let sl = c_value.value().map(|c| partial_sl + c);

    Ok(SlReport {
        strands: word.strands(),
        exp_sum: word.exp_sum(),
        gen_exp,
        pairing_term,
        c_value,
        sl,
        partial_sl,
        seifert_class: a,
        kernel_rank: kernel.len(),
        kernel_basis: kernel
            .into_iter()
            .map(|k| surface.rel_class(k))
            .collect::<Result<_>>()?,
    })
}

/// Per-binding-component counts on a binding circle `C`: positive elliptic
/// endpoints of a-arcs, and `±` elliptic endpoints of b-arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BindingRecord {
    pub a_plus: u64,
    pub b_plus: u64,
    pub b_minus: u64,
}

impl BindingRecord {
    /// `Σ · C = a_+ + b_+ - b_-`.
    pub fn sigma_dot_c(&self) -> i64 {
        self.a_plus as i64 + self.b_plus as i64 - self.b_minus as i64
    }
}

/// Signed singularity counts of an open book foliation on a Seifert surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FoliationData {
    pub e_plus: u64,
    pub e_minus: u64,
    pub h_plus: u64,
    pub h_minus: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub binding: Option<BindingRecord>,
}

impl FoliationData {
    pub fn new(e_plus: u64, e_minus: u64, h_plus: u64, h_minus: u64) -> Self {
        Self {
            e_plus,
            e_minus,
            h_plus,
            h_minus,
            binding: None,
        }
    }

    pub fn with_binding(self, binding: BindingRecord) -> Self {
        Self {
            binding: Some(binding),
            ..self
        }
    }
}

/// `-(e_+ - e_-) + (h_+ - h_-)`.
pub fn sl_from_foliation(f: &FoliationData) -> i64 {
    -(f.e_plus as i64 - f.e_minus as i64) + (f.h_plus as i64 - f.h_minus as i64)
}

/// `χ = (e_+ + e_-) - (h_+ + h_-)`.
pub fn euler_char_from_foliation(f: &FoliationData) -> i64 {
    (f.e_plus + f.e_minus) as i64 - (f.h_plus + f.h_minus) as i64
}

/// Foliation of the Bennequin surface of a σ-only word on the disk page:
/// one positive elliptic point per disk, one hyperbolic point per band,
/// signed by the letter.
pub fn bennequin_foliation(surface: &SurfaceSpec, word: &BraidWord) -> Result<FoliationData> {
    if !surface.classify().is_disk {
        return Err(Error::PreconditionFailed(format!(
            "Bennequin surfaces live on the disk page, not {surface}"
        )));
    }
    if word.has_rho() {
        return Err(Error::PreconditionFailed(
            "Bennequin surfaces need a sigma-only word".into(),
        ));
    }
    let (mut pos, mut neg) = (0u64, 0u64);
    for l in word.expanded() {
        debug_assert!(matches!(l.generator, Generator::Sigma(_)));
        if l.exponent > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    Ok(FoliationData::new(word.strands() as u64, 0, pos, neg))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BeCheck {
    pub holds: bool,
    /// `-χ - sl`; nonnegative iff the inequality holds.
    pub deficiency: i64,
    pub sharp: bool,
}

/// Bennequin–Eliashberg inequality `sl ≤ -χ`.
pub fn be_check(sl: i64, chi: i64) -> BeCheck {
    let deficiency = -chi - sl;
    BeCheck {
        holds: deficiency >= 0,
        deficiency,
        sharp: deficiency == 0,
    }
}
