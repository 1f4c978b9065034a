//! The correction term `c([φ], a) = h_+(F) - h_-(F)`.
//!
//! Only homological rules are available, so evaluation either produces an
//! exact value or reports the first unit twist that no rule covers:
//!
//! - the empty word contributes 0;
//! - words expand by the cocycle rule `c(ψ∘φ, a) = c(φ, a) + c(ψ, φ_*(a))`,
//!   one unit twist at a time;
//! - a unit twist `T_C^{±1}` with `⟨a', [C]⟩ = 0` contributes 0;
//! - on the annulus and on the disk every contribution is 0.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::monodromy::TwistWord;
use crate::surface::{AbsClass, RelClass, SurfaceSpec};

/// A unit twist that escaped all rules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Undetermined {
    /// Index into the twist word, in application order.
    pub factor: usize,
    /// Which unit twist inside that factor's power.
    pub unit: usize,
    pub curve: AbsClass,
    /// The transported class `a'` the twist acts on.
    pub class: RelClass,
    pub pairing: i64,
}

impl Undetermined {
    /// Stable machine-readable reason.
    pub fn reason(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Undetermined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "nonzero-pairing: factor {} unit {} curve {} class {} pairing {}",
            self.factor, self.unit, self.curve, self.class, self.pairing
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CValue {
    Determined {
        value: i64,
    },
    Undetermined {
        reason: String,
        #[serde(flatten)]
        detail: Undetermined,
    },
}

impl CValue {
    pub fn value(&self) -> Option<i64> {
        match self {
            CValue::Determined { value } => Some(*value),
            CValue::Undetermined { .. } => None,
        }
    }

    pub fn is_determined(&self) -> bool {
        self.value().is_some()
    }

    /// Same status, and the same value when determined. Reasons are not
    /// compared: factor indices move when the monodromy word changes.
    pub fn same_status(&self, other: &CValue) -> bool {
        self.value() == other.value()
    }
}

pub fn c_eval(phi: &TwistWord, a: &RelClass, surface: &SurfaceSpec) -> Result<CValue> {
    phi.check_surface(surface)?;
    let mut current = surface.rel_class(a.coords().to_vec())?;
    let kind = surface.classify();
    if kind.is_disk || kind.is_annulus {
        return Ok(CValue::Determined { value: 0 });
    }
    for (index, factor) in phi.factors().iter().enumerate() {
        for (unit, twist) in factor.unit_twists().enumerate() {
            let pairing = surface.rel_abs_pairing(&current, twist.curve())?;
            if pairing != 0 {
                let detail = Undetermined {
                    factor: index,
                    unit,
                    curve: twist.curve().clone(),
                    class: current,
                    pairing,
                };
                return Ok(CValue::Undetermined {
                    reason: detail.reason(),
                    detail,
                });
            }
            // contributes 0 and fixes a'
            current = TwistWord::new(vec![twist]).act_rel(surface, &current)?;
        }
    }
    Ok(CValue::Determined { value: 0 })
}
