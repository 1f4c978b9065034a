//! Exact self-linking numbers of null-homologous closed braids in open
//! books `(S_{g,r}, φ)`, where `φ` is a word in Dehn twists.
//!
//! ```
//! use obsl::{binding_pushoff_word, self_linking, SurfaceSpec, TwistWord};
//!
//! let torus = SurfaceSpec::new(1, 1).unwrap();
//! let word = binding_pushoff_word(1, 2).unwrap();
//! let report = self_linking(&torus, &TwistWord::identity(), &word, None).unwrap();
//! assert_eq!(report.sl, Some(1));
//! ```

pub mod apps;
pub mod braid;
pub mod cfun;
pub mod error;
pub mod matrix;
pub mod monodromy;
pub mod seifert;
pub mod slcalc;
pub mod snf;
pub mod surface;

pub use apps::{
    annulus_sharpness, binding_twist_check, binding_twist_transform, johnson_twist_check, permutation_check,
    sqp_sharpness, surgery_transform, BindingTwistReport, JohnsonReport, PermutationReport, SharpnessReport, SqpReport,
    SurgeryReport,
};
pub use braid::{band_generator, binding_pushoff_word, parse_word, BraidWord, Generator, Letter, Permutation};
pub use cfun::{c_eval, CValue, Undetermined};
pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use monodromy::{compose, TwistFactor, TwistWord};
pub use seifert::{
    check_seifert_class, is_null_homologous, solve_integer_system, solve_seifert_class, IntegerSolution,
    SeifertSolution,
};
pub use slcalc::{
    be_check, bennequin_foliation, euler_char_from_foliation, self_linking, sl_from_foliation, BeCheck, BindingRecord,
    FoliationData, SlReport,
};
pub use snf::{smith_normal_form, SmithNormalForm};
pub use surface::{AbsClass, RelClass, SurfaceKind, SurfaceSpec};
