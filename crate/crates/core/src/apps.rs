//! Checkers and transforms built on the self-linking formula: sharpness of
//! the Bennequin–Eliashberg bound, word permutations, Legendrian surgery,
//! twisting by separating curves, and twisting along a binding component.

use serde::Serialize;

use crate::braid::{band_generator, BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::monodromy::{compose, TwistFactor, TwistWord};
use crate::seifert::{check_seifert_class, solve_seifert_class};
use crate::slcalc::{be_check, euler_char_from_foliation, self_linking, sl_from_foliation, FoliationData, SlReport};
use crate::surface::{AbsClass, RelClass, SurfaceSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpnessReport {
    pub strands: usize,
    pub s: i64,
    pub k: i64,
    pub e_minus: i64,
    pub h_minus: i64,
    pub sl: i64,
    pub deficiency: i64,
    pub sharp: bool,
    /// `s = 0` or `s = k = 1`.
    pub predicted_sharp: bool,
}

/// Sharpness of `sl ≤ -χ` for a positive braid in the annulus open book
/// `(A, T^k)`, `k ≥ 0`, with the Seifert class `a = s[ρ']`.
pub fn annulus_sharpness(k: i64, word: &BraidWord) -> Result<SharpnessReport> {
    let surface = SurfaceSpec::annulus();
    word.check_surface(&surface)?;
    if k < 0 {
        return Err(Error::PreconditionFailed(format!(
            "twist power k = {k} must be nonnegative"
        )));
    }
    if !word.is_positive() {
        return Err(Error::PreconditionFailed("braid word must be positive".into()));
    }
    let rho_count = word.homology_class(&surface)?.coords()[0];
    let s = match rho_count {
        0 => 0,
        c if k != 0 && c % k == 0 => c / k,
        _ => return Err(Error::NotNullHomologous),
    };
    let phi = if k == 0 {
        TwistWord::identity()
    } else {
        TwistWord::single(surface.rho(1)?, k)?
    };
    let a = surface.rho_dual(1)?.scaled(s);
    let report = self_linking(&surface, &phi, word, Some(&a))?;
    let sl = report.sl.expect("c vanishes on the annulus");
    let (e_minus, h_minus) = (s, s * s * k);
    let deficiency = 2 * (h_minus - e_minus);
    Ok(SharpnessReport {
        strands: word.strands(),
        s,
        k,
        e_minus,
        h_minus,
        sl,
        deficiency,
        sharp: deficiency == 0,
        predicted_sharp: s == 0 || (s == 1 && k == 1),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SqpReport {
    pub strands: usize,
    pub bands: Vec<(usize, usize)>,
    pub word: BraidWord,
    /// `-n + l`.
    pub sl_formula: i64,
    /// Self-linking of the expanded word on the disk page.
    pub sl_word: i64,
    /// `n - l`: `n` disks joined by `l` bands.
    pub chi: i64,
    pub sharp: bool,
}

/// Strongly quasi-positive braid `σ_{i_1,j_1} ⋯ σ_{i_l,j_l}` on the disk page.
pub fn sqp_sharpness(bands: &[(usize, usize)], strands: usize) -> Result<SqpReport> {
    let mut word = BraidWord::trivial(strands)?;
    for &(i, j) in bands {
        word = word.concat(&band_generator(i, j, strands)?)?;
    }
    let disk = SurfaceSpec::disk();
    let l = bands.len() as i64;
    let n = strands as i64;
    let report = self_linking(&disk, &TwistWord::identity(), &word, None)?;
    let sl_word = report.sl.expect("c vanishes on the disk");
    let chi = n - l;
    Ok(SqpReport {
        strands,
        bands: bands.to_vec(),
        word,
        sl_formula: -n + l,
        sl_word,
        chi,
        sharp: be_check(sl_word, chi).sharp,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermutationReport {
    pub permuted_word: BraidWord,
    pub original: SlReport,
    pub permuted: SlReport,
    pub equal: bool,
}

/// Self-linking of `b` and of `b' = b_{τ(1)} ⋯ b_{τ(k)}` with the same
/// Seifert class. Only planar pages are accepted.
pub fn permutation_check(
    surface: &SurfaceSpec,
    phi: &TwistWord,
    word: &BraidWord,
    tau: &Permutation,
    seifert_class: Option<&RelClass>,
) -> Result<PermutationReport> {
    if !surface.is_planar() {
        return Err(Error::NonPlanarSurface(surface.genus()));
    }
    let permuted_word = word.permute(tau)?;
    let original = self_linking(surface, phi, word, seifert_class)?;
    let permuted = self_linking(surface, phi, &permuted_word, Some(&original.seifert_class))?;
    let equal = original.partial_sl == permuted.partial_sl && original.c_value == permuted.c_value;
    Ok(PermutationReport {
        permuted_word,
        original,
        permuted,
        equal,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryReport {
    pub monodromy_after: TwistWord,
    pub before: SlReport,
    pub after: SlReport,
    pub preserved: bool,
}

/// Contact `(±1)`-surgery along a Legendrian `L` on the page: the open book
/// becomes `(S, φ ∘ T_L^{∓1})`, the braid word and Seifert class stay.
pub fn surgery_transform(
    surface: &SurfaceSpec,
    phi: &TwistWord,
    word: &BraidWord,
    seifert_class: &RelClass,
    curve: &AbsClass,
    sign: i64,
) -> Result<SurgeryReport> {
    if sign != 1 && sign != -1 {
        return Err(Error::PreconditionFailed(format!(
            "surgery sign must be +1 or -1, got {sign}"
        )));
    }
    check_seifert_class(phi, word, surface, seifert_class)?;
    let pairing = surface.rel_abs_pairing(seifert_class, curve)?;
    if pairing != 0 {
        return Err(Error::NonzeroIntersection(pairing));
    }
    let twist = TwistWord::new(vec![TwistFactor::new(curve.clone(), -sign)?]);
    let monodromy_after = compose(phi, &twist);
    let before = self_linking(surface, phi, word, Some(seifert_class))?;
    let after = self_linking(surface, &monodromy_after, word, Some(seifert_class))?;
    let preserved = before.gen_exp == after.gen_exp
        && before.pairing_term == after.pairing_term
        && before.partial_sl == after.partial_sl
        && before.c_value.same_status(&after.c_value)
        && before.sl == after.sl;
    Ok(SurgeryReport {
        monodromy_after,
        before,
        after,
        preserved,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JohnsonReport {
    pub monodromy_after: TwistWord,
    pub before: SlReport,
    pub after: SlReport,
    pub equal: bool,
}

/// Replaces `φ` by `ψ ∘ φ` where `ψ` is a product of twists along
/// separating curves of `S_{g,1}`; same word, same Seifert class.
pub fn johnson_twist_check(
    surface: &SurfaceSpec,
    phi: &TwistWord,
    word: &BraidWord,
    psi: &TwistWord,
    seifert_class: Option<&RelClass>,
) -> Result<JohnsonReport> {
    if surface.boundary() != 1 {
        return Err(Error::PreconditionFailed(format!(
            "separating twists are recognised by homology only on connected-boundary pages, not {surface}"
        )));
    }
    psi.check_surface(surface)?;
    if let Some((index, f)) = psi.factors().iter().enumerate().find(|(_, f)| !f.curve().is_zero()) {
        return Err(Error::NonSeparatingFactor {
            index,
            curve: f.curve().coords().to_vec(),
        });
    }
    let a = match seifert_class {
        Some(a) => a.clone(),
        None => solve_seifert_class(phi, word, surface)?.particular,
    };
    let monodromy_after = compose(psi, phi);
    let before = self_linking(surface, phi, word, Some(&a))?;
    let after = self_linking(surface, &monodromy_after, word, Some(&a))?;
    let equal = before.partial_sl == after.partial_sl && before.c_value.same_status(&after.c_value);
    Ok(JohnsonReport {
        monodromy_after,
        before,
        after,
        equal,
    })
}

/// Foliation statistics after twisting `k` times along a binding component
/// `C` with `a_+ = Σ·C = n`: the `m = b_+ = b_-` pairs of b-arcs ending on
/// `C` each add one positive and one negative hyperbolic point. The result
/// does not depend on `k`; unwinding the a-arcs is an isotopy.
pub fn binding_twist_transform(f: &FoliationData, strands: usize, _k: i64) -> Result<FoliationData> {
    let rec = f
        .binding
        .ok_or_else(|| Error::PreconditionFailed("foliation data carries no binding record".into()))?;
    let n = strands as i64;
    if rec.a_plus as i64 != n {
        return Err(Error::PreconditionFailed(format!(
            "a_+ = {} differs from n = {n}",
            rec.a_plus
        )));
    }
    if rec.sigma_dot_c() != rec.a_plus as i64 {
        return Err(Error::PreconditionFailed(format!(
            "a_+ = {} differs from Sigma.C = {}",
            rec.a_plus,
            rec.sigma_dot_c()
        )));
    }
    let m = rec.b_plus;
    Ok(FoliationData {
        h_plus: f.h_plus + m,
        h_minus: f.h_minus + m,
        ..*f
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BindingTwistReport {
    /// `b · (τ_C)^k`, read right to left; `τ_C` is kept symbolic.
    pub word_after: String,
    pub k: i64,
    pub m: u64,
    pub before: FoliationData,
    pub after: FoliationData,
    pub sl_before: i64,
    pub sl_after: i64,
    pub chi_before: i64,
    pub chi_after: i64,
    pub preserved: bool,
}

pub fn binding_twist_check(f: &FoliationData, word: &str, strands: usize, k: i64) -> Result<BindingTwistReport> {
    let after = binding_twist_transform(f, strands, k)?;
    let m = after.h_plus - f.h_plus;
    let (sl_before, sl_after) = (sl_from_foliation(f), sl_from_foliation(&after));
    let (chi_before, chi_after) = (euler_char_from_foliation(f), euler_char_from_foliation(&after));
    let word_after = if word.trim().is_empty() {
        format!("(tau_C)^{k}")
    } else {
        format!("{} (tau_C)^{k}", word.trim())
    };
    Ok(BindingTwistReport {
        word_after,
        k,
        m,
        before: *f,
        after,
        sl_before,
        sl_after,
        chi_before,
        chi_after,
        preserved: sl_before == sl_after && chi_after == chi_before - 2 * m as i64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{binding_pushoff_word, parse_word};
    use crate::slcalc::BindingRecord;

    fn annulus_word(text: &str, n: usize) -> BraidWord {
        parse_word(text, n, &SurfaceSpec::annulus()).unwrap()
    }

    #[test]
    fn annulus_trivial_cases_are_sharp() {
        for k in 0..4 {
            let r = annulus_sharpness(k, &annulus_word("s1 s2 s1", 3)).unwrap();
            assert_eq!(r.s, 0);
            assert!(r.sharp && r.predicted_sharp);
        }
        let r = annulus_sharpness(1, &annulus_word("r1 s1", 2)).unwrap();
        assert_eq!((r.s, r.e_minus, r.h_minus), (1, 1, 1));
        assert!(r.sharp);
    }

    #[test]
    fn annulus_not_sharp() {
        let r = annulus_sharpness(2, &annulus_word("r1 r1 s1", 2)).unwrap();
        assert_eq!((r.s, r.deficiency, r.sharp), (1, 2, false));
        assert_eq!(r.sl, -2 + 3 - 2);
        assert!(!r.predicted_sharp);
    }

    #[test]
    fn annulus_preconditions() {
        assert_eq!(
            annulus_sharpness(2, &annulus_word("r1", 1)),
            Err(Error::NotNullHomologous)
        );
        assert_eq!(
            annulus_sharpness(0, &annulus_word("r1", 1)),
            Err(Error::NotNullHomologous)
        );
        assert!(matches!(
            annulus_sharpness(1, &annulus_word("r1^-1", 1)),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(matches!(
            annulus_sharpness(-1, &annulus_word("s1", 2)),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn sqp_examples() {
        let r = sqp_sharpness(&[(1, 2)], 2).unwrap();
        assert_eq!((r.sl_word, r.chi, r.sharp), (-1, 1, true));
        let r = sqp_sharpness(&[(1, 3), (1, 2), (2, 3)], 3).unwrap();
        assert_eq!((r.sl_word, r.sl_formula, r.chi, r.sharp), (0, 0, 0, true));
        let r = sqp_sharpness(&[], 4).unwrap();
        assert_eq!((r.sl_word, r.chi, r.sharp), (-4, 4, true));
        assert!(sqp_sharpness(&[(2, 2)], 3).is_err());
    }

    #[test]
    fn permutation_on_annulus() {
        let a = SurfaceSpec::annulus();
        let phi = TwistWord::single(a.rho(1).unwrap(), 2).unwrap();
        let w = annulus_word("r1 s1 r1^-1 s1^-1 r1^2 s1", 2);
        let len = w.expanded_len();
        let tau = Permutation::new((0..len).rev().collect()).unwrap();
        let r = permutation_check(&a, &phi, &w, &tau, None).unwrap();
        assert!(r.equal);
        assert_eq!(r.original.sl, r.permuted.sl);
        let r = permutation_check(&a, &phi, &w, &Permutation::identity(len), None).unwrap();
        assert!(r.equal);
    }

    #[test]
    fn permutation_refuses_genus() {
        let t = SurfaceSpec::new(1, 1).unwrap();
        let b = binding_pushoff_word(1, 1).unwrap();
        let tau = Permutation::from_one_based(&[1, 3, 2, 4]).unwrap();
        assert_eq!(
            permutation_check(&t, &TwistWord::identity(), &b, &tau, None).unwrap_err(),
            Error::NonPlanarSurface(1)
        );
        // the counterexample itself, computed directly
        let id = TwistWord::identity();
        let sl_b = self_linking(&t, &id, &b, None).unwrap().sl;
        let sl_p = self_linking(&t, &id, &b.permute(&tau).unwrap(), None).unwrap().sl;
        assert_eq!((sl_b, sl_p), (Some(1), Some(-1)));
    }

    #[test]
    fn surgery_examples() {
        let t = SurfaceSpec::new(1, 1).unwrap();
        let b = binding_pushoff_word(1, 1).unwrap();
        let r = surgery_transform(&t, &TwistWord::identity(), &b, &t.zero_rel(), &t.rho(1).unwrap(), 1).unwrap();
        assert!(r.preserved);
        assert_eq!(r.monodromy_after.factors()[0].power(), -1);

        let a = SurfaceSpec::annulus();
        let w = annulus_word("s1 s1", 2);
        let phi = TwistWord::single(a.rho(1).unwrap(), 3).unwrap();
        let r = surgery_transform(&a, &phi, &w, &a.zero_rel(), &a.rho(1).unwrap(), -1).unwrap();
        assert!(r.preserved);
        // φ ∘ T_L: T_L is applied first
        assert_eq!(r.monodromy_after.factors()[0].power(), 1);
        assert_eq!(r.monodromy_after.factors()[1].power(), 3);

        let w = annulus_word("r1^3", 1);
        let a1 = a.rho_dual(1).unwrap();
        assert_eq!(
            surgery_transform(&a, &phi, &w, &a1, &a.rho(1).unwrap(), 1).unwrap_err(),
            Error::NonzeroIntersection(1)
        );
        assert_eq!(
            surgery_transform(&a, &phi, &w, &a.zero_rel(), &a.rho(1).unwrap(), 1).unwrap_err(),
            Error::InvalidSeifertClass
        );
    }

    #[test]
    fn johnson_examples() {
        let s = SurfaceSpec::new(2, 1).unwrap();
        let phi = TwistWord::single(s.rho(1).unwrap(), 2).unwrap();
        let b = parse_word("r1^2 s1", 2, &s).unwrap();
        let psi = TwistWord::single(s.zero_abs(), 1).unwrap();
        let r = johnson_twist_check(&s, &phi, &b, &psi, None).unwrap();
        assert!(r.equal);
        let r = johnson_twist_check(&s, &phi, &b, &TwistWord::identity(), None).unwrap();
        assert!(r.equal);
        let bad = TwistWord::single(s.rho(1).unwrap(), 1).unwrap();
        assert!(matches!(
            johnson_twist_check(&s, &phi, &b, &bad, None),
            Err(Error::NonSeparatingFactor { index: 0, .. })
        ));
    }

    #[test]
    fn binding_twist_examples() {
        let f = FoliationData::new(3, 1, 2, 1).with_binding(BindingRecord {
            a_plus: 2,
            b_plus: 1,
            b_minus: 1,
        });
        let g = binding_twist_transform(&f, 2, 5).unwrap();
        assert_eq!((g.e_plus, g.e_minus, g.h_plus, g.h_minus), (3, 1, 3, 2));
        assert_eq!(sl_from_foliation(&g), sl_from_foliation(&f));

        let f0 = FoliationData::new(2, 0, 1, 0).with_binding(BindingRecord {
            a_plus: 2,
            b_plus: 0,
            b_minus: 0,
        });
        assert_eq!(binding_twist_transform(&f0, 2, -3).unwrap(), f0);

        let bad = FoliationData::new(3, 1, 2, 1).with_binding(BindingRecord {
            a_plus: 2,
            b_plus: 2,
            b_minus: 1,
        });
        assert!(matches!(
            binding_twist_transform(&bad, 2, 1),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(matches!(
            binding_twist_transform(&f, 3, 1),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(binding_twist_transform(&FoliationData::new(1, 0, 0, 0), 1, 1).is_err());

        let r = binding_twist_check(&f, "s1", 2, 1).unwrap();
        assert!(r.preserved);
        assert_eq!(r.chi_after, r.chi_before - 2);
        assert_eq!(r.word_after, "s1 (tau_C)^1");
    }
}
