//! Monodromies as words in Dehn twists, and their action on homology.
//!
//! A twist `T_C^e` acts on `H_1(S)` by the transvection
//! `x ↦ x - e (x·[C]) [C]` and on `H_1(S, ∂S)` by
//! `y ↦ y - e ⟨y,[C]⟩ ι([C])`. The absolute-valued difference
//! `a - φ_*(a)` is the crossed homomorphism built from
//! `δ(T_C^e, y) = e ⟨y,[C]⟩ [C]` and
//! `δ(ψ∘φ, a) = δ(φ, a) + δ(ψ, φ_*(a))`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::surface::{dot, AbsClass, RelClass, SurfaceSpec};

/// `T_C^power` for a simple closed curve `C` known by its homology class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TwistFactor {
    curve: AbsClass,
    power: i64,
}

impl TwistFactor {
    /// The curve class must be zero or primitive. Realisability by an
    /// embedded curve is not checked.
    pub fn new(curve: AbsClass, power: i64) -> Result<Self> {
        if power == 0 {
            return Err(Error::ZeroPower);
        }
        let g = curve.coords().iter().fold(0i64, |g, &c| gcd(g, c));
        if g > 1 {
            return Err(Error::NonPrimitiveCurve(curve.into_coords()));
        }
        Ok(Self { curve, power })
    }

    pub fn curve(&self) -> &AbsClass {
        &self.curve
    }

    pub fn power(&self) -> i64 {
        self.power
    }

    pub fn inverse(&self) -> Self {
        Self {
            curve: self.curve.clone(),
            power: -self.power,
        }
    }

    /// Splits `T_C^e` into `|e|` unit twists.
    pub fn unit_twists(&self) -> impl Iterator<Item = TwistFactor> + '_ {
        let unit = Self {
            curve: self.curve.clone(),
            power: self.power.signum(),
        };
        std::iter::repeat_n(unit, self.power.unsigned_abs() as usize)
    }

    fn act_abs(&self, s: &SurfaceSpec, x: &mut [i64]) -> Result<()> {
        let k = widen(self.power) * widen(s.abs_intersection_unchecked(x, self.curve.coords()));
        subtract_multiple(x, k, self.curve.coords())
    }

    fn act_rel(&self, s: &SurfaceSpec, y: &mut [i64]) -> Result<()> {
        let k = widen(self.power) * widen(dot(y, self.curve.coords()));
        subtract_multiple(y, k, &s.relative_unchecked(self.curve.coords()))
    }

    /// Matrix of `δ(T_C^e, ·)`: `e [C] [C]ᵀ`.
    fn difference_matrix(&self) -> IntMatrix {
        IntMatrix::outer(self.curve.coords(), self.curve.coords()).scale(self.power)
    }

    fn rel_matrix(&self, s: &SurfaceSpec) -> IntMatrix {
        let n = s.rank();
        let ic = s.relative_unchecked(self.curve.coords());
        IntMatrix::identity(n).sub(&IntMatrix::outer(&ic, self.curve.coords()).scale(self.power))
    }
}

/// `φ = T_m^{e_m} ∘ ⋯ ∘ T_1^{e_1}`. Factors are stored in application
/// order: `factors()[0]` is `T_1^{e_1}`, the rightmost, applied first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct TwistWord {
    factors: Vec<TwistFactor>,
}

impl TwistWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(factors: Vec<TwistFactor>) -> Self {
        Self { factors }
    }

    pub fn single(curve: AbsClass, power: i64) -> Result<Self> {
        Ok(Self {
            factors: vec![TwistFactor::new(curve, power)?],
        })
    }

    pub fn factors(&self) -> &[TwistFactor] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Checks every curve against the surface's homology rank.
    pub fn check_surface(&self, s: &SurfaceSpec) -> Result<()> {
        for f in &self.factors {
            if f.curve.len() != s.rank() {
                return Err(Error::DimensionMismatch {
                    expected: s.rank(),
                    got: f.curve.len(),
                });
            }
        }
        Ok(())
    }

    /// `φ^{-1}`: reversed order, negated powers.
    pub fn inverse(&self) -> Self {
        Self {
            factors: self.factors.iter().rev().map(TwistFactor::inverse).collect(),
        }
    }

    /// `φ_*` on `H_1(S)`.
    pub fn act_abs(&self, s: &SurfaceSpec, x: &AbsClass) -> Result<AbsClass> {
        self.check_surface(s)?;
        let mut v = s.abs_class(x.coords().to_vec())?.into_coords();
        for f in &self.factors {
            f.act_abs(s, &mut v)?;
        }
        s.abs_class(v)
    }

    /// `φ_*` on `H_1(S, ∂S)`.
    pub fn act_rel(&self, s: &SurfaceSpec, y: &RelClass) -> Result<RelClass> {
        self.check_surface(s)?;
        let mut v = s.rel_class(y.coords().to_vec())?.into_coords();
        for f in &self.factors {
            f.act_rel(s, &mut v)?;
        }
        s.rel_class(v)
    }

    /// Matrix of `φ_*` on `H_1(S, ∂S)`, the `R_φ` of the cocycle identity.
    pub fn rel_matrix(&self, s: &SurfaceSpec) -> Result<IntMatrix> {
        self.check_surface(s)?;
        self.factors.iter().try_fold(IntMatrix::identity(s.rank()), |r, f| {
            f.rel_matrix(s).checked_mul(&r).ok_or(Error::Overflow)
        })
    }

    /// Matrix of `φ_*` on `H_1(S)`.
    pub fn abs_matrix(&self, s: &SurfaceSpec) -> Result<IntMatrix> {
        self.check_surface(s)?;
        let n = s.rank();
        let mut m = IntMatrix::zeros(n, n);
        for j in 0..n {
            let mut col = vec![0; n];
            col[j] = 1;
            for f in &self.factors {
                f.act_abs(s, &mut col)?;
            }
            for (i, c) in col.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        Ok(m)
    }

    /// The matrix `D_φ` sending `a ∈ H_1(S, ∂S)` to the canonical
    /// absolute-valued lift of `a - φ_*(a)`.
    pub fn abs_difference_map(&self, s: &SurfaceSpec) -> Result<IntMatrix> {
        self.check_surface(s)?;
        let n = s.rank();
        let mut d = IntMatrix::zeros(n, n);
        let mut r = IntMatrix::identity(n);
        for f in &self.factors {
            let step = f.difference_matrix().checked_mul(&r).ok_or(Error::Overflow)?;
            d = d.checked_add(&step).ok_or(Error::Overflow)?;
            r = f.rel_matrix(s).checked_mul(&r).ok_or(Error::Overflow)?;
        }
        Ok(d)
    }
}

/// `outer ∘ inner`: `inner` is applied first.
pub fn compose(outer: &TwistWord, inner: &TwistWord) -> TwistWord {
    let mut factors = inner.factors.clone();
    factors.extend_from_slice(&outer.factors);
    TwistWord { factors }
}

fn widen(x: i64) -> i128 {
    i128::from(x)
}

/// `x -= k c`, failing instead of wrapping.
fn subtract_multiple(x: &mut [i64], k: i128, c: &[i64]) -> Result<()> {
    for (xi, &ci) in x.iter_mut().zip(c) {
        let v = k.checked_mul(widen(ci)).and_then(|t| widen(*xi).checked_sub(t));
        *xi = v.and_then(|v| i64::try_from(v).ok()).ok_or(Error::Overflow)?;
    }
    Ok(())
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
