//! The page surface `S_{g,r}` and its first homology.
//!
//! `H_1(S)` carries the basis `[ρ_1], …, [ρ_{2g+r-1}]`: the first `r - 1`
//! loops run parallel to boundary components, the remaining `2g` come in
//! symplectic pairs `(ρ_{r+2t}, ρ_{r+2t+1})`, `t = 0..g`. `H_1(S, ∂S)` carries
//! the dual basis `[ρ'_i]` with `⟨ρ'_i, ρ_j⟩ = δ_ij`.
//!
//! Orientation convention: `[ρ_{r+2t}] · [ρ_{r+2t+1}] = -1`. Boundary loops
//! pair to zero with everything.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SurfaceSpec {
    genus: u32,
    boundary: u32,
}

/// Which of the special page types a surface is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceKind {
    pub is_disk: bool,
    pub is_annulus: bool,
    pub is_planar: bool,
}

impl SurfaceSpec {
    pub fn new(genus: u32, boundary: u32) -> Result<Self> {
        if boundary == 0 {
            return Err(Error::NoBoundary);
        }
        Ok(Self { genus, boundary })
    }

    pub fn disk() -> Self {
        Self { genus: 0, boundary: 1 }
    }

    pub fn annulus() -> Self {
        Self { genus: 0, boundary: 2 }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundary(&self) -> u32 {
        self.boundary
    }

    /// Rank of `H_1(S; ℤ)`, i.e. `2g + r - 1`.
    pub fn rank(&self) -> usize {
        2 * self.genus as usize + self.boundary as usize - 1
    }

    /// Euler characteristic `2 - 2g - r`.
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary as i64
    }

    pub fn classify(&self) -> SurfaceKind {
        SurfaceKind {
            is_disk: self.genus == 0 && self.boundary == 1,
            is_annulus: self.genus == 0 && self.boundary == 2,
            is_planar: self.genus == 0,
        }
    }

    pub fn is_planar(&self) -> bool {
        self.genus == 0
    }

    /// Zero-based index of the first basis loop of the genus block.
    fn genus_offset(&self) -> usize {
        self.boundary as usize - 1
    }

    /// The alternating intersection matrix `J` with `x · y = xᵀ J y`.
    pub fn intersection_matrix(&self) -> IntMatrix {
        let n = self.rank();
        let mut j = IntMatrix::zeros(n, n);
        let off = self.genus_offset();
        for t in 0..self.genus as usize {
            let (p, q) = (off + 2 * t, off + 2 * t + 1);
            j[(p, q)] = -1;
            j[(q, p)] = 1;
        }
        j
    }

    /// Matrix of `ι: H_1(S) → H_1(S, ∂S)`; column `j` is `ι([ρ_j])`.
    pub fn to_relative_matrix(&self) -> IntMatrix {
        self.intersection_matrix().transpose()
    }

    fn check(&self, got: usize) -> Result<()> {
        if got != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got,
            });
        }
        Ok(())
    }

    pub fn zero_abs(&self) -> AbsClass {
        AbsClass(vec![0; self.rank()])
    }

    pub fn zero_rel(&self) -> RelClass {
        RelClass(vec![0; self.rank()])
    }

    /// `[ρ_j]`, one-based as in the generator names.
    pub fn rho(&self, j: usize) -> Result<AbsClass> {
        self.unit(j).map(AbsClass)
    }

    /// `[ρ'_j]`, one-based.
    pub fn rho_dual(&self, j: usize) -> Result<RelClass> {
        self.unit(j).map(RelClass)
    }

    fn unit(&self, j: usize) -> Result<Vec<i64>> {
        if j == 0 || j > self.rank() {
            return Err(Error::IndexOutOfRange {
                token: format!("rho{j}"),
                reason: format!("basis index must lie in 1..={}", self.rank()),
            });
        }
        let mut v = vec![0; self.rank()];
        v[j - 1] = 1;
        Ok(v)
    }

    pub fn abs_class(&self, coords: Vec<i64>) -> Result<AbsClass> {
        self.check(coords.len())?;
        Ok(AbsClass(coords))
    }

    pub fn rel_class(&self, coords: Vec<i64>) -> Result<RelClass> {
        self.check(coords.len())?;
        Ok(RelClass(coords))
    }

    /// Algebraic intersection `x · y` on `H_1(S)`.
    pub fn abs_intersection(&self, x: &AbsClass, y: &AbsClass) -> Result<i64> {
        self.check(x.len())?;
        self.check(y.len())?;
        Ok(self.abs_intersection_unchecked(&x.0, &y.0))
    }

    pub(crate) fn abs_intersection_unchecked(&self, x: &[i64], y: &[i64]) -> i64 {
        let off = self.genus_offset();
        (0..self.genus as usize)
            .map(|t| {
                let (p, q) = (off + 2 * t, off + 2 * t + 1);
                x[q] * y[p] - x[p] * y[q]
            })
            .sum()
    }

    /// The perfect pairing `H_1(S, ∂S) × H_1(S) → ℤ`.
    pub fn rel_abs_pairing(&self, y: &RelClass, x: &AbsClass) -> Result<i64> {
        self.check(y.len())?;
        self.check(x.len())?;
        Ok(dot(&y.0, &x.0))
    }

    /// The natural map `H_1(S) → H_1(S, ∂S)`, characterised by
    /// `⟨ι(x), y⟩ = x · y`.
    pub fn to_relative(&self, x: &AbsClass) -> Result<RelClass> {
        self.check(x.len())?;
        Ok(RelClass(self.relative_unchecked(&x.0)))
    }

    pub(crate) fn relative_unchecked(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; x.len()];
        let off = self.genus_offset();
        for t in 0..self.genus as usize {
            let (p, q) = (off + 2 * t, off + 2 * t + 1);
            // ⟨ι x, e_p⟩ = x · e_p = x_q, ⟨ι x, e_q⟩ = x · e_q = -x_p
            out[p] = x[q];
            out[q] = -x[p];
        }
        out
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{{{},{}}}", self.genus, self.boundary)
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

macro_rules! class_newtype {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
        #[serde(transparent)]
        pub struct $name(pub(crate) Vec<i64>);

        impl $name {
            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn into_coords(self) -> Vec<i64> {
                self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            pub fn scaled(&self, k: i64) -> Self {
                Self(self.0.iter().map(|c| c * k).collect())
            }

            pub fn plus(&self, other: &Self) -> Self {
                assert_eq!(self.len(), other.len(), "class dimension mismatch");
                Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
            }

            pub fn minus(&self, other: &Self) -> Self {
                assert_eq!(self.len(), other.len(), "class dimension mismatch");
                Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    };
}

class_newtype!(
    /// A class in `H_1(S; ℤ)` in the `[ρ_i]` basis.
    AbsClass
);
class_newtype!(
    /// A class in `H_1(S, ∂S; ℤ)` in the dual `[ρ'_i]` basis.
    RelClass
);

#[cfg(test)]
mod tests {
    use super::*;

    fn s(g: u32, r: u32) -> SurfaceSpec {
        SurfaceSpec::new(g, r).unwrap()
    }

    #[test]
    fn rank_and_classification() {
        assert_eq!(s(0, 1).rank(), 0);
        assert_eq!(s(0, 2).rank(), 1);
        assert_eq!(s(2, 3).rank(), 6);
        assert_eq!(SurfaceSpec::new(1, 0), Err(Error::NoBoundary));

        let k = s(0, 1).classify();
        assert!(k.is_disk && !k.is_annulus && k.is_planar);
        let k = s(0, 2).classify();
        assert!(!k.is_disk && k.is_annulus && k.is_planar);
        let k = s(2, 1).classify();
        assert!(!k.is_disk && !k.is_annulus && !k.is_planar);
    }

    #[test]
    fn torus_pairing_sign() {
        let t = s(1, 1);
        let r1 = t.rho(1).unwrap();
        let r2 = t.rho(2).unwrap();
        assert_eq!(t.abs_intersection(&r1, &r2).unwrap(), -1);
        assert_eq!(t.abs_intersection(&r2, &r1).unwrap(), 1);
        assert_eq!(t.abs_intersection(&r1, &r1).unwrap(), 0);
    }

    #[test]
    fn genus_block_sits_after_boundary_loops() {
        let t = s(1, 3);
        let j = t.intersection_matrix();
        assert_eq!(j[(2, 3)], -1);
        assert_eq!(j[(3, 2)], 1);
        for i in 0..2 {
            assert_eq!(j.row(i), &[0, 0, 0, 0]);
        }
    }

    #[test]
    fn planar_forms_vanish() {
        let p = s(0, 3);
        let x = p.abs_class(vec![3, -1]).unwrap();
        let y = p.abs_class(vec![2, 5]).unwrap();
        assert_eq!(p.abs_intersection(&x, &y).unwrap(), 0);
        assert!(p.to_relative(&x).unwrap().is_zero());
    }

    #[test]
    fn dual_pairing() {
        let a = s(0, 2);
        let rp = a.rho_dual(1).unwrap();
        let r = a.rho(1).unwrap();
        assert_eq!(a.rel_abs_pairing(&rp, &r).unwrap(), 1);
        // ⟨s ρ', s k ρ⟩ = s² k
        let (sv, k) = (3, 2);
        assert_eq!(a.rel_abs_pairing(&rp.scaled(sv), &r.scaled(sv * k)).unwrap(), 18);
        assert_eq!(a.rel_abs_pairing(&a.zero_rel(), &r).unwrap(), 0);
    }

    #[test]
    fn to_relative_on_torus() {
        let t = s(1, 1);
        let i1 = t.to_relative(&t.rho(1).unwrap()).unwrap();
        assert_eq!(i1.coords(), &[0, -1]);
        let r2 = t.rho(2).unwrap();
        assert_eq!(t.rel_abs_pairing(&i1, &r2).unwrap(), -1);
        assert!(t.to_relative(&t.zero_abs()).unwrap().is_zero());
        // matrix form agrees
        assert_eq!(t.to_relative_matrix().mul_vec(&[1, 0]), vec![0, -1]);
    }

    #[test]
    fn dimension_errors() {
        let t = s(1, 1);
        let bad = AbsClass(vec![1, 0, 0]);
        assert_eq!(
            t.abs_intersection(&bad, &t.rho(1).unwrap()),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        );
        assert!(t.rel_abs_pairing(&RelClass(vec![1]), &t.rho(1).unwrap()).is_err());
    }
}
