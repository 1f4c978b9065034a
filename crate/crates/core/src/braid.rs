//! Braid words over `{σ_1..σ_{n-1}, ρ_1..ρ_{2g+r-1}}`.
//!
//! Words are read left to right: the leftmost letter is applied first.
//! Nothing here quotients by braid relations; words are sequences of
//! letters and every quantity computed from them is a function of the
//! expanded sequence.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::surface::{AbsClass, SurfaceSpec};

/// A braid group generator. Indices are one-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Sigma(usize),
    Rho(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub exponent: i64,
}

impl Letter {
    pub fn sigma(i: usize, exponent: i64) -> Self {
        Self {
            generator: Generator::Sigma(i),
            exponent,
        }
    }

    pub fn rho(j: usize, exponent: i64) -> Self {
        Self {
            generator: Generator::Rho(j),
            exponent,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            exponent: -self.exponent,
            ..self
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.generator {
            Generator::Sigma(i) => write!(f, "s{i}")?,
            Generator::Rho(j) => write!(f, "r{j}")?,
        }
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

impl FromStr for Letter {
    type Err = Error;

    /// Parses `s<i>` or `r<j>` with an optional `^<int>` suffix. Range
    /// checks against strands and surface happen in [`BraidWord`].
    fn from_str(tok: &str) -> Result<Self> {
        let unknown = || Error::UnknownToken(tok.to_string());
        let (head, exp) = match tok.split_once('^') {
            Some((h, e)) => (h, e.parse::<i64>().map_err(|_| unknown())?),
            None => (tok, 1),
        };
        let mut chars = head.chars();
        let kind = chars.next().ok_or_else(unknown)?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        let index: usize = digits.parse().map_err(|_| unknown())?;
        if index == 0 {
            return Err(Error::IndexOutOfRange {
                token: tok.to_string(),
                reason: "generator indices start at 1".into(),
            });
        }
        if exp == 0 {
            return Err(Error::ZeroExponent(tok.to_string()));
        }
        let generator = match kind {
            's' => Generator::Sigma(index),
            'r' => Generator::Rho(index),
            _ => return Err(unknown()),
        };
        Ok(Letter {
            generator,
            exponent: exp,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Checks σ indices against the strand count. ρ indices are checked
    /// separately by [`BraidWord::check_surface`] since they depend on the page.
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        for l in &letters {
            if l.exponent == 0 {
                return Err(Error::ZeroExponent(l.to_string()));
            }
            match l.generator {
                Generator::Sigma(i) if i == 0 || i >= strands => {
                    return Err(Error::IndexOutOfRange {
                        token: l.to_string(),
                        reason: format!("sigma index must lie in 1..={} for {strands} strands", strands - 1),
                    })
                }
                Generator::Rho(0) => {
                    return Err(Error::IndexOutOfRange {
                        token: l.to_string(),
                        reason: "generator indices start at 1".into(),
                    })
                }
                _ => {}
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn trivial(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn check_surface(&self, surface: &SurfaceSpec) -> Result<()> {
        let rank = surface.rank();
        for l in &self.letters {
            if let Generator::Rho(j) = l.generator {
                if j > rank {
                    return Err(Error::IndexOutOfRange {
                        token: l.to_string(),
                        reason: format!("{surface} has only {rank} rho generators"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The word with every power split into unit letters.
    pub fn expanded(&self) -> Vec<Letter> {
        self.letters
            .iter()
            .flat_map(|l| {
                let unit = Letter {
                    exponent: l.exponent.signum(),
                    ..*l
                };
                std::iter::repeat_n(unit, l.exponent.unsigned_abs() as usize)
            })
            .collect()
    }

    pub fn expanded_len(&self) -> usize {
        self.letters.iter().map(|l| l.exponent.unsigned_abs() as usize).sum()
    }

    /// Usual exponent sum.
    pub fn exp_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent).sum()
    }

    /// `[b] = Σ ε_i [b_i]` with `[σ_j] = 0`.
    pub fn homology_class(&self, surface: &SurfaceSpec) -> Result<AbsClass> {
        self.check_surface(surface)?;
        let mut v = vec![0; surface.rank()];
        for l in &self.letters {
            if let Generator::Rho(j) = l.generator {
                v[j - 1] += l.exponent;
            }
        }
        surface.abs_class(v)
    }

    /// Generalized exponent sum
    /// `Σ ε_i - Σ_{j<i} ε_i ε_j [b_j]·[b_i]` over the expanded word.
    pub fn gen_exp_sum(&self, surface: &SurfaceSpec) -> Result<i64> {
        self.check_surface(surface)?;
        let rank = surface.rank();
        // Running Σ_{j<i} ε_j [b_j]; the double sum is then linear in it.
        let mut prefix = vec![0i64; rank];
        let mut correction = 0i64;
        let mut total = 0i64;
        let mut unit = vec![0i64; rank];
        for l in self.expanded() {
            total += l.exponent;
            if let Generator::Rho(j) = l.generator {
                unit[j - 1] = 1;
                correction += l.exponent * surface.abs_intersection_unchecked(&prefix, &unit);
                unit[j - 1] = 0;
                prefix[j - 1] += l.exponent;
            }
        }
        Ok(total - correction)
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.exponent > 0)
    }

    pub fn has_rho(&self) -> bool {
        self.letters.iter().any(|l| matches!(l.generator, Generator::Rho(_)))
    }

    /// Appends `σ_n` on a new strand.
    pub fn positive_stabilize(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.push(Letter::sigma(self.strands, 1));
        Self {
            strands: self.strands + 1,
            letters,
        }
    }

    /// `b' = b_{τ(1)} ⋯ b_{τ(k)}` on the expanded word.
    pub fn permute(&self, tau: &Permutation) -> Result<Self> {
        let letters = self.expanded();
        if tau.len() != letters.len() {
            return Err(Error::NotAPermutation {
                len: letters.len(),
                reason: format!("permutation acts on {} positions", tau.len()),
            });
        }
        Ok(Self {
            strands: self.strands,
            letters: tau.images().iter().map(|&p| letters[p]).collect(),
        })
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        let strands = self.strands.max(other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string().serialize(s)
    }
}

/// Parses a whitespace-separated word and checks it against `n` strands on `surface`.
pub fn parse_word(text: &str, strands: usize, surface: &SurfaceSpec) -> Result<BraidWord> {
    let letters = text
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<Vec<Letter>>>()?;
    let word = BraidWord::new(strands, letters)?;
    word.check_surface(surface)?;
    Ok(word)
}

/// Positive band generator
/// `σ_{i,j} = (σ_i ⋯ σ_{j-2}) σ_{j-1} (σ_i ⋯ σ_{j-2})^{-1}`.
pub fn band_generator(i: usize, j: usize, strands: usize) -> Result<BraidWord> {
    if i == 0 || i >= j || j > strands {
        return Err(Error::InvalidBand { i, j, n: strands });
    }
    let mut letters: Vec<Letter> = (i..j - 1).map(|k| Letter::sigma(k, 1)).collect();
    letters.push(Letter::sigma(j - 1, 1));
    letters.extend((i..j - 1).rev().map(|k| Letter::sigma(k, -1)));
    BraidWord::new(strands, letters)
}

/// `σ_1 ⋯ σ_{n-1} [ρ_1, ρ_2] ⋯ [ρ_{2g-1}, ρ_{2g}]` on `S_{g,1}`: a positive
/// push-off of the connected binding.
pub fn binding_pushoff_word(genus: u32, strands: usize) -> Result<BraidWord> {
    if genus == 0 {
        return Err(Error::ZeroGenus);
    }
    let mut letters: Vec<Letter> = (1..strands).map(|i| Letter::sigma(i, 1)).collect();
    for t in 0..genus as usize {
        let (p, q) = (2 * t + 1, 2 * t + 2);
        letters.extend([
            Letter::rho(p, 1),
            Letter::rho(q, 1),
            Letter::rho(p, -1),
            Letter::rho(q, -1),
        ]);
    }
    BraidWord::new(strands, letters)
}

/// A permutation of letter positions, stored as zero-based images:
/// position `i` of the new word takes letter `images[i]` of the old one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Self((0..len).collect())
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let len = images.len();
        let mut seen = vec![false; len];
        for &p in &images {
            if p >= len {
                return Err(Error::NotAPermutation {
                    len,
                    reason: format!("image {p} out of range"),
                });
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::NotAPermutation {
                    len,
                    reason: format!("image {p} repeated"),
                });
            }
        }
        Ok(Self(images))
    }

    /// From the one-based list `τ(1), …, τ(k)`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let len = images.len();
        let zero_based = images
            .iter()
            .map(|&p| {
                p.checked_sub(1).ok_or_else(|| Error::NotAPermutation {
                    len,
                    reason: "one-based images start at 1".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(zero_based)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }
}
