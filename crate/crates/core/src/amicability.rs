//! Amicable binary words and morphisms, and their ternarization.
//!
//! `u ∝ v` when both words split into aligned blocks `(0,0)`, `(1,1)` or
//! `(01,10)`; reading those blocks as `A`, `C` and `B` gives `ter(u, v)`.
//! A `B` block is forced exactly where the two words disagree, so a single
//! left-to-right pass decides the relation.

use thiserror::Error;

use crate::morphism::{Morphism, MorphismError};
use crate::words::{Alphabet, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AmicabilityError {
    #[error("words have different lengths {left} and {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("words are not amicable (parse fails at position {position})")]
    NotAmicable { position: usize },
    #[error("morphisms are not amicable")]
    NotAmicableMorphisms,
    #[error("expected binary words or endomorphisms of {{0,1}}*")]
    AlphabetMismatch,
    #[error("morphisms must be primitive")]
    NotPrimitive,
    #[error("no right-sided fixed point can be seeded")]
    NoFixedPoint,
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

/// Result of ternarizing aligned prefixes of two (possibly infinite) words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernarizationResult {
    pub word: Word,
    /// Letters of `u` and of `v` covered by `word`.
    pub consumed: (usize, usize),
    /// The input ended one letter into a `B` block.
    pub dangling: bool,
}

fn check_binary(w: &Word) -> Result<(), AmicabilityError> {
    if w.alphabet() == Alphabet::Binary {
        Ok(())
    } else {
        Err(AmicabilityError::AlphabetMismatch)
    }
}

/// Ternarizes the common prefix of `u` and `v` block by block.
pub fn ternarize_prefix(u: &Word, v: &Word) -> Result<TernarizationResult, AmicabilityError> {
    check_binary(u)?;
    check_binary(v)?;
    let (u, v) = (u.letters(), v.letters());
    let n = u.len().min(v.len());
    let mut out = Vec::with_capacity(n);
    let mut i = 0;
    let mut dangling = false;
    while i < n {
        match (u[i], v[i]) {
            (Letter::Zero, Letter::Zero) => {
                out.push(Letter::A);
                i += 1;
            }
            (Letter::One, Letter::One) => {
                out.push(Letter::C);
                i += 1;
            }
            (Letter::Zero, Letter::One) => {
                if i + 1 == n {
                    dangling = true;
                    break;
                }
                if (u[i + 1], v[i + 1]) != (Letter::One, Letter::Zero) {
                    return Err(AmicabilityError::NotAmicable { position: i + 1 });
                }
                out.push(Letter::B);
                i += 2;
            }
            _ => return Err(AmicabilityError::NotAmicable { position: i }),
        }
    }
    Ok(TernarizationResult {
        word: Word::new(Alphabet::Ternary, out).expect("ternary letters"),
        consumed: (i, i),
        dangling,
    })
}

/// The unique `w` with `σ01(w) = u` and `σ10(w) = v`.
pub fn ternarize_words(u: &Word, v: &Word) -> Result<Word, AmicabilityError> {
    if u.len() != v.len() {
        return Err(AmicabilityError::LengthMismatch { left: u.len(), right: v.len() });
    }
    let parsed = ternarize_prefix(u, v)?;
    if parsed.dangling {
        return Err(AmicabilityError::NotAmicable { position: parsed.consumed.0 + 1 });
    }
    Ok(parsed.word)
}

pub fn is_amicable(u: &Word, v: &Word) -> bool {
    ternarize_words(u, v).is_ok()
}

fn check_binary_endo(m: &Morphism) -> Result<(), AmicabilityError> {
    if m.source() == Alphabet::Binary && m.target() == Alphabet::Binary {
        Ok(())
    } else {
        Err(AmicabilityError::AlphabetMismatch)
    }
}

/// The three aligned pairs `(φ(0), ψ(0))`, `(φ(01), ψ(10))`, `(φ(1), ψ(1))`,
/// in the order of the ternary letters they define.
fn block_pairs(phi: &Morphism, psi: &Morphism) -> [(Word, Word); 3] {
    let (p0, p1) = (phi.image(Letter::Zero), phi.image(Letter::One));
    let (q0, q1) = (psi.image(Letter::Zero), psi.image(Letter::One));
    [
        (p0.clone(), q0.clone()),
        (p0.concat(p1), q1.concat(q0)),
        (p1.clone(), q1.clone()),
    ]
}

/// `φ(0) ∝ ψ(0)`, `φ(1) ∝ ψ(1)` and `φ(01) ∝ ψ(10)`.
pub fn is_amicable_morphisms(phi: &Morphism, psi: &Morphism) -> Result<bool, AmicabilityError> {
    check_binary_endo(phi)?;
    check_binary_endo(psi)?;
    Ok(block_pairs(phi, psi).iter().all(|(u, v)| is_amicable(u, v)))
}

/// `η = ter(φ, ψ)`: `A ↦ ter(φ(0),ψ(0))`, `B ↦ ter(φ(01),ψ(10))`, `C ↦ ter(φ(1),ψ(1))`.
pub fn ternarize_morphisms(phi: &Morphism, psi: &Morphism) -> Result<Morphism, AmicabilityError> {
    check_binary_endo(phi)?;
    check_binary_endo(psi)?;
    let images = block_pairs(phi, psi)
        .iter()
        .map(|(u, v)| ternarize_words(u, v).map_err(|_| AmicabilityError::NotAmicableMorphisms))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Morphism::new(Alphabet::Ternary, Alphabet::Ternary, images)?)
}

/// How the fixed point of `ter(φ, ψ)` was seeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedCase {
    /// `φ(X)` and `ψ(X)` both start with `X`; the ternary seed is `A` for
    /// `X = 0` and `C` for `X = 1`.
    CommonLetter(Letter),
    /// No such letter: the fixed points are `φ^∞(01)` and `ψ^∞(10)`, and the
    /// ternary seed is `B`.
    Crossed,
}

impl SeedCase {
    pub fn ternary_seed(self) -> Letter {
        match self {
            SeedCase::CommonLetter(Letter::Zero) => Letter::A,
            SeedCase::CommonLetter(_) => Letter::C,
            SeedCase::Crossed => Letter::B,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryFixedPoint {
    pub eta: Morphism,
    pub word: Word,
    pub case: SeedCase,
}

/// Builds `η = ter(φ, ψ)` and a prefix of length `len` of its fixed point,
/// seeded according to which letters `φ` and `ψ` fix.
pub fn ternarization_fixed_point(
    phi: &Morphism,
    psi: &Morphism,
    len: usize,
) -> Result<TernaryFixedPoint, AmicabilityError> {
    check_binary_endo(phi)?;
    check_binary_endo(psi)?;
    if !phi.is_primitive()? || !psi.is_primitive()? {
        return Err(AmicabilityError::NotPrimitive);
    }
    if !is_amicable_morphisms(phi, psi)? {
        return Err(AmicabilityError::NotAmicableMorphisms);
    }
    if phi.fixed_point_seeds().is_empty() || psi.fixed_point_seeds().is_empty() {
        return Err(AmicabilityError::NoFixedPoint);
    }
    let eta = ternarize_morphisms(phi, psi)?;
    let case = [Letter::Zero, Letter::One]
        .into_iter()
        .find(|&x| phi.image(x).starts_with(x) && psi.image(x).starts_with(x))
        .map_or(SeedCase::Crossed, SeedCase::CommonLetter);
    let word = eta
        .fixed_point_prefix(len, Some(case.ternary_seed()))
        .map_err(|_| AmicabilityError::NoFixedPoint)?;
    if !word.is_prefix_of(&eta.apply(&word)?) {
        return Err(AmicabilityError::NoFixedPoint);
    }
    Ok(TernaryFixedPoint { eta, word, case })
}
