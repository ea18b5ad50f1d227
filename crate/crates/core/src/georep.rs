//! Point sequences `t_0 = 0 < t_1 < …` with gaps `ℓ(u_n)`, and the
//! self-similarity test `Λ·Σ ⊂ Σ` with letter-uniform gap patterns.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::morphism::{sigma01, sigma10, Morphism, MorphismError};
use crate::qfield::Quadratic;
use crate::words::{Alphabet, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeoRepError {
    #[error("length of letter {0} must be positive")]
    NonPositiveLength(Letter),
    #[error("letters {0} and {1} have the same length")]
    NotInjective(Letter, Letter),
    #[error("expected {expected} lengths, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("lengths must lie in a single quadratic field")]
    MixedFields,
    #[error("word over {found} does not match lengths over {expected}")]
    AlphabetMismatch { expected: Alphabet, found: Alphabet },
    #[error("gaps {first} and {second} carry the same letter but different patterns")]
    NotSelfSimilar { first: usize, second: usize },
    #[error("the scaled point of gap {index} is not a point of the representation")]
    ScaledPointMissing { index: usize },
    #[error("window too short{}", .0.map(|a| format!(" for letter {a}")).unwrap_or_default())]
    WindowTooShort(Option<Letter>),
    #[error("factor must exceed 1")]
    FactorTooSmall,
    #[error("distance {0} matches no letter length")]
    AmbiguousLength(Box<Quadratic>),
    #[error("length of B is not the sum of the lengths of A and C")]
    LengthMismatch,
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

/// Injective assignment of positive lengths to the letters of an alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthAssignment {
    alphabet: Alphabet,
    lengths: Vec<Quadratic>,
}

impl LengthAssignment {
    pub fn new(alphabet: Alphabet, lengths: Vec<Quadratic>) -> Result<Self, GeoRepError> {
        let letters = alphabet.letters();
        if lengths.len() != letters.len() {
            return Err(GeoRepError::WrongArity { expected: letters.len(), found: lengths.len() });
        }
        for (i, x) in lengths.iter().enumerate() {
            if lengths.iter().any(|y| !x.same_field(y)) {
                return Err(GeoRepError::MixedFields);
            }
            if x.signum() <= 0 {
                return Err(GeoRepError::NonPositiveLength(letters[i]));
            }
            if let Some(j) = (0..i).find(|&j| lengths[j] == *x) {
                return Err(GeoRepError::NotInjective(letters[j], letters[i]));
            }
        }
        Ok(LengthAssignment { alphabet, lengths })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn get(&self, letter: Letter) -> &Quadratic {
        &self.lengths[letter.index()]
    }

    pub fn values(&self) -> &[Quadratic] {
        &self.lengths
    }

    /// The unique letter of length `x`.
    pub fn letter_of_length(&self, x: &Quadratic) -> Option<Letter> {
        self.alphabet.letters().iter().copied().find(|&a| self.get(a) == x)
    }
}

/// The positive eigenvector of `M_η` for its dominant eigenvalue, scaled so
/// the first letter has length 1.
pub fn lengths_from_perron(eta: &Morphism) -> Result<LengthAssignment, GeoRepError> {
    let perron = eta.perron()?;
    let mut v = perron.dominant_vector;
    if v[0].signum() < 0 {
        v = v.iter().map(|x| -x).collect();
    }
    LengthAssignment::new(eta.source(), v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeoRep {
    word: Word,
    points: Vec<Quadratic>,
    lengths: LengthAssignment,
}

/// Cumulative gap sums `t_0 = 0, t_{n+1} = t_n + ℓ(u_n)`.
pub fn build(word: &Word, lengths: &LengthAssignment) -> Result<GeoRep, GeoRepError> {
    if word.alphabet() != lengths.alphabet() {
        return Err(GeoRepError::AlphabetMismatch { expected: lengths.alphabet(), found: word.alphabet() });
    }
    let mut points = Vec::with_capacity(word.len() + 1);
    let mut t = Quadratic::zero();
    points.push(t.clone());
    for &a in word.letters() {
        t = &t + lengths.get(a);
        points.push(t.clone());
    }
    Ok(GeoRep { word: word.clone(), points, lengths: lengths.clone() })
}

impl GeoRep {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn points(&self) -> &[Quadratic] {
        &self.points
    }

    pub fn lengths(&self) -> &LengthAssignment {
        &self.lengths
    }

    pub fn position(&self, x: &Quadratic) -> Option<usize> {
        self.points.binary_search_by(|t| t.partial_cmp(x).expect("one field")).ok()
    }

    /// Tab-separated dump: index, exact value, 15-digit display approximation.
    pub fn plot_data(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.points.iter().enumerate() {
            let _ = writeln!(out, "{i}\t{t}\t{}", t.approx(15));
        }
        out
    }
}

/// Offsets `P_a` of the points inside `[Λt_n, Λt_{n+1}]`, relative to `Λt_n`
/// (both endpoints included), for each letter seen in the checked window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfSimilarity {
    pub patterns: BTreeMap<Letter, Vec<Quadratic>>,
    /// Gaps `0..checked` had their stretched image inside the window.
    pub checked: usize,
}

pub fn check_selfsimilar(rep: &GeoRep, lambda: &Quadratic) -> Result<SelfSimilarity, GeoRepError> {
    if !lambda.same_field(&rep.points[rep.points.len() - 1]) {
        return Err(GeoRepError::MixedFields);
    }
    if *lambda <= Quadratic::one() {
        return Err(GeoRepError::FactorTooSmall);
    }
    let last = rep.points.last().expect("t_0 always present");
    let checked = (0..rep.word.len()).take_while(|&n| &(lambda * &rep.points[n + 1]) <= last).count();
    if checked == 0 {
        return Err(GeoRepError::WindowTooShort(None));
    }
    let mut patterns: BTreeMap<Letter, (usize, Vec<Quadratic>)> = BTreeMap::new();
    for n in 0..checked {
        let start = lambda * &rep.points[n];
        let end = lambda * &rep.points[n + 1];
        let i = rep.position(&start).ok_or(GeoRepError::ScaledPointMissing { index: n })?;
        let pattern: Vec<Quadratic> = rep.points[i..]
            .iter()
            .take_while(|t| **t <= end)
            .map(|t| t - &start)
            .collect();
        if pattern.last() != Some(&(&end - &start)) {
            return Err(GeoRepError::ScaledPointMissing { index: n + 1 });
        }
        let letter = rep.word.letters()[n];
        match patterns.get(&letter) {
            Some((first, p)) if *p != pattern => {
                return Err(GeoRepError::NotSelfSimilar { first: *first, second: n })
            }
            Some(_) => {}
            None => {
                patterns.insert(letter, (n, pattern));
            }
        }
    }
    Ok(SelfSimilarity { patterns: patterns.into_iter().map(|(a, (_, p))| (a, p)).collect(), checked })
}

/// Reads `ξ(a)` off the consecutive distances inside each `P_a`.
pub fn substitution_from_geometry(rep: &GeoRep, lambda: &Quadratic) -> Result<Morphism, GeoRepError> {
    let sim = check_selfsimilar(rep, lambda)?;
    let alphabet = rep.lengths.alphabet();
    let mut images = Vec::with_capacity(alphabet.size());
    for &a in alphabet.letters() {
        let pattern = sim.patterns.get(&a).ok_or(GeoRepError::WindowTooShort(Some(a)))?;
        let image = pattern
            .windows(2)
            .map(|w| {
                let gap = &w[1] - &w[0];
                rep.lengths.letter_of_length(&gap).ok_or(GeoRepError::AmbiguousLength(Box::new(gap)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        images.push(Word::new(alphabet, image).expect("letters of the alphabet"));
    }
    Ok(Morphism::new(alphabet, alphabet, images)?)
}

/// Splits every `B` gap at `ℓ(A)` (for `σ01(u)`) or at `ℓ(C)` (for `σ10(u)`).
pub fn sturmian_insertions(rep: &GeoRep) -> Result<(GeoRep, GeoRep), GeoRepError> {
    let l = &rep.lengths;
    if l.alphabet() != Alphabet::Ternary {
        return Err(GeoRepError::AlphabetMismatch { expected: Alphabet::Ternary, found: l.alphabet() });
    }
    let (la, lb, lc) = (l.get(Letter::A), l.get(Letter::B), l.get(Letter::C));
    if *lb != la + lc {
        return Err(GeoRepError::LengthMismatch);
    }
    let binary = LengthAssignment::new(Alphabet::Binary, vec![la.clone(), lc.clone()])?;
    let rep01 = build(&sigma01().apply(&rep.word)?, &binary)?;
    let rep10 = build(&sigma10().apply(&rep.word)?, &binary)?;
    Ok((rep01, rep10))
}
