//! Morphisms between the free monoids over `{0,1}` and `{A,B,C}`.
//!
//! Incidence matrices use the row convention: entry `(a, b)` counts the
//! letter `b` in the image of `a`. Under this convention the matrix of a
//! composition `ξ∘ζ` is `M_ζ · M_ξ`, and a length assignment `ℓ` scales as
//! `ℓ(ξ(a)) = (M_ξ ℓ)_a`, so Perron data is taken from right eigenvectors.

pub(crate) mod perron;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::words::{infer_alphabet, Alphabet, BiWindow, Letter, Word, WordError};

pub use perron::PerronData;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("expected a word over {expected}, got one over {found}")]
    AlphabetMismatch { expected: Alphabet, found: Alphabet },
    #[error("image of {0} is empty; erasing morphisms are not supported")]
    Erasing(Letter),
    #[error("no image given for letter {0}")]
    MissingImage(Letter),
    #[error("letter {0} is given more than one image")]
    DuplicateImage(Letter),
    #[error("morphism is not an endomorphism")]
    NotEndomorphism,
    #[error("no letter a has an image starting with a of length at least 2")]
    NoFixedPoint,
    #[error("{0} cannot seed a fixed point: its image must start with it and have length at least 2")]
    InvalidSeed(Letter),
    #[error("dominant eigenvalue is not a quadratic irrational")]
    NotQuadratic,
    #[error("incidence matrix has no strictly dominant positive eigenvalue")]
    NoDominantEigenvalue,
    #[error("cannot parse morphism literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A non-erasing morphism determined by its letter images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    /// `images[i]` is the image of the `i`-th letter of `source`.
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Self, MorphismError> {
        let letters = source.letters();
        if images.len() != letters.len() {
            return Err(MorphismError::MissingImage(letters[images.len().min(letters.len() - 1)]));
        }
        for (&letter, image) in letters.iter().zip(&images) {
            if image.alphabet() != target {
                return Err(MorphismError::AlphabetMismatch { expected: target, found: image.alphabet() });
            }
            if image.is_empty() {
                return Err(MorphismError::Erasing(letter));
            }
        }
        Ok(Morphism { source, target, images })
    }

    /// Builds a morphism from `(letter, image)` literals, e.g. `[("0", "01"), ("1", "0")]`.
    pub fn from_images(source: Alphabet, target: Alphabet, images: &[&str]) -> Result<Self, MorphismError> {
        let words = images
            .iter()
            .map(|s| Word::parse_in(target, s))
            .collect::<Result<Vec<_>, _>>()?;
        Morphism::new(source, target, words)
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = alphabet
            .letters()
            .iter()
            .map(|&l| Word::new(alphabet, vec![l]).expect("letter of its own alphabet"))
            .collect();
        Morphism { source: alphabet, target: alphabet, images }
    }

    pub fn source(&self) -> Alphabet {
        self.source
    }

    pub fn target(&self) -> Alphabet {
        self.target
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    /// Panics if `letter` is not in the source alphabet.
    pub fn image(&self, letter: Letter) -> &Word {
        assert!(self.source.contains(letter), "letter {letter} outside source alphabet {}", self.source);
        &self.images[letter.index()]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub(crate) fn apply_letters(&self, w: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(w.len() * 2);
        for &l in w {
            out.extend_from_slice(self.images[l.index()].letters());
        }
        out
    }

    pub fn apply(&self, w: &Word) -> Result<Word, MorphismError> {
        self.check_source(w.alphabet())?;
        Ok(Word::new(self.target, self.apply_letters(w.letters()))?)
    }

    /// Applies the morphism to both sides of the origin separately.
    pub fn apply_window(&self, w: &BiWindow) -> Result<BiWindow, MorphismError> {
        Ok(BiWindow::new(self.apply(&w.left())?, self.apply(&w.right())?)?)
    }

    fn check_source(&self, found: Alphabet) -> Result<(), MorphismError> {
        if found == self.source {
            Ok(())
        } else {
            Err(MorphismError::AlphabetMismatch { expected: self.source, found })
        }
    }

    /// `self ∘ inner`: apply `inner` first, then `self`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism, MorphismError> {
        self.check_source(inner.target)?;
        let images = inner
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>, _>>()?;
        Morphism::new(inner.source, self.target, images)
    }

    /// `self^k`; `k = 0` gives the identity.
    pub fn power(&self, k: u32) -> Result<Morphism, MorphismError> {
        if !self.is_endomorphism() {
            return Err(MorphismError::NotEndomorphism);
        }
        let mut out = Morphism::identity(self.source);
        for _ in 0..k {
            out = self.compose(&out)?;
        }
        Ok(out)
    }

    pub fn incidence(&self) -> IncidenceMatrix {
        let rows = self.source.size();
        let cols = self.target.size();
        let mut entries = vec![0i64; rows * cols];
        for (r, image) in self.images.iter().enumerate() {
            for l in image.letters() {
                entries[r * cols + l.index()] += 1;
            }
        }
        IncidenceMatrix { rows, cols, entries }
    }

    /// Some power of the incidence matrix up to Wielandt's bound
    /// `n² − 2n + 2` is entrywise positive.
    pub fn is_primitive(&self) -> Result<bool, MorphismError> {
        if !self.is_endomorphism() {
            return Err(MorphismError::NotEndomorphism);
        }
        let n = self.source.size();
        let pattern = self.incidence().pattern();
        let mut power = pattern.clone();
        for _ in 1..=(n * n - 2 * n + 2) {
            if power.iter().all(|&b| b) {
                return Ok(true);
            }
            power = bool_product(&power, &pattern, n);
        }
        Ok(false)
    }

    /// Letters `a` whose image starts with `a` and has length at least 2,
    /// in alphabetical order.
    pub fn fixed_point_seeds(&self) -> Vec<Letter> {
        if !self.is_endomorphism() {
            return Vec::new();
        }
        self.source
            .letters()
            .iter()
            .copied()
            .filter(|&a| self.is_seed(a))
            .collect()
    }

    fn is_seed(&self, a: Letter) -> bool {
        let image = &self.images[a.index()];
        image.starts_with(a) && image.len() >= 2
    }

    /// First `len` letters of the right-sided fixed point `ξ^∞(seed)`.
    ///
    /// Without an explicit seed the alphabetically first admissible letter is used.
    pub fn fixed_point_prefix(&self, len: usize, seed: Option<Letter>) -> Result<Word, MorphismError> {
        if !self.is_endomorphism() {
            return Err(MorphismError::NotEndomorphism);
        }
        let seed = match seed {
            Some(a) => {
                self.check_source(a.alphabet())?;
                if !self.is_seed(a) {
                    return Err(MorphismError::InvalidSeed(a));
                }
                a
            }
            None => *self.fixed_point_seeds().first().ok_or(MorphismError::NoFixedPoint)?,
        };
        // Invariant: out = ξ(out[..i]).
        let mut out = self.images[seed.index()].letters().to_vec();
        let mut i = 1;
        while out.len() < len {
            let next = out[i];
            out.extend_from_slice(self.images[next.index()].letters());
            i += 1;
        }
        out.truncate(len);
        Ok(Word::new(self.source, out)?)
    }

    /// Exact Perron eigendata of the incidence matrix.
    pub fn perron(&self) -> Result<PerronData, MorphismError> {
        if !self.is_endomorphism() {
            return Err(MorphismError::NotEndomorphism);
        }
        PerronData::of_matrix(&self.incidence())
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (letter, image)) in self.source.letters().iter().zip(&self.images).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{letter}:{image}")?;
        }
        Ok(())
    }
}

/// Parses `letter:image` pairs separated by commas, e.g. `A:ACA,B:BAB,C:B`.
/// Both alphabets are inferred from the letters used.
impl FromStr for Morphism {
    type Err = MorphismError;

    fn from_str(literal: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| MorphismError::Parse { literal: literal.to_string(), reason };
        let mut pairs = Vec::new();
        for part in literal.split(',') {
            let (key, image) = part
                .trim()
                .split_once(':')
                .ok_or_else(|| err(format!("missing ':' in {part:?}")))?;
            let mut chars = key.chars();
            let letter = match (chars.next().and_then(Letter::from_char), chars.next()) {
                (Some(l), None) => l,
                _ => return Err(err(format!("bad source letter {key:?}"))),
            };
            pairs.push((letter, image));
        }
        let source = pairs[0].0.alphabet();
        if pairs.iter().any(|(l, _)| l.alphabet() != source) {
            return Err(err("source letters mix alphabets".into()));
        }
        let all_images: String = pairs.iter().map(|(_, img)| *img).collect();
        let target = infer_alphabet(&all_images)?.ok_or_else(|| err("all images empty".into()))?;
        let mut images: Vec<Option<Word>> = vec![None; source.size()];
        for (letter, image) in pairs {
            let slot = &mut images[letter.index()];
            if slot.is_some() {
                return Err(MorphismError::DuplicateImage(letter));
            }
            *slot = Some(Word::parse_in(target, image)?);
        }
        let images = images
            .into_iter()
            .zip(source.letters())
            .map(|(w, &l)| w.ok_or(MorphismError::MissingImage(l)))
            .collect::<Result<Vec<_>, _>>()?;
        Morphism::new(source, target, images)
    }
}

/// Non-negative integer matrix, rows indexed by source letters and columns by
/// target letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IncidenceMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IncidenceMatrix { rows: rows.len(), cols, entries: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.cols).map(<[i64]>::to_vec).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Panics on a dimension mismatch.
    pub fn product(&self, rhs: &IncidenceMatrix) -> IncidenceMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut entries = vec![0i64; self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    entries[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        IncidenceMatrix { rows: self.rows, cols: rhs.cols, entries }
    }

    fn pattern(&self) -> Vec<bool> {
        self.entries.iter().map(|&e| e > 0).collect()
    }
}

fn bool_product(a: &[bool], b: &[bool], n: usize) -> Vec<bool> {
    (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            (0..n).any(|k| a[i * n + k] && b[k * n + j])
        })
        .collect()
}

/// `σ01: A↦0, B↦01, C↦1`.
pub fn sigma01() -> Morphism {
    Morphism::from_images(Alphabet::Ternary, Alphabet::Binary, &["0", "01", "1"]).expect("valid constant")
}

/// `σ10: A↦0, B↦10, C↦1`.
///
/// `A` and `C` map to the same letters as under `σ01`; only the `B` block is
/// reversed. This is the form under which `σ10(ACABAC) = 0101001` and the
/// ternarization of amicable pairs is consistent.
pub fn sigma10() -> Morphism {
    Morphism::from_images(Alphabet::Ternary, Alphabet::Binary, &["0", "10", "1"]).expect("valid constant")
}

/// `φ: 0↦01, 1↦0` (Fibonacci).
pub fn phi() -> Morphism {
    Morphism::from_images(Alphabet::Binary, Alphabet::Binary, &["01", "0"]).expect("valid constant")
}

/// `ψ: 0↦10, 1↦0`.
pub fn psi() -> Morphism {
    Morphism::from_images(Alphabet::Binary, Alphabet::Binary, &["10", "0"]).expect("valid constant")
}

/// `E: 0↦1, 1↦0`.
pub fn exchange() -> Morphism {
    Morphism::from_images(Alphabet::Binary, Alphabet::Binary, &["1", "0"]).expect("valid constant")
}

#[derive(Debug, Clone)]
pub struct CanonicalMorphisms {
    pub sigma01: Morphism,
    pub sigma10: Morphism,
    pub phi: Morphism,
    pub psi: Morphism,
    pub exchange: Morphism,
}

pub fn constants() -> CanonicalMorphisms {
    CanonicalMorphisms { sigma01: sigma01(), sigma10: sigma10(), phi: phi(), psi: psi(), exchange: exchange() }
}
