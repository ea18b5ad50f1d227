//! Finite words and origin-marked windows over `{0,1}` and `{A,B,C}`,
//! plus factor-language and complexity analysis.
//!
//! Complexity is always measured on a finite window, so a profile only says
//! "consistent up to `n_max`". Windows should be long relative to `n_max`;
//! [`RECOMMENDED_WINDOW_FACTOR`] is the margin used by the CLI.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Recommended minimum ratio of window length to `n_max`.
pub const RECOMMENDED_WINDOW_FACTOR: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    Binary,
    Ternary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Zero,
    One,
    A,
    B,
    C,
}

impl Alphabet {
    pub fn letters(self) -> &'static [Letter] {
        match self {
            Alphabet::Binary => &[Letter::Zero, Letter::One],
            Alphabet::Ternary => &[Letter::A, Letter::B, Letter::C],
        }
    }

    pub fn size(self) -> usize {
        self.letters().len()
    }

    pub fn contains(self, letter: Letter) -> bool {
        letter.alphabet() == self
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::Binary => "{0,1}",
            Alphabet::Ternary => "{A,B,C}",
        })
    }
}

impl Letter {
    pub fn alphabet(self) -> Alphabet {
        match self {
            Letter::Zero | Letter::One => Alphabet::Binary,
            Letter::A | Letter::B | Letter::C => Alphabet::Ternary,
        }
    }

    /// Position within its alphabet.
    pub fn index(self) -> usize {
        match self {
            Letter::Zero | Letter::A => 0,
            Letter::One | Letter::B => 1,
            Letter::C => 2,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::One => '1',
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        Some(match c {
            '0' => Letter::Zero,
            '1' => Letter::One,
            'A' => Letter::A,
            'B' => Letter::B,
            'C' => Letter::C,
            _ => return None,
        })
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letter {letter} is not in alphabet {alphabet}")]
    ForeignLetter { letter: Letter, alphabet: Alphabet },
    #[error("invalid character {0:?} in word literal")]
    BadChar(char),
    #[error("word literal mixes binary and ternary letters")]
    MixedAlphabets,
    #[error("cannot infer the alphabet of an empty word")]
    EmptyLiteral,
    #[error("window literal must contain exactly one '|'")]
    BadWindow,
}

/// A finite word over a declared alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self, WordError> {
        if let Some(&letter) = letters.iter().find(|l| !alphabet.contains(**l)) {
            return Err(WordError::ForeignLetter { letter, alphabet });
        }
        Ok(Word { alphabet, letters })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word { alphabet, letters: Vec::new() }
    }

    /// Parses a bare letter string in a known alphabet (the empty string is allowed).
    pub fn parse_in(alphabet: Alphabet, s: &str) -> Result<Self, WordError> {
        let letters = s
            .chars()
            .map(|c| Letter::from_char(c).ok_or(WordError::BadChar(c)))
            .collect::<Result<Vec<_>, _>>()?;
        Word::new(alphabet, letters)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        self.alphabet == other.alphabet && other.letters.starts_with(&self.letters)
    }

    pub fn starts_with(&self, letter: Letter) -> bool {
        self.first() == Some(letter)
    }

    /// Panics if the alphabets differ.
    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(self.alphabet, other.alphabet, "concatenating words over different alphabets");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { alphabet: self.alphabet, letters }
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word { alphabet: self.alphabet, letters: self.letters[..n.min(self.len())].to_vec() }
    }

    pub fn push(&mut self, letter: Letter) {
        assert!(self.alphabet.contains(letter));
        self.letters.push(letter);
    }

    pub fn extend_from_word(&mut self, other: &Word) {
        assert_eq!(self.alphabet, other.alphabet);
        self.letters.extend_from_slice(&other.letters);
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.letters
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Infers the alphabet from the characters; the empty literal is rejected.
impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let alphabet = infer_alphabet(s)?.ok_or(WordError::EmptyLiteral)?;
        Word::parse_in(alphabet, s)
    }
}

/// Alphabet used by the characters of `s`, `None` when `s` is empty.
pub(crate) fn infer_alphabet(s: &str) -> Result<Option<Alphabet>, WordError> {
    let mut found = None;
    for c in s.chars() {
        let letter = Letter::from_char(c).ok_or(WordError::BadChar(c))?;
        match found {
            None => found = Some(letter.alphabet()),
            Some(a) if a != letter.alphabet() => return Err(WordError::MixedAlphabets),
            _ => {}
        }
    }
    Ok(found)
}

/// A finite window `u_{-m} … u_{-1} | u_0 … u_n` of a bidirectional word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiWindow {
    alphabet: Alphabet,
    letters: Vec<Letter>,
    origin: usize,
}

impl BiWindow {
    pub fn new(left: Word, right: Word) -> Result<Self, WordError> {
        if left.alphabet != right.alphabet {
            return Err(WordError::MixedAlphabets);
        }
        let origin = left.len();
        let mut letters = left.letters;
        letters.extend(right.letters);
        Ok(BiWindow { alphabet: right.alphabet, letters, origin })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Number of letters left of the origin.
    pub fn origin(&self) -> usize {
        self.origin
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `u_i`, if the window covers index `i`.
    pub fn get(&self, i: i64) -> Option<Letter> {
        let pos = i.checked_add(self.origin as i64)?;
        usize::try_from(pos).ok().and_then(|p| self.letters.get(p).copied())
    }

    /// Smallest covered index (`-m`).
    pub fn start(&self) -> i64 {
        -(self.origin as i64)
    }

    /// One past the largest covered index.
    pub fn end(&self) -> i64 {
        (self.letters.len() - self.origin) as i64
    }

    pub fn left(&self) -> Word {
        Word { alphabet: self.alphabet, letters: self.letters[..self.origin].to_vec() }
    }

    pub fn right(&self) -> Word {
        Word { alphabet: self.alphabet, letters: self.letters[self.origin..].to_vec() }
    }

    pub fn to_word(&self) -> Word {
        Word { alphabet: self.alphabet, letters: self.letters.clone() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }
}

impl AsRef<[Letter]> for BiWindow {
    fn as_ref(&self) -> &[Letter] {
        &self.letters
    }
}

/// `<left>|<right>`.
impl fmt::Display for BiWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.left(), self.right())
    }
}

impl FromStr for BiWindow {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (l, r) = s.split_once('|').ok_or(WordError::BadWindow)?;
        if r.contains('|') {
            return Err(WordError::BadWindow);
        }
        let alphabet = infer_alphabet(&format!("{l}{r}"))?.ok_or(WordError::EmptyLiteral)?;
        BiWindow::new(Word::parse_in(alphabet, l)?, Word::parse_in(alphabet, r)?)
    }
}

/// All distinct length-`n` blocks of `w`; `{ε}` for `n = 0`, empty if `n > |w|`.
pub fn factors(w: &[Letter], n: usize) -> BTreeSet<Vec<Letter>> {
    if n > w.len() {
        return BTreeSet::new();
    }
    w.windows(n.max(1))
        .map(|win| win[..n].to_vec())
        .chain(std::iter::once(Vec::new()).filter(|_| n == 0))
        .collect()
}

/// `C(1), …, C(n_max)` for the finite window `w`.
///
/// Start positions are sorted once by their suffix truncated to `n_max`
/// letters; for each `n`, equal length-`n` prefixes are then contiguous and
/// distinct factors are counted by comparing neighbours. Entries for
/// `n > |w|` are zero.
pub fn complexity_profile(w: &[Letter], n_max: usize) -> Vec<usize> {
    let len = w.len();
    let mut starts: Vec<usize> = (0..len).collect();
    starts.sort_unstable_by(|&i, &j| w[i..len.min(i + n_max)].cmp(&w[j..len.min(j + n_max)]));
    (1..=n_max)
        .map(|n| {
            let mut count = 0;
            let mut prev: Option<&[Letter]> = None;
            for &i in &starts {
                if i + n > len {
                    continue;
                }
                let block = &w[i..i + n];
                if prev != Some(block) {
                    count += 1;
                    prev = Some(block);
                }
            }
            count
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileClass {
    /// `C(n) = n + 1` on every measured `n`.
    SturmianConsistent,
    /// `C(n) = 2n + 1` on every measured `n`.
    ThreeIetConsistent,
    Other,
}

impl fmt::Display for ProfileClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProfileClass::SturmianConsistent => "sturmian_consistent",
            ProfileClass::ThreeIetConsistent => "threeiet_consistent",
            ProfileClass::Other => "other",
        })
    }
}

/// Classifies a profile whose first entry is `C(1)`. An empty profile is `Other`.
pub fn classify_profile(profile: &[usize]) -> ProfileClass {
    let matches = |f: fn(usize) -> usize| {
        !profile.is_empty() && profile.iter().enumerate().all(|(i, &c)| c == f(i + 1))
    };
    if matches(|n| n + 1) {
        ProfileClass::SturmianConsistent
    } else if matches(|n| 2 * n + 1) {
        ProfileClass::ThreeIetConsistent
    } else {
        ProfileClass::Other
    }
}
