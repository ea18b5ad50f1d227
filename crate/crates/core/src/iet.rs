//! Exact simulation of the three-interval exchange with permutation (3,2,1)
//! and of the two-interval exchanges coding its `σ01` and `σ10` images.
//!
//! With parameters `(ε, l, c)` the domain `I = [c, c+l)` splits into
//!
//! ```text
//! I_A = [c, c+l−1+ε)       T(x) = x + 1 − ε
//! I_B = [c+l−1+ε, c+ε)     T(x) = x + 1 − 2ε
//! I_C = [c+ε, c+l)         T(x) = x − ε
//! ```
//!
//! and the images are `T(I_C) = [c, c+l−ε)`, `T(I_B) = [c+l−ε, c+1−ε)`,
//! `T(I_A) = [c+1−ε, c+l)`, which is what [`IetParams::inverse`] inverts.
//! The orbit always starts at `x₀ = 0`.

use std::fmt;

use thiserror::Error;

use crate::qfield::Quadratic;
use crate::words::{Alphabet, BiWindow, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IetError {
    #[error("parameters must lie in a single quadratic field")]
    MixedFields,
    #[error("eps must be irrational")]
    RationalEps,
    #[error("eps must lie in (0, 1)")]
    EpsOutOfRange,
    #[error("l must satisfy max(eps, 1-eps) < l < 1")]
    LengthOutOfRange,
    #[error("0 must lie in [c, c+l)")]
    OriginOutsideDomain,
    #[error("slope must be an irrational number in (0, 1)")]
    BadSlope,
    #[error("intercept must lie in [0, 1)")]
    InterceptOutOfRange,
    #[error("point {0} lies outside the domain")]
    OutsideDomain(Box<Quadratic>),
}

/// Parameters `(ε, l, c)` of a three-interval exchange, validated on construction.
#[derive(Clone, PartialEq, Eq)]
pub struct IetParams {
    eps: Quadratic,
    l: Quadratic,
    c: Quadratic,
    cuts: Cuts,
}

/// Interval endpoints of the exchange and of its image partition.
#[derive(Clone, PartialEq, Eq)]
struct Cuts {
    b_start: Quadratic,
    c_start: Quadratic,
    end: Quadratic,
    c_image_end: Quadratic,
    b_image_end: Quadratic,
}

impl fmt::Debug for IetParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IetParams").field("eps", &self.eps).field("l", &self.l).field("c", &self.c).finish()
    }
}

impl IetParams {
    pub fn new(eps: Quadratic, l: Quadratic, c: Quadratic) -> Result<Self, IetError> {
        if !(eps.same_field(&l) && eps.same_field(&c) && l.same_field(&c)) {
            return Err(IetError::MixedFields);
        }
        if eps.is_rational() {
            return Err(IetError::RationalEps);
        }
        let one = Quadratic::one();
        if eps.signum() <= 0 || eps >= one {
            return Err(IetError::EpsOutOfRange);
        }
        let one_minus = &one - &eps;
        let lower = if eps > one_minus { &eps } else { &one_minus };
        if l <= *lower || l >= one {
            return Err(IetError::LengthOutOfRange);
        }
        if c.signum() > 0 || (&c + &l).signum() <= 0 {
            return Err(IetError::OriginOutsideDomain);
        }
        let cuts = Cuts {
            b_start: &c + &l - &one + &eps,
            c_start: &c + &eps,
            end: &c + &l,
            c_image_end: &c + &l - &eps,
            b_image_end: &c + &one - &eps,
        };
        Ok(IetParams { eps, l, c, cuts })
    }

    pub fn eps(&self) -> &Quadratic {
        &self.eps
    }

    pub fn l(&self) -> &Quadratic {
        &self.l
    }

    pub fn c(&self) -> &Quadratic {
        &self.c
    }

    /// Left end of `I_B`, i.e. `c + l − 1 + ε`.
    pub fn b_start(&self) -> Quadratic {
        self.cuts.b_start.clone()
    }

    /// Left end of `I_C`, i.e. `c + ε`.
    pub fn c_start(&self) -> Quadratic {
        self.cuts.c_start.clone()
    }

    pub fn domain_end(&self) -> Quadratic {
        self.cuts.end.clone()
    }

    /// `(start, end)` of the half-open interval coded by `letter`.
    pub fn interval(&self, letter: Letter) -> (Quadratic, Quadratic) {
        match letter {
            Letter::A => (self.c.clone(), self.b_start()),
            Letter::B => (self.b_start(), self.c_start()),
            Letter::C => (self.c_start(), self.domain_end()),
            _ => panic!("{letter} is not a ternary letter"),
        }
    }

    pub fn letter_of(&self, x: &Quadratic) -> Result<Letter, IetError> {
        if *x < self.c || *x >= self.cuts.end {
            return Err(IetError::OutsideDomain(Box::new(x.clone())));
        }
        Ok(if *x < self.cuts.b_start {
            Letter::A
        } else if *x < self.cuts.c_start {
            Letter::B
        } else {
            Letter::C
        })
    }

    /// `T(x)` together with the letter of the interval containing `x`.
    pub fn transform(&self, x: &Quadratic) -> Result<(Quadratic, Letter), IetError> {
        let letter = self.letter_of(x)?;
        let one = Quadratic::one();
        let image = match letter {
            Letter::A => x + &one - &self.eps,
            Letter::B => x + &one - &self.eps - &self.eps,
            _ => x - &self.eps,
        };
        Ok((image, letter))
    }

    /// `T⁻¹(y)` together with the letter of the interval containing `T⁻¹(y)`.
    pub fn inverse(&self, y: &Quadratic) -> Result<(Quadratic, Letter), IetError> {
        if *y < self.c || *y >= self.cuts.end {
            return Err(IetError::OutsideDomain(Box::new(y.clone())));
        }
        let one = Quadratic::one();
        Ok(if *y < self.cuts.c_image_end {
            (y + &self.eps, Letter::C)
        } else if *y < self.cuts.b_image_end {
            (y - &one + &self.eps + &self.eps, Letter::B)
        } else {
            (y - &one + &self.eps, Letter::A)
        })
    }

    /// `T^n(0)` for `n ∈ [from, to]`, in index order.
    pub fn orbit(&self, from: i64, to: i64) -> Vec<Quadratic> {
        assert!(from <= 0 && 0 <= to, "window must contain the origin");
        let mut back = Vec::with_capacity((-from) as usize);
        let mut x = Quadratic::zero();
        for _ in from..0 {
            x = self.inverse(&x).expect("orbit stays in the domain").0;
            back.push(x.clone());
        }
        back.reverse();
        let mut x = Quadratic::zero();
        back.push(x.clone());
        for _ in 0..to {
            x = self.transform(&x).expect("orbit stays in the domain").0;
            back.push(x.clone());
        }
        back
    }

    /// Coding `u_n` of the orbit of 0 for `n ∈ [from, to]`.
    pub fn code(&self, from: i64, to: i64) -> BiWindow {
        let letters: Vec<Letter> = self
            .orbit(from, to)
            .iter()
            .map(|x| self.letter_of(x).expect("orbit stays in the domain"))
            .collect();
        split_window(Alphabet::Ternary, letters, (-from) as usize)
    }

    /// Non-degenerate iff `l ∉ Z[ε]`.
    pub fn is_nondegenerate(&self) -> bool {
        !self.l.in_z_eps(&self.eps).expect("validated parameters share a field")
    }

    /// Slope and intercept of the Sturmian word `σ01(u)` or `σ10(u)`:
    /// `(ε, −c)` and `(ε, 1 − c − l)` respectively.
    pub fn sturmian_params(&self, side: SturmianSide) -> SturmianParams {
        let beta = match side {
            SturmianSide::Sigma01 => -&self.c,
            SturmianSide::Sigma10 => Quadratic::one() - &self.c - &self.l,
        };
        SturmianParams::new(self.eps.clone(), beta).expect("intercepts of valid parameters lie in [0, 1)")
    }

    /// The induced exchange `T01` on `[c, c+1)`.
    pub fn t01(&self) -> TwoIntervalExchange {
        TwoIntervalExchange { start: self.c.clone(), split: self.eps.clone() }
    }

    /// The induced exchange `T10` on `[c+l−1, c+l)`.
    pub fn t10(&self) -> TwoIntervalExchange {
        TwoIntervalExchange { start: &self.c + &self.l - Quadratic::one(), split: self.eps.clone() }
    }
}

impl fmt::Display for IetParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eps={} l={} c={}", self.eps, self.l, self.c)
    }
}

fn split_window(alphabet: Alphabet, mut letters: Vec<Letter>, origin: usize) -> BiWindow {
    let right = letters.split_off(origin);
    BiWindow::new(
        Word::new(alphabet, letters).expect("letters of the alphabet"),
        Word::new(alphabet, right).expect("letters of the alphabet"),
    )
    .expect("same alphabet")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SturmianSide {
    Sigma01,
    Sigma10,
}

/// Slope `α` and intercept `β` of a Sturmian word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmianParams {
    alpha: Quadratic,
    beta: Quadratic,
}

impl SturmianParams {
    pub fn new(alpha: Quadratic, beta: Quadratic) -> Result<Self, IetError> {
        if !alpha.same_field(&beta) {
            return Err(IetError::MixedFields);
        }
        if alpha.is_rational() || alpha.signum() <= 0 || alpha >= Quadratic::one() {
            return Err(IetError::BadSlope);
        }
        if beta.signum() < 0 || beta >= Quadratic::one() {
            return Err(IetError::InterceptOutOfRange);
        }
        Ok(SturmianParams { alpha, beta })
    }

    pub fn alpha(&self) -> &Quadratic {
        &self.alpha
    }

    pub fn beta(&self) -> &Quadratic {
        &self.beta
    }

    /// The exchange of `[0, α)` and `[α, 1)` on `[0, 1)`.
    pub fn exchange(&self) -> TwoIntervalExchange {
        TwoIntervalExchange { start: Quadratic::zero(), split: self.alpha.clone() }
    }
}

/// Exchange of `[s, s+α)` (letter 0, shifted by `1 − α`) and `[s+α, s+1)`
/// (letter 1, shifted by `−α`) on `[s, s+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoIntervalExchange {
    pub start: Quadratic,
    pub split: Quadratic,
}

impl TwoIntervalExchange {
    fn in_domain(&self, x: &Quadratic) -> bool {
        *x >= self.start && *x < &self.start + &Quadratic::one()
    }

    pub fn apply(&self, x: &Quadratic) -> Result<(Quadratic, Letter), IetError> {
        if !self.in_domain(x) {
            return Err(IetError::OutsideDomain(Box::new(x.clone())));
        }
        Ok(if *x < &self.start + &self.split {
            (x + Quadratic::one() - &self.split, Letter::Zero)
        } else {
            (x - &self.split, Letter::One)
        })
    }

    /// Inverse map with the letter of the preimage.
    pub fn inverse(&self, y: &Quadratic) -> Result<(Quadratic, Letter), IetError> {
        if !self.in_domain(y) {
            return Err(IetError::OutsideDomain(Box::new(y.clone())));
        }
        let one = Quadratic::one();
        Ok(if *y < &self.start + &one - &self.split {
            (y + &self.split, Letter::One)
        } else {
            (y - &one + &self.split, Letter::Zero)
        })
    }

    /// Coding of the orbit of `x0` for indices `n ∈ [from, to]`.
    pub fn code_from(&self, x0: &Quadratic, from: i64, to: i64) -> Result<BiWindow, IetError> {
        assert!(from <= 0 && 0 <= to, "window must contain the origin");
        let mut left = Vec::with_capacity((-from) as usize);
        let mut x = x0.clone();
        for _ in from..0 {
            let (prev, letter) = self.inverse(&x)?;
            left.push(letter);
            x = prev;
        }
        left.reverse();
        let mut x = x0.clone();
        for _ in 0..=to {
            let (next, letter) = self.apply(&x)?;
            left.push(letter);
            x = next;
        }
        Ok(split_window(Alphabet::Binary, left, (-from) as usize))
    }
}

/// Coding of the orbit of `β` under the exchange of `[0, α)` and `[α, 1)`.
pub fn two_iet_code(s: &SturmianParams, from: i64, to: i64) -> BiWindow {
    s.exchange()
        .code_from(&s.beta, from, to)
        .expect("intercept lies in [0, 1)")
}

/// Checks `T = T01` on `I_A ∪ I_C` and `T = T01²` on `I_B` along the orbit
/// segment `{T^n(0) : |n| ≤ n_max}`.
pub fn check_two_step(p: &IetParams, n_max: i64) -> bool {
    check_two_step_with(p, &p.t01(), n_max)
}

/// [`check_two_step`] against an arbitrary candidate for `T01`.
pub fn check_two_step_with(p: &IetParams, t01: &TwoIntervalExchange, n_max: i64) -> bool {
    p.orbit(-n_max, n_max).iter().all(|x| {
        let (tx, letter) = p.transform(x).expect("orbit point in domain");
        let once = match t01.apply(x) {
            Ok((y, _)) => y,
            Err(_) => return false,
        };
        if letter == Letter::B {
            matches!(t01.apply(&once), Ok((y, _)) if y == tx)
        } else {
            once == tx
        }
    })
}
