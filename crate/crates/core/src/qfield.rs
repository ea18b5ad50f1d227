//! Exact arithmetic in real quadratic fields `Q(√d)`.
//!
//! A [`Quadratic`] is stored canonically as `a + b√d` with rational `a`, `b`
//! and a squarefree radicand `d ≥ 2`. Rational values carry no radicand, so
//! they combine with elements of every field. Binary operations between two
//! irrational values of different fields are rejected.
//!
//! Comparisons never touch floating point: the sign of `a + b√d` is decided
//! by comparing `a²` with `b²d`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number (always reduced, positive denominator).
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QfieldError {
    #[error("operands live in different quadratic fields Q(sqrt({left})) and Q(sqrt({right}))")]
    MixedFields { left: u64, right: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("basis element is rational; (1, eps) is not a basis")]
    RationalBase,
    #[error("cannot parse quadratic literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },
}

/// An element `a + b√d` of a real quadratic field.
///
/// Invariant: `b ≠ 0` implies `d` squarefree and `≥ 2`; `b = 0` implies `d = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quadratic {
    a: Rational,
    b: Rational,
    d: u64,
}

/// Splits `n` as `s² · core` with `core` squarefree.
fn squarefree_split(mut n: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut core = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        let mut exp = 0u32;
        while n.is_multiple_of(p) {
            n /= p;
            exp += 1;
        }
        square *= p.pow(exp / 2);
        if exp % 2 == 1 {
            core *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (square, core * n)
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl Quadratic {
    /// Builds `a + b√radicand` in canonical form. Square factors of the
    /// radicand are absorbed into `b`; a perfect square folds into `a`.
    ///
    /// Panics if `radicand` is zero.
    pub fn new(a: Rational, b: Rational, radicand: u64) -> Self {
        assert!(radicand >= 1, "radicand must be positive");
        let (square, core) = squarefree_split(radicand);
        let b = b * Rational::from_integer(BigInt::from(square));
        if core == 1 {
            Self::rational(a + b)
        } else {
            Self::canonical(a, b, core)
        }
    }

    fn canonical(a: Rational, b: Rational, d: u64) -> Self {
        if b.is_zero() {
            Quadratic { a, b, d: 1 }
        } else {
            Quadratic { a, b, d }
        }
    }

    pub fn rational(a: Rational) -> Self {
        Quadratic { a, b: Rational::zero(), d: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(rat(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `√n`, reduced.
    pub fn sqrt(n: u64) -> Self {
        Self::new(Rational::zero(), Rational::one(), n)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_coeff(&self) -> &Rational {
        &self.b
    }

    /// The squarefree radicand, or `None` for rational values.
    pub fn radicand(&self) -> Option<u64> {
        (!self.b.is_zero()).then_some(self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.a.is_integer()
    }

    /// Whether `self` lies in `Q(√d)` for the radicand of `other`
    /// (rationals belong to every field).
    pub fn same_field(&self, other: &Quadratic) -> bool {
        common_radicand(self, other).is_ok()
    }

    pub fn conjugate(&self) -> Self {
        Quadratic { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    /// `x + x'`.
    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    /// `x · x'`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * rat(self.d as i64)
    }

    /// Exact sign, `-1`, `0` or `+1`.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: compare a² with b²d. Equality is impossible for
        // squarefree d ≥ 2.
        let lhs = self.a.numer() * self.b.denom();
        let rhs = self.b.numer() * self.a.denom();
        if &lhs * &lhs > &rhs * &rhs * BigInt::from(self.d) {
            sa
        } else {
            sb
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact comparison; fails only for irrational values of different fields.
    pub fn try_cmp(&self, other: &Quadratic) -> Result<Ordering, QfieldError> {
        Ok(self.try_sub(other)?.signum().cmp(&0))
    }

    /// Greatest integer `≤ self`.
    pub fn floor(&self) -> BigInt {
        let mut k = self.a.floor().to_integer();
        if !self.b.is_zero() {
            // floor(√x) = isqrt(floor(x)) for x ≥ 0.
            let b2d = &self.b * &self.b * rat(self.d as i64);
            let root = b2d.floor().to_integer().sqrt();
            k += if self.b.is_positive() { root } else { -root - 1 };
        }
        // The estimate is off by at most one in either direction.
        while (self - &Quadratic::rational(Rational::from_integer(k.clone()))).signum() < 0 {
            k -= 1;
        }
        loop {
            let next: BigInt = &k + 1u32;
            if (self - &Quadratic::rational(Rational::from_integer(next.clone()))).signum() >= 0 {
                k = next;
            } else {
                break;
            }
        }
        k
    }

    pub fn try_add(&self, rhs: &Quadratic) -> Result<Quadratic, QfieldError> {
        let d = common_radicand(self, rhs)?;
        Ok(Self::canonical(&self.a + &rhs.a, &self.b + &rhs.b, d))
    }

    pub fn try_sub(&self, rhs: &Quadratic) -> Result<Quadratic, QfieldError> {
        let d = common_radicand(self, rhs)?;
        Ok(Self::canonical(&self.a - &rhs.a, &self.b - &rhs.b, d))
    }

    pub fn try_mul(&self, rhs: &Quadratic) -> Result<Quadratic, QfieldError> {
        let d = common_radicand(self, rhs)?;
        let dr = rat(d as i64);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dr;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(Self::canonical(a, b, d))
    }

    pub fn try_div(&self, rhs: &Quadratic) -> Result<Quadratic, QfieldError> {
        if rhs.is_zero() {
            return Err(QfieldError::DivisionByZero);
        }
        common_radicand(self, rhs)?;
        let n = rhs.norm();
        let num = self.try_mul(&rhs.conjugate())?;
        Ok(Self::canonical(num.a / &n, num.b / &n, num.d))
    }

    pub fn recip(&self) -> Result<Quadratic, QfieldError> {
        Quadratic::one().try_div(self)
    }

    pub fn scale(&self, k: &Rational) -> Quadratic {
        Self::canonical(&self.a * k, &self.b * k, self.d)
    }

    /// Minimal polynomial over `Q`, monic, coefficients listed from the
    /// leading term down: `[1, -a]` or `[1, -trace, norm]`.
    pub fn minimal_polynomial(&self) -> Vec<Rational> {
        if self.is_rational() {
            vec![Rational::one(), -self.a.clone()]
        } else {
            vec![Rational::one(), -self.trace(), self.norm()]
        }
    }

    /// Irrational algebraic integer of norm ±1.
    pub fn is_quadratic_unit(&self) -> bool {
        if self.is_rational() {
            return false;
        }
        let trace = self.trace();
        let norm = self.norm();
        trace.is_integer() && norm.is_integer() && norm.abs().is_one()
    }

    /// Quadratic irrational in `(0, 1)` whose conjugate lies outside `(0, 1)`.
    pub fn is_sturm(&self) -> bool {
        let in_unit = |x: &Quadratic| x.signum() > 0 && (x - &Quadratic::one()).signum() < 0;
        !self.is_rational() && in_unit(self) && !in_unit(&self.conjugate())
    }

    /// The rationals `(s, t)` with `self = s + t·eps`.
    pub fn coords_in_basis(&self, eps: &Quadratic) -> Result<(Rational, Rational), QfieldError> {
        if eps.is_rational() {
            return Err(QfieldError::RationalBase);
        }
        common_radicand(self, eps)?;
        let t = &self.b / &eps.b;
        let s = &self.a - &t * &eps.a;
        Ok((s, t))
    }

    /// Membership in `Z[eps] = Z + eps·Z`.
    pub fn in_z_eps(&self, eps: &Quadratic) -> Result<bool, QfieldError> {
        let (s, t) = self.coords_in_basis(eps)?;
        Ok(s.is_integer() && t.is_integer())
    }

    /// `floor(self · 10^k)`, computed exactly.
    pub fn scaled_floor(&self, k: u32) -> BigInt {
        let scale = Rational::from_integer(BigInt::from(10u32).pow(k));
        self.scale(&scale).floor()
    }

    /// Decimal approximation with `sig` significant digits, rounded half up
    /// on the magnitude. Display-only.
    pub fn approx(&self, sig: u32) -> String {
        assert!(sig >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.signum() < 0;
        let y = self.abs();
        // Decimal exponent e with 10^e <= y < 10^(e+1).
        let mut e: i64 = if (&y - &Quadratic::one()).signum() >= 0 {
            y.floor().to_string().len() as i64 - 1
        } else {
            let mut k = 1u32;
            while y.scaled_floor(k).is_zero() {
                k += 1;
            }
            -(k as i64)
        };
        let shift = sig as i64 - 1 - e;
        let scaled = if shift >= 0 {
            y.scale(&Rational::from_integer(BigInt::from(10u32).pow(shift as u32)))
        } else {
            y.scale(&Rational::new(BigInt::one(), BigInt::from(10u32).pow((-shift) as u32)))
        };
        let half = Quadratic::from_ratio(1, 2);
        let mut m = (&scaled + &half).floor();
        if m == BigInt::from(10u32).pow(sig) {
            m /= 10;
            e += 1;
        }
        let digits = m.to_string();
        let body = if (-5..sig as i64).contains(&e) {
            if e >= 0 {
                let (int, frac) = digits.split_at(e as usize + 1);
                let frac = frac.trim_end_matches('0');
                if frac.is_empty() {
                    int.to_string()
                } else {
                    format!("{int}.{frac}")
                }
            } else {
                let zeros = "0".repeat((-e - 1) as usize);
                format!("0.{zeros}{}", digits.trim_end_matches('0'))
            }
        } else {
            let (lead, rest) = digits.split_at(1);
            let rest = rest.trim_end_matches('0');
            if rest.is_empty() {
                format!("{lead}e{e}")
            } else {
                format!("{lead}.{rest}e{e}")
            }
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

fn common_radicand(x: &Quadratic, y: &Quadratic) -> Result<u64, QfieldError> {
    match (x.radicand(), y.radicand()) {
        (None, None) => Ok(1),
        (Some(d), None) | (None, Some(d)) => Ok(d),
        (Some(l), Some(r)) if l == r => Ok(l),
        (Some(left), Some(right)) => Err(QfieldError::MixedFields { left, right }),
    }
}

/// Binary arithmetic with explicit operation selection; the `Result`-returning
/// counterpart of the operator impls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

/// `Neg` ignores `y`.
pub fn arith(op: ArithOp, x: &Quadratic, y: &Quadratic) -> Result<Quadratic, QfieldError> {
    match op {
        ArithOp::Add => x.try_add(y),
        ArithOp::Sub => x.try_sub(y),
        ArithOp::Mul => x.try_mul(y),
        ArithOp::Div => x.try_div(y),
        ArithOp::Neg => Ok(-x),
    }
}

// Operator impls panic on mixed fields; callers that cannot rule this out use
// the `try_*` methods.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Quadratic> for &Quadratic {
            type Output = Quadratic;
            fn $method(self, rhs: &Quadratic) -> Quadratic {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Quadratic> for Quadratic {
            type Output = Quadratic;
            fn $method(self, rhs: Quadratic) -> Quadratic {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Quadratic> for Quadratic {
            type Output = Quadratic;
            fn $method(self, rhs: &Quadratic) -> Quadratic {
                (&self).$method(rhs)
            }
        }
        impl $trait<Quadratic> for &Quadratic {
            type Output = Quadratic;
            fn $method(self, rhs: Quadratic) -> Quadratic {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for &Quadratic {
    type Output = Quadratic;
    fn neg(self) -> Quadratic {
        Quadratic { a: -self.a.clone(), b: -self.b.clone(), d: self.d }
    }
}

impl Neg for Quadratic {
    type Output = Quadratic;
    fn neg(self) -> Quadratic {
        -&self
    }
}

/// Partial because irrational values of different fields are incomparable here.
impl PartialOrd for Quadratic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

impl From<i64> for Quadratic {
    fn from(n: i64) -> Self {
        Quadratic::from_int(n)
    }
}

impl From<Rational> for Quadratic {
    fn from(r: Rational) -> Self {
        Quadratic::rational(r)
    }
}

/// Writes the literal grammar `RAT` or `RAT(+|-)RAT*sqrt(d)`.
impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a)?;
        if !self.b.is_zero() {
            let sign = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}*sqrt({})", self.b.abs(), self.d)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit());
    let value = match body.split_once('/') {
        Some((n, d)) if digits(n) && digits(d) => {
            let den: BigInt = d.parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Rational::new(n.parse().ok()?, den)
        }
        None if digits(body) => Rational::from_integer(body.parse().ok()?),
        _ => return None,
    };
    Some(if neg { -value } else { value })
}

/// Parses `RAT` or `RAT(+|-)RAT*sqrt(digits)`, e.g. `3/2-1/2*sqrt(5)`.
/// A bare `RAT*sqrt(digits)` is accepted as well.
impl FromStr for Quadratic {
    type Err = QfieldError;

    fn from_str(literal: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| QfieldError::Parse {
            literal: literal.to_string(),
            reason: reason.to_string(),
        };
        let s = literal.trim();
        let Some(pos) = s.find("*sqrt(") else {
            return parse_rational(s).map(Quadratic::rational).ok_or_else(|| err("bad rational"));
        };
        let radical = s[pos + "*sqrt(".len()..]
            .strip_suffix(')')
            .ok_or_else(|| err("unterminated sqrt("))?;
        if radical.is_empty() || !radical.bytes().all(|c| c.is_ascii_digit()) {
            return Err(err("radicand must be decimal digits"));
        }
        let radicand: u64 = radical.parse().map_err(|_| err("radicand out of range"))?;
        if radicand == 0 {
            return Err(err("radicand must be positive"));
        }
        let head = &s[..pos];
        // The first RAT may only carry a leading '-', so the separator is the
        // first sign after position 0.
        let split = head.char_indices().skip(1).find(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i);
        let (a, b) = match split {
            Some(i) => {
                let a = parse_rational(&head[..i]).ok_or_else(|| err("bad rational part"))?;
                let coeff = parse_rational(&head[i + 1..]).ok_or_else(|| err("bad sqrt coefficient"))?;
                let b = if head.as_bytes()[i] == b'-' { -coeff } else { coeff };
                (a, b)
            }
            None => (
                Rational::zero(),
                parse_rational(head).ok_or_else(|| err("bad sqrt coefficient"))?,
            ),
        };
        Ok(Quadratic::new(a, b, radicand))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Quadratic {
        s.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn canonical_construction() {
        let x = Quadratic::new(r(1, 2), r(-1, 4), 8);
        assert_eq!(x.rational_part(), &r(1, 2));
        assert_eq!(x.irrational_coeff(), &r(-1, 2));
        assert_eq!(x.radicand(), Some(2));
        assert_eq!(Quadratic::new(r(0, 1), r(2, 1), 9), Quadratic::from_int(6));
        let half = Quadratic::new(r(3, 6), r(0, 1), 5);
        assert_eq!(half, Quadratic::from_ratio(1, 2));
        assert_eq!(half.radicand(), None);
        assert_eq!(Quadratic::new(r(0, 1), r(1, 1), 72), q("0+6*sqrt(2)"));
    }

    #[test]
    fn field_arithmetic_examples() {
        let golden = q("1/2+1/2*sqrt(5)");
        assert_eq!(&golden * &golden, q("3/2+1/2*sqrt(5)"));
        let x = q("7/3-2/5*sqrt(7)");
        assert_eq!(&x + &x.conjugate(), Quadratic::rational(r(14, 3)));
        assert_eq!(Quadratic::one() / Quadratic::sqrt(2), q("1/2*sqrt(2)"));
        assert_eq!(
            Quadratic::sqrt(2).try_add(&Quadratic::sqrt(3)),
            Err(QfieldError::MixedFields { left: 2, right: 3 })
        );
        assert_eq!(Quadratic::one().try_div(&Quadratic::zero()), Err(QfieldError::DivisionByZero));
        assert_eq!(arith(ArithOp::Neg, &golden, &Quadratic::zero()).unwrap(), -&golden);
        // rationals combine with any field
        assert!(Quadratic::from_int(3).try_mul(&Quadratic::sqrt(3)).is_ok());
    }

    #[test]
    fn exact_sign() {
        assert_eq!(q("3-2*sqrt(2)").signum(), 1);
        assert_eq!(q("2-1*sqrt(5)").signum(), -1);
        let x = q("-5/7+3*sqrt(11)");
        assert_eq!((&x - &x).signum(), 0);
        assert_eq!(q("-3+2*sqrt(2)").signum(), -1);
        assert_eq!(q("0-1*sqrt(3)").signum(), -1);
        assert!(q("3/2-1/2*sqrt(5)") < Quadratic::from_ratio(1, 2));
    }

    #[test]
    fn conjugation() {
        assert_eq!(q("3/2-1/2*sqrt(5)").conjugate(), q("3/2+1/2*sqrt(5)"));
        assert_eq!(Quadratic::from_ratio(7, 3).conjugate(), Quadratic::from_ratio(7, 3));
        let x = q("-4/9+13/2*sqrt(6)");
        assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn floor_values() {
        assert_eq!(Quadratic::sqrt(2).floor(), BigInt::from(1));
        assert_eq!((-Quadratic::sqrt(2)).floor(), BigInt::from(-2));
        assert_eq!(q("3/2+1/2*sqrt(5)").floor(), BigInt::from(2));
        assert_eq!(Quadratic::from_int(-4).floor(), BigInt::from(-4));
        assert_eq!(q("0+2*sqrt(4)").floor(), BigInt::from(4));
        assert_eq!(q("1000001/1000000-1*sqrt(2)").floor(), BigInt::from(-1));
    }

    #[test]
    fn basis_coordinates() {
        let eps = q("3/2-1/2*sqrt(5)");
        assert_eq!(eps.coords_in_basis(&eps).unwrap(), (r(0, 1), r(1, 1)));
        let l = q("1/2+1/10*sqrt(5)");
        assert_eq!(l.coords_in_basis(&eps).unwrap(), (r(4, 5), r(-1, 5)));
        assert_eq!(Quadratic::from_int(7).coords_in_basis(&eps).unwrap(), (r(7, 1), r(0, 1)));
        assert_eq!(
            l.coords_in_basis(&Quadratic::from_ratio(1, 3)),
            Err(QfieldError::RationalBase)
        );
        assert!(matches!(
            Quadratic::sqrt(2).coords_in_basis(&eps),
            Err(QfieldError::MixedFields { .. })
        ));
    }

    #[test]
    fn z_eps_membership() {
        let eps = q("3/2-1/2*sqrt(5)");
        let x = Quadratic::from_int(2) - Quadratic::from_int(3) * &eps;
        assert!(x.in_z_eps(&eps).unwrap());
        assert!(!q("1/2+1/10*sqrt(5)").in_z_eps(&eps).unwrap());
        assert!(Quadratic::from_int(7).in_z_eps(&eps).unwrap());
    }

    #[test]
    fn sturm_numbers() {
        assert!(q("3/2-1/2*sqrt(5)").is_sturm());
        assert!(!q("1/2+1/10*sqrt(5)").is_sturm());
        assert!(!Quadratic::from_ratio(1, 2).is_sturm());
        assert!(q("0+1/2*sqrt(2)").is_sturm());
    }

    #[test]
    fn minimal_polynomials_and_units() {
        let lam = q("3/2+1/2*sqrt(5)");
        assert_eq!(lam.minimal_polynomial(), vec![r(1, 1), r(-3, 1), r(1, 1)]);
        assert_eq!(Quadratic::sqrt(2).minimal_polynomial(), vec![r(1, 1), r(0, 1), r(-2, 1)]);
        assert_eq!(Quadratic::from_int(5).minimal_polynomial(), vec![r(1, 1), r(-5, 1)]);
        assert!(lam.is_quadratic_unit());
        assert!(!q("2+1*sqrt(2)").is_quadratic_unit());
        assert!(!Quadratic::from_int(5).is_quadratic_unit());
        assert!(q("1+1*sqrt(2)").is_quadratic_unit());
        assert!(!q("1/2+1/2*sqrt(2)").is_quadratic_unit());
    }

    #[test]
    fn literal_round_trip() {
        for s in ["3/2-1/2*sqrt(5)", "-1/3", "0+1/2*sqrt(2)", "7", "-2+3*sqrt(7)"] {
            assert_eq!(q(s).to_string(), s);
        }
        assert_eq!(q("1/2*sqrt(8)"), Quadratic::sqrt(2));
        assert_eq!(q("1--1*sqrt(5)"), q("1+1*sqrt(5)"));
        for bad in ["", "1/0", "x", "1+2*sqrt(", "1+2*sqrt(0)", "1+*sqrt(3)", "--1"] {
            assert!(bad.parse::<Quadratic>().is_err(), "{bad}");
        }
    }

    #[test]
    fn decimal_display() {
        assert_eq!(q("3/2+1/2*sqrt(5)").approx(15), "2.61803398874989");
        assert_eq!(Quadratic::from_ratio(-1, 3).approx(15), "-0.333333333333333");
        assert_eq!(Quadratic::from_int(1).approx(15), "1");
        assert_eq!(Quadratic::from_ratio(1, 1000000000).approx(15), "1e-9");
        assert_eq!(Quadratic::from_ratio(9999999999999999, 1).approx(15), "1e16");
        assert_eq!(Quadratic::sqrt(2).scaled_floor(5), BigInt::from(141421));
    }
}
