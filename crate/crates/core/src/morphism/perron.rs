use super::{IncidenceMatrix, MorphismError};
use crate::qfield::{Quadratic, Rational};

use num_bigint::BigInt;
use num_traits::One;

/// Exact spectral data of a 2×2 or 3×3 incidence matrix whose dominant
/// eigenvalue is a quadratic irrational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerronData {
    /// Monic `det(xI − M)`, leading coefficient first.
    pub char_poly: Vec<i64>,
    /// Dominant eigenvalue `Λ`.
    pub dominant: Quadratic,
    /// Its field conjugate `Λ′`.
    pub conjugate: Quadratic,
    /// Integer root split off a cubic characteristic polynomial.
    pub rational_root: Option<i64>,
    /// Right eigenvector for `Λ`, first component 1.
    pub dominant_vector: Vec<Quadratic>,
    /// Right eigenvector for `Λ′` (componentwise conjugate of `dominant_vector`).
    pub conjugate_vector: Vec<Quadratic>,
}

impl PerronData {
    pub fn of_matrix(m: &IncidenceMatrix) -> Result<PerronData, MorphismError> {
        if !m.is_square() || !(2..=3).contains(&m.rows()) {
            return Err(MorphismError::NotEndomorphism);
        }
        let char_poly = characteristic_polynomial(m);
        // Reduce to a monic quadratic x² + s x + t.
        let (s, t, rational_root) = if char_poly.len() == 3 {
            (char_poly[1], char_poly[2], None)
        } else {
            let (p, q, r) = (char_poly[1], char_poly[2], char_poly[3]);
            let k = integer_root(p, q, r).ok_or(MorphismError::NotQuadratic)?;
            let s = p + k;
            (s, q + k * s, Some(k))
        };
        let disc = s * s - 4 * t;
        if disc < 0 || is_square(disc) {
            return Err(MorphismError::NotQuadratic);
        }
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let minus_half_s = Rational::new(BigInt::from(-s), BigInt::from(2));
        let dominant = Quadratic::new(minus_half_s, half, disc as u64);
        let conjugate = dominant.conjugate();
        if conjugate.abs() >= dominant {
            return Err(MorphismError::NoDominantEigenvalue);
        }
        if let Some(k) = rational_root {
            if Quadratic::from_int(k.abs()) >= dominant {
                return Err(if k > 0 { MorphismError::NotQuadratic } else { MorphismError::NoDominantEigenvalue });
            }
        }
        let mut dominant_vector = null_vector(m, &dominant).ok_or(MorphismError::NoDominantEigenvalue)?;
        let first = dominant_vector[0].clone();
        if first.is_zero() {
            return Err(MorphismError::NoDominantEigenvalue);
        }
        for v in &mut dominant_vector {
            *v = &*v / &first;
        }
        let conjugate_vector = dominant_vector.iter().map(Quadratic::conjugate).collect();
        Ok(PerronData { char_poly, dominant, conjugate, rational_root, dominant_vector, conjugate_vector })
    }
}

/// `M · v` over `Q(√d)`.
pub(crate) fn mat_vec(m: &IncidenceMatrix, v: &[Quadratic]) -> Vec<Quadratic> {
    (0..m.rows())
        .map(|r| {
            (0..m.cols()).fold(Quadratic::zero(), |acc, c| acc + Quadratic::from_int(m.get(r, c)) * &v[c])
        })
        .collect()
}

fn characteristic_polynomial(m: &IncidenceMatrix) -> Vec<i64> {
    let g = |r, c| m.get(r, c);
    if m.rows() == 2 {
        let det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
        vec![1, -(g(0, 0) + g(1, 1)), det]
    } else {
        let trace = g(0, 0) + g(1, 1) + g(2, 2);
        let minor = |i, j| g(i, i) * g(j, j) - g(i, j) * g(j, i);
        let minors = minor(0, 1) + minor(0, 2) + minor(1, 2);
        let det = g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1))
            - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
            + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
        vec![1, -trace, minors, -det]
    }
}

/// An integer root of `x³ + p x² + q x + r`, if one exists. Any rational root
/// of a monic integer polynomial is an integer dividing `r`.
fn integer_root(p: i64, q: i64, r: i64) -> Option<i64> {
    let eval = |x: i64| {
        let x = x as i128;
        ((x + p as i128) * x + q as i128) * x + r as i128
    };
    if r == 0 {
        return Some(0);
    }
    let n = r.unsigned_abs();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            for cand in [d, n / d] {
                for x in [cand as i64, -(cand as i64)] {
                    if eval(x) == 0 {
                        return Some(x);
                    }
                }
            }
        }
        d += 1;
    }
    None
}

fn is_square(n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let r = (n as f64).sqrt() as i64;
    (r.saturating_sub(1)..=r + 1).any(|x| x >= 0 && x * x == n)
}

/// A nonzero vector in the kernel of `M − λI`, assuming that kernel is a line.
fn null_vector(m: &IncidenceMatrix, lambda: &Quadratic) -> Option<Vec<Quadratic>> {
    let n = m.rows();
    let a: Vec<Vec<Quadratic>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let e = Quadratic::from_int(m.get(r, c));
                    if r == c {
                        e - lambda
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    let candidates: Vec<Vec<Quadratic>> = if n == 2 {
        a.iter().map(|row| vec![row[1].clone(), -&row[0]]).collect()
    } else {
        [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| cross(&a[i], &a[j]))
            .collect()
    };
    let v = candidates.into_iter().find(|v| v.iter().any(|x| !x.is_zero()))?;
    let residual_zero = a.iter().all(|row| {
        row.iter().zip(&v).fold(Quadratic::zero(), |acc, (x, y)| acc + x * y).is_zero()
    });
    residual_zero.then_some(v)
}

fn cross(u: &[Quadratic], v: &[Quadratic]) -> Vec<Quadratic> {
    vec![
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

impl PerronData {
    /// Re-checks `M·v = Λ·v` and `M·v′ = Λ′·v′` exactly.
    pub fn verify(&self, m: &IncidenceMatrix) -> bool {
        let scaled = |lambda: &Quadratic, v: &[Quadratic]| v.iter().map(|x| lambda * x).collect::<Vec<_>>();
        mat_vec(m, &self.dominant_vector) == scaled(&self.dominant, &self.dominant_vector)
            && mat_vec(m, &self.conjugate_vector) == scaled(&self.conjugate, &self.conjugate_vector)
    }

    /// Whether `Λ′ > 0`.
    pub fn conjugate_positive(&self) -> bool {
        self.conjugate.signum() > 0
    }

    pub fn characteristic_value(&self, x: &Quadratic) -> Quadratic {
        self.char_poly
            .iter()
            .fold(Quadratic::zero(), |acc, &c| acc * x + Quadratic::from_int(c))
    }
}
