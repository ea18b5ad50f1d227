//! Invariance certificates for Sturmian and three-interval words, parameter
//! inference from a substitution, and splitting a ternary substitution into
//! an amicable pair of binary ones.

use std::fmt;

use thiserror::Error;

use crate::amicability::{is_amicable_morphisms, ternarize_morphisms};
use crate::iet::{IetParams, SturmianSide};
use crate::morphism::perron::mat_vec;
use crate::morphism::{sigma01, sigma10, Morphism, MorphismError};
use crate::qfield::Quadratic;
use crate::words::{Alphabet, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("slope must be an irrational number in (0, 1)")]
    SlopeOutOfRange,
    #[error("intercept must lie in [0, 1)")]
    InterceptOutOfRange,
    #[error("parameters give a degenerate word (l lies in Z[eps])")]
    Degenerate,
    #[error("eps must be an irrational number in (0, 1)")]
    EpsOutOfRange,
    #[error("substitution must be a primitive endomorphism of {{A,B,C}}*")]
    NotPrimitive,
    #[error("conjugate of the dominant eigenvalue is not positive")]
    ConjugateNotPositive,
    #[error("matrix condition `{0}` fails")]
    MatrixConditionFailed(Clause),
    #[error("eigenvector for the conjugate eigenvalue has no (1-eps, 1-2eps, -eps) form")]
    NotThreeIetCompatible,
    #[error("neither the substitution nor its square is a ternarization")]
    NotDecomposable,
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

/// The individual conditions a certificate evaluates, in evaluation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    Sturm,
    FieldMembership,
    InterceptBounds,
    OriginBounds,
    EndBounds,
    QuadraticUnit,
    EigenEquation,
    OriginLattice,
    SplitLattice,
    ScalingLattice,
}

impl Clause {
    pub fn name(self) -> &'static str {
        match self {
            Clause::Sturm => "sturm",
            Clause::FieldMembership => "field_membership",
            Clause::InterceptBounds => "intercept_bounds",
            Clause::OriginBounds => "origin_bounds",
            Clause::EndBounds => "end_bounds",
            Clause::QuadraticUnit => "quadratic_unit",
            Clause::EigenEquation => "eigen_equation",
            Clause::OriginLattice => "origin_lattice",
            Clause::SplitLattice => "split_lattice",
            Clause::ScalingLattice => "scaling_lattice",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: bool,
    /// First clause that failed; `None` exactly when `verdict` holds.
    pub failed_clause: Option<Clause>,
    /// Named intermediate values, in the order they were computed.
    pub witnesses: Vec<(String, Quadratic)>,
}

impl Certificate {
    pub fn witness(&self, name: &str) -> Option<&Quadratic> {
        self.witnesses.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

#[derive(Default)]
struct Builder {
    failed: Option<Clause>,
    witnesses: Vec<(String, Quadratic)>,
}

impl Builder {
    fn witness(&mut self, name: &str, value: Quadratic) {
        self.witnesses.push((name.to_string(), value));
    }

    fn clause(&mut self, clause: Clause, holds: bool) {
        if !holds && self.failed.is_none() {
            self.failed = Some(clause);
        }
    }

    fn finish(self) -> Certificate {
        Certificate { verdict: self.failed.is_none(), failed_clause: self.failed, witnesses: self.witnesses }
    }
}

fn in_unit_open(x: &Quadratic) -> bool {
    x.signum() > 0 && *x < Quadratic::one()
}

/// `min{x′, 1−x′}` and `max{x′, 1−x′}`.
fn conjugate_bounds(x: &Quadratic) -> (Quadratic, Quadratic) {
    let xc = x.conjugate();
    let mirrored = Quadratic::one() - &xc;
    if xc <= mirrored {
        (xc, mirrored)
    } else {
        (mirrored, xc)
    }
}

fn within(lo: &Quadratic, x: &Quadratic, hi: &Quadratic) -> bool {
    lo <= x && x <= hi
}

/// Criterion for a Sturmian word of slope `α` and intercept `β` to be
/// invariant under a primitive morphism.
pub fn yasutomi_check(alpha: &Quadratic, beta: &Quadratic) -> Result<Certificate, CertifyError> {
    if alpha.is_rational() || !in_unit_open(alpha) {
        return Err(CertifyError::SlopeOutOfRange);
    }
    if beta.signum() < 0 || *beta >= Quadratic::one() {
        return Err(CertifyError::InterceptOutOfRange);
    }
    let mut b = Builder::default();
    b.witness("alpha'", alpha.conjugate());
    b.clause(Clause::Sturm, alpha.is_sturm());
    let same_field = beta.same_field(alpha);
    b.clause(Clause::FieldMembership, same_field);
    if same_field {
        let (lo, hi) = conjugate_bounds(alpha);
        let beta_c = beta.conjugate();
        let mirrored = Quadratic::one() - &beta_c;
        let holds = within(&lo, &beta_c, &hi);
        assert_eq!(holds, within(&lo, &mirrored, &hi), "bounds are symmetric under x -> 1-x");
        b.witness("beta'", beta_c);
        b.witness("1-beta'", mirrored);
        b.witness("min", lo);
        b.witness("max", hi);
        b.clause(Clause::InterceptBounds, holds);
    }
    Ok(b.finish())
}

/// Criterion for the non-degenerate three-interval word with parameters `p`
/// to be invariant under a primitive morphism.
pub fn invariance_3iet_check(p: &IetParams) -> Result<Certificate, CertifyError> {
    if !p.is_nondegenerate() {
        return Err(CertifyError::Degenerate);
    }
    let (eps, l, c) = (p.eps(), p.l(), p.c());
    let mut b = Builder::default();
    b.witness("eps'", eps.conjugate());
    b.clause(Clause::Sturm, eps.is_sturm());
    b.clause(Clause::FieldMembership, c.same_field(eps) && l.same_field(eps));
    let (lo, hi) = conjugate_bounds(eps);
    let minus_c = -c.conjugate();
    let end = c.conjugate() + l.conjugate();
    b.clause(Clause::OriginBounds, within(&lo, &minus_c, &hi));
    b.clause(Clause::EndBounds, within(&lo, &end, &hi));
    b.witness("-c'", minus_c);
    b.witness("c'+l'", end);
    b.witness("min", lo);
    b.witness("max", hi);
    Ok(b.finish())
}

/// Whether the three-interval criterion agrees with the conjunction of the
/// Sturmian criteria for `σ01(u)` and `σ10(u)`.
pub fn cross_check(p: &IetParams) -> Result<bool, CertifyError> {
    let ternary = invariance_3iet_check(p)?.verdict;
    let mut binary = true;
    for side in [SturmianSide::Sigma01, SturmianSide::Sigma10] {
        let s = p.sturmian_params(side);
        binary &= yasutomi_check(s.alpha(), s.beta())?.verdict;
    }
    Ok(ternary == binary)
}

fn require_primitive_ternary(eta: &Morphism) -> Result<(), CertifyError> {
    if eta.source() != Alphabet::Ternary || !eta.is_endomorphism() || !eta.is_primitive()? {
        return Err(CertifyError::NotPrimitive);
    }
    Ok(())
}

/// `(1−ε, 1−2ε, −ε)`.
pub fn three_iet_vector(eps: &Quadratic) -> Vec<Quadratic> {
    let one = Quadratic::one();
    vec![&one - eps, &one - eps - eps, -eps]
}

/// Necessary matrix conditions for a primitive `η` to fix a non-degenerate
/// three-interval word of slope parameter `ε`.
pub fn matrix_necessary_check(eta: &Morphism, eps: &Quadratic) -> Result<Certificate, CertifyError> {
    require_primitive_ternary(eta)?;
    if eps.is_rational() || !in_unit_open(eps) {
        return Err(CertifyError::EpsOutOfRange);
    }
    let perron = eta.perron()?;
    let mut b = Builder::default();
    b.witness("Lambda", perron.dominant.clone());
    b.witness("Lambda'", perron.conjugate.clone());
    b.clause(Clause::QuadraticUnit, perron.dominant.is_quadratic_unit());
    let field_ok = eps.same_field(&perron.dominant);
    b.clause(Clause::EigenEquation, field_ok);
    if field_ok {
        let v = three_iet_vector(eps);
        let mv = mat_vec(&eta.incidence(), &v);
        let holds = mv.iter().zip(&v).all(|(lhs, x)| *lhs == &perron.conjugate * x);
        for (letter, value) in Alphabet::Ternary.letters().iter().zip(mv) {
            b.witness(&format!("(Mv)_{letter}"), value);
        }
        b.clause(Clause::EigenEquation, holds);
    }
    Ok(b.finish())
}

fn lattice_witness(b: &mut Builder, name: &str, x: &Quadratic, eps: &Quadratic) -> bool {
    let (s, t) = x.coords_in_basis(eps).expect("same field as eps");
    b.witness(name, x.clone());
    b.witness(&format!("{name}.1"), Quadratic::rational(s.clone()));
    b.witness(&format!("{name}.eps"), Quadratic::rational(t.clone()));
    s.is_integer() && t.is_integer()
}

/// Lattice conditions relating `Λ′` to the orbit of `c` and of the split
/// point `c + l − 1 + ε`, together with `ΛZ[ε] ⊂ Z[ε]`.
pub fn spectral_orbit_check(eta: &Morphism, p: &IetParams) -> Result<Certificate, CertifyError> {
    let matrix = matrix_necessary_check(eta, p.eps())?;
    if let Some(clause) = matrix.failed_clause {
        return Err(CertifyError::MatrixConditionFailed(clause));
    }
    let perron = eta.perron()?;
    if !perron.conjugate_positive() {
        return Err(CertifyError::ConjugateNotPositive);
    }
    let (eps, c) = (p.eps(), p.c());
    let shrink = &perron.conjugate - &Quadratic::one();
    let split = c + p.l() - Quadratic::one() + eps;
    let mut b = Builder::default();
    b.witness("Lambda", perron.dominant.clone());
    b.witness("Lambda'", perron.conjugate.clone());
    let origin = lattice_witness(&mut b, "Lambda'c-c", &(&shrink * c), eps);
    b.clause(Clause::OriginLattice, origin);
    let at_split = lattice_witness(&mut b, "Lambda's-s", &(&shrink * &split), eps);
    b.clause(Clause::SplitLattice, at_split);
    let scaled_eps = lattice_witness(&mut b, "Lambda*eps", &(&perron.dominant * eps), eps);
    let scaled_one = lattice_witness(&mut b, "Lambda*1", &perron.dominant, eps);
    b.clause(Clause::ScalingLattice, scaled_eps && scaled_one);
    Ok(b.finish())
}

/// The `ε` for which `(1−ε, 1−2ε, −ε)` is an eigenvector of `M_η` for `Λ′`.
pub fn infer_epsilon(eta: &Morphism) -> Result<Quadratic, CertifyError> {
    require_primitive_ternary(eta)?;
    let perron = eta.perron()?;
    let w = &perron.conjugate_vector;
    let scale = &w[0] - &w[2];
    if scale.is_zero() {
        return Err(CertifyError::NotThreeIetCompatible);
    }
    let w: Vec<Quadratic> = w.iter().map(|x| x / &scale).collect();
    if w[1] != &w[0] + &w[2] {
        return Err(CertifyError::NotThreeIetCompatible);
    }
    Ok(-&w[2])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// `1` or `2`: the power of `η` that equals `ter(φ, ψ)`.
    pub power: u32,
    pub phi: Morphism,
    pub psi: Morphism,
    pub lambda_conjugate_positive: bool,
}

fn split_power(mu: &Morphism) -> Result<Option<(Morphism, Morphism)>, CertifyError> {
    let (s01, s10) = (sigma01(), sigma10());
    let image = |s: &Morphism, l: Letter| s.apply(mu.image(l));
    let phi = Morphism::new(Alphabet::Binary, Alphabet::Binary, vec![image(&s01, Letter::A)?, image(&s01, Letter::C)?])?;
    let psi = Morphism::new(Alphabet::Binary, Alphabet::Binary, vec![image(&s10, Letter::A)?, image(&s10, Letter::C)?])?;
    let (p0, p1) = (phi.image(Letter::Zero), phi.image(Letter::One));
    let (q0, q1) = (psi.image(Letter::Zero), psi.image(Letter::One));
    let accepted = image(&s01, Letter::B)? == p0.concat(p1)
        && image(&s10, Letter::B)? == q1.concat(q0)
        && is_amicable_morphisms(&phi, &psi).unwrap_or(false)
        && ternarize_morphisms(&phi, &psi).as_ref() == Ok(mu);
    Ok(accepted.then_some((phi, psi)))
}

/// Finds amicable `(φ, ψ)` with `ter(φ, ψ) = η` or `η²`, trying `η` first.
pub fn decompose(eta: &Morphism) -> Result<Decomposition, CertifyError> {
    require_primitive_ternary(eta)?;
    let lambda_conjugate_positive = eta.perron()?.conjugate_positive();
    for power in 1..=2 {
        if let Some((phi, psi)) = split_power(&eta.power(power)?)? {
            return Ok(Decomposition { power, phi, psi, lambda_conjugate_positive });
        }
    }
    Err(CertifyError::NotDecomposable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amicability::ternarize_morphisms;
    use crate::qfield::Rational;
    use crate::morphism::{phi, psi};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(s: &str) -> Quadratic {
        s.parse().unwrap()
    }

    fn m(s: &str) -> Morphism {
        s.parse().unwrap()
    }

    fn golden() -> Morphism {
        m("A:B,B:BCB,C:CAC")
    }

    fn golden_eps() -> Quadratic {
        q("3/2-1/2*sqrt(5)")
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn sturmian_criterion() {
        let cert = yasutomi_check(&q("0+1/2*sqrt(2)"), &Quadratic::zero()).unwrap();
        assert!(cert.verdict);
        assert_eq!(cert.witness("alpha'"), Some(&q("0-1/2*sqrt(2)")));
        assert_eq!(cert.witness("max"), Some(&q("1+1/2*sqrt(2)")));

        let cert = yasutomi_check(&q("1/2+1/10*sqrt(5)"), &q("1/3")).unwrap();
        assert_eq!((cert.verdict, cert.failed_clause), (false, Some(Clause::Sturm)));

        let cert = yasutomi_check(&q("0+1/2*sqrt(2)"), &q("0+1/6*sqrt(3)")).unwrap();
        assert_eq!((cert.verdict, cert.failed_clause), (false, Some(Clause::FieldMembership)));

        assert_eq!(yasutomi_check(&q("0+1/2*sqrt(2)"), &q("1")), Err(CertifyError::InterceptOutOfRange));
        assert_eq!(yasutomi_check(&q("0+1/2*sqrt(2)"), &q("-1/5")), Err(CertifyError::InterceptOutOfRange));
        assert_eq!(yasutomi_check(&q("1/2"), &q("0")), Err(CertifyError::SlopeOutOfRange));
    }

    #[test]
    fn sturmian_bounds_can_fail() {
        // α = (√5−1)/2 has α′ ≈ −1.618, bounds [−1.618, 2.618]; β = √5 − 2 has β′ ≈ −4.236.
        let cert = yasutomi_check(&q("-1/2+1/2*sqrt(5)"), &q("-2+1*sqrt(5)")).unwrap();
        assert_eq!(cert.failed_clause, Some(Clause::InterceptBounds));
    }

    #[test]
    fn three_interval_criterion() {
        let p = IetParams::new(golden_eps(), q("1/2+1/10*sqrt(5)"), q("-1/3")).unwrap();
        let cert = invariance_3iet_check(&p).unwrap();
        assert!(cert.verdict);
        assert_eq!(cert.witness("eps'"), Some(&q("3/2+1/2*sqrt(5)")));
        assert_eq!(cert.witness("-c'"), Some(&q("1/3")));
        assert_eq!(cert.witness("c'+l'"), Some(&q("1/6-1/10*sqrt(5)")));
        assert_eq!(cert.witness("min"), Some(&q("-1/2-1/2*sqrt(5)")));
        assert_eq!(cert.witness("max"), Some(&q("3/2+1/2*sqrt(5)")));
        assert!(cross_check(&p).unwrap());

        let p = IetParams::new(q("1/2+1/10*sqrt(5)"), q("4/5"), q("-1/3")).unwrap();
        let cert = invariance_3iet_check(&p).unwrap();
        assert_eq!(cert.failed_clause, Some(Clause::Sturm));

        let degenerate = IetParams::new(golden_eps(), q("2") - golden_eps() * q("3"), golden_eps() - q("1")).unwrap();
        assert_eq!(invariance_3iet_check(&degenerate), Err(CertifyError::Degenerate));
    }

    #[test]
    fn three_interval_bounds_can_fail() {
        // ε′ ≈ −1.618, so both middles must lie in [−1.618, 2.618].
        let golden = q("-1/2+1/2*sqrt(5)");
        let p = IetParams::new(golden.clone(), q("4/5"), q("2-1*sqrt(5)")).unwrap();
        let cert = invariance_3iet_check(&p).unwrap();
        assert_eq!(cert.failed_clause, Some(Clause::OriginBounds));
        assert_eq!(cert.witness("-c'"), Some(&q("-2-1*sqrt(5)")));
        assert!(cross_check(&p).unwrap());

        let p = IetParams::new(golden, q("-19/5+2*sqrt(5)"), q("-1/3")).unwrap();
        let cert = invariance_3iet_check(&p).unwrap();
        assert_eq!(cert.failed_clause, Some(Clause::EndBounds));
        assert!(cross_check(&p).unwrap());
    }

    #[test]
    fn matrix_conditions() {
        let cert = matrix_necessary_check(&golden(), &golden_eps()).unwrap();
        assert!(cert.verdict);
        assert_eq!(cert.witness("Lambda"), Some(&q("3/2+1/2*sqrt(5)")));
        let cert = matrix_necessary_check(&golden(), &q("1/3+1/10*sqrt(5)")).unwrap();
        assert_eq!(cert.failed_clause, Some(Clause::EigenEquation));
        let cert = matrix_necessary_check(&golden(), &q("0+1/2*sqrt(2)")).unwrap();
        assert_eq!(cert.failed_clause, Some(Clause::EigenEquation));
        assert_eq!(matrix_necessary_check(&m("A:AB,B:B,C:CB"), &golden_eps()), Err(CertifyError::NotPrimitive));
        assert_eq!(
            matrix_necessary_check(&Morphism::identity(Alphabet::Ternary), &golden_eps()),
            Err(CertifyError::NotPrimitive)
        );
    }

    #[test]
    fn eigen_equation_oracle() {
        // Direct expansion of M·(1−ε, 1−2ε, −ε) for rows A:(0,1,0), B:(0,2,1), C:(1,0,2).
        let e = golden_eps();
        let lc = q("3/2-1/2*sqrt(5)");
        let one = Quadratic::one();
        let v = [&one - &e, &one - &e * q("2"), -&e];
        let mv = [v[1].clone(), &v[1] * q("2") + &v[2], &v[0] + &v[2] * q("2")];
        for i in 0..3 {
            assert_eq!(mv[i], &lc * &v[i]);
        }
    }

    #[test]
    fn spectral_lattice() {
        let degenerate = IetParams::new(golden_eps(), q("2") - golden_eps() * q("3"), golden_eps() - q("1")).unwrap();
        let cert = spectral_orbit_check(&golden(), &degenerate).unwrap();
        assert!(cert.verdict, "{cert:?}");
        assert_eq!(cert.witness("Lambda*eps"), Some(&q("1")));
        assert_eq!(cert.witness("Lambda*eps.1"), Some(&q("1")));
        assert_eq!(cert.witness("Lambda*eps.eps"), Some(&q("0")));
        assert_eq!(cert.witness("Lambda*1.1"), Some(&q("3")));
        assert_eq!(cert.witness("Lambda*1.eps"), Some(&q("-1")));

        for c in ["-1/3", "0-1/7*sqrt(5)"] {
            let p = IetParams::new(golden_eps(), q("1/2+1/10*sqrt(5)"), q(c)).unwrap();
            let cert = spectral_orbit_check(&golden(), &p).unwrap();
            assert_eq!(cert.failed_clause, Some(Clause::OriginLattice), "c = {c}");
            let (s, t) = cert.witness("Lambda'c-c").unwrap().coords_in_basis(&golden_eps()).unwrap();
            assert!(!s.is_integer() || !t.is_integer());
        }

        let fibonacci_ternary = m("A:B,B:ACA,C:A");
        let eps1 = q("-1/2+1/2*sqrt(5)");
        let p = IetParams::new(eps1, q("4/5"), q("-1/3")).unwrap();
        assert_eq!(spectral_orbit_check(&fibonacci_ternary, &p), Err(CertifyError::ConjugateNotPositive));
        let p = IetParams::new(q("0+1/2*sqrt(2)"), q("4/5"), q("-1/3")).unwrap();
        assert_eq!(
            spectral_orbit_check(&golden(), &p),
            Err(CertifyError::MatrixConditionFailed(Clause::EigenEquation))
        );
    }

    #[test]
    fn inferred_slopes() {
        assert_eq!(infer_epsilon(&golden()).unwrap(), golden_eps());
        let inverse_phi = q("-1/2+1/2*sqrt(5)");
        assert_eq!(infer_epsilon(&m("A:B,B:ACA,C:A")).unwrap(), inverse_phi);
        assert_eq!(infer_epsilon(&m("A:ACA,B:BAB,C:B")).unwrap(), inverse_phi);
        assert_eq!(infer_epsilon(&m("A:B,B:AC,C:AB")), Err(CertifyError::NotThreeIetCompatible));
        assert_eq!(
            infer_epsilon(&m("A:AAB,B:BC,C:CA")),
            Err(CertifyError::Morphism(MorphismError::NotQuadratic))
        );
        for eta in [golden(), m("A:B,B:ACA,C:A")] {
            let e = infer_epsilon(&eta).unwrap();
            assert!(matrix_necessary_check(&eta, &e).unwrap().verdict);
            assert!(e.is_sturm());
        }
    }

    #[test]
    fn decompositions() {
        let d = decompose(&golden()).unwrap();
        assert_eq!(d.power, 1);
        assert_eq!(d.phi, m("0:01,1:101"));
        assert_eq!(d.psi, m("0:10,1:101"));
        assert!(d.lambda_conjugate_positive);

        let d = decompose(&m("A:ACA,B:BAB,C:B")).unwrap();
        assert_eq!((d.power, d.phi, d.psi), (1, m("0:010,1:01"), m("0:010,1:10")));

        let d = decompose(&m("A:B,B:ACA,C:A")).unwrap();
        assert_eq!((d.power, &d.phi, &d.psi), (1, &phi(), &psi()));
        assert!(!d.lambda_conjugate_positive);

        assert_eq!(decompose(&m("A:AB,B:B,C:CB")), Err(CertifyError::NotPrimitive));
        assert_eq!(decompose(&m("A:B,B:AC,C:AB")), Err(CertifyError::NotDecomposable));
    }

    #[test]
    fn decomposition_of_a_square_only() {
        let eta = m("A:AC,B:ABB,C:AB");
        let d = decompose(&eta).unwrap();
        assert_eq!(d.power, 2);
        assert_eq!(d.phi, m("0:01001,1:0100101"));
        assert_eq!(d.psi, m("0:01010,1:0101010"));
        assert!(!d.lambda_conjugate_positive);
        assert_eq!(ternarize_morphisms(&d.phi, &d.psi).unwrap(), eta.power(2).unwrap());
    }

    fn arb_base_pair() -> impl Strategy<Value = (Morphism, Morphism)> {
        let gens = vec![(phi(), psi()), (m("0:01,1:101"), m("0:10,1:101")), (m("0:010,1:01"), m("0:010,1:10"))];
        prop::collection::vec(prop::sample::select(gens), 1..4).prop_map(|pairs| {
            let mut it = pairs.into_iter();
            let first = it.next().unwrap();
            it.fold(first, |(f, g), (f2, g2)| (f.compose(&f2).unwrap(), g.compose(&g2).unwrap()))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn decompose_inverts_ternarization((f, g) in arb_base_pair()) {
            let eta = ternarize_morphisms(&f, &g).unwrap();
            prop_assume!(eta.is_primitive().unwrap());
            let d = decompose(&eta).unwrap();
            prop_assert_eq!(d.power, 1);
            prop_assert_eq!(&d.phi, &f);
            prop_assert_eq!(&d.psi, &g);
            let lam = eta.perron().unwrap().dominant;
            prop_assert_eq!(&d.phi.perron().unwrap().dominant, &lam);
            prop_assert_eq!(&d.psi.perron().unwrap().dominant, &lam);
        }

        #[test]
        fn inferred_slope_is_power_invariant((f, g) in arb_base_pair()) {
            let eta = ternarize_morphisms(&f, &g).unwrap();
            prop_assume!(eta.is_primitive().unwrap());
            let e = infer_epsilon(&eta).unwrap();
            prop_assert_eq!(infer_epsilon(&eta.power(2).unwrap()).unwrap(), e.clone());
            prop_assert!(e.is_sturm());
        }

        #[test]
        fn criteria_agree_on_random_parameters(
            d in prop::sample::select(vec![2u64, 5]),
            num in 1i64..40, den in 1i64..40,
            ln in 1i64..1000, cn in 0i64..1000,
        ) {
            // frac(t) for t = num·√d/den > 0 has conjugate −t − floor(t) < 0: always a Sturm number.
            let t = Quadratic::new(int(0), Rational::new(BigInt::from(num), BigInt::from(den)), d);
            let eps = &t - Quadratic::rational(Rational::from_integer(t.floor()));
            prop_assert!(eps.is_sturm());
            let one = Quadratic::one();
            let lo = if eps > &one - &eps { eps.clone() } else { &one - &eps };
            let l = &lo + (&one - &lo) * Quadratic::from_ratio(ln, 1000);
            let c = -(&l * Quadratic::from_ratio(cn, 1000));
            let p = IetParams::new(eps, l, c).unwrap();
            prop_assume!(p.is_nondegenerate());
            prop_assert!(cross_check(&p).unwrap());
        }
    }
}
