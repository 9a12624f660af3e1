//! Lambda values of quadratic extensions K/F of tame p-adic fields.
//!
//! For quadratic K/F the lambda value is the epsilon factor of the
//! quadratic character omega_{K/F} attached to K by class field theory, and
//! its determinant twist Delta_{K/F} is omega_{K/F} itself. The ramified
//! API is norm-normalized: the uniformizer presenting F is assumed to lie
//! in the norm group of K, so omega(pi) = 1 and the residue quadratic
//! character eta carries all the information.
//!
//! The two computational paths kept in sync here:
//!
//! * closed: lambda(psi_F) = Delta(c') * lambda(psi_{-1}), with
//!   lambda(psi_{-1}) read off the closed quadratic Gauss form and
//!   Delta(c') a single squareness test in k_F;
//! * direct: the defining epsilon-factor sum, exactly via [`epsilon_tame`]
//!   or numerically via the oracles.
//!
//! Every value lands in mu_4 exactly.

use crate::cyclotomic::Mu4;
use crate::error::{Error, Result};
use crate::finite_field::FqElem;
use crate::gauss::gauss_closed_quadratic;
use crate::local_field::{CClass, TameField};

/// The two tame quadratic extension shapes of a given F.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtKind {
    Unramified,
    RamifiedNormNormalized,
}

/// A quadratic extension K/F given by its base field and ramification kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt {
    base: TameField,
    kind: ExtKind,
}

impl QuadExt {
    /// The unramified quadratic extension; omega_{K/F}(pi) = -1.
    pub fn unramified(base: TameField) -> QuadExt {
        QuadExt {
            base,
            kind: ExtKind::Unramified,
        }
    }

    /// A ramified quadratic extension presented by a uniformizer in the
    /// norm group, so omega_{K/F}(pi) = 1; needs odd residue
    /// characteristic.
    pub fn ramified(base: TameField) -> Result<QuadExt> {
        if base.p() == 2 {
            return Err(Error::EvenCharacteristic);
        }
        Ok(QuadExt {
            base,
            kind: ExtKind::RamifiedNormNormalized,
        })
    }

    pub fn base(&self) -> &TameField {
        &self.base
    }

    pub fn kind(&self) -> ExtKind {
        self.kind
    }
}

/// The inputs a lambda value was computed from, kept alongside the result
/// so a disagreement can be traced to its field presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub p: u64,
    pub f: u32,
    pub e: u32,
    pub w_res: FqElem,
    pub c: CClass,
}

/// A lambda value together with its two factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaResult {
    pub value: Mu4,
    pub delta_factor: Mu4,
    pub gauss_factor: Mu4,
    pub provenance: Provenance,
}

/// lambda_{K/F}(psi_{-1}) for ramified K: equal to the eps of the closed
/// quadratic Gauss form over k_F, i.e. (-1)^{s-1} when p = 1 mod 4 and
/// (-1)^{s-1} i^s when p = 3 mod 4, with s the residue degree.
pub fn lambda_psi_minus_one(field: &TameField) -> Result<Mu4> {
    Ok(gauss_closed_quadratic(field.p(), field.f())?.eps)
}

/// Delta_{K/F}(c') for ramified K: the residue quadratic character of the
/// unit part of c' = c / Tr_{F/F_0}(p c). With the norm-normalized
/// convention this is +1 exactly when the trace residue of p c is a square
/// in k_F^x.
pub fn delta_c_prime(field: &TameField, c: &CClass) -> Result<Mu4> {
    if field.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let cp = field.c_prime(c)?;
    let sign = field.residue_field().quadratic_character(cp.unit_res())?;
    Ok(Mu4::from_sign(sign))
}

/// lambda_{K/F}(psi_F) for ramified K, assembled as
/// Delta(c') * lambda(psi_{-1}). The result does not depend on which
/// admissible c is supplied; omitting it uses c = pi^{-1-d}.
pub fn lambda_tame_quadratic(ext: &QuadExt, c: Option<&CClass>) -> Result<LambdaResult> {
    if ext.kind() != ExtKind::RamifiedNormNormalized {
        return Err(Error::NotRamified);
    }
    let field = ext.base();
    let c = match c {
        Some(c) => c.clone(),
        None => field.default_c(),
    };
    let delta_factor = delta_c_prime(field, &c)?;
    let gauss_factor = lambda_psi_minus_one(field)?;
    Ok(LambdaResult {
        value: delta_factor * gauss_factor,
        delta_factor,
        gauss_factor,
        provenance: Provenance {
            p: field.p(),
            f: field.f(),
            e: field.e(),
            w_res: field.w_res().clone(),
            c,
        },
    })
}

/// lambda_{K/F}(psi) for unramified K and an additive character of
/// conductor n: the degenerate epsilon factor omega(pi)^n = (-1)^n.
pub fn lambda_unramified(ext: &QuadExt, n: i64) -> Result<Mu4> {
    if ext.kind() != ExtKind::Unramified {
        return Err(Error::NotUnramified);
    }
    Ok(Mu4::neg_one_pow(n))
}

/// Twist rule: lambda(a * psi) = Delta_{K/F}(a) * lambda(psi) with
/// Delta_{K/F} = omega_{K/F}, so Delta(a) is the residue quadratic
/// character of the unit part for ramified K (omega(pi) = 1) and
/// (-1)^{nu(a)} for unramified K.
pub fn lambda_twist(lam: Mu4, ext: &QuadExt, a: &CClass) -> Result<Mu4> {
    let delta = match ext.kind() {
        ExtKind::Unramified => Mu4::neg_one_pow(a.val()),
        ExtKind::RamifiedNormNormalized => {
            let sign = ext
                .base()
                .residue_field()
                .quadratic_character(a.unit_res())?;
            Mu4::from_sign(sign)
        }
    };
    Ok(delta * lam)
}

/// Lambda values of the seven quadratic extensions of Q_2, indexed by the
/// nontrivial square classes of Q_2^x.
pub fn lambda_q2(square_class: i64) -> Result<Mu4> {
    match square_class {
        5 => Ok(Mu4::ONE),
        -1 => Ok(Mu4::I),
        -5 => Ok(Mu4::I),
        2 => Ok(Mu4::ONE),
        10 => Ok(Mu4::MINUS_ONE),
        -2 => Ok(Mu4::I),
        -10 => Ok(Mu4::MINUS_I),
        other => Err(Error::UnknownSquareClass(other)),
    }
}

/// Lambda value of the abelian K/F with norm group exactly the squares of
/// F^x, F of residue characteristic 2: constantly 1. The hypothesis on the
/// norm group is the caller's to guarantee; nothing about it is checked
/// here.
pub fn lambda_full_square_norm_class() -> Mu4 {
    Mu4::ONE
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::build_field;
    use crate::gauss::{epsilon_tame, ResidueChar, TameMultChar};
    use crate::local_field::AdditiveCharSpec;
    use crate::oracle::lambda_direct_path;

    fn prime_field_tame(p: u64, e: u32, w: u64) -> TameField {
        TameField::from_w_coeffs(p, 1, e, &[w]).unwrap()
    }

    #[test]
    fn lambda_psi_minus_one_examples() {
        assert_eq!(
            lambda_psi_minus_one(&prime_field_tame(5, 1, 1)).unwrap(),
            Mu4::ONE
        );
        assert_eq!(
            lambda_psi_minus_one(&prime_field_tame(3, 1, 1)).unwrap(),
            Mu4::I
        );
        let f49 = TameField::from_w_coeffs(7, 2, 1, &[1]).unwrap();
        assert_eq!(lambda_psi_minus_one(&f49).unwrap(), Mu4::ONE);
        assert_eq!(
            lambda_psi_minus_one(&TameField::from_w_coeffs(2, 1, 1, &[1]).unwrap()),
            Err(Error::EvenCharacteristic)
        );
    }

    #[test]
    fn lambda_psi_minus_one_matches_the_direct_path() {
        for p in [3u64, 5, 7, 11, 13, 17, 19] {
            for f in 1..=2u32 {
                let field = TameField::from_w_coeffs(p, f, 1, &[1]).unwrap();
                let closed = lambda_psi_minus_one(&field).unwrap().embed();
                let direct = lambda_direct_path(&field).unwrap();
                assert!(
                    (closed - direct).norm() < 1e-6,
                    "p = {p}, f = {f}: {closed} vs {direct}"
                );
            }
        }
    }

    #[test]
    fn delta_examples() {
        let q5 = prime_field_tame(5, 1, 1);
        assert_eq!(delta_c_prime(&q5, &q5.default_c()).unwrap(), Mu4::ONE);

        let e2 = prime_field_tame(5, 2, 1);
        assert_eq!(delta_c_prime(&e2, &e2.default_c()).unwrap(), Mu4::MINUS_ONE);

        let e3 = prime_field_tame(7, 3, 1);
        assert_eq!(delta_c_prime(&e3, &e3.default_c()).unwrap(), Mu4::MINUS_ONE);
    }

    #[test]
    fn delta_is_the_squareness_of_the_trace_residue() {
        // for c with unit part 1 the two formulations coincide since the
        // quadratic character is its own inverse
        for (p, e, w) in [(5u64, 2u32, 1u64), (5, 2, 2), (7, 3, 1), (11, 4, 3), (13, 6, 5)] {
            let field = prime_field_tame(p, e, w);
            let c = field.default_c();
            let tr = field.trace_residue_pc(&c).unwrap();
            let square_sign = field.residue_field().quadratic_character(&tr).unwrap();
            assert_eq!(
                delta_c_prime(&field, &c).unwrap(),
                Mu4::from_sign(square_sign),
                "p = {p}, e = {e}, w = {w}"
            );
        }
    }

    #[test]
    fn delta_always_lands_in_signs() {
        for (p, e, w) in [(3u64, 1u32, 2u64), (5, 3, 4), (7, 2, 3), (11, 5, 10)] {
            let field = prime_field_tame(p, e, w);
            for u in field.residue_field().units() {
                let c = field.admissible_c(u).unwrap();
                let d = delta_c_prime(&field, &c).unwrap();
                assert!(d.as_sign().is_some());
            }
        }
    }

    #[test]
    fn lambda_tame_quadratic_examples() {
        let k5 = QuadExt::ramified(prime_field_tame(5, 1, 1)).unwrap();
        let r = lambda_tame_quadratic(&k5, None).unwrap();
        assert_eq!(r.value, Mu4::ONE);
        assert_eq!((r.delta_factor, r.gauss_factor), (Mu4::ONE, Mu4::ONE));
        assert_eq!((r.provenance.p, r.provenance.e), (5, 1));
        assert_eq!(r.provenance.c.val(), -1);

        let k3 = QuadExt::ramified(prime_field_tame(3, 1, 1)).unwrap();
        let r = lambda_tame_quadratic(&k3, None).unwrap();
        assert_eq!(r.value, Mu4::I);
        assert_eq!((r.delta_factor, r.gauss_factor), (Mu4::ONE, Mu4::I));

        let ke2 = QuadExt::ramified(prime_field_tame(5, 2, 1)).unwrap();
        let r = lambda_tame_quadratic(&ke2, None).unwrap();
        assert_eq!(r.value, Mu4::MINUS_ONE);
        assert_eq!((r.delta_factor, r.gauss_factor), (Mu4::MINUS_ONE, Mu4::ONE));
    }

    #[test]
    fn lambda_value_factors_exactly() {
        for (p, f, e, w) in [
            (3u64, 1u32, 2u32, 2u64),
            (5, 2, 3, 3),
            (7, 1, 6, 4),
            (11, 1, 3, 2),
            (13, 2, 1, 1),
        ] {
            let field = TameField::from_w_coeffs(p, f, e, &[w]).unwrap();
            let ext = QuadExt::ramified(field).unwrap();
            let r = lambda_tame_quadratic(&ext, None).unwrap();
            assert_eq!(r.value, r.delta_factor * r.gauss_factor);
        }
    }

    #[test]
    fn lambda_is_independent_of_the_admissible_c() {
        for (p, f, e) in [(3u64, 1u32, 2u32), (5, 1, 4), (7, 1, 3), (3, 2, 2), (11, 1, 6)] {
            let k = build_field(p, f).unwrap();
            for wi in 1..k.q().min(5) {
                let field = TameField::new(p, f, e, k.element_from_index(wi)).unwrap();
                let ext = QuadExt::ramified(field.clone()).unwrap();
                let baseline = lambda_tame_quadratic(&ext, None).unwrap().value;
                for u in field.residue_field().units() {
                    let c = field.admissible_c(u).unwrap();
                    let r = lambda_tame_quadratic(&ext, Some(&c)).unwrap();
                    assert_eq!(r.value, baseline, "field {field}");
                }
            }
        }
    }

    #[test]
    fn closed_path_matches_the_epsilon_factor_path() {
        // lambda(psi_F) via Delta(c') * lambda(psi_{-1}) against the
        // defining sum with the canonical character's own spec
        for (p, f, e, w) in [
            (3u64, 1u32, 1u32, 1u64),
            (3, 1, 2, 1),
            (3, 1, 2, 2),
            (5, 1, 2, 3),
            (5, 2, 4, 2),
            (7, 1, 3, 1),
            (7, 2, 5, 3),
            (11, 1, 6, 7),
            (13, 1, 4, 2),
        ] {
            let field = TameField::from_w_coeffs(p, f, e, &[w]).unwrap();
            let ext = QuadExt::ramified(field.clone()).unwrap();
            let closed = lambda_tame_quadratic(&ext, None).unwrap().value;
            let chi = TameMultChar::new(ResidueChar::Quadratic, Mu4::ONE);
            let direct = epsilon_tame(&chi, &field.canonical_psi_spec(), &field)
                .unwrap()
                .exact;
            assert_eq!(closed, direct, "field {field}");
        }
    }

    #[test]
    fn twist_coherence_recovers_the_assembled_value() {
        for (p, f, e, w) in [(3u64, 1u32, 2u32, 2u64), (5, 1, 3, 2), (7, 2, 3, 4), (11, 1, 2, 5)] {
            let field = TameField::from_w_coeffs(p, f, e, &[w]).unwrap();
            let ext = QuadExt::ramified(field.clone()).unwrap();
            for u in field.residue_field().units().take(6) {
                let c = field.admissible_c(u).unwrap();
                let cp = field.c_prime(&c).unwrap();
                let lam = lambda_psi_minus_one(&field).unwrap();
                let twisted = lambda_twist(lam, &ext, &cp).unwrap();
                let assembled = lambda_tame_quadratic(&ext, Some(&c)).unwrap().value;
                assert_eq!(twisted, assembled, "field {field}");
            }
        }
    }

    #[test]
    fn unramified_examples() {
        let ext = QuadExt::unramified(prime_field_tame(5, 1, 1));
        assert_eq!(lambda_unramified(&ext, 0).unwrap(), Mu4::ONE);
        assert_eq!(lambda_unramified(&ext, -1).unwrap(), Mu4::MINUS_ONE);
        assert_eq!(lambda_unramified(&ext, 2).unwrap(), Mu4::ONE);

        // the same values through the degenerate epsilon-factor path
        let field = prime_field_tame(5, 1, 1);
        let chi = TameMultChar::new(ResidueChar::Trivial, Mu4::MINUS_ONE);
        for n in -3..=3 {
            let psi = AdditiveCharSpec::new(n, field.residue_field().one()).unwrap();
            let eps = epsilon_tame(&chi, &psi, &field).unwrap().exact;
            assert_eq!(lambda_unramified(&ext, n).unwrap(), eps);
        }
    }

    #[test]
    fn kind_mismatches_are_rejected() {
        let unram = QuadExt::unramified(prime_field_tame(5, 1, 1));
        assert_eq!(lambda_tame_quadratic(&unram, None), Err(Error::NotRamified));
        let ram = QuadExt::ramified(prime_field_tame(5, 1, 1)).unwrap();
        assert_eq!(lambda_unramified(&ram, 0), Err(Error::NotUnramified));
        assert_eq!(
            QuadExt::ramified(TameField::from_w_coeffs(2, 1, 1, &[1]).unwrap()),
            Err(Error::EvenCharacteristic)
        );
    }

    #[test]
    fn twist_examples() {
        let k5 = QuadExt::ramified(prime_field_tame(5, 1, 1)).unwrap();
        let square = CClass::new(0, k5.base().residue_field().from_u64(4)).unwrap();
        assert_eq!(lambda_twist(Mu4::I, &k5, &square).unwrap(), Mu4::I);
        let nonsquare = CClass::new(0, k5.base().residue_field().from_u64(2)).unwrap();
        assert_eq!(lambda_twist(Mu4::ONE, &k5, &nonsquare).unwrap(), Mu4::MINUS_ONE);

        let unram = QuadExt::unramified(prime_field_tame(5, 1, 1));
        let a = CClass::new(3, unram.base().residue_field().one()).unwrap();
        assert_eq!(lambda_twist(Mu4::ONE, &unram, &a).unwrap(), Mu4::MINUS_ONE);
    }

    #[test]
    fn q2_table() {
        let table = [
            (5, Mu4::ONE),
            (-1, Mu4::I),
            (-5, Mu4::I),
            (2, Mu4::ONE),
            (10, Mu4::MINUS_ONE),
            (-2, Mu4::I),
            (-10, Mu4::MINUS_I),
        ];
        for (class, expect) in table {
            assert_eq!(lambda_q2(class).unwrap(), expect, "class {class}");
        }
        let mut counts = [0u32; 4];
        for (class, _) in table {
            counts[lambda_q2(class).unwrap().exponent() as usize] += 1;
        }
        // multiset {1, 1, -1, i, i, i, -i}
        assert_eq!(counts, [2, 3, 1, 1]);
        assert_eq!(lambda_q2(3), Err(Error::UnknownSquareClass(3)));
        assert_eq!(lambda_q2(1), Err(Error::UnknownSquareClass(1)));
        assert_eq!(lambda_q2(20), Err(Error::UnknownSquareClass(20)));
    }

    #[test]
    fn full_square_norm_class_is_constant_one() {
        assert_eq!(lambda_full_square_norm_class(), Mu4::ONE);
    }

    #[test]
    fn wrong_valuation_is_rejected() {
        let field = prime_field_tame(5, 2, 1);
        let bad = CClass::new(-1, field.residue_field().one()).unwrap();
        assert_eq!(
            delta_c_prime(&field, &bad),
            Err(Error::WrongValuation {
                expected: -2,
                got: -1
            })
        );
        let ext = QuadExt::ramified(field).unwrap();
        assert!(matches!(
            lambda_tame_quadratic(&ext, Some(&bad)),
            Err(Error::WrongValuation { .. })
        ));
    }
}
