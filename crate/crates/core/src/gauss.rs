//! Gauss sums over finite residue fields, their closed-form evaluation for
//! the quadratic character, and the tame local epsilon factor built on them.
//!
//! Everything here is exact: sums live in Z[zeta_p] (`CycElem`), closed forms
//! are a fourth root of unity `eps` times p^{half_power}, and the epsilon
//! factor of a conductor <= 1 character is produced both as an exact
//! cyclotomic numerator and as the reduced root of unity the closed form
//! predicts. Floating point appears only when embedding for comparisons.

use crate::cyclotomic::{CycElem, Mu4};
use crate::error::{Error, Result};
use crate::finite_field::{is_prime, FieldDescriptor, FqElem};
use crate::local_field::{AdditiveCharSpec, TameField};
use num_complex::Complex64;

/// A character of k_q^x of order dividing 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueChar {
    Trivial,
    Quadratic,
}

impl ResidueChar {
    /// Value at a nonzero x as a sign; the quadratic case needs odd q.
    pub fn eval(&self, field: &FieldDescriptor, x: &FqElem) -> Result<i32> {
        match self {
            ResidueChar::Trivial => {
                if x.is_zero() {
                    Err(Error::ZeroArgument)
                } else {
                    Ok(1)
                }
            }
            ResidueChar::Quadratic => field.quadratic_character(x),
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, ResidueChar::Trivial)
    }
}

/// An element of (1/2)Z, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_halves(halves: i64) -> HalfInt {
        HalfInt(halves)
    }

    pub fn from_int(n: i64) -> HalfInt {
        HalfInt(2 * n)
    }

    pub fn halves(&self) -> i64 {
        self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0 % 2 == 0
    }

    pub fn as_f64(&self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl std::fmt::Display for HalfInt {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0 % 2 == 0 {
            write!(fmt, "{}", self.0 / 2)
        } else {
            write!(fmt, "{}/2", self.0)
        }
    }
}

/// Closed form eps * p^{half_power} of a quadratic Gauss sum over F_{p^s}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedGauss {
    pub eps: Mu4,
    pub half_power: HalfInt,
}

impl ClosedGauss {
    pub fn embed(&self, p: u64) -> Complex64 {
        self.eps.embed() * (p as f64).powf(self.half_power.as_f64())
    }
}

/// A character of F^x trivial on 1-units: its restriction to units factors
/// through k_F^x, plus an independent value on the chosen uniformizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TameMultChar {
    pub unit_part: ResidueChar,
    pub pi_value: Mu4,
}

impl TameMultChar {
    pub fn new(unit_part: ResidueChar, pi_value: Mu4) -> TameMultChar {
        TameMultChar {
            unit_part,
            pi_value,
        }
    }

    /// Conductor exponent a(chi): 0 when the unit part is trivial, else 1.
    pub fn conductor(&self) -> i64 {
        if self.unit_part.is_trivial() {
            0
        } else {
            1
        }
    }
}

/// Exact epsilon factor of a tame character: the value is
/// numerator * p^{-half_power}, and `exact` is that same number reduced to
/// the fourth root of unity it provably equals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonFactor {
    pub numerator: CycElem,
    pub half_power: HalfInt,
    pub exact: Mu4,
}

impl EpsilonFactor {
    pub fn embed(&self, p: u64) -> Complex64 {
        self.numerator.embed() * (p as f64).powf(-self.half_power.as_f64())
    }
}

/// G(chi, a * psi_q) = sum over x in k_q^x of chi(x) zeta_p^{Tr(a x)},
/// computed term by term in Z[zeta_p].
pub fn gauss_sum_direct(
    field: &FieldDescriptor,
    chi: ResidueChar,
    twist: &FqElem,
) -> Result<CycElem> {
    field.contains(twist)?;
    if twist.is_zero() {
        return Err(Error::ZeroTwist);
    }
    if field.p() == 2 && !chi.is_trivial() {
        return Err(Error::EvenCharacteristic);
    }
    let p = field.p();
    let mut counts = vec![0i64; p as usize];
    for x in field.units() {
        let sign = chi.eval(field, &x)?;
        let t = field.additive_char_exponent(&field.mul(twist, &x));
        counts[t as usize] += sign as i64;
    }
    let mut acc = CycElem::zero();
    for (t, &c) in counts.iter().enumerate() {
        if c != 0 {
            acc = acc.add(&CycElem::root(p, t as u64).mul(&CycElem::scalar(c)));
        }
    }
    Ok(acc)
}

/// Closed form of G(quadratic, psi_q) over F_{p^s}:
/// (-1)^{s-1} p^{s/2} when p = 1 mod 4, (-1)^{s-1} i^s p^{s/2} when
/// p = 3 mod 4.
pub fn gauss_closed_quadratic(p: u64, s: u32) -> Result<ClosedGauss> {
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if s == 0 {
        return Err(Error::ZeroDegree);
    }
    let s = s as i64;
    let eps = if p % 4 == 1 {
        Mu4::neg_one_pow(s - 1)
    } else {
        Mu4::neg_one_pow(s - 1) * Mu4::i_pow(s)
    };
    Ok(ClosedGauss {
        eps,
        half_power: HalfInt::from_halves(s),
    })
}

/// Epsilon factor W(chi, psi) of a tame character of F^x against an additive
/// character of conductor n = psi.conductor(), with the running-element
/// normalization c = pi^{a(chi) + n}:
///
/// * a(chi) = 0: the defining sum is empty and W = chi(pi)^n exactly.
/// * a(chi) = 1: W = chi(pi)^{1+n} q^{-1/2} G(eta, a * psi_q) where eta is
///   the residue quadratic character and a is the twist induced by psi; the
///   closed form reduces this to the fourth root of unity
///   chi(pi)^{1+n} eta(a) eps.
pub fn epsilon_tame(
    chi: &TameMultChar,
    psi: &AdditiveCharSpec,
    field: &TameField,
) -> Result<EpsilonFactor> {
    field.residue_field().contains(psi.twist())?;
    match chi.unit_part {
        ResidueChar::Trivial => {
            let exact = chi.pi_value.pow(psi.conductor());
            Ok(EpsilonFactor {
                numerator: exact.to_cyc(),
                half_power: HalfInt::from_int(0),
                exact,
            })
        }
        ResidueChar::Quadratic => {
            if field.p() == 2 {
                return Err(Error::EvenCharacteristic);
            }
            let k = field.residue_field();
            let chi_c = chi.pi_value.pow(1 + psi.conductor());
            let sum = gauss_sum_direct(k, ResidueChar::Quadratic, psi.twist())?;
            let closed = gauss_closed_quadratic(field.p(), field.f())?;
            let twist_sign = Mu4::from_sign(k.quadratic_character(psi.twist())?);
            Ok(EpsilonFactor {
                numerator: chi_c.to_cyc().mul(&sum),
                half_power: HalfInt::from_halves(field.f() as i64),
                exact: chi_c * twist_sign * closed.eps,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::build_field;

    #[test]
    fn half_int_formatting_and_parity() {
        assert_eq!(HalfInt::from_halves(1).to_string(), "1/2");
        assert_eq!(HalfInt::from_halves(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_halves(4).to_string(), "2");
        assert_eq!(HalfInt::from_int(2), HalfInt::from_halves(4));
        assert!(!HalfInt::from_halves(1).is_integer());
        assert!(HalfInt::from_int(5).is_integer());
        assert_eq!(HalfInt::from_halves(3).as_f64(), 1.5);
    }

    #[test]
    fn trivial_character_sums_to_minus_one() {
        for (p, s) in [(5u64, 1u32), (7, 1), (3, 2), (2, 3)] {
            let k = build_field(p, s).unwrap();
            let g = gauss_sum_direct(&k, ResidueChar::Trivial, &k.one()).unwrap();
            assert_eq!(g, CycElem::scalar(-1), "q = {}", k.q());
        }
    }

    #[test]
    fn direct_quadratic_examples_embed_correctly() {
        let f5 = build_field(5, 1).unwrap();
        let g5 = gauss_sum_direct(&f5, ResidueChar::Quadratic, &f5.one())
            .unwrap()
            .embed();
        assert!((g5.re - 5f64.sqrt()).abs() < 1e-9 && g5.im.abs() < 1e-9);

        let f3 = build_field(3, 1).unwrap();
        let g3 = gauss_sum_direct(&f3, ResidueChar::Quadratic, &f3.one())
            .unwrap()
            .embed();
        assert!(g3.re.abs() < 1e-9 && (g3.im - 3f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            gauss_closed_quadratic(5, 1).unwrap(),
            ClosedGauss {
                eps: Mu4::ONE,
                half_power: HalfInt::from_halves(1)
            }
        );
        assert_eq!(gauss_closed_quadratic(3, 1).unwrap().eps, Mu4::I);
        assert_eq!(gauss_closed_quadratic(7, 1).unwrap().eps, Mu4::I);
        assert_eq!(gauss_closed_quadratic(13, 1).unwrap().eps, Mu4::ONE);
        // s = 2: epsilon (-1)^{s-1} (i^s extra when p = 3 mod 4)
        assert_eq!(gauss_closed_quadratic(5, 2).unwrap().eps, Mu4::MINUS_ONE);
        assert_eq!(gauss_closed_quadratic(3, 2).unwrap().eps, Mu4::ONE);
        assert_eq!(gauss_closed_quadratic(7, 3).unwrap().eps, Mu4::MINUS_I);
        let c32 = gauss_closed_quadratic(3, 2).unwrap();
        let v = c32.embed(3);
        assert!((v.re - 3.0).abs() < 1e-12 && v.im.abs() < 1e-12);
    }

    #[test]
    fn closed_form_matches_direct_sum() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            for s in 1..=3u32 {
                if p.pow(s) > 600 {
                    continue;
                }
                let k = build_field(p, s).unwrap();
                let direct = gauss_sum_direct(&k, ResidueChar::Quadratic, &k.one())
                    .unwrap()
                    .embed();
                let closed = gauss_closed_quadratic(p, s).unwrap().embed(p);
                let scale = (p as f64).powf(s as f64 / 2.0);
                assert!(
                    (direct - closed).norm() < 1e-9 * scale,
                    "p = {p}, s = {s}: {direct} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn quadratic_sum_exact_identities() {
        // G * conj(G) = q and G^2 = eta(-1) q, both in Z[zeta_p]
        for p in [3u64, 5, 7, 11] {
            for s in 1..=2u32 {
                let k = build_field(p, s).unwrap();
                let q = k.q();
                let g = gauss_sum_direct(&k, ResidueChar::Quadratic, &k.one()).unwrap();
                assert_eq!(g.mul(&g.conj()), CycElem::scalar(q as i64));
                let sign = if ((q - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
                assert_eq!(g.mul(&g), CycElem::scalar(sign * q as i64));
            }
        }
    }

    #[test]
    fn twisting_the_additive_character_scales_by_the_character() {
        for (p, s) in [(3u64, 1u32), (5, 1), (7, 1), (3, 2), (11, 1), (3, 4), (5, 2)] {
            let k = build_field(p, s).unwrap();
            if k.q() > 121 {
                continue;
            }
            let base_q = gauss_sum_direct(&k, ResidueChar::Quadratic, &k.one()).unwrap();
            let base_t = gauss_sum_direct(&k, ResidueChar::Trivial, &k.one()).unwrap();
            for a in k.units() {
                let gq = gauss_sum_direct(&k, ResidueChar::Quadratic, &a).unwrap();
                let sign = k.quadratic_character(&a).unwrap();
                assert_eq!(gq, base_q.mul(&CycElem::scalar(sign as i64)));
                let gt = gauss_sum_direct(&k, ResidueChar::Trivial, &a).unwrap();
                assert_eq!(gt, base_t);
            }
        }
    }

    #[test]
    fn gauss_input_validation() {
        let f5 = build_field(5, 1).unwrap();
        assert_eq!(
            gauss_sum_direct(&f5, ResidueChar::Quadratic, &f5.zero()),
            Err(Error::ZeroTwist)
        );
        let f8 = build_field(2, 3).unwrap();
        assert_eq!(
            gauss_sum_direct(&f8, ResidueChar::Quadratic, &f8.one()),
            Err(Error::EvenCharacteristic)
        );
        assert_eq!(gauss_closed_quadratic(2, 1), Err(Error::EvenCharacteristic));
        assert_eq!(gauss_closed_quadratic(9, 1), Err(Error::NotPrime(9)));
        assert_eq!(gauss_closed_quadratic(5, 0), Err(Error::ZeroDegree));
        let f7 = build_field(7, 1).unwrap();
        assert!(matches!(
            gauss_sum_direct(&f5, ResidueChar::Quadratic, &f7.one()),
            Err(Error::MixedFields)
        ));
    }

    #[test]
    fn epsilon_examples_ramified() {
        // quadratic chi over Q_5 against psi_{-1}: the empty pi-power cancels
        // and W is the normalized Gauss sum, here exactly 1
        let q5 = TameField::from_w_coeffs(5, 1, 1, &[1]).unwrap();
        let chi = TameMultChar::new(ResidueChar::Quadratic, Mu4::ONE);
        let w = epsilon_tame(&chi, &q5.psi_minus_one_spec(), &q5).unwrap();
        assert_eq!(w.exact, Mu4::ONE);
        assert_eq!(w.half_power, HalfInt::from_halves(1));

        // same over Q_3: W = i
        let q3 = TameField::from_w_coeffs(3, 1, 1, &[1]).unwrap();
        let w = epsilon_tame(&chi, &q3.psi_minus_one_spec(), &q3).unwrap();
        assert_eq!(w.exact, Mu4::I);

        // residue degree 2 over Q_5: closed-form eps at s = 2 is -1
        let f = TameField::from_w_coeffs(5, 2, 1, &[1]).unwrap();
        let w = epsilon_tame(&chi, &f.psi_minus_one_spec(), &f).unwrap();
        assert_eq!(w.exact, Mu4::MINUS_ONE);

        // and over Q_7 at s = 2 the i^s factor flips it back to 1
        let f = TameField::from_w_coeffs(7, 2, 1, &[1]).unwrap();
        let w = epsilon_tame(&chi, &f.psi_minus_one_spec(), &f).unwrap();
        assert_eq!(w.exact, Mu4::ONE);
    }

    #[test]
    fn epsilon_examples_unramified() {
        let q5 = TameField::from_w_coeffs(5, 1, 1, &[1]).unwrap();
        let chi = TameMultChar::new(ResidueChar::Trivial, Mu4::MINUS_ONE);
        assert_eq!(chi.conductor(), 0);
        // conductor 0 additive character: W = chi(pi)^0 = 1
        let psi0 = AdditiveCharSpec::new(0, q5.residue_field().one()).unwrap();
        let w = epsilon_tame(&chi, &psi0, &q5).unwrap();
        assert_eq!(w.exact, Mu4::ONE);
        assert_eq!(w.half_power, HalfInt::from_int(0));
        assert_eq!(w.numerator, CycElem::scalar(1));
        // conductor -1: W = chi(pi)^{-1} = -1
        let w = epsilon_tame(&chi, &q5.psi_minus_one_spec(), &q5).unwrap();
        assert_eq!(w.exact, Mu4::MINUS_ONE);
    }

    #[test]
    fn epsilon_exact_part_matches_the_numerator() {
        for (p, f, e, w) in [
            (3u64, 1u32, 1u32, 1u64),
            (3, 1, 2, 2),
            (5, 1, 2, 3),
            (5, 2, 1, 1),
            (7, 1, 3, 1),
            (7, 2, 3, 2),
            (11, 1, 4, 6),
            (13, 1, 6, 2),
        ] {
            let field = TameField::from_w_coeffs(p, f, e, &[w]).unwrap();
            for chi_pi in [Mu4::ONE, Mu4::MINUS_ONE] {
                let chi = TameMultChar::new(ResidueChar::Quadratic, chi_pi);
                for psi in [field.psi_minus_one_spec(), field.canonical_psi_spec()] {
                    let eps = epsilon_tame(&chi, &psi, &field).unwrap();
                    let drift = (eps.embed(p) - eps.exact.embed()).norm();
                    assert!(drift < 1e-9, "field {field}: drift {drift}");
                    // |W| = 1 as an exact statement about the numerator
                    assert_eq!(
                        eps.numerator.mul(&eps.numerator.conj()),
                        CycElem::scalar(field.q() as i64)
                    );
                }
            }
        }
    }

    #[test]
    fn epsilon_rejects_even_characteristic_quadratic() {
        let f = TameField::from_w_coeffs(2, 1, 3, &[1]).unwrap();
        let chi = TameMultChar::new(ResidueChar::Quadratic, Mu4::ONE);
        assert_eq!(
            epsilon_tame(&chi, &f.psi_minus_one_spec(), &f),
            Err(Error::EvenCharacteristic)
        );
    }
}
