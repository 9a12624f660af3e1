//! A precision-1 model of tamely ramified extensions F/Q_p.
//!
//! F is presented by (p, f, e, w): residue degree f, ramification index e
//! with p not dividing e, and the residue w of the unit in pi^e = p * w that
//! pins down the uniformizer. Elements of F^x are tracked only as a
//! valuation plus a unit residue in k_F^x = U_F / U_F^1; that is exactly the
//! data visible to characters of conductor <= 1, which is all this crate
//! needs. The different exponent is d = e - 1 (tameness).
//!
//! The key computation is the normalization c -> c' = c / Tr_{F/F_0}(p c),
//! where F_0 is the maximal unramified subextension: additively twisting the
//! canonical character psi_F by c' yields the conductor -1 character whose
//! restriction to O_F induces the canonical character psi_q of the residue
//! field. At precision 1 the trace reduces to a residue formula:
//! Tr_{F/F_0}(p c) has unit residue e * w^{-1} * u(c) (proved by expanding
//! u(c) in powers of pi; the conjugates of pi^j for 0 < j < e sum to zero).
//! The symbolic-trace oracle in this crate validates that formula on a grid.

use crate::error::{Error, Result};
use crate::finite_field::{build_field, FieldDescriptor, FqElem};

/// Isomorphism-presentation data of a tamely ramified F/Q_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TameField {
    p: u64,
    f: u32,
    e: u32,
    w_res: FqElem,
    residue: FieldDescriptor,
}

impl TameField {
    /// Builds the field descriptor; rejects wild input (p | e) and a zero
    /// unit residue.
    pub fn new(p: u64, f: u32, e: u32, w_res: FqElem) -> Result<TameField> {
        let residue = build_field(p, f)?;
        if e == 0 || (e as u64).is_multiple_of(p) {
            return Err(Error::WildRamification { p, e });
        }
        residue.contains(&w_res)?;
        if w_res.is_zero() {
            return Err(Error::ZeroUnitResidue);
        }
        Ok(TameField {
            p,
            f,
            e,
            w_res,
            residue,
        })
    }

    /// Convenience constructor taking w in basis coefficients (a single
    /// residue when f = 1).
    pub fn from_w_coeffs(p: u64, f: u32, e: u32, w_coeffs: &[u64]) -> Result<TameField> {
        let residue = build_field(p, f)?;
        let w = residue.from_coeffs(w_coeffs)?;
        TameField::new(p, f, e, w)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Residue degree (q_F = p^f).
    pub fn f(&self) -> u32 {
        self.f
    }

    /// Ramification index over Q_p.
    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.residue.q()
    }

    /// Exponent of the different, e - 1 in the tame case.
    pub fn different_exponent(&self) -> u32 {
        self.e - 1
    }

    pub fn w_res(&self) -> &FqElem {
        &self.w_res
    }

    pub fn residue_field(&self) -> &FieldDescriptor {
        &self.residue
    }

    /// The residue of e in k_F; nonzero by tameness.
    pub fn e_res(&self) -> FqElem {
        self.residue.from_u64(self.e as u64 % self.p)
    }

    /// An element c = pi^{-e} * u of the unique valuation admissible for
    /// producing conductor -1 twists: nu(c) = -1 - d = -e.
    pub fn admissible_c(&self, unit_res: FqElem) -> Result<CClass> {
        self.residue.contains(&unit_res)?;
        CClass::new(-(self.e as i64), unit_res)
    }

    /// Default admissible choice c = pi^{-1-d}, unit part 1.
    pub fn default_c(&self) -> CClass {
        self.admissible_c(self.residue.one()).unwrap()
    }

    /// Unit residue of Tr_{F/F_0}(p c) for admissible c, computed purely in
    /// k_F as e * w^{-1} * u(c).
    pub fn trace_residue_pc(&self, c: &CClass) -> Result<FqElem> {
        if c.val != -(self.e as i64) {
            return Err(Error::WrongValuation {
                expected: -(self.e as i64),
                got: c.val,
            });
        }
        self.residue.contains(&c.unit_res)?;
        let w_inv = self.residue.inv(&self.w_res)?;
        Ok(self
            .residue
            .mul(&self.residue.mul(&self.e_res(), &w_inv), &c.unit_res))
    }

    /// c' = c / Tr_{F/F_0}(p c); same valuation, unit residue divided by the
    /// trace residue. Independent of the unit part of c.
    pub fn c_prime(&self, c: &CClass) -> Result<CClass> {
        let t = self.trace_residue_pc(c)?;
        let t_inv = self.residue.inv(&t)?;
        CClass::new(c.val, self.residue.mul(&c.unit_res, &t_inv))
    }

    /// Spec of the conductor -1 additive character psi_{-1} normalized so its
    /// restriction to O_F induces the canonical psi_q on the residue field.
    pub fn psi_minus_one_spec(&self) -> AdditiveCharSpec {
        AdditiveCharSpec {
            n: -1,
            twist: self.residue.one(),
        }
    }

    /// Spec of the canonical additive character psi_F: conductor d, and the
    /// induced character on the top graded piece is x -> psi_q(e w^{-1} x)
    /// relative to the pi-power identification (the same expansion that
    /// yields [`TameField::trace_residue_pc`]).
    pub fn canonical_psi_spec(&self) -> AdditiveCharSpec {
        let w_inv = self.residue.inv(&self.w_res).unwrap();
        AdditiveCharSpec {
            n: self.different_exponent() as i64,
            twist: self.residue.mul(&self.e_res(), &w_inv),
        }
    }

    /// Spec of c * psi for psi given by `spec`: conductor moves by the
    /// valuation of c, the induced twist picks up the unit residue.
    pub fn twist_psi_spec(&self, spec: &AdditiveCharSpec, c: &CClass) -> Result<AdditiveCharSpec> {
        self.residue.contains(&c.unit_res)?;
        self.residue.contains(&spec.twist)?;
        Ok(AdditiveCharSpec {
            n: spec.n + c.val,
            twist: self.residue.mul(&spec.twist, &c.unit_res),
        })
    }
}

impl std::fmt::Display for TameField {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            fmt,
            "F(p={}, f={}, e={}, w={})",
            self.p, self.f, self.e, self.w_res
        )
    }
}

/// A nonzero element of F^x modulo 1-units: valuation plus unit residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CClass {
    val: i64,
    unit_res: FqElem,
}

impl CClass {
    pub fn new(val: i64, unit_res: FqElem) -> Result<CClass> {
        if unit_res.is_zero() {
            return Err(Error::ZeroUnitResidue);
        }
        Ok(CClass { val, unit_res })
    }

    pub fn val(&self) -> i64 {
        self.val
    }

    pub fn unit_res(&self) -> &FqElem {
        &self.unit_res
    }
}

/// An additive character of F through the only data conductor <= 1 characters
/// can see: its conductor n and the twist a with induced residue character
/// x -> psi_q(a x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveCharSpec {
    n: i64,
    twist: FqElem,
}

impl AdditiveCharSpec {
    pub fn new(n: i64, twist: FqElem) -> Result<AdditiveCharSpec> {
        if twist.is_zero() {
            return Err(Error::ZeroTwist);
        }
        Ok(AdditiveCharSpec { n, twist })
    }

    pub fn conductor(&self) -> i64 {
        self.n
    }

    pub fn twist(&self) -> &FqElem {
        &self.twist
    }
}
