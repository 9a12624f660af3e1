//! Independent cross-check oracles.
//!
//! The main code paths compute Gauss sums exactly in Z[zeta_p] with the
//! trace as a Frobenius power sum, and reduce p-adic traces to a one-line
//! residue formula. The oracles here recompute the same quantities by
//! different machinery so that agreement is evidence, not tautology:
//!
//! * [`gauss_numeric`] sums f64 complex exponentials, takes the trace as
//!   the trace of the multiplication matrix, and evaluates the quadratic
//!   character by membership in the enumerated set of squares.
//! * [`SymbolicTameModel`] realizes O_F / p^2 O_F as the algebra
//!   (Z/p^2)[t]/(m(t)) adjoined pi with pi^e = p w, and computes
//!   Tr_{F/F_0}(p c) as an honest e x e multiplication-matrix trace, for
//!   arbitrary lifts of c. Working mod p^2 instead of mod p keeps the
//!   contributions from the relation pi^e = p w visible, so the claim that
//!   they vanish only to first order is actually exercised.

use std::collections::HashSet;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::finite_field::{FieldDescriptor, FqElem};
use crate::gauss::ResidueChar;
use crate::local_field::{AdditiveCharSpec, TameField};

/// Trace of the multiplication-by-x matrix on the power basis of k_q over
/// k_p: sum over j of the t^j coefficient of x * t^j.
fn matrix_trace(field: &FieldDescriptor, x: &FqElem) -> u64 {
    let s = field.s() as usize;
    if s == 1 {
        return x.coeffs()[0];
    }
    let t = field.from_coeffs(&[0, 1]).unwrap();
    let mut y = x.clone();
    let mut tr = y.coeffs()[0];
    for j in 1..s {
        y = field.mul(&y, &t);
        tr = (tr + y.coeffs()[j]) % field.p();
    }
    tr
}

/// Floating-point evaluation of G(chi, twist * psi_q) by direct summation
/// of complex exponentials.
pub fn gauss_numeric(
    field: &FieldDescriptor,
    chi: ResidueChar,
    twist: &FqElem,
) -> Result<Complex64> {
    field.contains(twist)?;
    if twist.is_zero() {
        return Err(Error::ZeroTwist);
    }
    if field.p() == 2 && !chi.is_trivial() {
        return Err(Error::EvenCharacteristic);
    }
    let squares: HashSet<Vec<u64>> = match chi {
        ResidueChar::Trivial => HashSet::new(),
        ResidueChar::Quadratic => field
            .units()
            .map(|u| field.mul(&u, &u).coeffs().to_vec())
            .collect(),
    };
    let step = std::f64::consts::TAU / field.p() as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for x in field.units() {
        let sign = match chi {
            ResidueChar::Trivial => 1.0,
            ResidueChar::Quadratic => {
                if squares.contains(x.coeffs()) {
                    1.0
                } else {
                    -1.0
                }
            }
        };
        let angle = step * matrix_trace(field, &field.mul(twist, &x)) as f64;
        acc += sign * Complex64::new(angle.cos(), angle.sin());
    }
    Ok(acc)
}

/// Numerical epsilon factor of the norm-normalized ramified quadratic
/// character (value 1 on the uniformizer) against the additive character
/// described by `psi`: q^{-1/2} G(eta, twist * psi_q).
pub fn lambda_ramified_numeric(field: &TameField, psi: &AdditiveCharSpec) -> Result<Complex64> {
    let g = gauss_numeric(field.residue_field(), ResidueChar::Quadratic, psi.twist())?;
    Ok(g / (field.q() as f64).sqrt())
}

/// The definitional path for the lambda value at the conductor -1 character:
/// q^{-1/2} times the plain numeric Gauss sum over k_F, bypassing every
/// closed form.
pub fn lambda_direct_path(field: &TameField) -> Result<Complex64> {
    lambda_ramified_numeric(field, &field.psi_minus_one_spec())
}

/// Polynomial arithmetic in (Z/p^2)[t]/(m(t)) with m the monic lift of the
/// residue-field modulus.
struct CoeffRing {
    p: u64,
    p2: u64,
    f: usize,
    modulus: Vec<u64>,
}

type Coeff = Vec<u64>;

impl CoeffRing {
    fn new(field: &FieldDescriptor) -> CoeffRing {
        CoeffRing {
            p: field.p(),
            p2: field.p() * field.p(),
            f: field.s() as usize,
            modulus: field.modulus().to_vec(),
        }
    }

    fn zero(&self) -> Coeff {
        vec![0; self.f]
    }

    fn one(&self) -> Coeff {
        let mut c = self.zero();
        c[0] = 1;
        c
    }

    fn lift(&self, x: &FqElem) -> Coeff {
        x.coeffs().to_vec()
    }

    fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x + y) % self.p2)
            .collect()
    }

    fn mulmod(&self, x: u64, y: u64) -> u64 {
        (x as u128 * y as u128 % self.p2 as u128) as u64
    }

    fn scale(&self, k: u64, a: &Coeff) -> Coeff {
        a.iter().map(|&x| self.mulmod(x, k)).collect()
    }

    fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        let mut wide = vec![0u64; 2 * self.f - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                wide[i + j] = (wide[i + j] + self.mulmod(x, y)) % self.p2;
            }
        }
        // reduce by the monic modulus
        for d in (self.f..wide.len()).rev() {
            let lead = wide[d];
            if lead == 0 {
                continue;
            }
            wide[d] = 0;
            for (k, &m) in self.modulus.iter().enumerate().take(self.f) {
                let pos = d - self.f + k;
                wide[pos] = (wide[pos] + self.p2 - self.mulmod(lead, m)) % self.p2;
            }
        }
        wide.truncate(self.f);
        wide
    }

    /// Inverse of a unit: exhaustive solve mod p, then one Newton step
    /// y -> y (2 - a y) lifts it mod p^2.
    fn inv_unit(&self, a: &Coeff) -> Result<Coeff> {
        let q = self.p.pow(self.f as u32);
        let mut y0 = None;
        for idx in 0..q {
            let mut cand = self.zero();
            let mut n = idx;
            for c in cand.iter_mut() {
                *c = n % self.p;
                n /= self.p;
            }
            let prod = self.mul(a, &cand);
            let ok = prod
                .iter()
                .enumerate()
                .all(|(i, &c)| c % self.p == u64::from(i == 0));
            if ok {
                y0 = Some(cand);
                break;
            }
        }
        let y0 = y0.ok_or(Error::ZeroInverse)?;
        let mut two = self.zero();
        two[0] = 2;
        let y1 = self.mul(&y0, &self.sub(&two, &self.mul(a, &y0)));
        if self.mul(a, &y1) != self.one() {
            return Err(Error::Inconsistent(
                "Newton lift of an inverse failed mod p^2".into(),
            ));
        }
        Ok(y1)
    }

    fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x + self.p2 - y) % self.p2)
            .collect()
    }
}

/// An element of the rank-e model algebra, as pi-power coefficients.
pub type ModelElem = Vec<Vec<u64>>;

/// The algebra (Z/p^2)[t]/(m(t)) [pi] / (pi^e - p w), a faithful picture of
/// O_F / p^2 O_F over the unramified part.
pub struct SymbolicTameModel {
    ring: CoeffRing,
    e: usize,
    w: Coeff,
    w_inv: Coeff,
    residue: FieldDescriptor,
}

impl SymbolicTameModel {
    pub fn new(field: &TameField) -> Result<SymbolicTameModel> {
        let ring = CoeffRing::new(field.residue_field());
        let w = ring.lift(field.w_res());
        let w_inv = ring.inv_unit(&w)?;
        Ok(SymbolicTameModel {
            ring,
            e: field.e() as usize,
            w,
            w_inv,
            residue: field.residue_field().clone(),
        })
    }

    /// Builds an element from pi-power rows of t-coefficients, padding with
    /// zeros and reducing entries mod p^2.
    pub fn element(&self, rows: &[&[u64]]) -> ModelElem {
        let mut out = vec![self.ring.zero(); self.e];
        for (i, row) in rows.iter().enumerate().take(self.e) {
            for (j, &c) in row.iter().enumerate().take(self.ring.f) {
                out[i][j] = c % self.ring.p2;
            }
        }
        out
    }

    fn r_one(&self) -> ModelElem {
        let mut x = vec![self.ring.zero(); self.e];
        x[0] = self.ring.one();
        x
    }

    fn r_add(&self, a: &ModelElem, b: &ModelElem) -> ModelElem {
        a.iter().zip(b).map(|(x, y)| self.ring.add(x, y)).collect()
    }

    fn r_mul(&self, a: &ModelElem, b: &ModelElem) -> ModelElem {
        let mut out = vec![self.ring.zero(); self.e];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let prod = self.ring.mul(x, y);
                if i + j < self.e {
                    out[i + j] = self.ring.add(&out[i + j], &prod);
                } else {
                    // pi^{i+j} = pi^{i+j-e} * p w
                    let wrapped = self.ring.scale(self.ring.p, &self.ring.mul(&prod, &self.w));
                    out[i + j - self.e] = self.ring.add(&out[i + j - self.e], &wrapped);
                }
            }
        }
        out
    }

    fn embed_coeff(&self, c: &Coeff) -> ModelElem {
        let mut x = vec![self.ring.zero(); self.e];
        x[0] = c.clone();
        x
    }

    fn pi(&self) -> ModelElem {
        if self.e == 1 {
            self.embed_coeff(&self.ring.scale(self.ring.p, &self.w))
        } else {
            let mut x = vec![self.ring.zero(); self.e];
            x[1] = self.ring.one();
            x
        }
    }

    /// Trace of the multiplication-by-x matrix on the basis pi^0..pi^{e-1},
    /// an element of the coefficient ring, i.e. Tr_{F/F_0}(x) mod p^2.
    pub fn algebra_trace(&self, x: &ModelElem) -> Coeff {
        let mut basis = self.r_one();
        let pi = self.pi();
        let mut tr = self.ring.zero();
        for j in 0..self.e {
            let prod = self.r_mul(x, &basis);
            tr = self.ring.add(&tr, &prod[j]);
            basis = self.r_mul(&basis, &pi);
        }
        tr
    }

    /// Tr_{F/F_0}(p c) mod p^2 for the lift p c = w^{-1} u (1 + pi r) of an
    /// admissible c with unit residue u and lift perturbation r.
    pub fn trace_pc_mod_p2(&self, u_res: &FqElem, r: &ModelElem) -> Result<Coeff> {
        self.residue.contains(u_res)?;
        if u_res.is_zero() {
            return Err(Error::ZeroUnitResidue);
        }
        let unit = self.ring.mul(&self.w_inv, &self.ring.lift(u_res));
        let lift = self.r_add(&self.r_one(), &self.r_mul(&self.pi(), r));
        let x = self.r_mul(&self.embed_coeff(&unit), &lift);
        Ok(self.algebra_trace(&x))
    }

    /// The mod-p residue of [`SymbolicTameModel::trace_pc_mod_p2`], as an
    /// element of k_F; this is the quantity the residue formula predicts.
    pub fn trace_residue_pc(&self, u_res: &FqElem, r: &ModelElem) -> Result<FqElem> {
        let tr = self.trace_pc_mod_p2(u_res, r)?;
        let reduced: Vec<u64> = tr.iter().map(|&c| c % self.ring.p).collect();
        self.residue.from_coeffs(&reduced)
    }
}
