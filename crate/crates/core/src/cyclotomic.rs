//! Exact arithmetic in the rings Z[zeta_m].
//!
//! Elements are integer coefficient vectors in the power basis of
//! Z[x]/(Phi_m(x)), always kept reduced mod the cyclotomic polynomial Phi_m,
//! so equality at a fixed order is coefficient equality. Mixed-order
//! arithmetic lifts both operands to order lcm(m1, m2); this is what lets
//! Gauss sums (living in Z[zeta_p]) multiply against fourth roots of unity.
//!
//! [`Mu4`] is the group {1, i, -1, -i} stored as an exponent of i; every
//! lambda-value and squareness factor in this crate lands there.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

/// An element of Z[zeta_m] in the power basis of Z[x]/(Phi_m).
#[derive(Debug, Clone)]
pub struct CycElem {
    m: u64,
    /// Length phi(m), little-endian in powers of zeta_m.
    coeffs: Vec<BigInt>,
}

impl CycElem {
    /// zeta_m^k, reduced mod Phi_m. `root(m, 0)` is the identity.
    pub fn root(m: u64, k: u64) -> CycElem {
        assert!(m >= 1, "root-of-unity order must be >= 1");
        let k = k % m;
        let mut dense = vec![BigInt::zero(); k as usize + 1];
        dense[k as usize] = BigInt::one();
        CycElem::from_dense(m, dense)
    }

    /// The rational integer n, at order 1.
    pub fn scalar<T: Into<BigInt>>(n: T) -> CycElem {
        CycElem {
            m: 1,
            coeffs: vec![n.into()],
        }
    }

    pub fn zero() -> CycElem {
        CycElem::scalar(0)
    }

    pub fn order(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn from_dense(m: u64, dense: Vec<BigInt>) -> CycElem {
        let phi = cyclotomic_polynomial(m);
        let coeffs = poly_rem_monic(dense, &phi);
        CycElem { m, coeffs }
    }

    /// Rewrites the element in Z[zeta_target]; `target` must be a multiple
    /// of the current order.
    pub fn raise_order(&self, target: u64) -> CycElem {
        assert!(
            target.is_multiple_of(self.m),
            "cannot lower order {} to {}",
            self.m,
            target
        );
        if target == self.m {
            return self.clone();
        }
        let step = (target / self.m) as usize;
        let mut dense = vec![BigInt::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            dense[j * step] = c.clone();
        }
        CycElem::from_dense(target, dense)
    }

    fn common_order(&self, rhs: &CycElem) -> (CycElem, CycElem) {
        let m = num_integer::lcm(self.m, rhs.m);
        (self.raise_order(m), rhs.raise_order(m))
    }

    pub fn add(&self, rhs: &CycElem) -> CycElem {
        let (a, b) = self.common_order(rhs);
        let mut coeffs = a.coeffs;
        for (c, d) in coeffs.iter_mut().zip(&b.coeffs) {
            *c += d;
        }
        CycElem { m: a.m, coeffs }
    }

    pub fn neg(&self) -> CycElem {
        CycElem {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &CycElem) -> CycElem {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &CycElem) -> CycElem {
        let (a, b) = self.common_order(rhs);
        let mut dense = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                dense[i + j] += x * y;
            }
        }
        CycElem::from_dense(a.m, dense)
    }

    /// Image under zeta_m -> zeta_m^{-1}; complex conjugation on the
    /// embedded value.
    pub fn conj(&self) -> CycElem {
        let mut dense = vec![BigInt::zero(); self.m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((self.m - j as u64) % self.m) as usize;
            dense[e] += c;
        }
        CycElem::from_dense(self.m, dense)
    }

    /// Numeric embedding sum_j c_j e^{2 pi i j / m} in double precision.
    ///
    /// Absolute error is at most (sum_j |c_j|) * eps * C with C ~ 8: one eps
    /// each for the trig evaluations, the products, and the accumulation.
    pub fn embed(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * (j as f64) / (self.m as f64);
            let cf = c.to_f64().expect("coefficient out of f64 range");
            acc += Complex64::new(angle.cos(), angle.sin()) * cf;
        }
        acc
    }
}

impl PartialEq for CycElem {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common_order(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycElem {}

impl std::ops::Add for &CycElem {
    type Output = CycElem;
    fn add(self, rhs: &CycElem) -> CycElem {
        CycElem::add(self, rhs)
    }
}

impl std::ops::Sub for &CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &CycElem) -> CycElem {
        CycElem::sub(self, rhs)
    }
}

impl std::ops::Mul for &CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &CycElem) -> CycElem {
        CycElem::mul(self, rhs)
    }
}

impl std::ops::Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        CycElem::neg(self)
    }
}

static PHI_CACHE: LazyLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Coefficients of Phi_m, little-endian, computed as the quotient of x^m - 1
/// by the product of all lower-order cyclotomic polynomials dividing it.
pub fn cyclotomic_polynomial(m: u64) -> Arc<Vec<BigInt>> {
    if let Some(hit) = PHI_CACHE.lock().unwrap().get(&m) {
        return hit.clone();
    }
    let result = Arc::new(compute_phi(m));
    PHI_CACHE.lock().unwrap().insert(m, result.clone());
    result
}

fn compute_phi(m: u64) -> Vec<BigInt> {
    if m == 1 {
        return vec![-BigInt::one(), BigInt::one()];
    }
    // x^m - 1
    let mut poly = vec![BigInt::zero(); m as usize + 1];
    poly[0] = -BigInt::one();
    poly[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            poly = poly_div_exact(&poly, &phi_d);
        }
    }
    poly
}

/// Exact quotient of `num` by the monic `div`; the division must be exact.
fn poly_div_exact(num: &[BigInt], div: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = div.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if !c.is_zero() {
            for (j, dj) in div.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact division");
    quot
}

/// Remainder of `dense` modulo the monic `modulus`, trimmed/padded to
/// degree(modulus) coefficients.
fn poly_rem_monic(mut dense: Vec<BigInt>, modulus: &[BigInt]) -> Vec<BigInt> {
    let dn = modulus.len() - 1;
    while dense.len() > dn {
        let lead = dense.pop().unwrap();
        if !lead.is_zero() {
            let shift = dense.len() - dn;
            for (j, mj) in modulus[..dn].iter().enumerate() {
                dense[shift + j] -= &lead * mj;
            }
        }
    }
    dense.resize(dn.max(1), BigInt::zero());
    dense
}

/// A fourth root of unity i^k, the value group of every lambda in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mu4(u8);

impl Mu4 {
    pub const ONE: Mu4 = Mu4(0);
    pub const I: Mu4 = Mu4(1);
    pub const MINUS_ONE: Mu4 = Mu4(2);
    pub const MINUS_I: Mu4 = Mu4(3);

    pub fn new(k: i64) -> Mu4 {
        Mu4(k.rem_euclid(4) as u8)
    }

    /// The exponent k in [0, 4) with value i^k.
    pub fn exponent(&self) -> u8 {
        self.0
    }

    /// Lifts +1 / -1 into the group.
    pub fn from_sign(s: i32) -> Mu4 {
        match s {
            1 => Mu4::ONE,
            -1 => Mu4::MINUS_ONE,
            _ => panic!("sign must be +1 or -1, got {s}"),
        }
    }

    /// (-1)^e as a group element.
    pub fn neg_one_pow(e: i64) -> Mu4 {
        Mu4::new(2 * e)
    }

    /// i^e as a group element.
    pub fn i_pow(e: i64) -> Mu4 {
        Mu4::new(e)
    }

    pub fn pow(&self, e: i64) -> Mu4 {
        Mu4::new(self.0 as i64 * e.rem_euclid(4))
    }

    /// Complex conjugate (= inverse).
    pub fn conj(&self) -> Mu4 {
        Mu4::new(-(self.0 as i64))
    }

    pub fn re(&self) -> i32 {
        match self.0 {
            0 => 1,
            2 => -1,
            _ => 0,
        }
    }

    pub fn im(&self) -> i32 {
        match self.0 {
            1 => 1,
            3 => -1,
            _ => 0,
        }
    }

    /// +1 or -1 when the value is real, None for +-i.
    pub fn as_sign(&self) -> Option<i32> {
        match self.0 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    pub fn to_cyc(&self) -> CycElem {
        CycElem::root(4, self.0 as u64)
    }

    pub fn embed(&self) -> Complex64 {
        Complex64::new(self.re() as f64, self.im() as f64)
    }
}

impl std::ops::Mul for Mu4 {
    type Output = Mu4;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Mu4) -> Mu4 {
        Mu4::new(self.0 as i64 + rhs.0 as i64)
    }
}

impl std::ops::Neg for Mu4 {
    type Output = Mu4;
    fn neg(self) -> Mu4 {
        Mu4::new(self.0 as i64 + 2)
    }
}

impl std::fmt::Display for Mu4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self.0 {
            0 => "1",
            1 => "i",
            2 => "-1",
            _ => "-i",
        };
        write!(f, "{s}")
    }
}
