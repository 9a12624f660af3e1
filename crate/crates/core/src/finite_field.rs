//! Deterministic finite fields k_q, q = p^s.
//!
//! A field is presented as F_p[t]/(g) where g is the lexicographically
//! smallest monic irreducible polynomial of degree s (coefficients compared
//! low-degree-first). Two descriptors built for the same (p, s) are therefore
//! bit-identical, so elements are portable across runs and processes.
//!
//! Besides ring arithmetic the module provides the absolute trace
//! Tr(x) = x + x^p + ... + x^{p^{s-1}}, the quadratic character computed by
//! Euler's criterion, and the exponent k with psi_q(x) = zeta_p^k for the
//! canonical additive character psi_q(x) = e^{2 pi i Tr(x) / p}.

use crate::error::{Error, Result};

/// Default cap on q = p^s; keeps full-field enumeration cheap.
pub const DEFAULT_Q_BOUND: u64 = 1 << 20;

/// Environment variable overriding the q bound.
pub const Q_BOUND_ENV: &str = "TAME_LAMBDA_QMAX";

/// The q bound currently in effect: `TAME_LAMBDA_QMAX` if set and parseable,
/// otherwise [`DEFAULT_Q_BOUND`].
pub fn configured_q_bound() -> u64 {
    std::env::var(Q_BOUND_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_Q_BOUND)
}

/// A finite field with q = p^s elements, fixed by its defining modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldDescriptor {
    p: u64,
    s: u32,
    /// Monic modulus of degree s, little-endian coefficients (length s + 1).
    /// For s = 1 this is the polynomial t, i.e. plain residue arithmetic.
    modulus: Vec<u64>,
}

/// An element of k_q in the polynomial basis 1, t, ..., t^{s-1}.
///
/// Carries (p, s) so cross-field misuse is detectable; since descriptors are
/// deterministic per (p, s), this identifies the field completely.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FqElem {
    p: u64,
    s: u32,
    coeffs: Vec<u64>,
}

impl FqElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn in_field(&self, fq: &FieldDescriptor) -> bool {
        self.p == fq.p && self.s == fq.s
    }
}

impl std::fmt::Display for FqElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.s == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
            write!(f, "[{}]", strs.join(","))
        }
    }
}

/// Builds the canonical descriptor for k_{p^s} under the configured q bound.
pub fn build_field(p: u64, s: u32) -> Result<FieldDescriptor> {
    build_field_with_bound(p, s, configured_q_bound())
}

/// Same as [`build_field`] with an explicit bound on q.
pub fn build_field_with_bound(p: u64, s: u32, bound: u64) -> Result<FieldDescriptor> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if s == 0 {
        return Err(Error::ZeroDegree);
    }
    match checked_pow(p, s) {
        Some(q) if q <= bound => {}
        _ => return Err(Error::SizeBound { p, s, bound }),
    }
    let modulus = smallest_irreducible(p, s);
    Ok(FieldDescriptor { p, s, modulus })
}

impl FieldDescriptor {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.s)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FqElem {
        self.elem(vec![0; self.s as usize])
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    /// The scalar n mod p, embedded as a constant polynomial.
    pub fn from_u64(&self, n: u64) -> FqElem {
        let mut coeffs = vec![0; self.s as usize];
        coeffs[0] = n % self.p;
        self.elem(coeffs)
    }

    /// Builds an element from explicit basis coefficients, validating range.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FqElem> {
        if coeffs.len() > self.s as usize {
            return Err(Error::BadCoefficients {
                len: coeffs.len(),
                expected: self.s as usize,
            });
        }
        for &c in coeffs {
            if c >= self.p {
                return Err(Error::CoefficientRange(c, self.p));
            }
        }
        let mut full = coeffs.to_vec();
        full.resize(self.s as usize, 0);
        Ok(self.elem(full))
    }

    /// The element whose coefficient vector is the base-p digits of `index`;
    /// indices 0..q enumerate the whole field, 0 mapping to zero.
    pub fn element_from_index(&self, index: u64) -> FqElem {
        let mut coeffs = vec![0; self.s as usize];
        let mut n = index;
        for c in coeffs.iter_mut() {
            *c = n % self.p;
            n /= self.p;
        }
        self.elem(coeffs)
    }

    /// All q elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.q()).map(move |i| self.element_from_index(i))
    }

    /// The q - 1 nonzero elements in index order.
    pub fn units(&self) -> impl Iterator<Item = FqElem> + '_ {
        (1..self.q()).map(move |i| self.element_from_index(i))
    }

    fn elem(&self, coeffs: Vec<u64>) -> FqElem {
        debug_assert_eq!(coeffs.len(), self.s as usize);
        FqElem {
            p: self.p,
            s: self.s,
            coeffs,
        }
    }

    /// Checks that `x` was built by a descriptor equal to this one.
    pub fn contains(&self, x: &FqElem) -> Result<()> {
        if x.in_field(self) {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        assert!(a.in_field(self) && b.in_field(self), "mixed fields");
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        self.elem(coeffs)
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        assert!(a.in_field(self), "mixed fields");
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        self.elem(coeffs)
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        assert!(a.in_field(self) && b.in_field(self), "mixed fields");
        let prod = poly_mul(&a.coeffs, &b.coeffs, self.p);
        let rem = poly_rem(&prod, &self.modulus, self.p);
        let mut coeffs = rem;
        coeffs.resize(self.s as usize, 0);
        self.elem(coeffs)
    }

    /// Square-and-multiply power.
    pub fn pow(&self, a: &FqElem, mut e: u64) -> FqElem {
        assert!(a.in_field(self), "mixed fields");
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, via a^{q-2}.
    pub fn inv(&self, a: &FqElem) -> Result<FqElem> {
        self.contains(a)?;
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.q() - 2))
    }

    pub fn checked_add(&self, a: &FqElem, b: &FqElem) -> Result<FqElem> {
        self.contains(a)?;
        self.contains(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_mul(&self, a: &FqElem, b: &FqElem) -> Result<FqElem> {
        self.contains(a)?;
        self.contains(b)?;
        Ok(self.mul(a, b))
    }

    pub fn checked_pow(&self, a: &FqElem, e: u64) -> Result<FqElem> {
        self.contains(a)?;
        Ok(self.pow(a, e))
    }

    /// Absolute trace Tr(x) = sum of x^{p^j}, 0 <= j < s, as a prime-field
    /// residue in [0, p).
    pub fn trace_to_prime(&self, x: &FqElem) -> u64 {
        assert!(x.in_field(self), "mixed fields");
        let mut frob = x.clone();
        let mut acc = x.clone();
        for _ in 1..self.s {
            frob = self.pow(&frob, self.p);
            acc = self.add(&acc, &frob);
        }
        debug_assert!(
            acc.coeffs[1..].iter().all(|&c| c == 0),
            "trace left the prime field"
        );
        acc.coeffs[0]
    }

    /// Euler's criterion: +1 if x is a square in k_q^x, -1 otherwise.
    pub fn quadratic_character(&self, x: &FqElem) -> Result<i32> {
        self.contains(x)?;
        if self.p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if x.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let y = self.pow(x, (self.q() - 1) / 2);
        if y.is_one() {
            Ok(1)
        } else {
            debug_assert_eq!(y, self.from_u64(self.p - 1));
            Ok(-1)
        }
    }

    /// The integer k in [0, p) with psi_q(x) = zeta_p^k, i.e. the lift of Tr(x).
    pub fn additive_char_exponent(&self, x: &FqElem) -> u64 {
        self.trace_to_prime(x)
    }
}

fn checked_pow(p: u64, s: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..s {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

// ---- dense polynomial arithmetic over F_p (little-endian, used for the
// ---- modulus search and element multiplication) ----

fn poly_trim(a: &mut Vec<u64>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` by the monic polynomial `m`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let deg_m = m.len() - 1;
    while r.len() > deg_m {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - deg_m;
        if lead != 0 {
            for (j, &mc) in m.iter().enumerate() {
                let idx = shift + j;
                r[idx] = (r[idx] + p * p - (lead * mc) % p) % p;
            }
        }
        r.pop();
    }
    r.resize(deg_m.max(1), 0);
    r
}

fn poly_is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime and a nonzero mod p
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !poly_is_zero(&y) {
        // make y monic so poly_rem applies
        let lead = *y.last().unwrap();
        if lead != 1 {
            let inv = mod_inv(lead, p);
            for c in y.iter_mut() {
                *c = *c * inv % p;
            }
        }
        let mut r = poly_rem(&x, &y, p);
        poly_trim(&mut r);
        x = y;
        y = r;
    }
    x
}

/// x^e mod g, by repeated squaring.
fn poly_x_powmod(e: u64, g: &[u64], p: u64) -> Vec<u64> {
    let deg = g.len() - 1;
    let mut base = vec![0u64; deg.max(2)];
    base[1] = 1; // the polynomial x
    base = poly_rem(&base, g, p);
    let mut acc = vec![0u64; deg.max(1)];
    acc[0] = 1;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &base, p), g, p);
        }
        base = poly_rem(&poly_mul(&base, &base, p), g, p);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a monic g of degree s over F_p.
fn is_irreducible(g: &[u64], p: u64) -> bool {
    let s = (g.len() - 1) as u32;
    if s == 1 {
        return true;
    }
    let x_poly = {
        let mut v = vec![0u64; g.len() - 1];
        v[1] = 1;
        v
    };
    // x^{p^s} == x mod g
    let mut h = poly_x_powmod(p.pow(s), g, p);
    let mut diff: Vec<u64> = h
        .iter()
        .zip(&x_poly)
        .map(|(&a, &b)| (a + p - b) % p)
        .collect();
    if !poly_is_zero(&diff) {
        return false;
    }
    // gcd(x^{p^{s/r}} - x, g) == 1 for every prime r | s
    for r in prime_factors(s) {
        h = poly_x_powmod(p.pow(s / r), g, p);
        diff = h
            .iter()
            .zip(&x_poly)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        let gcd = poly_gcd(&diff, g, p);
        if gcd.len() > 1 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree s over F_p,
/// comparing coefficient tuples (c_0, c_1, ...) low-degree-first.
fn smallest_irreducible(p: u64, s: u32) -> Vec<u64> {
    let su = s as usize;
    let total = p.pow(s);
    for idx in 0..total {
        // write idx in base p big-endian so c_0 is the most significant digit
        // and successive idx values walk the candidates in lex order
        let mut g = vec![0u64; su + 1];
        g[su] = 1;
        let mut n = idx;
        for j in (0..su).rev() {
            g[j] = n % p;
            n /= p;
        }
        if is_irreducible(&g, p) {
            return g;
        }
    }
    unreachable!("irreducible polynomials of every degree exist");
}
