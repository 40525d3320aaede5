//! Finite field arithmetic for GF(p^m) at desk scale (q up to 2^16).
//!
//! A [`FieldContext`] owns exp/log tables keyed to a fixed generator
//! `omega` of the multiplicative group, so multiplication, inversion and
//! powering are table lookups. Elements are integer encodings: the
//! polynomial `c0 + c1*x + ... + c_{m-1}*x^{m-1}` is stored as the base-p
//! integer `c0 + c1*p + ... + c_{m-1}*p^{m-1}`.
//!
//! Construction is deterministic: for a given `(p, m)` the same modulus,
//! the same `omega` and the same tables come out every time, so matrices
//! written by one process can be read back by another and certification
//! runs are reproducible.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// Shape of a concrete field: characteristic, extension degree, and the
/// monic modulus polynomial (ascending coefficients, length `m + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
    pub modulus: Vec<u64>,
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} m={} modulus=[", self.p, self.m)?;
        for (i, c) in self.modulus.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// An element of some GF(p^m), stored as its integer encoding.
///
/// Elements carry no back-pointer to their field; all arithmetic goes
/// through the owning [`FieldContext`], which checks that the encoding
/// is in range for that field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// The integer encoding of this element.
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A fully built GF(p^m): modulus, generator, and multiplication tables.
///
/// Build one with [`field_build`] and share it behind the returned `Arc`;
/// matrices and codes keep a handle to the context they were created in.
#[derive(PartialEq, Eq)]
pub struct FieldContext {
    spec: FieldSpec,
    q: u64,
    omega: FieldElement,
    /// `exp[i] = omega^i` for `i` in `[0, q-1)`.
    exp: Vec<FieldElement>,
    /// `log[v]` is the exponent of the element encoded `v`; zero has no
    /// logarithm and holds a sentinel.
    log: Vec<u32>,
}

const LOG_OF_ZERO: u32 = u32::MAX;

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldContext(GF({}), {}, omega={})", self.q, self.spec, self.omega)
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// Build GF(p^m) with the crate's canonical modulus and generator.
///
/// The modulus is chosen deterministically: among the monic irreducible
/// degree-`m` polynomials over GF(p), take the one with the smallest
/// base-p encoding of its coefficient vector for which `x` generates the
/// multiplicative group; `omega` is then the class of `x`. For `m = 1`
/// the modulus is the polynomial `x` and `omega` is the smallest
/// primitive root mod `p`.
pub fn field_build(p: u64, m: u32) -> Result<Arc<FieldContext>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::OrderTooLarge { q: 1, cap: MAX_FIELD_ORDER });
    }
    let q128 = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
    if q128 > MAX_FIELD_ORDER as u128 {
        return Err(Error::OrderTooLarge { q: q128, cap: MAX_FIELD_ORDER });
    }
    let q = q128 as u64;

    let (modulus, omega) = if m == 1 {
        (vec![0, 1], smallest_primitive_root(p))
    } else {
        let f = canonical_modulus(p, m, q);
        (f, p) // omega is the class of x, encoded as p
    };
    let spec = FieldSpec { p, m, modulus };

    // exp table: successive multiplications by omega in the polynomial basis.
    let mut exp = Vec::with_capacity((q - 1) as usize);
    let mut log = vec![LOG_OF_ZERO; q as usize];
    let mut acc: u64 = 1;
    for i in 0..(q - 1) {
        exp.push(FieldElement(acc as u32));
        assert_eq!(log[acc as usize], LOG_OF_ZERO, "omega is not primitive");
        log[acc as usize] = i as u32;
        acc = raw_mul(acc, omega, &spec);
    }
    assert_eq!(acc, 1, "omega does not have order q - 1");

    Ok(Arc::new(FieldContext { spec, q, omega: FieldElement(omega as u32), exp, log }))
}

impl FieldContext {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.spec.m
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// The fixed generator of the multiplicative group.
    pub fn omega(&self) -> FieldElement {
        self.omega
    }

    /// `omega^i` for `i` in `[0, q-1)`, in order. Exposed read-only so
    /// callers can enumerate the nonzero elements deterministically.
    pub fn exp_table(&self) -> &[FieldElement] {
        &self.exp
    }

    /// The element encoded by `value`, or `ContextMismatch` if the
    /// encoding is out of range for this field.
    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value < self.q {
            Ok(FieldElement(value as u32))
        } else {
            Err(Error::ContextMismatch { value, q: self.q })
        }
    }

    /// Image of the integer `n` under the natural map Z -> GF(q)
    /// (reduction mod p into the prime subfield).
    pub fn embed(&self, n: u64) -> FieldElement {
        FieldElement((n % self.spec.p) as u32)
    }

    fn check(&self, a: FieldElement) -> u64 {
        assert!(
            (a.0 as u64) < self.q,
            "element {} does not belong to GF({})",
            a.0,
            self.q
        );
        a.0 as u64
    }

    /// Sum of two elements.
    ///
    /// # Panics
    /// Panics if either operand is not an element of this field.
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (a, b) = (self.check(a), self.check(b));
        let p = self.spec.p;
        let v = if self.spec.m == 1 {
            (a + b) % p
        } else if p == 2 {
            a ^ b
        } else {
            digitwise(a, b, p, |x, y| (x + y) % p)
        };
        FieldElement(v as u32)
    }

    /// Additive inverse.
    ///
    /// # Panics
    /// Panics if the operand is not an element of this field.
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let a = self.check(a);
        let p = self.spec.p;
        let v = if self.spec.m == 1 {
            (p - a) % p
        } else if p == 2 {
            a
        } else {
            digitwise(a, 0, p, |x, _| (p - x) % p)
        };
        FieldElement(v as u32)
    }

    /// Difference `a - b`.
    ///
    /// # Panics
    /// Panics if either operand is not an element of this field.
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Product of two elements, via the exp/log tables.
    ///
    /// # Panics
    /// Panics if either operand is not an element of this field.
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (a, b) = (self.check(a), self.check(b));
        if a == 0 || b == 0 {
            return FieldElement::ZERO;
        }
        let n = self.q - 1;
        let e = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % n;
        self.exp[e as usize]
    }

    /// Multiplicative inverse, or `DivisionByZero` for the zero element.
    ///
    /// # Panics
    /// Panics if the operand is not an element of this field.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        let a = self.check(a);
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        let e = (n - self.log[a as usize] as u64) % n;
        Ok(self.exp[e as usize])
    }

    /// `a^e` for any signed exponent; exponents act modulo `q - 1` on
    /// nonzero elements. `0^0 = 1`, `0^e = 0` for positive `e`, and a
    /// negative power of zero is `DivisionByZero`.
    ///
    /// # Panics
    /// Panics if the base is not an element of this field.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement> {
        let a = self.check(a);
        if a == 0 {
            return match e.cmp(&0) {
                std::cmp::Ordering::Greater => Ok(FieldElement::ZERO),
                std::cmp::Ordering::Equal => Ok(FieldElement::ONE),
                std::cmp::Ordering::Less => Err(Error::DivisionByZero),
            };
        }
        let n = (self.q - 1) as i128;
        let e = (self.log[a as usize] as i128 * e as i128).rem_euclid(n);
        Ok(self.exp[e as usize])
    }

    /// `omega^e` for any signed exponent (always defined).
    pub fn omega_pow(&self, e: i64) -> FieldElement {
        let n = (self.q - 1) as i128;
        self.exp[(e as i128).rem_euclid(n) as usize]
    }

    /// Discrete logarithm base `omega`, or `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        let a = self.check(a);
        if a == 0 { None } else { Some(self.log[a as usize]) }
    }
}

/// Apply `f` to corresponding base-p digits of `a` and `b`.
fn digitwise(mut a: u64, mut b: u64, p: u64, f: impl Fn(u64, u64) -> u64) -> u64 {
    let mut out = 0u64;
    let mut place = 1u64;
    while a != 0 || b != 0 {
        out += f(a % p, b % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

/// Trial-division primality test; fine for p below 2^16.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Write `q` as `p^m` for a prime `p`, if possible.
pub fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut m = 0;
            while rest % p == 0 {
                rest /= p;
                m += 1;
            }
            return if rest == 1 { Some((p, m)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
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

fn smallest_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    'outer: for g in 2..p {
        for &l in &factors {
            if mod_pow(g, (p - 1) / l, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root");
}

fn mod_pow(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut base = (b % p) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}

/// Pick the canonical degree-m modulus for GF(p^m), m >= 2: the monic
/// irreducible polynomial with the smallest coefficient encoding whose
/// root `x` generates the multiplicative group.
fn canonical_modulus(p: u64, m: u32, q: u64) -> Vec<u64> {
    let factors = prime_factors(q - 1);
    for low in 0..q {
        let mut f = decode_poly(low, p, m as usize);
        f.push(1); // monic
        if !poly_is_irreducible(&f, p) {
            continue;
        }
        let spec = FieldSpec { p, m, modulus: f.clone() };
        // Order check for x (encoded as p): primitive iff no proper
        // power (q-1)/l collapses to 1.
        let primitive = factors.iter().all(|&l| raw_pow(p, (q - 1) / l, &spec) != 1)
            && raw_pow(p, q - 1, &spec) == 1;
        if primitive {
            return f;
        }
    }
    unreachable!("GF(p^m) always has a modulus with x primitive");
}

fn decode_poly(mut v: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for c in out.iter_mut() {
        *c = v % p;
        v /= p;
    }
    out
}

fn encode_poly(coeffs: &[u64], p: u64) -> u64 {
    let mut out = 0;
    for &c in coeffs.iter().rev() {
        out = out * p + c;
    }
    out
}

/// Remainder of `a` divided by the monic polynomial `b` over GF(p).
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (j, &bc) in b.iter().enumerate() {
                let idx = j + shift;
                r[idx] = (r[idx] + p * p - (lead * bc) % p) % p;
            }
        }
        r.pop();
    }
    while r.len() > 1 && *r.last().unwrap() == 0 {
        r.pop();
    }
    r
}

fn poly_is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// Irreducibility over GF(p) by trial division with every monic
/// polynomial of degree up to deg(f)/2. Desk-scale fields keep this cheap.
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if f[0] == 0 && m > 1 {
        return false; // divisible by x
    }
    for d in 1..=(m / 2) {
        let count = p.pow(d as u32);
        for enc in 0..count {
            let mut g = decode_poly(enc, p, d);
            g.push(1);
            if poly_is_zero(&poly_rem(f, &g, p)) {
                return false;
            }
        }
    }
    true
}

/// Product of two elements in the polynomial basis, used only while the
/// tables are being built (and to build them honestly).
fn raw_mul(a: u64, b: u64, spec: &FieldSpec) -> u64 {
    let p = spec.p;
    let m = spec.m as usize;
    if m == 1 {
        // The prime field; omega is a primitive root, reduction is mod p.
        return a * b % p;
    }
    let pa = decode_poly(a, p, m);
    let pb = decode_poly(b, p, m);
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &ca) in pa.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in pb.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ca * cb) % p;
        }
    }
    let rem = poly_rem(&prod, &spec.modulus, p);
    encode_poly(&rem, p)
}

fn raw_pow(mut base: u64, mut e: u64, spec: &FieldSpec) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = raw_mul(acc, base, spec);
        }
        base = raw_mul(base, base, spec);
        e >>= 1;
    }
    acc
}
