//! Exact arithmetic in GF(p^k).
//!
//! Elements are polynomials over GF(p) of degree < k reduced modulo a fixed
//! monic irreducible. An element is stored as the integer `sum c_i p^i` of its
//! coefficient digits, so for p = 2 the low bit is the constant term and the
//! hex text form of x^3 + 1 in GF(16) is `0x9`.
//!
//! The reference multiplication is plain polynomial arithmetic
//! ([`Gf::mul_reference`]). Log/antilog tables derived from it serve the hot
//! path; tests check the two agree.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field order {0} exceeds the supported maximum 2^16")]
    TooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("incompatible fields: {0}")]
    IncompatibleFields(String),
    #[error("value {0:#x} is not an element of a field of order {1}")]
    OutOfRange(u32, u32),
    #[error("cannot parse field element {0:?}")]
    Parse(String),
}

/// A field element without its field. Arithmetic goes through [`Gf`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Integer encoding `sum c_i p^i` of the coefficient digits.
    pub fn raw(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, low-order coefficient first, length k + 1.
    modulus: Vec<u32>,
    primitive: u32,
    /// exp[i] = primitive^i for i in 0..2(q-1).
    exp: Vec<u32>,
    /// log[a] for a != 0.
    log: Vec<u32>,
}

/// A finite field GF(p^k) with a fixed modulus. Cheap to clone.
#[derive(Clone)]
pub struct Gf {
    inner: Arc<Inner>,
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Gf {}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}; modulus {:?})",
            self.inner.p, self.inner.k, self.inner.modulus
        )
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
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

// Polynomials over GF(p) as digit vectors, low-order first. Only used to
// validate and pick moduli.
fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

fn rem_p(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bi) in b.iter().enumerate() {
            let t = (c as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

fn digits_of(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut d = vec![0; len];
    for slot in d.iter_mut() {
        *slot = (v % p as u64) as u32;
        v /= p as u64;
    }
    d
}

/// Irreducibility over GF(p) by trial division with every monic polynomial of
/// degree 1..=k/2.
fn is_irreducible_p(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = digits_of(low, p, d);
            g.push(1);
            if rem_p(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Gf {
    /// Builds GF(p^k). Without a modulus the lexicographically smallest monic
    /// irreducible of degree k is used (smallest `sum c_i p^i`).
    pub fn new(p: u32, k: u32, modulus: Option<&[u32]>) -> Result<Gf, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::InvalidModulus(
                "extension degree must be at least 1".into(),
            ));
        }
        let q = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if q > MAX_ORDER {
            return Err(FieldError::TooLarge(q));
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 {
                    return Err(FieldError::InvalidModulus(format!(
                        "expected {} coefficients, got {}",
                        k + 1,
                        m.len()
                    )));
                }
                if m[k as usize] != 1 {
                    return Err(FieldError::InvalidModulus("modulus must be monic".into()));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(FieldError::InvalidModulus(format!(
                        "coefficients must be < {p}"
                    )));
                }
                if !is_irreducible_p(m, p) {
                    return Err(FieldError::ReducibleModulus(p));
                }
                m.to_vec()
            }
            None => {
                let base = q;
                (0..base)
                    .map(|low| {
                        let mut f = digits_of(low, p, k as usize);
                        f.push(1);
                        f
                    })
                    .find(|f| is_irreducible_p(f, p))
                    .expect("an irreducible polynomial of every degree exists")
            }
        };
        let mut inner = Inner {
            p,
            k,
            q: q as u32,
            modulus,
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        inner.build_tables();
        Ok(Gf {
            inner: Arc::new(inner),
        })
    }

    pub fn prime(p: u32) -> Result<Gf, FieldError> {
        Gf::new(p, 1, None)
    }

    /// GF(p^k) with the canonical modulus, for an arbitrary prime power q.
    pub fn with_order(q: u64) -> Result<Gf, FieldError> {
        let (p, k) = prime_power(q).ok_or(FieldError::NotPrime(q.min(u32::MAX as u64) as u32))?;
        Gf::new(p, k, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.k
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    pub fn elem(&self, v: u32) -> Result<Elem, FieldError> {
        if v >= self.inner.q {
            return Err(FieldError::OutOfRange(v, self.inner.q));
        }
        Ok(Elem(v))
    }

    /// All elements in increasing integer order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.inner.q).map(Elem)
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.inner.p as i64) as u32)
    }

    pub fn digits(&self, a: Elem) -> Vec<u32> {
        digits_of(a.0 as u64, self.inner.p, self.inner.k as usize)
    }

    pub fn from_digits(&self, d: &[u32]) -> Elem {
        let p = self.inner.p;
        Elem(d.iter().rev().fold(0u32, |acc, &c| acc * p + c % p))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.inner.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.inner.p;
        if p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let i = self.inner.log[a.0 as usize] + self.inner.log[b.0 as usize];
        Elem(self.inner.exp[i as usize])
    }

    /// Multiplication by schoolbook polynomial product and reduction.
    pub fn mul_reference(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.inner.mul_poly(a.0, b.0))
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let n = self.inner.q - 1;
        let l = self.inner.log[a.0 as usize];
        Ok(Elem(self.inner.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let n = (self.inner.q - 1) as u64;
        let l = self.inner.log[a.0 as usize] as u64;
        Elem(self.inner.exp[(l * (e % n) % n) as usize])
    }

    /// Signed exponent; negative powers of zero are an error.
    pub fn pow_signed(&self, a: Elem, e: i64) -> Result<Elem, FieldError> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// a -> a^p.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.inner.p as u64)
    }

    /// The smallest element (integer order) of multiplicative order q - 1.
    pub fn primitive_element(&self) -> Elem {
        Elem(self.inner.primitive)
    }

    /// primitive^i.
    pub fn exp(&self, i: u64) -> Elem {
        let n = (self.inner.q - 1) as u64;
        Elem(self.inner.exp[(i % n) as usize])
    }

    /// Discrete log base the primitive element.
    pub fn log(&self, a: Elem) -> Option<u64> {
        (a.0 != 0).then(|| self.inner.log[a.0 as usize] as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Option<u64> {
        let n = (self.inner.q - 1) as u64;
        let l = self.log(a)?;
        Some(n / gcd(n, l))
    }

    pub fn to_hex(&self, a: Elem) -> String {
        format!("{:#x}", a.0)
    }

    /// Parses `0x..` hex (the prefix is optional).
    pub fn parse_hex(&self, s: &str) -> Result<Elem, FieldError> {
        let t = s.trim();
        let digits = t
            .strip_prefix("0x")
            .or_else(|| t.strip_prefix("0X"))
            .unwrap_or(t);
        let v = u32::from_str_radix(digits, 16).map_err(|_| FieldError::Parse(s.to_string()))?;
        self.elem(v)
    }

    /// Wraps a value together with this field.
    pub fn element(&self, v: u32) -> Result<FieldElement, FieldError> {
        Ok(FieldElement {
            field: self.clone(),
            value: self.elem(v)?,
        })
    }

    pub fn wrap(&self, a: Elem) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: a,
        }
    }
}

impl Inner {
    fn mul_poly(&self, a: u32, b: u32) -> u32 {
        let (p, k) = (self.p, self.k as usize);
        let da = digits_of(a as u64, p, k);
        let db = digits_of(b as u64, p, k);
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        for top in (k..2 * k).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = top - k + i;
                prod[idx] = (prod[idx] + (p as u64 - c) * m as u64) % p as u64;
            }
        }
        prod[..k]
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * p + c as u32)
    }

    fn pow_poly(&self, a: u32, mut e: u64) -> u32 {
        let mut r = 1u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_poly(r, b);
            }
            b = self.mul_poly(b, b);
            e >>= 1;
        }
        r
    }

    fn build_tables(&mut self) {
        let n = (self.q - 1) as u64;
        let factors = prime_factors(n);
        let g = (1..self.q)
            .find(|&a| factors.iter().all(|&r| self.pow_poly(a, n / r) != 1))
            .expect("the multiplicative group of a finite field is cyclic");
        self.primitive = g;
        let mut exp = vec![0u32; 2 * n as usize];
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1u32;
        for i in 0..n as usize {
            exp[i] = x;
            exp[i + n as usize] = x;
            log[x as usize] = i as u32;
            x = self.mul_poly(x, g);
        }
        self.exp = exp;
        self.log = log;
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Splits q = p^k; `None` when q is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = prime_factors(q)[0];
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p as u32, k))
}

/// A field element that remembers its field; mixing fields is an error.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Gf,
    value: Elem,
}

impl FieldElement {
    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn check(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    fn with(&self, v: Elem) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value: v,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.div(self.value, other.value)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement, FieldError> {
        Ok(self.with(self.field.pow_signed(self.value, e)?))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x} in GF({})", self.value.0, self.field.order())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.value.0)
    }
}

/// Ring embedding GF(p^a) -> GF(p^b) for a | b, sending the class of x to the
/// smallest root of the smaller field's modulus.
#[derive(Clone, Debug)]
pub struct Embedding {
    sub: Gf,
    sup: Gf,
    generator_image: Elem,
}

impl Embedding {
    pub fn new(sub: &Gf, sup: &Gf) -> Result<Embedding, FieldError> {
        if sub.characteristic() != sup.characteristic() {
            return Err(FieldError::IncompatibleFields(
                "characteristics differ".into(),
            ));
        }
        if !sup.degree().is_multiple_of(sub.degree()) {
            return Err(FieldError::IncompatibleFields(format!(
                "GF({}) is not a subfield of GF({})",
                sub.order(),
                sup.order()
            )));
        }
        let modulus: Vec<Elem> = sub.modulus().iter().map(|&c| Elem(c)).collect();
        let generator_image = sup
            .elements()
            .find(|&r| {
                let v = modulus
                    .iter()
                    .rev()
                    .fold(Elem::ZERO, |acc, &c| sup.add(sup.mul(acc, r), c));
                v.is_zero()
            })
            .ok_or_else(|| FieldError::IncompatibleFields("modulus has no root".into()))?;
        Ok(Embedding {
            sub: sub.clone(),
            sup: sup.clone(),
            generator_image,
        })
    }

    pub fn generator_image(&self) -> Elem {
        self.generator_image
    }

    pub fn apply(&self, a: Elem) -> Elem {
        let d = self.sub.digits(a);
        d.iter().rev().fold(Elem::ZERO, |acc, &c| {
            self.sup
                .add(self.sup.mul(acc, self.generator_image), Elem(c))
        })
    }
}

/// Embeds an element of GF(l) into GF(l^2) (or any extension).
pub fn embed(sub: &Gf, sup: &Gf, a: &FieldElement) -> Result<FieldElement, FieldError> {
    if a.field() != sub {
        return Err(FieldError::FieldMismatch);
    }
    let e = Embedding::new(sub, sup)?;
    Ok(sup.wrap(e.apply(a.value())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        let gf2 = Gf::new(2, 1, None).unwrap();
        assert_eq!(gf2.modulus(), &[0, 1]);
        assert_eq!(gf2.order(), 2);
        let gf16 = Gf::new(2, 4, None).unwrap();
        assert_eq!(gf16.modulus(), &[1, 1, 0, 0, 1]);
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(matches!(
            Gf::new(2, 2, Some(&[1, 0, 1])),
            Err(FieldError::ReducibleModulus(2))
        ));
        assert!(matches!(Gf::new(4, 1, None), Err(FieldError::NotPrime(4))));
        assert!(matches!(Gf::new(2, 17, None), Err(FieldError::TooLarge(_))));
    }

    #[test]
    fn canonical_modulus_is_first_irreducible() {
        // brute force: first monic quartic over GF(2) with no root and no
        // quadratic factor x^2+x+1
        let gf2 = Gf::prime(2).unwrap();
        let first = (16u32..32)
            .find(|&v| {
                let f: Vec<u32> = (0..5).map(|i| (v >> i) & 1).collect();
                let no_root =
                    (0..2).all(|x| f.iter().rev().fold(0, |acc, &c| (acc * x + c) % 2) != 0);
                no_root && !rem_p(&f, &[1, 1, 1], 2).is_empty()
            })
            .unwrap();
        assert_eq!(first, 0b10011);
        assert_eq!(gf2.order(), 2);
    }

    #[test]
    fn gf4_omega_squared() {
        let gf4 = Gf::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let w = Elem(0b10);
        assert_eq!(gf4.mul(w, w), Elem(0b11));
        assert_eq!(gf4.mul_reference(w, w), Elem(0b11));
    }

    #[test]
    fn tables_match_polynomial_path() {
        for (p, k) in [
            (2, 1),
            (2, 2),
            (2, 4),
            (3, 1),
            (3, 2),
            (5, 2),
            (2, 5),
            (7, 1),
        ] {
            let f = Gf::new(p, k, None).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        f.mul(a, b),
                        f.mul_reference(a, b),
                        "GF({p}^{k}) {a:?}*{b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn inverse_and_order() {
        let f = Gf::new(2, 4, None).unwrap();
        for a in f.elements().skip(1) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
            assert_eq!(f.pow(a, 15), Elem::ONE);
        }
        assert_eq!(f.inv(Elem::ZERO), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(Gf::prime(2).unwrap().primitive_element(), Elem(1));
        let gf4 = Gf::new(2, 2, None).unwrap();
        assert_eq!(gf4.primitive_element(), Elem(0b10));
        let gf16 = Gf::new(2, 4, None).unwrap();
        assert_eq!(gf16.primitive_element(), Elem(0b10));
        // order by direct powering against every proper divisor of q - 1
        for f in [
            gf4,
            gf16,
            Gf::new(3, 2, None).unwrap(),
            Gf::new(5, 1, None).unwrap(),
        ] {
            let g = f.primitive_element();
            let n = f.order() as u64 - 1;
            for d in 1..n {
                if n.is_multiple_of(d) {
                    assert_ne!(f.pow(g, d), Elem::ONE);
                }
            }
            assert_eq!(f.pow(g, n), Elem::ONE);
        }
    }

    #[test]
    fn odd_characteristic_addition() {
        let f = Gf::new(3, 2, None).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
            let three = f.add(f.add(a, a), a);
            assert_eq!(three, Elem::ZERO);
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for f in [
            Gf::new(2, 2, None).unwrap(),
            Gf::new(2, 4, None).unwrap(),
            Gf::new(3, 2, None).unwrap(),
        ] {
            let els: Vec<Elem> = f.elements().collect();
            for &a in &els {
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for f in [
            Gf::new(2, 8, None).unwrap(),
            Gf::new(3, 5, None).unwrap(),
            Gf::new(5, 3, None).unwrap(),
        ] {
            if f.order() > 256 {
                continue;
            }
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        f.frobenius(f.add(a, b)),
                        f.add(f.frobenius(a), f.frobenius(b))
                    );
                }
            }
        }
    }

    #[test]
    fn hex_text_form() {
        let f = Gf::new(2, 4, None).unwrap();
        let x3_plus_1 = f.from_digits(&[1, 0, 0, 1]);
        assert_eq!(f.to_hex(x3_plus_1), "0x9");
        assert_eq!(f.parse_hex("0x9").unwrap(), x3_plus_1);
        assert!(f.parse_hex("0x10").is_err());
        assert!(f.parse_hex("zz").is_err());
    }

    #[test]
    fn checked_elements_reject_mixing() {
        let gf4 = Gf::new(2, 2, None).unwrap();
        let gf16 = Gf::new(2, 4, None).unwrap();
        let a = gf4.element(2).unwrap();
        let b = gf16.element(2).unwrap();
        assert_eq!(a.mul(&b), Err(FieldError::FieldMismatch));
        assert_eq!(a.mul(&a).unwrap().value(), Elem(3));
        assert_eq!(
            gf4.element(0).unwrap().inv(),
            Err(FieldError::DivisionByZero)
        );
        assert_eq!(a.pow(-1).unwrap().mul(&a).unwrap().value(), Elem::ONE);
    }

    #[test]
    fn embeddings() {
        let gf2 = Gf::prime(2).unwrap();
        let gf4 = Gf::new(2, 2, None).unwrap();
        let gf16 = Gf::new(2, 4, None).unwrap();
        assert_eq!(
            embed(&gf2, &gf4, &gf2.element(1).unwrap()).unwrap().value(),
            Elem::ONE
        );

        let e = Embedding::new(&gf4, &gf16).unwrap();
        let gamma = gf16.primitive_element();
        assert_eq!(e.apply(Elem(0b10)), gf16.pow(gamma, 5));
        assert_eq!(gf16.multiplicative_order(e.apply(Elem(0b10))), Some(3));
        for a in gf4.elements() {
            for b in gf4.elements() {
                assert_eq!(e.apply(gf4.mul(a, b)), gf16.mul(e.apply(a), e.apply(b)));
                assert_eq!(e.apply(gf4.add(a, b)), gf16.add(e.apply(a), e.apply(b)));
            }
        }
        let gf8 = Gf::new(2, 3, None).unwrap();
        assert!(matches!(
            Embedding::new(&gf4, &gf8),
            Err(FieldError::IncompatibleFields(_))
        ));
        let gf9 = Gf::new(3, 2, None).unwrap();
        assert!(matches!(
            Embedding::new(&gf4, &gf9),
            Err(FieldError::IncompatibleFields(_))
        ));
    }
}
