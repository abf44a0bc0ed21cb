//! Exact arithmetic in small finite fields GF(p^m).
//!
//! A [`FieldDesc`] is table-backed: elements are integer indices into the
//! additive group (the base-`p` digits of an index are the coefficients of the
//! element in the polynomial basis `1, x, ..., x^(m-1)`), and multiplication
//! goes through log/antilog tables built from the canonical generator.
//!
//! The canonical modulus is the lexicographically smallest monic irreducible
//! polynomial of degree `m` (coefficients read from high degree down); the
//! canonical generator is the smallest index of multiplicative order `p^m - 1`.
//! Both are deterministic, so golden values are portable across runs.
//!
//! Roots of unity usually live in much larger extensions than a table can
//! hold; those are handled by [`ExtField`].

mod ext;
pub mod poly;

pub use ext::{coerce_to_base, embed_poly, poly_from_roots, primitive_nth_root, ExtElem, ExtField, RootOfUnity};
pub use poly::FieldPoly;

use crate::arith;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Largest field order that gets log/antilog tables.
pub const FIELD_ORDER_CAP: u64 = 1 << 20;

/// Largest extension degree accepted by [`ExtField`].
pub const MAX_EXTENSION_DEGREE: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("field order {p}^{m} exceeds the table cap 2^20")]
    TooLarge { p: u64, m: u32 },
    #[error("extension degree {degree} exceeds the cap {MAX_EXTENSION_DEGREE}")]
    ExtensionTooLarge { degree: u64 },
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("{value} is not an element of a field of order {order}")]
    InvalidElement { value: u64, order: u64 },
    #[error("field order {0} is not a square")]
    NotSquareOrder(u64),
    #[error("{q} is not the square root of the field order {order}")]
    BadSubfield { q: u64, order: u64 },
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: u64, q: u64 },
    #[error("coefficient of x^{position} is not in the base field")]
    NotInBaseField { position: usize },
}

/// Minimal arithmetic interface shared by the prime field used during
/// construction and by finished table-backed fields.
pub trait Scalars {
    fn order(&self) -> u64;
    fn add(&self, a: u32, b: u32) -> u32;
    fn neg(&self, a: u32) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;
    /// Inverse of a nonzero element.
    fn inv_nonzero(&self, a: u32) -> u32;

    fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }
}

/// GF(p) by plain modular arithmetic; used to find moduli and generators
/// before tables exist.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PrimeField {
    p: u32,
}

impl Scalars for PrimeField {
    fn order(&self) -> u64 {
        self.p as u64
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }
    fn inv_nonzero(&self, a: u32) -> u32 {
        arith::mod_pow(a as u64, self.p as u64 - 2, self.p as u64) as u32
    }
}

/// A table-backed finite field GF(p^m).
#[derive(Clone)]
pub struct FieldDesc {
    p: u32,
    m: u32,
    order: u32,
    modulus: Vec<u32>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldDesc")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FieldDesc {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m
    }
}

impl Eq for FieldDesc {}

/// Builds the canonical GF(p^m).
pub fn make_field(p: u64, m: u32) -> Result<Arc<FieldDesc>, FieldError> {
    FieldDesc::new(p, m).map(Arc::new)
}

/// Builds GF(q) from its order, which must be a prime power.
pub fn field_of_order(q: u64) -> Result<Arc<FieldDesc>, FieldError> {
    let (p, m) = prime_power(q).ok_or(FieldError::NotPrime(q))?;
    make_field(p, m)
}

/// Splits `q = p^m`; `None` unless `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = arith::trial_division(q);
    match f.as_slice() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}

/// Integer square root of `v` when `v` is a perfect square.
pub fn exact_sqrt(v: u64) -> Option<u64> {
    let r = (v as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|s| s * s == v)
}

impl FieldDesc {
    pub fn new(p: u64, m: u32) -> Result<Self, FieldError> {
        if !arith::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let order = (p as u128).checked_pow(m).filter(|o| *o <= FIELD_ORDER_CAP as u128);
        let Some(order) = order else {
            return Err(FieldError::TooLarge { p, m });
        };
        let order = order as u32;
        let p = p as u32;
        let pf = PrimeField { p };

        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            canonical_modulus(&pf, m as usize)
        };

        let to_poly = |idx: u32| -> Vec<u32> {
            let mut c = digits(idx as u64, p as u64, m as usize);
            poly::trim(&mut c);
            c
        };
        let from_poly = |c: &[u32]| -> u32 {
            c.iter().rev().fold(0u32, |acc, &d| acc * p + d)
        };
        let mulmod = |a: &[u32], b: &[u32]| -> Vec<u32> { poly::rem(&pf, &poly::mul(&pf, a, b), &modulus) };

        let group = order as u64 - 1;
        let primes: Vec<u64> = arith::trial_division(group).into_iter().map(|(r, _)| r).collect();
        let generator = (1..order)
            .find(|&g| {
                let gp = to_poly(g);
                primes.iter().all(|&r| {
                    let e = poly::pow_mod(&pf, &gp, group / r, &modulus);
                    e != [1]
                })
            })
            .expect("multiplicative group of a finite field is cyclic");

        let gpoly = to_poly(generator);
        let mut exp = Vec::with_capacity(2 * group as usize);
        let mut log = vec![0u32; order as usize];
        let mut cur = vec![1u32];
        for i in 0..group {
            let idx = from_poly(&cur);
            exp.push(idx);
            log[idx as usize] = i as u32;
            cur = mulmod(&cur, &gpoly);
        }
        let head: Vec<u32> = exp.clone();
        exp.extend(head);

        Ok(FieldDesc {
            p,
            m,
            order,
            modulus,
            generator,
            exp,
            log,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical modulus over GF(p), lowest degree first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> u32 {
        self.generator
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    pub fn contains(&self, x: u32) -> bool {
        x < self.order
    }

    /// `antilog[i] = generator^i` for `i` in `[0, order - 1)`.
    pub fn antilog(&self, i: u32) -> u32 {
        self.exp[i as usize]
    }

    /// Discrete log to the canonical generator; `None` for zero.
    pub fn log(&self, x: u32) -> Option<u32> {
        (x != 0).then(|| self.log[x as usize])
    }

    /// Polynomial-basis coefficients of an element, lowest first, length `m`.
    pub fn coefficients(&self, x: u32) -> Vec<u32> {
        digits(x as u64, self.p as u64, self.m as usize)
    }

    pub fn from_coefficients(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0u32, |acc, &d| acc * self.p + d % self.p)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        if self.m == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let mut a = a;
        let (mut out, mut place) = (0, 1);
        while a > 0 {
            let d = a % self.p;
            out += ((self.p - d) % self.p) * place;
            place *= self.p;
            a /= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.inv_nonzero(a))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let group = self.order as u64 - 1;
        let l = (self.log[a as usize] as u64 * (e % group)) % group;
        self.exp[l as usize]
    }

    /// Multiplication by an element of the prime subfield given as an integer.
    pub fn scale_int(&self, a: u32, k: u64) -> u32 {
        self.mul(a, (k % self.p as u64) as u32)
    }

    /// `q` with `order = q^2`, if the order is a square.
    pub fn sqrt_order(&self) -> Option<u32> {
        exact_sqrt(self.order as u64).map(|s| s as u32)
    }

    /// The conjugation `x -> x^q` of GF(q^2) over GF(q).
    pub fn frobenius(&self, x: u32, q: u64) -> Result<u32, FieldError> {
        if q * q != self.order as u64 {
            return Err(FieldError::BadSubfield {
                q,
                order: self.order as u64,
            });
        }
        if !self.contains(x) {
            return Err(FieldError::InvalidElement {
                value: x as u64,
                order: self.order as u64,
            });
        }
        Ok(self.pow(x, q))
    }

    /// Conjugation for a field of square order; errors otherwise.
    pub fn conjugate(&self, x: u32) -> Result<u32, FieldError> {
        let q = self
            .sqrt_order()
            .ok_or(FieldError::NotSquareOrder(self.order as u64))?;
        self.frobenius(x, q as u64)
    }

    /// Checked element handle.
    pub fn element(&self, value: u32) -> Result<FieldElement<'_>, FieldError> {
        if !self.contains(value) {
            return Err(FieldError::InvalidElement {
                value: value as u64,
                order: self.order as u64,
            });
        }
        Ok(FieldElement { field: self, value })
    }
}

impl Scalars for FieldDesc {
    fn order(&self) -> u64 {
        self.order as u64
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        FieldDesc::add(self, a, b)
    }
    fn neg(&self, a: u32) -> u32 {
        FieldDesc::neg(self, a)
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        FieldDesc::mul(self, a, b)
    }
    fn inv_nonzero(&self, a: u32) -> u32 {
        let group = self.order - 1;
        self.exp[((group - self.log[a as usize]) % group) as usize]
    }
}

/// An element bound to its field. Binary operations check that both operands
/// come from the same field.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f FieldDesc,
    value: u32,
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({})", self.value, self.field.order)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.value == other.value
    }
}

impl<'f> FieldElement<'f> {
    pub fn value(&self) -> u32 {
        self.value
    }

    fn same(&self, other: &Self) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    fn wrap(&self, value: u32) -> Self {
        FieldElement {
            field: self.field,
            value,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        self.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        Ok(self.wrap(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.wrap(self.field.pow(self.value, e))
    }
}

/// Base-`p` digits of `v`, lowest first, padded to `len`.
pub(crate) fn digits(mut v: u64, p: u64, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((v % p) as u32);
        v /= p;
    }
    out
}

/// Lexicographically smallest monic irreducible polynomial of degree `m`
/// over the given field (coefficient tuple ordered from high degree down).
pub(crate) fn canonical_modulus<S: Scalars>(s: &S, m: usize) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    let q = s.order();
    let mut tail = vec![0u32; m];
    loop {
        // `tail` read from high degree down is a base-q counter.
        if tail[0] != 0 {
            let mut f = tail.clone();
            f.push(1);
            if poly::is_irreducible(s, &f) {
                return f;
            }
        }
        let mut i = 0;
        loop {
            tail[i] += 1;
            if (tail[i] as u64) < q {
                break;
            }
            tail[i] = 0;
            i += 1;
            assert!(i < m, "irreducible polynomials of every degree exist");
        }
    }
}
