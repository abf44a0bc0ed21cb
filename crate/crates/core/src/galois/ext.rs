//! Table-less extensions GF(Q^t) of a table-backed field GF(Q).
//!
//! Elements are coefficient vectors of length `t` over the base field modulo
//! the canonical irreducible polynomial of degree `t`. This is slow compared
//! with table lookups but has no size cap beyond [`MAX_EXTENSION_DEGREE`],
//! which matters because primitive n-th roots of unity routinely need
//! extensions far beyond 2^20 elements (GF(2^21) for n = 49, GF(4^147) for
//! n = 343).

use super::{canonical_modulus, FieldDesc, FieldError, FieldPoly, MAX_EXTENSION_DEGREE};
use crate::arith;
use crate::linalg::Matrix;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use std::sync::Arc;

pub type ExtElem = Vec<u32>;

#[derive(Debug, Clone)]
pub struct ExtField {
    base: Arc<FieldDesc>,
    degree: usize,
    modulus: Vec<u32>,
}

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.degree == other.degree
    }
}

impl ExtField {
    pub fn new(base: Arc<FieldDesc>, degree: usize) -> Result<Self, FieldError> {
        if degree == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if degree > MAX_EXTENSION_DEGREE {
            return Err(FieldError::ExtensionTooLarge { degree: degree as u64 });
        }
        let modulus = canonical_modulus(&*base, degree);
        Ok(ExtField { base, degree, modulus })
    }

    pub fn base(&self) -> &Arc<FieldDesc> {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Monic modulus over the base field, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// `Q^t`.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.base.order()).pow(self.degree as u32)
    }

    pub fn zero(&self) -> ExtElem {
        vec![0; self.degree]
    }

    pub fn one(&self) -> ExtElem {
        self.constant(1)
    }

    pub fn constant(&self, c: u32) -> ExtElem {
        let mut e = self.zero();
        e[0] = c;
        e
    }

    pub fn is_zero(&self, a: &[u32]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, a: &[u32]) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    /// The base-field value of `a` if `a` lies in the base field.
    pub fn as_constant(&self, a: &[u32]) -> Option<u32> {
        a[1..].iter().all(|&c| c == 0).then_some(a[0])
    }

    /// Element whose coefficients are the base-`Q` digits of `index`.
    pub fn element_from_index(&self, mut index: u64) -> ExtElem {
        let q = self.base.order() as u64;
        let mut e = self.zero();
        for c in e.iter_mut() {
            *c = (index % q) as u32;
            index /= q;
        }
        e
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> ExtElem {
        a.iter().zip(b).map(|(&x, &y)| self.base.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> ExtElem {
        a.iter().zip(b).map(|(&x, &y)| self.base.sub(x, y)).collect()
    }

    pub fn neg(&self, a: &[u32]) -> ExtElem {
        a.iter().map(|&x| self.base.neg(x)).collect()
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> ExtElem {
        let t = self.degree;
        let f = &*self.base;
        let mut prod = vec![0u32; 2 * t - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = f.add(prod[i + j], f.mul(x, y));
                }
            }
        }
        for i in (t..2 * t - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..t {
                if self.modulus[j] != 0 {
                    prod[i - t + j] = f.sub(prod[i - t + j], f.mul(c, self.modulus[j]));
                }
            }
        }
        prod.truncate(t);
        prod
    }

    pub fn pow(&self, a: &[u32], e: &BigUint) -> ExtElem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    pub fn pow_u64(&self, a: &[u32], e: u64) -> ExtElem {
        self.pow(a, &BigUint::from(e))
    }

    /// `x -> x^Q`, the generator of the Galois group over the base field.
    pub fn frobenius(&self, a: &[u32]) -> ExtElem {
        self.pow_u64(a, self.base.order() as u64)
    }

    /// Minimal polynomial over the base field of `beta`, whose degree is
    /// known to be `deg` (the size of its cyclotomic coset). Solved as a
    /// linear system: `beta^deg = -(c_0 + c_1 beta + ... )`.
    pub fn minimal_polynomial(&self, beta: &[u32], deg: usize) -> FieldPoly {
        let f = &*self.base;
        let t = self.degree;
        let mut powers = Vec::with_capacity(deg + 1);
        let mut cur = self.one();
        for _ in 0..=deg {
            powers.push(cur.clone());
            cur = self.mul(&cur, beta);
        }
        // Augmented t x (deg + 1) system, columns beta^0..beta^(deg-1) | -beta^deg.
        let mut m = Matrix::zeros(t, deg + 1);
        for (j, pw) in powers.iter().take(deg).enumerate() {
            for (i, &x) in pw.iter().enumerate().take(t) {
                m.set(i, j, x);
            }
        }
        for (i, &x) in powers[deg].iter().enumerate().take(t) {
            m.set(i, deg, f.neg(x));
        }
        let pivots = m.rref(f);
        assert!(
            pivots.iter().all(|&c| c < deg) && pivots.len() == deg,
            "powers of beta below its coset size must be independent"
        );
        let mut coeffs = vec![0u32; deg + 1];
        for (row, &col) in pivots.iter().enumerate() {
            coeffs[col] = m.get(row, deg);
        }
        coeffs[deg] = 1;
        FieldPoly::new(self.base.clone(), coeffs)
    }
}

/// A primitive n-th root of unity over GF(Q), together with its extension.
#[derive(Debug, Clone)]
pub struct RootOfUnity {
    n: u64,
    ext: ExtField,
    alpha: ExtElem,
}

impl RootOfUnity {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn field(&self) -> &ExtField {
        &self.ext
    }

    pub fn alpha(&self) -> &ExtElem {
        &self.alpha
    }

    /// `alpha^j` for `j` taken mod n.
    pub fn power(&self, j: u64) -> ExtElem {
        self.ext.pow_u64(&self.alpha, j % self.n)
    }
}

/// Primitive n-th root of unity over GF(Q) for `gcd(n, Q) = 1`.
///
/// The extension has degree `t = ord_n(Q)`. The root is
/// `alpha = beta^((Q^t - 1) / n)` for the smallest-index `beta` for which
/// that power has exact order `n`, which only needs the factorization of `n`.
pub fn primitive_nth_root(n: u64, base: &Arc<FieldDesc>) -> Result<RootOfUnity, FieldError> {
    let q = base.order() as u64;
    if n == 0 || arith::gcd(n, q) != 1 {
        return Err(FieldError::NotCoprime { n, q });
    }
    let t = arith::ord_mod(n, q).map_err(|_| FieldError::NotCoprime { n, q })?;
    if t as usize > MAX_EXTENSION_DEGREE {
        return Err(FieldError::ExtensionTooLarge { degree: t });
    }
    let ext = ExtField::new(base.clone(), t as usize)?;
    let group = ext.order() - BigUint::one();
    let cofactor = &group / n;
    debug_assert!((&group % n).is_zero());
    let primes: Vec<u64> = arith::trial_division(n).into_iter().map(|(r, _)| r).collect();
    let limit = ext.order().to_u64().unwrap_or(u64::MAX);
    for index in 1..limit {
        let beta = ext.element_from_index(index);
        let alpha = ext.pow(&beta, &cofactor);
        if ext.is_zero(&alpha) {
            continue;
        }
        if primes.iter().all(|&r| !ext.is_one(&ext.pow_u64(&alpha, n / r))) {
            return Ok(RootOfUnity { n, ext, alpha });
        }
    }
    unreachable!("the multiplicative group of GF(Q^t) has elements of every order dividing Q^t - 1")
}

/// `prod (x - r)` over the extension, lowest degree first.
pub fn poly_from_roots(ext: &ExtField, roots: &[ExtElem]) -> Vec<ExtElem> {
    let mut acc: Vec<ExtElem> = vec![ext.one()];
    for r in roots {
        let neg_r = ext.neg(r);
        let mut next = vec![ext.zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] = ext.add(&next[i + 1], c);
            next[i] = ext.add(&next[i], &ext.mul(c, &neg_r));
        }
        acc = next;
    }
    acc
}

/// Re-expresses a polynomial with extension coefficients over the base field.
/// Fails if some coefficient is not fixed by the Frobenius map.
pub fn coerce_to_base(ext: &ExtField, poly: &[ExtElem]) -> Result<FieldPoly, FieldError> {
    let coeffs = poly
        .iter()
        .enumerate()
        .map(|(i, c)| ext.as_constant(c).ok_or(FieldError::NotInBaseField { position: i }))
        .collect::<Result<Vec<u32>, _>>()?;
    Ok(FieldPoly::new(ext.base().clone(), coeffs))
}

/// Embeds a base-field polynomial into the extension.
pub fn embed_poly(ext: &ExtField, p: &FieldPoly) -> Vec<ExtElem> {
    p.coeffs().iter().map(|&c| ext.constant(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::super::make_field;
    use super::*;

    fn exact_order(ext: &ExtField, a: &[u32], bound: u64) -> u64 {
        let mut x = a.to_vec();
        for k in 1..=bound {
            if ext.is_one(&x) {
                return k;
            }
            x = ext.mul(&x, a);
        }
        panic!("order exceeds bound")
    }

    #[test]
    fn extension_matches_table_field_modulus() {
        let gf2 = make_field(2, 1).unwrap();
        for t in 2..=8 {
            let ext = ExtField::new(gf2.clone(), t).unwrap();
            let table = make_field(2, t as u32).unwrap();
            assert_eq!(ext.modulus(), table.modulus());
        }
    }

    #[test]
    fn roots_of_unity() {
        let gf2 = make_field(2, 1).unwrap();
        let r = primitive_nth_root(7, &gf2).unwrap();
        assert_eq!(r.field().degree(), 3);
        assert_eq!(r.field().order(), BigUint::from(8u32));
        assert_eq!(exact_order(r.field(), r.alpha(), 7), 7);

        let r = primitive_nth_root(17, &gf2).unwrap();
        assert_eq!(r.field().degree(), 8);
        assert_eq!(exact_order(r.field(), r.alpha(), 17), 17);

        let gf4 = make_field(2, 2).unwrap();
        let r = primitive_nth_root(1, &gf4).unwrap();
        assert_eq!(r.field().degree(), 1);
        assert!(r.field().is_one(r.alpha()));

        assert!(primitive_nth_root(6, &gf2).is_err());
    }

    #[test]
    fn large_extension_root() {
        // ord_49(2) = 21: beyond the table cap.
        let gf2 = make_field(2, 1).unwrap();
        let r = primitive_nth_root(49, &gf2).unwrap();
        assert_eq!(r.field().degree(), 21);
        assert_eq!(exact_order(r.field(), r.alpha(), 49), 49);
    }

    #[test]
    fn coerce_hamming_generator() {
        let gf2 = make_field(2, 1).unwrap();
        let r = primitive_nth_root(7, &gf2).unwrap();
        let roots: Vec<ExtElem> = [1, 2, 4].iter().map(|&j| r.power(j)).collect();
        let g = coerce_to_base(r.field(), &poly_from_roots(r.field(), &roots)).unwrap();
        // alpha = y with modulus y^3 + y + 1, so its minimal polynomial is x^3 + x + 1.
        assert_eq!(g.coeffs(), &[1, 1, 0, 1]);

        let one = coerce_to_base(r.field(), &[r.field().one()]).unwrap();
        assert_eq!(one.coeffs(), &[1]);

        let bad = vec![r.field().one(), r.alpha().clone()];
        assert_eq!(
            coerce_to_base(r.field(), &bad).unwrap_err(),
            FieldError::NotInBaseField { position: 1 }
        );
    }

    #[test]
    fn minimal_polynomial_agrees_with_root_product() {
        let gf4 = make_field(2, 2).unwrap();
        let r = primitive_nth_root(21, &gf4).unwrap();
        for rep in [1u64, 3, 7, 9] {
            let mut coset = vec![rep];
            let mut v = rep * 4 % 21;
            while v != rep {
                coset.push(v);
                v = v * 4 % 21;
            }
            let roots: Vec<ExtElem> = coset.iter().map(|&j| r.power(j)).collect();
            let by_roots = coerce_to_base(r.field(), &poly_from_roots(r.field(), &roots)).unwrap();
            let by_algebra = r.field().minimal_polynomial(&r.power(rep), coset.len());
            assert_eq!(by_roots, by_algebra);
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_base_field() {
        let gf2 = make_field(2, 1).unwrap();
        let ext = ExtField::new(gf2, 4).unwrap();
        for idx in 0..16 {
            let e = ext.element_from_index(idx);
            assert_eq!(ext.frobenius(&e) == e, ext.as_constant(&e).is_some());
        }
    }

    #[test]
    fn embed_then_coerce_is_identity() {
        let gf3 = make_field(3, 1).unwrap();
        let ext = ExtField::new(gf3.clone(), 4).unwrap();
        let p = FieldPoly::new(gf3, vec![2, 0, 1, 1, 2]);
        assert_eq!(coerce_to_base(&ext, &embed_poly(&ext, &p)).unwrap(), p);
    }
}
