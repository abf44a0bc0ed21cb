//! Dense polynomials over a [`Scalars`] field. Coefficients are stored lowest
//! degree first; the zero polynomial is the empty vector.

use super::{FieldDesc, Scalars};
use std::fmt;
use std::sync::Arc;

pub fn trim(c: &mut Vec<u32>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

pub fn degree(c: &[u32]) -> Option<usize> {
    c.iter().rposition(|&x| x != 0)
}

pub fn add<S: Scalars>(s: &S, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = (0..a.len().max(b.len()))
        .map(|i| s.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(&mut out);
    out
}

pub fn sub<S: Scalars>(s: &S, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = (0..a.len().max(b.len()))
        .map(|i| s.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(&mut out);
    out
}

pub fn mul<S: Scalars>(s: &S, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = s.add(out[i + j], s.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `d` must be nonzero.
pub fn divrem<S: Scalars>(s: &S, a: &[u32], d: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let dd = degree(d).expect("division by the zero polynomial");
    let lead_inv = s.inv_nonzero(d[dd]);
    let mut r: Vec<u32> = a.to_vec();
    trim(&mut r);
    if r.len() <= dd {
        return (Vec::new(), r);
    }
    let mut q = vec![0u32; r.len() - dd];
    for i in (dd..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        let f = s.mul(c, lead_inv);
        q[i - dd] = f;
        for j in 0..=dd {
            r[i - dd + j] = s.sub(r[i - dd + j], s.mul(f, d[j]));
        }
    }
    r.truncate(dd);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub fn rem<S: Scalars>(s: &S, a: &[u32], d: &[u32]) -> Vec<u32> {
    divrem(s, a, d).1
}

pub fn monic<S: Scalars>(s: &S, a: &[u32]) -> Vec<u32> {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = s.inv_nonzero(a[d]);
            a[..=d].iter().map(|&c| s.mul(c, inv)).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd<S: Scalars>(s: &S, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(s, &x, &y);
        x = y;
        y = r;
    }
    monic(s, &x)
}

pub fn pow_mod<S: Scalars>(s: &S, base: &[u32], mut e: u64, modulus: &[u32]) -> Vec<u32> {
    let mut acc = rem(s, &[1], modulus);
    let mut b = rem(s, base, modulus);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(s, &mul(s, &acc, &b), modulus);
        }
        b = rem(s, &mul(s, &b, &b), modulus);
        e >>= 1;
    }
    acc
}

/// Ben-Or irreducibility test: `f` of degree `m` is irreducible iff
/// `gcd(f, x^(Q^k) - x) = 1` for every `k <= m/2`.
pub fn is_irreducible<S: Scalars>(s: &S, f: &[u32]) -> bool {
    let Some(m) = degree(f) else {
        return false;
    };
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    let x = vec![0, 1];
    let mut h = x.clone();
    for _ in 1..=m / 2 {
        h = pow_mod(s, &h, s.order(), f);
        let g = gcd(s, f, &sub(s, &h, &x));
        if degree(&g).unwrap_or(0) > 0 {
            return false;
        }
    }
    true
}

/// A polynomial over a table-backed field, lowest degree first, with no
/// trailing zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldPoly {
    field: Arc<FieldDesc>,
    coeffs: Vec<u32>,
}

impl fmt::Debug for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldPoly(GF({}), {:?})", self.field.order(), self.coeffs)
    }
}

impl FieldPoly {
    pub fn new(field: Arc<FieldDesc>, mut coeffs: Vec<u32>) -> Self {
        trim(&mut coeffs);
        debug_assert!(coeffs.iter().all(|&c| field.contains(c)));
        FieldPoly { field, coeffs }
    }

    pub fn one(field: Arc<FieldDesc>) -> Self {
        FieldPoly::new(field, vec![1])
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(field: Arc<FieldDesc>, n: usize) -> Self {
        let mut c = vec![0u32; n + 1];
        c[0] = field.neg(1);
        c[n] = 1;
        FieldPoly::new(field, c)
    }

    pub fn field(&self) -> &Arc<FieldDesc> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        degree(&self.coeffs)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> u32 {
        *self.coeffs.get(i).unwrap_or(&0)
    }

    pub fn mul(&self, other: &FieldPoly) -> FieldPoly {
        FieldPoly::new(self.field.clone(), mul(&*self.field, &self.coeffs, &other.coeffs))
    }

    pub fn divrem(&self, d: &FieldPoly) -> (FieldPoly, FieldPoly) {
        let (q, r) = divrem(&*self.field, &self.coeffs, &d.coeffs);
        (FieldPoly::new(self.field.clone(), q), FieldPoly::new(self.field.clone(), r))
    }

    pub fn is_divisible_by(&self, d: &FieldPoly) -> bool {
        self.divrem(d).1.is_zero()
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.field.add(self.field.mul(acc, x), c))
    }

    /// Sum of the coefficients, i.e. the value at 1.
    pub fn coefficient_sum(&self) -> u32 {
        self.coeffs.iter().fold(0, |acc, &c| self.field.add(acc, c))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{make_field, PrimeField};
    use super::*;

    #[test]
    fn divrem_roundtrip() {
        let f = make_field(3, 1).unwrap();
        let a = vec![1, 2, 0, 1, 2];
        let d = vec![2, 1, 1];
        let (q, r) = divrem(&*f, &a, &d);
        assert_eq!(add(&*f, &mul(&*f, &q, &d), &r), a);
    }

    #[test]
    fn irreducibility_small_cases() {
        let gf2 = PrimeField { p: 2 };
        // x^2 + x + 1 yes, x^2 + 1 = (x + 1)^2 no, x^4 + x^2 + 1 = (x^2 + x + 1)^2 no.
        assert!(is_irreducible(&gf2, &[1, 1, 1]));
        assert!(!is_irreducible(&gf2, &[1, 0, 1]));
        assert!(!is_irreducible(&gf2, &[1, 0, 1, 0, 1]));
        assert!(is_irreducible(&gf2, &[1, 1, 0, 0, 1]));
        // counts of monic irreducibles of degree 4 over GF(2): 3
        let count = (0u32..16)
            .filter(|k| {
                let mut f: Vec<u32> = (0..4).map(|i| (k >> i) & 1).collect();
                f.push(1);
                is_irreducible(&gf2, &f)
            })
            .count();
        assert_eq!(count, 3);
    }

    #[test]
    fn gcd_is_monic() {
        let f = make_field(5, 1).unwrap();
        // (x - 1)(x - 2) and 3(x - 1)(x - 3)
        let a = mul(&*f, &[4, 1], &[3, 1]);
        let b = mul(&*f, &[3], &mul(&*f, &[4, 1], &[2, 1]));
        assert_eq!(gcd(&*f, &a, &b), vec![4, 1]);
    }
}
