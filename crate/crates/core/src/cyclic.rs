//! Cyclotomic cosets, defining sets and cyclic codes.
//!
//! Defining-set convention: `T` is the set of exponents `j` such that
//! `alpha^j` is a root of every codeword polynomial, where `alpha` is the
//! canonical primitive n-th root of unity from [`primitive_nth_root`]. A code
//! with defining set `T` has generator polynomial `prod_{j in T} (x - alpha^j)`
//! and dimension `n - |T|`. The literature also uses the complementary
//! (nonzeros) convention; everything here uses zeros.

use crate::arith::{self, ArithError};
use crate::galois::{primitive_nth_root, FieldDesc, FieldError, FieldPoly, RootOfUnity};
use crate::linalg::Matrix;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("code length {0} must be odd")]
    EvenLength(u32),
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: u32, q: u64 },
    #[error("{a} is not a unit modulo {n}")]
    NotUnit { a: u64, n: u32 },
    #[error("residue {r} is out of range for length {n}")]
    ResidueOutOfRange { r: u32, n: u32 },
    #[error("defining set is not closed under multiplication by {q} mod {n}")]
    NotCosetClosed { n: u32, q: u64 },
    #[error("defining set belongs to length {got}, expected {expected}")]
    LengthMismatch { expected: u32, got: u32 },
    #[error("null space is not a cyclic code")]
    NotCyclic,
    #[error("dual computed from matrices disagrees with the defining-set dual")]
    DualMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
}

fn check_length(n: u32, q: u64) -> Result<(), CyclicError> {
    if n.is_multiple_of(2) {
        return Err(CyclicError::EvenLength(n));
    }
    if arith::gcd(n as u64, q) != 1 {
        return Err(CyclicError::NotCoprime { n, q });
    }
    Ok(())
}

/// The q-ary cyclotomic cosets modulo n, ordered by smallest representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetStructure {
    n: u32,
    q: u64,
    cosets: Vec<Vec<u32>>,
    coset_of: Vec<usize>,
}

pub fn cyclotomic_cosets(n: u32, q: u64) -> Result<CosetStructure, CyclicError> {
    check_length(n, q)?;
    let mut coset_of = vec![usize::MAX; n as usize];
    let mut cosets = Vec::new();
    for r in 0..n {
        if coset_of[r as usize] != usize::MAX {
            continue;
        }
        let mut c = Vec::new();
        let mut v = r;
        while coset_of[v as usize] == usize::MAX {
            coset_of[v as usize] = cosets.len();
            c.push(v);
            v = ((v as u64 * q) % n as u64) as u32;
        }
        c.sort_unstable();
        cosets.push(c);
    }
    Ok(CosetStructure { n, q, cosets, coset_of })
}

impl CosetStructure {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn cosets(&self) -> &[Vec<u32>] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Index of the coset containing residue `r`.
    pub fn coset_of(&self, r: u32) -> usize {
        self.coset_of[(r % self.n) as usize]
    }

    pub fn representative(&self, i: usize) -> u32 {
        self.cosets[i][0]
    }

    /// Indices of the cosets whose union is `members`, or `None` if
    /// `members` is not a union of cosets.
    pub fn decompose(&self, members: &[u32]) -> Option<Vec<usize>> {
        let set: BTreeSet<u32> = members.iter().copied().collect();
        let mut idx: Vec<usize> = set.iter().map(|&r| self.coset_of(r)).collect();
        idx.dedup();
        idx.sort_unstable();
        idx.dedup();
        let covered: usize = idx.iter().map(|&i| self.cosets[i].len()).sum();
        (covered == set.len()).then_some(idx)
    }
}

/// `ord_n(a)`.
pub fn ord_mod(n: u64, a: u64) -> Result<u64, ArithError> {
    arith::ord_mod(n, a)
}

/// Whether `x^2 = q (mod n)` has a solution, decided exhaustively.
pub fn is_quadratic_residue(q: u64, n: u64) -> Result<bool, CyclicError> {
    if n.is_multiple_of(2) {
        return Err(CyclicError::EvenLength(n as u32));
    }
    arith::square_roots(q, n)
        .map(|r| !r.is_empty())
        .map_err(|_| CyclicError::NotCoprime { n: n as u32, q })
}

/// The permutation `mu_a : i -> a i mod n` applied to a residue set; sorted.
pub fn mu_apply(set: &[u32], a: u64, n: u32) -> Result<Vec<u32>, CyclicError> {
    if arith::gcd(a % n as u64, n as u64) != 1 && n != 1 {
        return Err(CyclicError::NotUnit { a, n });
    }
    let mut out: Vec<u32> = set
        .iter()
        .map(|&t| ((t as u64 * a) % n as u64) as u32)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// A union of q-ary cyclotomic cosets modulo n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DefiningSet {
    n: u32,
    q: u64,
    members: Vec<u32>,
}

impl DefiningSet {
    pub fn new(n: u32, q: u64, members: impl IntoIterator<Item = u32>) -> Result<Self, CyclicError> {
        check_length(n, q)?;
        let set: BTreeSet<u32> = members.into_iter().collect();
        if let Some(&r) = set.iter().find(|&&r| r >= n) {
            return Err(CyclicError::ResidueOutOfRange { r, n });
        }
        if set
            .iter()
            .any(|&t| !set.contains(&(((t as u64 * q) % n as u64) as u32)))
        {
            return Err(CyclicError::NotCosetClosed { n, q });
        }
        Ok(DefiningSet {
            n,
            q,
            members: set.into_iter().collect(),
        })
    }

    pub fn empty(n: u32, q: u64) -> Result<Self, CyclicError> {
        DefiningSet::new(n, q, [])
    }

    /// `{0, 1, ..., n - 1}`.
    pub fn full(n: u32, q: u64) -> Result<Self, CyclicError> {
        DefiningSet::new(n, q, 0..n)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, r: u32) -> bool {
        self.members.binary_search(&r).is_ok()
    }

    pub fn union(&self, other: &DefiningSet) -> DefiningSet {
        let mut m = self.members.clone();
        m.extend_from_slice(&other.members);
        m.sort_unstable();
        m.dedup();
        DefiningSet {
            n: self.n,
            q: self.q,
            members: m,
        }
    }

    pub fn with_zero(&self) -> DefiningSet {
        let mut m = self.members.clone();
        if !self.contains(0) {
            m.insert(0, 0);
        }
        DefiningSet {
            n: self.n,
            q: self.q,
            members: m,
        }
    }

    /// `N \ T`.
    pub fn complement(&self) -> DefiningSet {
        DefiningSet {
            n: self.n,
            q: self.q,
            members: (0..self.n).filter(|r| !self.contains(*r)).collect(),
        }
    }

    /// Image under `mu_a`; still a union of cosets since `mu_a` commutes with `mu_q`.
    pub fn mu(&self, a: u64) -> Result<DefiningSet, CyclicError> {
        Ok(DefiningSet {
            n: self.n,
            q: self.q,
            members: mu_apply(&self.members, a, self.n)?,
        })
    }

    /// Smallest representatives of the cosets making up the set.
    pub fn coset_representatives(&self) -> Vec<u32> {
        let mut seen = BTreeSet::new();
        let mut reps = Vec::new();
        for &t in &self.members {
            if seen.contains(&t) {
                continue;
            }
            reps.push(t);
            let mut v = t;
            while seen.insert(v) {
                v = ((v as u64 * self.q) % self.n as u64) as u32;
            }
        }
        reps
    }
}

impl fmt::Display for DefiningSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.members)
    }
}

/// Defining set of the Euclidean dual: `-(N \ T)`.
pub fn dual_defining_set(t: &DefiningSet) -> DefiningSet {
    let n = t.n;
    let mut m: Vec<u32> = t
        .complement()
        .members
        .iter()
        .map(|&r| (n - r) % n)
        .collect();
    m.sort_unstable();
    DefiningSet {
        n,
        q: t.q,
        members: m,
    }
}

/// Defining set of the Hermitian dual of a code over GF(s^2): `-s (N \ T)`.
pub fn hermitian_dual_defining_set(t: &DefiningSet) -> Result<DefiningSet, CyclicError> {
    let s = crate::galois::exact_sqrt(t.q).ok_or(FieldError::NotSquareOrder(t.q))?;
    let n = t.n as u64;
    let mult = (n - s % n) % n;
    let mut m: Vec<u32> = t
        .complement()
        .members
        .iter()
        .map(|&r| ((r as u64 * mult) % n) as u32)
        .collect();
    m.sort_unstable();
    Ok(DefiningSet {
        n: t.n,
        q: t.q,
        members: m,
    })
}

/// Everything about length-n cyclic codes over one field that does not
/// depend on the defining set: cosets, the root of unity, and the minimal
/// polynomial of each coset.
#[derive(Debug)]
pub struct CyclotomicContext {
    n: u32,
    field: Arc<FieldDesc>,
    cosets: CosetStructure,
    root: RootOfUnity,
    minpolys: Vec<FieldPoly>,
}

impl CyclotomicContext {
    pub fn new(n: u32, field: Arc<FieldDesc>) -> Result<Arc<Self>, CyclicError> {
        let q = field.order() as u64;
        let cosets = cyclotomic_cosets(n, q)?;
        let root = primitive_nth_root(n as u64, &field)?;
        let minpolys = cosets
            .cosets()
            .iter()
            .map(|c| {
                let beta = root.power(c[0] as u64);
                root.field().minimal_polynomial(&beta, c.len())
            })
            .collect();
        Ok(Arc::new(CyclotomicContext {
            n,
            field,
            cosets,
            root,
            minpolys,
        }))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn field(&self) -> &Arc<FieldDesc> {
        &self.field
    }

    pub fn cosets(&self) -> &CosetStructure {
        &self.cosets
    }

    pub fn root(&self) -> &RootOfUnity {
        &self.root
    }

    /// Minimal polynomial of `alpha^j` over the base field.
    pub fn minimal_polynomial(&self, j: u32) -> &FieldPoly {
        &self.minpolys[self.cosets.coset_of(j)]
    }

    /// Generator polynomial `prod_{j in T} (x - alpha^j)`, assembled from
    /// the minimal polynomials of the cosets in `T`.
    pub fn generator_polynomial(&self, t: &DefiningSet) -> Result<FieldPoly, CyclicError> {
        self.check_set(t)?;
        let idx = self
            .cosets
            .decompose(t.members())
            .ok_or(CyclicError::NotCosetClosed {
                n: self.n,
                q: self.field.order() as u64,
            })?;
        Ok(idx
            .iter()
            .fold(FieldPoly::one(self.field.clone()), |acc, &i| acc.mul(&self.minpolys[i])))
    }

    fn check_set(&self, t: &DefiningSet) -> Result<(), CyclicError> {
        if t.n != self.n {
            return Err(CyclicError::LengthMismatch {
                expected: self.n,
                got: t.n,
            });
        }
        if t.q != self.field.order() as u64 {
            return Err(CyclicError::NotCosetClosed { n: self.n, q: self.field.order() as u64 });
        }
        Ok(())
    }

    /// The cyclic code with defining set `t`.
    pub fn code(self: &Arc<Self>, t: &DefiningSet) -> Result<CyclicCode, CyclicError> {
        let genpoly = self.generator_polynomial(t)?;
        let f = &*self.field;
        let n = self.n as usize;
        let x_n_1 = FieldPoly::x_n_minus_one(self.field.clone(), n);
        let (checkpoly, r) = x_n_1.divrem(&genpoly);
        assert!(r.is_zero(), "generator polynomial divides x^n - 1");
        let k = n - t.len();
        debug_assert_eq!(genpoly.degree(), Some(t.len()));

        let mut generator = Matrix::zeros(k, n);
        for i in 0..k {
            for (j, &c) in genpoly.coeffs().iter().enumerate() {
                generator.set(i, i + j, c);
            }
        }
        let mut check = Matrix::zeros(n - k, n);
        for i in 0..n - k {
            for j in 0..=k {
                check.set(i, i + j, checkpoly.coeff(k - j));
            }
        }
        debug_assert!(n > 64 || generator.mul(f, &check.transpose()).is_zero());
        Ok(CyclicCode {
            ctx: self.clone(),
            defining: t.clone(),
            genpoly,
            checkpoly,
            generator,
            check,
        })
    }
}

/// A cyclic code of odd length over a table-backed field, with its generator
/// matrix in shift form and a matching check matrix.
#[derive(Clone)]
pub struct CyclicCode {
    ctx: Arc<CyclotomicContext>,
    defining: DefiningSet,
    genpoly: FieldPoly,
    checkpoly: FieldPoly,
    generator: Matrix,
    check: Matrix,
}

impl fmt::Debug for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CyclicCode[{}, {}] over GF({}) T={}",
            self.n(),
            self.k(),
            self.ctx.field.order(),
            self.defining
        )
    }
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n == other.ctx.n && self.ctx.field == other.ctx.field && self.defining == other.defining
    }
}

/// Builds the cyclic code of length `n` over `field` with defining set `t`.
pub fn make_cyclic_code(n: u32, field: Arc<FieldDesc>, t: &DefiningSet) -> Result<CyclicCode, CyclicError> {
    CyclotomicContext::new(n, field)?.code(t)
}

impl CyclicCode {
    pub fn context(&self) -> &Arc<CyclotomicContext> {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n as usize
    }

    pub fn k(&self) -> usize {
        self.n() - self.defining.len()
    }

    pub fn field(&self) -> &Arc<FieldDesc> {
        &self.ctx.field
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining
    }

    pub fn genpoly(&self) -> &FieldPoly {
        &self.genpoly
    }

    pub fn checkpoly(&self) -> &FieldPoly {
        &self.checkpoly
    }

    pub fn generator_matrix(&self) -> &Matrix {
        &self.generator
    }

    pub fn check_matrix(&self) -> &Matrix {
        &self.check
    }

    pub fn encode(&self, message: &[u32]) -> Vec<u32> {
        self.generator.left_mul_vec(&self.ctx.field, message)
    }

    pub fn syndrome(&self, word: &[u32]) -> Vec<u32> {
        self.check.mul_vec(&self.ctx.field, word)
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        self.syndrome(word).iter().all(|&s| s == 0)
    }

    /// `self` is a subcode of `other` iff `other`'s generator polynomial
    /// divides this one's.
    pub fn is_subcode_of(&self, other: &CyclicCode) -> bool {
        self.ctx.n == other.ctx.n
            && self.ctx.field == other.ctx.field
            && self.genpoly.is_divisible_by(&other.genpoly)
    }

    /// Whether some codeword has nonzero coordinate sum. By linearity it
    /// suffices to look at the generator rows.
    pub fn has_odd_like_words(&self) -> bool {
        (0..self.generator.rows()).any(|r| coordinate_sum(&self.ctx.field, self.generator.row(r)) != 0)
    }

    /// The cyclic code with defining set `a^{-1} T`, i.e. `{c(x^a)}`.
    pub fn under_mu(&self, a: u64) -> Result<CyclicCode, CyclicError> {
        code_under_mu(self, a)
    }
}

pub fn coordinate_sum(f: &FieldDesc, word: &[u32]) -> u32 {
    word.iter().fold(0, |acc, &c| f.add(acc, c))
}

/// A word is even-like when its coordinates sum to zero in the field.
pub fn is_even_like(f: &FieldDesc, word: &[u32]) -> bool {
    coordinate_sum(f, word) == 0
}

/// The image of `c` under `mu_a`; its defining set is `a^{-1} T`.
pub fn code_under_mu(c: &CyclicCode, a: u64) -> Result<CyclicCode, CyclicError> {
    let n = c.ctx.n;
    let inv = arith::mod_inv(a % n as u64, n as u64).map_err(|_| CyclicError::NotUnit { a, n })?;
    c.ctx.code(&c.defining.mu(inv)?)
}

/// Even-like subcode via the defining set `T u {0}`.
pub fn even_like_subcode(c: &CyclicCode) -> Result<CyclicCode, CyclicError> {
    c.ctx.code(&c.defining.with_zero())
}

/// Even-like subcode computed by intersecting with the sum-zero hyperplane;
/// rows of the result span `{c in C : sum c_i = 0}`.
pub fn even_like_subcode_matrix(c: &CyclicCode) -> Matrix {
    let n = c.n();
    let ones = Matrix::from_rows(n, &[vec![1; n]]);
    c.check.stack(&ones).null_space(&c.ctx.field)
}

/// Monic polynomial of least degree in the row space of `basis`, which is
/// the generator polynomial when the row space is a cyclic code.
fn least_degree_polynomial(f: &Arc<FieldDesc>, n: usize, basis: &Matrix) -> FieldPoly {
    if basis.rows() == 0 {
        return FieldPoly::x_n_minus_one(f.clone(), n);
    }
    let mut rev = Matrix::zeros(basis.rows(), n);
    for r in 0..basis.rows() {
        for c in 0..n {
            rev.set(r, n - 1 - c, basis.get(r, c));
        }
    }
    let pivots = rev.rref(f);
    let last = pivots.len() - 1;
    let coeffs: Vec<u32> = (0..n).map(|c| rev.get(last, n - 1 - c)).collect();
    FieldPoly::new(f.clone(), coeffs)
}

fn dual_from_generator(c: &CyclicCode, generator: &Matrix) -> Result<CyclicCode, CyclicError> {
    let f = &c.ctx.field;
    let n = c.n();
    let ns = generator.null_space(f);
    let g = least_degree_polynomial(f, n, &ns);
    let members: Vec<u32> = c
        .ctx
        .cosets
        .cosets()
        .iter()
        .enumerate()
        .filter(|(i, _)| g.is_divisible_by(&c.ctx.minpolys[*i]))
        .flat_map(|(_, cs)| cs.iter().copied())
        .collect();
    if g.degree() != Some(members.len()) {
        return Err(CyclicError::NotCyclic);
    }
    let t = DefiningSet::new(c.ctx.n, f.order() as u64, members)?;
    let dual = c.ctx.code(&t)?;
    if !dual.generator.same_row_space(f, &ns) {
        return Err(CyclicError::DualMismatch);
    }
    Ok(dual)
}

/// Euclidean dual computed as the null space of the generator matrix.
pub fn euclidean_dual(c: &CyclicCode) -> Result<CyclicCode, CyclicError> {
    dual_from_generator(c, &c.generator)
}

/// Hermitian dual over GF(s^2): null space of the entrywise conjugated
/// generator matrix.
pub fn hermitian_dual(c: &CyclicCode) -> Result<CyclicCode, CyclicError> {
    let f = c.ctx.field.clone();
    let s = f
        .sqrt_order()
        .ok_or(FieldError::NotSquareOrder(f.order() as u64))?;
    let conj = c.generator.map(|x| f.pow(x, s as u64));
    dual_from_generator(c, &conj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::make_field;

    fn gf(q: u64) -> Arc<FieldDesc> {
        crate::galois::field_of_order(q).unwrap()
    }

    fn enumerate_words(c: &CyclicCode) -> Vec<Vec<u32>> {
        let q = c.field().order();
        let k = c.k();
        let total = (q as u64).pow(k as u32);
        (0..total)
            .map(|mut idx| {
                let msg: Vec<u32> = (0..k)
                    .map(|_| {
                        let d = (idx % q as u64) as u32;
                        idx /= q as u64;
                        d
                    })
                    .collect();
                c.encode(&msg)
            })
            .collect()
    }

    fn weight(w: &[u32]) -> usize {
        w.iter().filter(|&&x| x != 0).count()
    }

    #[test]
    fn cosets_examples() {
        let c = cyclotomic_cosets(7, 2).unwrap();
        assert_eq!(c.cosets(), &[vec![0], vec![1, 2, 4], vec![3, 5, 6]]);
        let c = cyclotomic_cosets(3, 2).unwrap();
        assert_eq!(c.cosets(), &[vec![0], vec![1, 2]]);
        let c = cyclotomic_cosets(5, 11).unwrap();
        assert_eq!(c.len(), 5);
        assert!(c.cosets().iter().all(|x| x.len() == 1));
        assert_eq!(cyclotomic_cosets(6, 5), Err(CyclicError::EvenLength(6)));
        assert_eq!(cyclotomic_cosets(9, 3), Err(CyclicError::NotCoprime { n: 9, q: 3 }));
    }

    #[test]
    fn residue_and_order_examples() {
        assert_eq!(ord_mod(7, 2).unwrap(), 3);
        assert_eq!(ord_mod(23, 2).unwrap(), 11);
        assert!(is_quadratic_residue(2, 7).unwrap());
        assert!(!is_quadratic_residue(2, 5).unwrap());
        assert!(is_quadratic_residue(1, 15).unwrap());
        assert!(is_quadratic_residue(3, 9).is_err());
    }

    #[test]
    fn mu_examples() {
        let t = vec![1, 2, 4];
        assert_eq!(mu_apply(&t, 1, 7).unwrap(), t);
        assert_eq!(mu_apply(&t, 6, 7).unwrap(), vec![3, 5, 6]);
        let a = 3;
        let inv = arith::mod_inv(a, 7).unwrap();
        assert_eq!(mu_apply(&mu_apply(&t, a, 7).unwrap(), inv, 7).unwrap(), t);
        assert!(mu_apply(&t, 7, 7).is_err());
    }

    #[test]
    fn dual_defining_set_examples() {
        let empty = DefiningSet::empty(7, 2).unwrap();
        let full = DefiningSet::full(7, 2).unwrap();
        assert_eq!(dual_defining_set(&empty), full);
        assert_eq!(dual_defining_set(&full), empty);
        let t = DefiningSet::new(7, 2, [0, 1, 2, 4]).unwrap();
        assert_eq!(dual_defining_set(&t).members(), &[1, 2, 4]);

        let t4 = DefiningSet::new(7, 4, [0, 1, 2, 4]).unwrap();
        assert_eq!(hermitian_dual_defining_set(&t4).unwrap().members(), &[1, 2, 4]);
        assert!(hermitian_dual_defining_set(&DefiningSet::full(7, 4).unwrap())
            .unwrap()
            .is_empty());
        assert!(hermitian_dual_defining_set(&t).is_err());
    }

    #[test]
    fn defining_set_must_be_closed() {
        assert_eq!(
            DefiningSet::new(7, 2, [1, 2]),
            Err(CyclicError::NotCosetClosed { n: 7, q: 2 })
        );
        assert!(DefiningSet::new(7, 2, [9]).is_err());
        let t = DefiningSet::new(21, 2, [1, 2, 4, 8, 16, 11, 7, 14]).unwrap();
        assert_eq!(t.coset_representatives(), vec![1, 7]);
    }

    #[test]
    fn whole_space_and_hamming() {
        let f = gf(2);
        let whole = make_cyclic_code(7, f.clone(), &DefiningSet::empty(7, 2).unwrap()).unwrap();
        assert_eq!(whole.k(), 7);
        assert_eq!(whole.genpoly().coeffs(), &[1]);

        let ham = make_cyclic_code(7, f.clone(), &DefiningSet::new(7, 2, [1, 2, 4]).unwrap()).unwrap();
        assert_eq!(ham.k(), 4);
        assert_eq!(ham.genpoly().coeffs(), &[1, 1, 0, 1]);
        let words = enumerate_words(&ham);
        assert_eq!(words.len(), 16);
        assert_eq!(words.iter().filter(|w| weight(w) > 0).map(|w| weight(w)).min(), Some(3));

        let even = make_cyclic_code(7, f, &DefiningSet::new(7, 2, [0, 1, 2, 4]).unwrap()).unwrap();
        assert_eq!(even.k(), 3);
        // (x + 1)(x^3 + x + 1) = x^4 + x^3 + x^2 + 1
        assert_eq!(even.genpoly().coeffs(), &[1, 0, 1, 1, 1]);
        assert!(enumerate_words(&even).iter().all(|w| weight(w) == 0 || weight(w) == 4));
    }

    #[test]
    fn generator_polynomial_matches_root_product() {
        use crate::galois::{coerce_to_base, poly_from_roots};
        for (n, q) in [(7u32, 2u64), (15, 2), (21, 4), (13, 3), (11, 5), (17, 2)] {
            let ctx = CyclotomicContext::new(n, gf(q)).unwrap();
            for c in ctx.cosets().cosets() {
                let roots: Vec<_> = c.iter().map(|&j| ctx.root().power(j as u64)).collect();
                let by_roots = coerce_to_base(ctx.root().field(), &poly_from_roots(ctx.root().field(), &roots)).unwrap();
                assert_eq!(&by_roots, ctx.minimal_polynomial(c[0]));
            }
        }
    }

    #[test]
    fn non_closed_root_set_fails_coercion() {
        use crate::galois::{coerce_to_base, poly_from_roots};
        let ctx = CyclotomicContext::new(7, gf(2)).unwrap();
        let roots: Vec<_> = [1u64, 2].iter().map(|&j| ctx.root().power(j)).collect();
        assert!(coerce_to_base(ctx.root().field(), &poly_from_roots(ctx.root().field(), &roots)).is_err());
    }

    #[test]
    fn code_matrices_are_consistent() {
        for (n, q) in [(7u32, 2u64), (9, 2), (15, 4), (13, 3), (11, 3)] {
            let ctx = CyclotomicContext::new(n, gf(q)).unwrap();
            let f = ctx.field().clone();
            for (i, c) in ctx.cosets().cosets().iter().enumerate() {
                let t = DefiningSet::new(n, q, c.iter().copied()).unwrap();
                let code = ctx.code(&t).unwrap();
                assert_eq!(code.genpoly().degree(), Some(t.len()), "coset {i}");
                assert!(code.generator_matrix().mul(&f, &code.check_matrix().transpose()).is_zero());
                assert_eq!(code.generator_matrix().rank(&f), code.k());
                let prod = code.genpoly().mul(code.checkpoly());
                assert_eq!(prod, FieldPoly::x_n_minus_one(f.clone(), n as usize));
            }
        }
    }

    #[test]
    fn mu_image_of_even_like_hamming() {
        let f = gf(2);
        let t = DefiningSet::new(7, 2, [0, 1, 2, 4]).unwrap();
        let c = make_cyclic_code(7, f.clone(), &t).unwrap();
        let img = code_under_mu(&c, 3).unwrap();
        assert_eq!(img.defining_set().members(), &[0, 3, 5, 6]);
        assert_eq!(code_under_mu(&c, 1).unwrap(), c);
        // Permuting coordinates i -> 3i of every codeword lands in the image.
        for w in enumerate_words(&c) {
            let mut p = vec![0u32; 7];
            for (i, &x) in w.iter().enumerate() {
                p[(3 * i) % 7] = x;
            }
            assert!(img.contains(&p));
        }
        assert!(code_under_mu(&c, 14).is_err());
    }

    #[test]
    fn duals_examples() {
        let f = gf(2);
        let whole = make_cyclic_code(7, f.clone(), &DefiningSet::empty(7, 2).unwrap()).unwrap();
        let d = euclidean_dual(&whole).unwrap();
        assert_eq!(d.k(), 0);
        assert_eq!(d.defining_set(), &DefiningSet::full(7, 2).unwrap());
        assert_eq!(euclidean_dual(&d).unwrap(), whole);

        let ham = make_cyclic_code(7, f, &DefiningSet::new(7, 2, [1, 2, 4]).unwrap()).unwrap();
        let simplex = euclidean_dual(&ham).unwrap();
        assert_eq!(simplex.k(), 3);
        assert_eq!(simplex.defining_set(), &dual_defining_set(ham.defining_set()));
        assert!(enumerate_words(&simplex).iter().all(|w| weight(w) == 0 || weight(w) == 4));
        assert!(hermitian_dual(&ham).is_err());
    }

    #[test]
    fn hermitian_dual_of_even_like_code_over_gf4() {
        let f = gf(4);
        let ctx = CyclotomicContext::new(7, f.clone()).unwrap();
        let c0 = ctx.code(&DefiningSet::new(7, 4, [0, 1, 2, 4]).unwrap()).unwrap();
        let h = hermitian_dual(&c0).unwrap();
        assert_eq!(h.defining_set().members(), &[1, 2, 4]);
        assert_eq!(h.defining_set(), &hermitian_dual_defining_set(c0.defining_set()).unwrap());
        // C0 is contained in its Hermitian dual.
        assert!(c0.is_subcode_of(&h));
    }

    #[test]
    fn even_like_subcode_two_ways() {
        for (n, q) in [(7u32, 2u64), (15, 2), (13, 3), (7, 4)] {
            let ctx = CyclotomicContext::new(n, gf(q)).unwrap();
            let f = ctx.field().clone();
            for c in ctx.cosets().cosets().iter().skip(1) {
                let t = DefiningSet::new(n, q, c.iter().copied()).unwrap();
                let code = ctx.code(&t).unwrap();
                let by_set = even_like_subcode(&code).unwrap();
                let by_matrix = even_like_subcode_matrix(&code);
                assert!(by_set.generator_matrix().same_row_space(&f, &by_matrix));
                assert!(by_set.k() == code.k() || by_set.k() + 1 == code.k());
            }
        }
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let ctx = CyclotomicContext::new(7, make_field(2, 1).unwrap()).unwrap();
        assert!(ctx.code(&DefiningSet::new(7, 4, [1, 2, 4]).unwrap()).is_err());
        assert!(ctx.code(&DefiningSet::new(9, 2, [3, 6]).unwrap()).is_err());
    }
}
