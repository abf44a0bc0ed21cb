//! Splittings of n, duadic quartets, square-root bounds and degeneracy
//! certificates.

use crate::arith::{self, ArithError};
use crate::cyclic::{
    cyclotomic_cosets, is_quadratic_residue, mu_apply, CosetStructure, CyclicCode, CyclicError, CyclotomicContext,
    DefiningSet,
};
use crate::distance::DistanceResult;
use crate::galois::FieldDesc;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Upper limit on the number of splittings [`find_splittings`] will
/// materialize when called without a limit.
pub const SPLITTING_ENUMERATION_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DuadicError {
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("invalid splitting: {0}")]
    InvalidSplitting(String),
    #[error("splitting is over GF({splitting}) but the field has order {field}")]
    FieldMismatch { splitting: u64, field: u64 },
    #[error("quartet invariant failed: {0}")]
    QuartetInvariant(String),
    #[error("more than {SPLITTING_ENUMERATION_CAP} splittings; pass a limit")]
    TooManySplittings,
}

/// A partition of `{1, ..., n-1}` into two unions of q-ary cyclotomic cosets
/// swapped by `mu_a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Splitting {
    n: u32,
    q: u64,
    s0: Vec<u32>,
    s1: Vec<u32>,
    a: u64,
}

impl Splitting {
    /// Validates every splitting condition directly.
    pub fn new(n: u32, q: u64, s0: Vec<u32>, s1: Vec<u32>, a: u64) -> Result<Self, DuadicError> {
        let bad = |m: &str| Err(DuadicError::InvalidSplitting(m.to_string()));
        let d0 = DefiningSet::new(n, q, s0)?;
        let d1 = DefiningSet::new(n, q, s1)?;
        if d0.contains(0) || d1.contains(0) {
            return bad("0 belongs to neither side");
        }
        let half = (n as usize - 1) / 2;
        if d0.len() != half || d1.len() != half {
            return bad("sides must both have (n-1)/2 elements");
        }
        if d0.members().iter().any(|r| d1.contains(*r)) {
            return bad("sides overlap");
        }
        if arith::gcd(a % n as u64, n as u64) != 1 {
            return bad("multiplier is not a unit");
        }
        if mu_apply(d0.members(), a, n)? != d1.members() || mu_apply(d1.members(), a, n)? != d0.members() {
            return bad("multiplier does not swap the sides");
        }
        Ok(Splitting {
            n,
            q,
            s0: d0.members().to_vec(),
            s1: d1.members().to_vec(),
            a: a % n as u64,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn s0(&self) -> &[u32] {
        &self.s0
    }

    pub fn s1(&self) -> &[u32] {
        &self.s1
    }

    pub fn side(&self, i: usize) -> &[u32] {
        if i.is_multiple_of(2) {
            &self.s0
        } else {
            &self.s1
        }
    }

    pub fn multiplier(&self) -> u64 {
        self.a
    }

    /// The same splitting with the roles of `S0` and `S1` exchanged.
    pub fn swapped(&self) -> Splitting {
        Splitting {
            n: self.n,
            q: self.q,
            s0: self.s1.clone(),
            s1: self.s0.clone(),
            a: self.a,
        }
    }

    /// Whether `mu_a` swaps the two sides.
    pub fn is_given_by(&self, a: u64) -> bool {
        mu_apply(&self.s0, a, self.n).map(|v| v == self.s1).unwrap_or(false)
    }

    /// Same unordered partition, ignoring multiplier and side order.
    pub fn same_partition(&self, other: &Splitting) -> bool {
        self.n == other.n
            && self.q == other.q
            && ((self.s0 == other.s0 && self.s1 == other.s1) || (self.s0 == other.s1 && self.s1 == other.s0))
    }

    /// The side containing residue 1.
    pub fn canonical_side(&self) -> &[u32] {
        if self.s0.binary_search(&1).is_ok() || self.n == 1 {
            &self.s0
        } else {
            &self.s1
        }
    }

    /// Stable identifier of the unordered partition: the first 12 hex digits
    /// of SHA-256 over `n`, `q` and the side containing 1.
    pub fn id(&self) -> String {
        let side: Vec<String> = self.canonical_side().iter().map(|r| r.to_string()).collect();
        let text = format!("n={};q={};S0={}", self.n, self.q, side.join(","));
        let digest = Sha256::digest(text.as_bytes());
        digest.iter().take(6).map(|b| format!("{b:02x}")).collect()
    }

    pub fn defining_sets(&self) -> Result<(DefiningSet, DefiningSet), DuadicError> {
        Ok((
            DefiningSet::new(self.n, self.q, self.s0.iter().copied())?,
            DefiningSet::new(self.n, self.q, self.s1.iter().copied())?,
        ))
    }
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S0={:?} S1={:?} a={}", self.s0, self.s1, self.a)
    }
}

/// Duadic codes of length n over GF(q) exist iff q is a square modulo n.
pub fn duadic_exists(n: u32, q: u64) -> Result<bool, DuadicError> {
    cyclotomic_cosets(n, q)?;
    Ok(is_quadratic_residue(q, n as u64)?)
}

/// Orbits of `mu_a` on the nonzero cosets, each listed from its seed (the
/// coset with smallest representative) onward. `None` if `a` is not a unit.
fn mu_orbits(cs: &CosetStructure, a: u64) -> Option<Vec<Vec<usize>>> {
    let n = cs.n();
    if arith::gcd(a % n as u64, n as u64) != 1 {
        return None;
    }
    let image = |i: usize| cs.coset_of(((cs.representative(i) as u64 * a) % n as u64) as u32);
    let mut seen = vec![false; cs.len()];
    let mut orbits = Vec::new();
    for start in 1..cs.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            orbit.push(i);
            i = image(i);
        }
        orbits.push(orbit);
    }
    Some(orbits)
}

fn assemble(cs: &CosetStructure, orbits: &[Vec<usize>], flips: u64, a: u64) -> Result<Splitting, DuadicError> {
    let mut s = [BTreeSet::new(), BTreeSet::new()];
    for (j, orbit) in orbits.iter().enumerate() {
        let flip = ((flips >> j) & 1) as usize;
        for (pos, &c) in orbit.iter().enumerate() {
            s[(pos + flip) % 2].extend(cs.cosets()[c].iter().copied());
        }
    }
    let [s0, s1] = s;
    Splitting::new(cs.n(), cs.q(), s0.into_iter().collect(), s1.into_iter().collect(), a)
}

fn even_orbits(cs: &CosetStructure, a: u64) -> Option<Vec<Vec<usize>>> {
    let orbits = mu_orbits(cs, a)?;
    orbits.iter().all(|o| o.len() % 2 == 0).then_some(orbits)
}

/// The splitting given by `mu_a`, if any. Cosets are assigned alternately
/// along each orbit of `mu_a`, with the smallest-representative coset of
/// each orbit placed in `S0`.
pub fn splitting_by(n: u32, q: u64, a: u64) -> Result<Option<Splitting>, DuadicError> {
    let cs = cyclotomic_cosets(n, q)?;
    if arith::gcd(a % n as u64, n as u64) != 1 {
        return Err(CyclicError::NotUnit { a, n }.into());
    }
    if n == 1 {
        return Ok(None);
    }
    match even_orbits(&cs, a) {
        Some(orbits) => Ok(Some(assemble(&cs, &orbits, 0, a)?)),
        None => Ok(None),
    }
}

/// Every splitting, grouped by multiplier `a = 1, 2, ..., n-1`. For each
/// admissible `a` all `2^orbits` alternate assignments are produced, the
/// first being [`splitting_by`]'s. Different multipliers may repeat a
/// partition. Stops after `limit` splittings.
pub fn find_splittings(n: u32, q: u64, limit: Option<usize>) -> Result<Vec<Splitting>, DuadicError> {
    let cs = cyclotomic_cosets(n, q)?;
    let cap = limit.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for a in 1..n as u64 {
        let Some(orbits) = even_orbits(&cs, a) else {
            continue;
        };
        let count: u64 = if orbits.len() >= 63 { u64::MAX } else { 1 << orbits.len() };
        for flips in 0..count {
            if out.len() >= cap {
                return Ok(out);
            }
            if out.len() >= SPLITTING_ENUMERATION_CAP {
                return Err(DuadicError::TooManySplittings);
            }
            out.push(assemble(&cs, &orbits, flips, a)?);
        }
    }
    Ok(out)
}

/// Distinct unordered partitions among `find_splittings(n, q, None)`, in
/// first-seen order.
pub fn distinct_splittings(n: u32, q: u64) -> Result<Vec<Splitting>, DuadicError> {
    let mut seen = BTreeSet::new();
    Ok(find_splittings(n, q, None)?
        .into_iter()
        .filter(|s| seen.insert(s.id()))
        .collect())
}

/// The four duadic codes of a splitting: odd-like `D_i` with defining set
/// `S_i` and even-like `C_i` with defining set `S_i u {0}`.
#[derive(Debug, Clone)]
pub struct DuadicQuartet {
    splitting: Splitting,
    d: [CyclicCode; 2],
    c: [CyclicCode; 2],
}

impl DuadicQuartet {
    pub fn splitting(&self) -> &Splitting {
        &self.splitting
    }

    pub fn odd_like(&self, i: usize) -> &CyclicCode {
        &self.d[i % 2]
    }

    pub fn even_like(&self, i: usize) -> &CyclicCode {
        &self.c[i % 2]
    }

    pub fn d0(&self) -> &CyclicCode {
        &self.d[0]
    }

    pub fn d1(&self) -> &CyclicCode {
        &self.d[1]
    }

    pub fn c0(&self) -> &CyclicCode {
        &self.c[0]
    }

    pub fn c1(&self) -> &CyclicCode {
        &self.c[1]
    }

    pub fn field(&self) -> &Arc<FieldDesc> {
        self.d[0].field()
    }

    /// The quartet of the swapped splitting.
    pub fn swapped(&self) -> DuadicQuartet {
        DuadicQuartet {
            splitting: self.splitting.swapped(),
            d: [self.d[1].clone(), self.d[0].clone()],
            c: [self.c[1].clone(), self.c[0].clone()],
        }
    }
}

pub fn build_quartet(s: &Splitting, field: Arc<FieldDesc>) -> Result<DuadicQuartet, DuadicError> {
    if field.order() as u64 != s.q {
        return Err(DuadicError::FieldMismatch {
            splitting: s.q,
            field: field.order() as u64,
        });
    }
    let ctx = CyclotomicContext::new(s.n, field)?;
    build_quartet_in(&ctx, s)
}

/// Like [`build_quartet`] but reusing an existing context.
pub fn build_quartet_in(ctx: &Arc<CyclotomicContext>, s: &Splitting) -> Result<DuadicQuartet, DuadicError> {
    if ctx.field().order() as u64 != s.q || ctx.n() != s.n {
        return Err(DuadicError::FieldMismatch {
            splitting: s.q,
            field: ctx.field().order() as u64,
        });
    }
    let (t0, t1) = s.defining_sets()?;
    let d = [ctx.code(&t0)?, ctx.code(&t1)?];
    let c = [ctx.code(&t0.with_zero())?, ctx.code(&t1.with_zero())?];
    let n = s.n as usize;
    for i in 0..2 {
        let fail = |m: String| Err(DuadicError::QuartetInvariant(m));
        if d[i].k() != n.div_ceil(2) || c[i].k() != (n - 1) / 2 {
            return fail(format!("dimensions of D{i}, C{i} are {}, {}", d[i].k(), c[i].k()));
        }
        if !c[i].is_subcode_of(&d[i]) {
            return fail(format!("C{i} is not contained in D{i}"));
        }
        if c[i].has_odd_like_words() {
            return fail(format!("C{i} has an odd-like word"));
        }
        if !d[i].has_odd_like_words() {
            return fail(format!("D{i} has no odd-like word"));
        }
    }
    Ok(DuadicQuartet {
        splitting: s.clone(),
        d,
        c,
    })
}

/// Outcome of a single bound assertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundCheck {
    Holds,
    Violated,
    /// The distances are intervals that do not decide the assertion.
    Undetermined,
    NotApplicable,
}

/// Square-root bound assertions for a quartet's odd-like weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u32,
    /// `d_o(D0) = d_o(D1)`.
    pub equal_odd_like_weights: BoundCheck,
    /// `d_o^2 >= n`.
    pub square_root: BoundCheck,
    /// `d_o^2 - d_o + 1 >= n`, applicable when `mu_{-1}` gives the splitting.
    pub square_root_mu_minus_one: BoundCheck,
    pub mu_minus_one_splits: bool,
}

impl BoundReport {
    pub fn checks(&self) -> [(&'static str, BoundCheck); 3] {
        [
            ("equal_odd_like_weights", self.equal_odd_like_weights),
            ("square_root", self.square_root),
            ("square_root_mu_minus_one", self.square_root_mu_minus_one),
        ]
    }

    pub fn violations(&self) -> Vec<&'static str> {
        self.checks()
            .into_iter()
            .filter(|(_, c)| *c == BoundCheck::Violated)
            .map(|(name, _)| name)
            .collect()
    }

    pub fn is_violated(&self) -> bool {
        !self.violations().is_empty()
    }
}

fn monotone_check(lo: u64, hi: u64, holds: impl Fn(u64) -> bool) -> BoundCheck {
    // Both quantities used here are increasing in d for d >= 1.
    if holds(lo) {
        BoundCheck::Holds
    } else if !holds(hi) {
        BoundCheck::Violated
    } else {
        BoundCheck::Undetermined
    }
}

/// Checks the square-root bound for a splitting given the computed odd-like
/// weights of `D0` and `D1`. Interval inputs give `Undetermined` wherever the
/// interval does not decide.
pub fn check_square_root_bound(s: &Splitting, d0: &DistanceResult, d1: &DistanceResult) -> BoundReport {
    let n = s.n as u64;
    let equal = match (d0.exact(), d1.exact()) {
        (Some(a), Some(b)) if a == b => BoundCheck::Holds,
        (Some(_), Some(_)) => BoundCheck::Violated,
        _ if d0.hi() < d1.lo() || d1.hi() < d0.lo() => BoundCheck::Violated,
        _ => BoundCheck::Undetermined,
    };
    // The true d_o lies in both intervals.
    let lo = d0.lo().max(d1.lo());
    let hi = d0.hi().min(d1.hi()).max(lo);
    let square_root = monotone_check(lo, hi, |d| d * d >= n);
    let mu_minus_one_splits = s.is_given_by(n - 1);
    let square_root_mu_minus_one = if mu_minus_one_splits {
        monotone_check(lo, hi, |d| d * d - d + 1 >= n)
    } else {
        BoundCheck::NotApplicable
    };
    BoundReport {
        n: s.n,
        equal_odd_like_weights: equal,
        square_root,
        square_root_mu_minus_one,
        mu_minus_one_splits,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    Css,
    Hermitian,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Css => "css",
            Construction::Hermitian => "hermitian",
        })
    }
}

/// Per-prime data of a degeneracy certificate for `p^m || n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeData {
    pub p: u64,
    pub m: u32,
    /// `ord_p(q)` for CSS, `ord_p(q^2)` for Hermitian.
    pub t: u64,
    /// `p^z || Q^t - 1` with `Q = q` (CSS) or `q^2` (Hermitian).
    pub z: u32,
    pub p_pow_z: u64,
    pub q_is_residue: bool,
    /// `m > 2z`.
    pub multiplicity_exceeds: bool,
    /// `m >= 2z`.
    pub multiplicity_at_least: bool,
    /// `p = -1 (mod 4)`.
    pub p_is_minus_one_mod_4: bool,
}

/// Aggregate hypothesis flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions {
    /// q is a square modulo every prime divisor.
    pub q_residue_all: bool,
    /// `m_i > 2 z_i` for every prime.
    pub multiplicity_all: bool,
    /// `m_i >= 2 z_i` for every prime: the weaker reading covering the
    /// `7^m, m >= 2` family.
    pub relaxed_multiplicity_all: bool,
    /// Every prime divisor is `-1 (mod 4)`.
    pub minus_one_mod_4_all: bool,
    /// `ord_n(q)` is odd; Hermitian only.
    pub order_odd: Option<bool>,
    /// All hypotheses of the relevant degeneracy theorem hold.
    pub predicts: bool,
}

/// Predicted purity bound for the degenerate duadic families. Reports which
/// hypotheses hold; it makes no degeneracy claim by itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyCertificate {
    pub n: u32,
    pub q: u64,
    pub construction: Construction,
    /// `ord_n(q)`.
    pub order: u64,
    pub primes: Vec<PrimeData>,
    /// `min_i p_i^{z_i}`; absent for `n = 1`.
    pub purity_bound: Option<u64>,
    pub conditions: Conditions,
}

pub fn degeneracy_certificate(n: u32, q: u64, construction: Construction) -> Result<DegeneracyCertificate, DuadicError> {
    cyclotomic_cosets(n, q)?;
    let big_q = match construction {
        Construction::Css => q,
        Construction::Hermitian => q.checked_mul(q).ok_or(ArithError::ValuationOverflow { p: 0, q, t: 2 })?,
    };
    let mut primes = Vec::new();
    for (p, m) in arith::factorize(n as u64)? {
        let t = arith::ord_mod(p, big_q)?;
        let z = arith::valuation_of_power_minus_one(p, big_q, t)?;
        let p_pow_z = p.pow(z);
        primes.push(PrimeData {
            p,
            m,
            t,
            z,
            p_pow_z,
            q_is_residue: !arith::square_roots(q, p)?.is_empty(),
            multiplicity_exceeds: m > 2 * z,
            multiplicity_at_least: m >= 2 * z,
            p_is_minus_one_mod_4: p % 4 == 3,
        });
    }
    let all = |f: fn(&PrimeData) -> bool| !primes.is_empty() && primes.iter().all(f);
    let q_residue_all = all(|d| d.q_is_residue);
    let multiplicity_all = all(|d| d.multiplicity_exceeds);
    let relaxed_multiplicity_all = all(|d| d.multiplicity_at_least);
    let minus_one_mod_4_all = all(|d| d.p_is_minus_one_mod_4);
    let order = arith::ord_mod(n as u64, q)?;
    let order_odd = match construction {
        Construction::Css => None,
        Construction::Hermitian => Some(order % 2 == 1),
    };
    let predicts = match construction {
        Construction::Css => q_residue_all && multiplicity_all,
        Construction::Hermitian => order_odd == Some(true) && minus_one_mod_4_all && multiplicity_all,
    };
    Ok(DegeneracyCertificate {
        n,
        q,
        construction,
        order,
        purity_bound: primes.iter().map(|d| d.p_pow_z).min(),
        primes,
        conditions: Conditions {
            q_residue_all,
            multiplicity_all,
            relaxed_multiplicity_all,
            minus_one_mod_4_all,
            order_odd,
            predicts,
        },
    })
}
