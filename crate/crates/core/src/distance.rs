//! Exact and interval minimum-weight computation.
//!
//! Two engines share one packed word representation:
//!
//! - full enumeration walks all `q^k` codewords along a p-ary Gray code over
//!   an additive basis of the code, so each step is a single vector addition;
//! - support search tests every candidate of weight `w = 1, 2, ...` against
//!   the check matrix while the candidate count fits the budget.
//!
//! Every problem has the form "minimum weight of a codeword `x` with
//! `F x != 0`", where the optional filter matrix `F` selects odd-like words
//! (`F` is the all-ones row) or words outside a subcode (`F` is the
//! subcode's check matrix).

use crate::cyclic::CyclicCode;
use crate::galois::FieldDesc;
use crate::linalg::Matrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 26;
pub const DEFAULT_SUPPORT_BUDGET: u64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("the zero code has no minimum weight")]
    ZeroCode,
    #[error("budgets and worker count must be positive")]
    BadBudget,
    #[error("code has no odd-like codewords")]
    NoOddLike,
    #[error("subcode is not contained in the code")]
    NotContained,
    #[error("set difference is empty")]
    EmptyDifference,
    #[error("enumeration needs {needed} codewords, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("matrix shapes do not match")]
    ShapeMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResultKind {
    Exact,
    /// Only `lo` is certified; `hi` is the trivial bound `n`.
    LowerBound,
    /// Only `hi` is certified; `lo` is the trivial bound 1.
    UpperBound,
    Interval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    FullEnumeration,
    SupportSearch,
    DefiningSetTheory,
}

/// An exact minimum weight or a certified interval containing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub kind: ResultKind,
    pub lo: u64,
    pub hi: u64,
    pub value: Option<u64>,
    pub method: Method,
    /// Codewords (enumeration) or candidates (support search) examined.
    pub work: u64,
}

impl DistanceResult {
    pub fn new_exact(value: u64, method: Method, work: u64) -> Self {
        DistanceResult {
            kind: ResultKind::Exact,
            lo: value,
            hi: value,
            value: Some(value),
            method,
            work,
        }
    }

    /// `lo <= d <= hi`; collapses to exact when `lo == hi`.
    pub fn new_interval(lo: u64, hi: u64, n: u64, method: Method, work: u64) -> Self {
        assert!(1 <= lo && lo <= hi, "invalid interval [{lo}, {hi}]");
        if lo == hi {
            return DistanceResult::new_exact(lo, method, work);
        }
        let kind = match (lo > 1, hi < n) {
            (true, true) => ResultKind::Interval,
            (true, false) => ResultKind::LowerBound,
            (false, true) => ResultKind::UpperBound,
            (false, false) => ResultKind::Interval,
        };
        DistanceResult {
            kind,
            lo,
            hi,
            value: None,
            method,
            work,
        }
    }

    /// Shorthand used in tests and reports.
    pub fn exact_value(v: u64) -> Self {
        DistanceResult::new_exact(v, Method::FullEnumeration, 0)
    }

    pub fn interval_value(lo: u64, hi: u64) -> Self {
        DistanceResult::new_interval(lo, hi, u64::MAX, Method::SupportSearch, 0)
    }

    pub fn exact(&self) -> Option<u64> {
        self.value
    }

    pub fn is_exact(&self) -> bool {
        self.kind == ResultKind::Exact
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    /// Result for the minimum over the union of two sets, given results for
    /// each set.
    pub fn min_of(&self, other: &DistanceResult) -> DistanceResult {
        let lo = self.lo.min(other.lo);
        let hi = self.hi.min(other.hi);
        let method = if self.method == other.method || self.hi <= other.hi {
            self.method
        } else {
            other.method
        };
        let work = self.work + other.work;
        if lo == hi {
            return DistanceResult::new_exact(lo, method, work);
        }
        DistanceResult {
            kind: ResultKind::Interval,
            lo,
            hi,
            value: None,
            method,
            work,
        }
    }
}

impl std::fmt::Display for DistanceResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.value {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "[{}, {}]", self.lo, self.hi),
        }
    }
}

/// Work limits for the two engines and the worker count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest `q^k` enumerated in full.
    pub enumeration: u64,
    /// Largest cumulative candidate count for support search.
    pub support: u64,
    pub workers: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enumeration: DEFAULT_ENUMERATION_BUDGET,
            support: DEFAULT_SUPPORT_BUDGET,
            workers: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        }
    }
}

impl Budget {
    pub fn with_workers(self, workers: usize) -> Self {
        Budget { workers, ..self }
    }

    fn validate(&self) -> Result<(), DistanceError> {
        if self.enumeration == 0 || self.support == 0 || self.workers == 0 {
            return Err(DistanceError::BadBudget);
        }
        Ok(())
    }

    fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .expect("thread pool")
    }
}

/// Packed vectors made of a primary segment (codeword coordinates or check
/// syndrome) and a secondary segment (filter syndrome).
trait Packing: Sync {
    type W: Clone + Send + Sync;
    fn zero(&self) -> Self::W;
    fn pack(&self, primary: &[u32], secondary: &[u32]) -> Self::W;
    fn add_assign(&self, a: &mut Self::W, b: &Self::W);
    fn weight(&self, w: &Self::W) -> u32;
    fn primary_is_zero(&self, w: &Self::W) -> bool;
    fn secondary_is_zero(&self, w: &Self::W) -> bool;
}

/// Characteristic 2: one bitset per coordinate bit. Addition is XOR.
struct BitPlanes {
    planes: usize,
    wp: usize,
    ws: usize,
}

impl BitPlanes {
    fn new(m: usize, np: usize, ns: usize) -> Self {
        BitPlanes {
            planes: m,
            wp: np.div_ceil(64),
            ws: ns.div_ceil(64),
        }
    }

    fn stride(&self) -> usize {
        self.wp + self.ws
    }
}

impl Packing for BitPlanes {
    type W = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.planes * self.stride()]
    }

    fn pack(&self, primary: &[u32], secondary: &[u32]) -> Vec<u64> {
        let s = self.stride();
        let mut w = self.zero();
        for b in 0..self.planes {
            for (i, &x) in primary.iter().enumerate() {
                w[b * s + i / 64] |= (((x >> b) & 1) as u64) << (i % 64);
            }
            for (i, &x) in secondary.iter().enumerate() {
                w[b * s + self.wp + i / 64] |= (((x >> b) & 1) as u64) << (i % 64);
            }
        }
        w
    }

    #[inline]
    fn add_assign(&self, a: &mut Vec<u64>, b: &Vec<u64>) {
        for (x, y) in a.iter_mut().zip(b) {
            *x ^= y;
        }
    }

    #[inline]
    fn weight(&self, w: &Vec<u64>) -> u32 {
        let s = self.stride();
        (0..self.wp)
            .map(|i| (0..self.planes).fold(0u64, |acc, b| acc | w[b * s + i]).count_ones())
            .sum()
    }

    #[inline]
    fn primary_is_zero(&self, w: &Vec<u64>) -> bool {
        let s = self.stride();
        (0..self.planes).all(|b| w[b * s..b * s + self.wp].iter().all(|&x| x == 0))
    }

    #[inline]
    fn secondary_is_zero(&self, w: &Vec<u64>) -> bool {
        let s = self.stride();
        (0..self.planes).all(|b| w[b * s + self.wp..(b + 1) * s].iter().all(|&x| x == 0))
    }
}

/// Odd characteristic: one byte per symbol with a full addition table.
struct Symbols {
    q: usize,
    add: Vec<u8>,
    np: usize,
    ns: usize,
}

impl Symbols {
    fn new(f: &FieldDesc, np: usize, ns: usize) -> Self {
        let q = f.order() as usize;
        assert!(q <= 256, "symbol packing needs q <= 256");
        let mut add = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = f.add(a as u32, b as u32) as u8;
            }
        }
        Symbols { q, add, np, ns }
    }
}

impl Packing for Symbols {
    type W = Vec<u8>;

    fn zero(&self) -> Vec<u8> {
        vec![0; self.np + self.ns]
    }

    fn pack(&self, primary: &[u32], secondary: &[u32]) -> Vec<u8> {
        primary.iter().chain(secondary).map(|&x| x as u8).collect()
    }

    #[inline]
    fn add_assign(&self, a: &mut Vec<u8>, b: &Vec<u8>) {
        for (x, &y) in a.iter_mut().zip(b) {
            *x = self.add[*x as usize * self.q + y as usize];
        }
    }

    #[inline]
    fn weight(&self, w: &Vec<u8>) -> u32 {
        w[..self.np].iter().filter(|&&x| x != 0).count() as u32
    }

    #[inline]
    fn primary_is_zero(&self, w: &Vec<u8>) -> bool {
        w[..self.np].iter().all(|&x| x == 0)
    }

    #[inline]
    fn secondary_is_zero(&self, w: &Vec<u8>) -> bool {
        w[self.np..].iter().all(|&x| x == 0)
    }
}

/// A minimum-weight problem over an explicit linear code.
pub struct LinearProblem<'a> {
    pub field: &'a Arc<FieldDesc>,
    /// Full-rank generator matrix.
    pub generator: &'a Matrix,
    /// Check matrix of the same code.
    pub check: &'a Matrix,
    /// Codewords count only when `filter * x != 0`.
    pub filter: Option<&'a Matrix>,
}

impl LinearProblem<'_> {
    fn n(&self) -> usize {
        self.generator.cols()
    }

    fn filter_syndrome(&self, x: &[u32]) -> Vec<u32> {
        self.filter
            .map(|f| f.mul_vec(self.field, x))
            .unwrap_or_default()
    }

    fn passes(&self, x: &[u32]) -> bool {
        match self.filter {
            None => true,
            Some(f) => f.mul_vec(self.field, x).iter().any(|&s| s != 0),
        }
    }

    fn check_shapes(&self) -> Result<(), DistanceError> {
        let n = self.n();
        if self.check.cols() != n || self.filter.is_some_and(|f| f.cols() != n) {
            return Err(DistanceError::ShapeMismatch);
        }
        Ok(())
    }

    /// Additive basis `beta_j * row_i` over the prime field: `k * m` vectors,
    /// ordered row-major (all `beta_j` for row 0 first).
    fn additive_basis(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let mut out = Vec::new();
        for r in 0..self.generator.rows() {
            for j in 0..f.m() {
                let beta = f.p().pow(j);
                out.push(self.generator.row(r).iter().map(|&x| f.mul(beta, x)).collect());
            }
        }
        out
    }

    /// Smallest weight among generator rows and the all-ones word that pass
    /// the filter; an upper bound on the answer.
    fn witness_bound(&self) -> Option<u64> {
        let n = self.n();
        let ones = vec![1u32; n];
        let ones_in_code = self.check.mul_vec(self.field, &ones).iter().all(|&s| s == 0);
        (0..self.generator.rows())
            .map(|r| self.generator.row(r).to_vec())
            .chain(ones_in_code.then_some(ones))
            .filter(|x| self.passes(x))
            .map(|x| x.iter().filter(|&&c| c != 0).count() as u64)
            .min()
    }

    fn message_space(&self) -> Option<u64> {
        (self.field.order() as u64).checked_pow(self.generator.rows() as u32)
    }

    /// Exact minimum by full enumeration, or a support-search interval when
    /// `q^k` exceeds the enumeration budget.
    pub fn solve(&self, budget: &Budget) -> Result<DistanceResult, DistanceError> {
        budget.validate()?;
        self.check_shapes()?;
        if self.generator.rows() == 0 {
            return Err(DistanceError::ZeroCode);
        }
        let hi = self.witness_bound().ok_or(DistanceError::EmptyDifference)?;
        match self.message_space() {
            Some(total) if total <= budget.enumeration => self.enumerate_min(budget),
            _ => Ok(self.support_search(budget, hi)),
        }
    }

    /// Full enumeration regardless of the support-search alternative.
    pub fn enumerate_min(&self, budget: &Budget) -> Result<DistanceResult, DistanceError> {
        budget.validate()?;
        self.check_shapes()?;
        let total = self.message_space().filter(|&t| t <= budget.enumeration).ok_or_else(|| {
            DistanceError::BudgetExceeded {
                needed: format!("{}^{}", self.field.order(), self.generator.rows()),
                budget: budget.enumeration,
            }
        })?;
        if total == 1 {
            return Err(DistanceError::ZeroCode);
        }
        let min = with_packing(self.field, self.n(), self.filter.map_or(0, |f| f.rows()), |pk| {
            pk.enumerate(self, budget, Visit::Min)
        });
        match min.min {
            Some(w) => Ok(DistanceResult::new_exact(w as u64, Method::FullEnumeration, total - 1)),
            None => Err(if self.filter.is_some() {
                DistanceError::EmptyDifference
            } else {
                DistanceError::ZeroCode
            }),
        }
    }

    /// Histogram of codeword weights, including the zero word.
    pub fn weight_distribution(&self, budget: &Budget) -> Result<Vec<u64>, DistanceError> {
        budget.validate()?;
        self.check_shapes()?;
        let n = self.n();
        let Some(total) = self.message_space().filter(|&t| t <= budget.enumeration) else {
            return Err(DistanceError::BudgetExceeded {
                needed: format!("{}^{}", self.field.order(), self.generator.rows()),
                budget: budget.enumeration,
            });
        };
        let mut hist = if total == 1 {
            vec![0; n + 1]
        } else {
            with_packing(self.field, n, 0, |pk| pk.enumerate(self, budget, Visit::Histogram))
                .hist
                .expect("histogram requested")
        };
        hist[0] += 1;
        Ok(hist)
    }

    fn enumerate_packed<P: Packing>(&self, pk: &P, budget: &Budget, visit: Visit) -> Tally {
        let n = self.n();
        let basis: Vec<P::W> = self
            .additive_basis()
            .iter()
            .map(|v| pk.pack(v, &self.filter_syndrome(v)))
            .collect();
        let p = self.field.p() as u64;
        let total = self.message_space().expect("checked by caller");
        let filtered = self.filter.is_some();
        let ranges = split_range(1, total, budget.workers);
        budget.pool().install(|| {
            ranges
                .into_par_iter()
                .map(|(s, e)| {
                    let mut tally = Tally::new(visit, n);
                    gray_walk(pk, &basis, p, s, e, |w| tally.record(pk, w, filtered));
                    tally
                })
                .reduce(|| Tally::new(visit, n), Tally::merge)
        })
    }

    /// Tests all candidates of weight 1, 2, ... whose cumulative count fits
    /// the support budget. A hit at weight `w` is exact; otherwise the
    /// result is `[last exhausted weight + 1, hi]`.
    fn support_search(&self, budget: &Budget, hi: u64) -> DistanceResult {
        let n = self.n();
        let units = self.field.order() as u64 - 1;
        let mut work: u64 = 0;
        let mut exhausted = 0u64;
        for w in 1..=n.min(hi as usize) {
            let Some(count) = binomial(n as u64, w as u64).and_then(|c| c.checked_mul(units.checked_pow(w as u32 - 1)?))
            else {
                break;
            };
            if work.saturating_add(count) > budget.support {
                break;
            }
            work += count;
            let hit = with_packing(
                self.field,
                self.check.rows(),
                self.filter.map_or(0, |f| f.rows()),
                |pk| pk.support(self, w, budget),
            );
            if hit {
                return DistanceResult::new_exact(w as u64, Method::SupportSearch, work);
            }
            exhausted = w as u64;
        }
        DistanceResult::new_interval(exhausted + 1, hi, n as u64, Method::SupportSearch, work)
    }

    fn support_level<P: Packing>(&self, pk: &P, w: usize, budget: &Budget) -> bool {
        let f = self.field;
        let n = self.n();
        let ht = self.check.transpose();
        let ft = self.filter.map(|m| m.transpose());
        let columns: Vec<Vec<P::W>> = (0..n)
            .map(|i| {
                (1..f.order())
                    .map(|v| {
                        let h: Vec<u32> = ht.row(i).iter().map(|&x| f.mul(v, x)).collect();
                        let s: Vec<u32> = ft
                            .as_ref()
                            .map(|m| m.row(i).iter().map(|&x| f.mul(v, x)).collect())
                            .unwrap_or_default();
                        pk.pack(&h, &s)
                    })
                    .collect()
            })
            .collect();
        let filtered = self.filter.is_some();
        let hits: usize = budget.pool().install(|| {
            (0..=n - w)
                .into_par_iter()
                .map(|first| {
                    let mut stack = vec![columns[first][0].clone(); w];
                    count_hits(pk, &columns, n, w, 1, first, &mut stack, filtered)
                })
                .sum()
        });
        hits > 0
    }
}

#[allow(clippy::too_many_arguments)]
fn count_hits<P: Packing>(
    pk: &P,
    columns: &[Vec<P::W>],
    n: usize,
    w: usize,
    depth: usize,
    last: usize,
    stack: &mut Vec<P::W>,
    filtered: bool,
) -> usize {
    if depth == w {
        let word = &stack[w - 1];
        return usize::from(pk.primary_is_zero(word) && (!filtered || !pk.secondary_is_zero(word)));
    }
    let mut hits = 0;
    for pos in last + 1..=n - (w - depth) {
        for col in &columns[pos] {
            let mut next = stack[depth - 1].clone();
            pk.add_assign(&mut next, col);
            stack[depth] = next;
            hits += count_hits(pk, columns, n, w, depth + 1, pos, stack, filtered);
        }
    }
    hits
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

fn with_packing<R>(f: &FieldDesc, np: usize, ns: usize, run: impl FnOnce(&dyn PackedJob) -> R) -> R {
    if f.p() == 2 {
        run(&Adapter(BitPlanes::new(f.m() as usize, np, ns)))
    } else {
        run(&Adapter(Symbols::new(f, np, ns)))
    }
}

/// Object-safe bridge so callers can be written once for both packings.
trait PackedJob {
    fn enumerate(&self, problem: &LinearProblem<'_>, budget: &Budget, visit: Visit) -> Tally;
    fn support(&self, problem: &LinearProblem<'_>, w: usize, budget: &Budget) -> bool;
}

struct Adapter<P>(P);

impl<P: Packing> PackedJob for Adapter<P> {
    fn enumerate(&self, problem: &LinearProblem<'_>, budget: &Budget, visit: Visit) -> Tally {
        problem.enumerate_packed(&self.0, budget, visit)
    }

    fn support(&self, problem: &LinearProblem<'_>, w: usize, budget: &Budget) -> bool {
        problem.support_level(&self.0, w, budget)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Visit {
    Min,
    Histogram,
}

struct Tally {
    min: Option<u32>,
    hist: Option<Vec<u64>>,
}

impl Tally {
    fn new(visit: Visit, n: usize) -> Self {
        Tally {
            min: None,
            hist: (visit == Visit::Histogram).then(|| vec![0; n + 1]),
        }
    }

    #[inline]
    fn record<P: Packing>(&mut self, pk: &P, w: &P::W, filtered: bool) {
        if let Some(h) = &mut self.hist {
            h[pk.weight(w) as usize] += 1;
            return;
        }
        if filtered && pk.secondary_is_zero(w) {
            return;
        }
        let wt = pk.weight(w);
        if self.min.is_none_or(|m| wt < m) {
            self.min = Some(wt);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.min = match (self.min, other.min) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        if let (Some(a), Some(b)) = (&mut self.hist, other.hist) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
        self
    }
}

/// Contiguous ranges covering `[start, end)`.
fn split_range(start: u64, end: u64, workers: usize) -> Vec<(u64, u64)> {
    let len = end - start;
    let pieces = ((workers as u64) * 8).clamp(1, len.div_ceil(4096).max(1));
    let step = len.div_ceil(pieces);
    (0..pieces)
        .map(|i| (start + i * step, (start + (i + 1) * step).min(end)))
        .filter(|(s, e)| s < e)
        .collect()
}

/// Gray-code digits of index `i`: `g_j = d_j - d_{j+1} (mod p)`.
fn gray_digits(mut i: u64, p: u64, len: usize) -> Vec<u64> {
    let mut d = Vec::with_capacity(len + 1);
    for _ in 0..len {
        d.push(i % p);
        i /= p;
    }
    d.push(0);
    (0..len).map(|j| (d[j] + p - d[j + 1]) % p).collect()
}

/// Codeword at Gray index `i`.
fn gray_word<P: Packing>(pk: &P, basis: &[P::W], p: u64, i: u64) -> P::W {
    let mut w = pk.zero();
    for (j, g) in gray_digits(i, p, basis.len()).into_iter().enumerate() {
        for _ in 0..g {
            pk.add_assign(&mut w, &basis[j]);
        }
    }
    w
}

/// Visits the codewords with Gray indices `start..end`. Moving from index
/// `i` to `i + 1` adds the basis vector whose position is the number of
/// trailing `p - 1` digits of `i`.
fn gray_walk<P: Packing>(pk: &P, basis: &[P::W], p: u64, start: u64, end: u64, mut visit: impl FnMut(&P::W)) {
    let mut w = gray_word(pk, basis, p, start);
    let mut i = start;
    loop {
        visit(&w);
        if i + 1 >= end {
            break;
        }
        let j = if p == 2 {
            i.trailing_ones() as usize
        } else {
            let mut x = i;
            let mut j = 0;
            while x % p == p - 1 {
                x /= p;
                j += 1;
            }
            j
        };
        pk.add_assign(&mut w, &basis[j]);
        i += 1;
    }
}

fn code_problem<'a>(c: &'a CyclicCode, filter: Option<&'a Matrix>) -> LinearProblem<'a> {
    LinearProblem {
        field: c.field(),
        generator: c.generator_matrix(),
        check: c.check_matrix(),
        filter,
    }
}

fn all_ones(n: usize) -> Matrix {
    Matrix::from_rows(n, &[vec![1; n]])
}

/// Minimum nonzero weight of `c`.
pub fn min_weight(c: &CyclicCode, budget: &Budget) -> Result<DistanceResult, DistanceError> {
    if c.k() == 0 {
        return Err(DistanceError::ZeroCode);
    }
    code_problem(c, None).solve(budget)
}

/// Minimum weight of a codeword with nonzero coordinate sum.
pub fn min_odd_like_weight(d: &CyclicCode, budget: &Budget) -> Result<DistanceResult, DistanceError> {
    if d.k() == 0 {
        return Err(DistanceError::ZeroCode);
    }
    if !d.has_odd_like_words() {
        return Err(DistanceError::NoOddLike);
    }
    let ones = all_ones(d.n());
    code_problem(d, Some(&ones)).solve(budget)
}

/// Minimum weight of `D \ C` for a cyclic subcode `C` of `D`. When `C` is
/// the even-like subcode of `D` this is the odd-like minimum weight.
pub fn min_weight_diffset(d: &CyclicCode, c: &CyclicCode, budget: &Budget) -> Result<DistanceResult, DistanceError> {
    check_diffset(d, c)?;
    let t = d.defining_set();
    if !t.contains(0) && c.defining_set() == &t.with_zero() {
        return min_odd_like_weight(d, budget);
    }
    min_weight_diffset_syndrome(d, c, budget)
}

/// Minimum weight of `D \ C` with membership in `C` decided by `C`'s check
/// matrix.
pub fn min_weight_diffset_syndrome(
    d: &CyclicCode,
    c: &CyclicCode,
    budget: &Budget,
) -> Result<DistanceResult, DistanceError> {
    check_diffset(d, c)?;
    code_problem(d, Some(c.check_matrix())).solve(budget)
}

fn check_diffset(d: &CyclicCode, c: &CyclicCode) -> Result<(), DistanceError> {
    if !c.is_subcode_of(d) {
        return Err(DistanceError::NotContained);
    }
    if c.k() == d.k() {
        return Err(DistanceError::EmptyDifference);
    }
    Ok(())
}

/// Minimum weight of `D \ C` for explicit matrices: `D` given by generator
/// and check matrices, `C` by its check matrix.
pub fn min_weight_diffset_matrices(
    field: &Arc<FieldDesc>,
    d_generator: &Matrix,
    d_check: &Matrix,
    c_check: &Matrix,
    budget: &Budget,
) -> Result<DistanceResult, DistanceError> {
    LinearProblem {
        field,
        generator: d_generator,
        check: d_check,
        filter: Some(c_check),
    }
    .solve(budget)
}

/// Full weight histogram `hist[w]` including the zero word.
pub fn weight_distribution(c: &CyclicCode, budget: &Budget) -> Result<Vec<u64>, DistanceError> {
    code_problem(c, None).weight_distribution(budget)
}
