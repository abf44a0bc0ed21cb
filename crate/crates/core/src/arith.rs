//! Integer number theory used throughout: gcd, primality, factorization,
//! multiplicative orders, quadratic residues and exact p-adic valuations.

use thiserror::Error;

/// Largest integer accepted by [`factorize`].
pub const FACTOR_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{a} is not coprime to {n}")]
    NotCoprime { a: u64, n: u64 },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("{0} exceeds the trial-division cap {FACTOR_CAP}")]
    FactorCap(u64),
    #[error("valuation of {p} in {q}^{t}-1 does not fit in 64-bit arithmetic")]
    ValuationOverflow { p: u64, q: u64, t: u64 },
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
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

/// `base^exp mod modulus` without overflow for moduli below 2^64.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `n`.
pub fn mod_inv(a: u64, n: u64) -> Result<u64, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroModulus);
    }
    if n == 1 {
        return Ok(0);
    }
    let (mut old_r, mut r) = (a as i128 % n as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return Err(ArithError::NotCoprime { a, n });
    }
    Ok(old_s.rem_euclid(n as i128) as u64)
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>, ArithError> {
    if n > FACTOR_CAP {
        return Err(ArithError::FactorCap(n));
    }
    Ok(trial_division(n))
}

/// Trial division without the cap. Used internally for numbers known to be
/// small (multiplicative group orders of table-backed fields).
pub(crate) fn trial_division(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Multiplicative order of `a` modulo `n`: the least `t >= 1` with `a^t = 1 (mod n)`.
pub fn ord_mod(n: u64, a: u64) -> Result<u64, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroModulus);
    }
    if gcd(a % n, n) != 1 && n != 1 {
        return Err(ArithError::NotCoprime { a, n });
    }
    if n == 1 {
        return Ok(1);
    }
    let a = a % n;
    let mut t = 1;
    let mut x = a;
    while x != 1 {
        x = ((x as u128 * a as u128) % n as u128) as u64;
        t += 1;
    }
    Ok(t)
}

/// All `x` in `[0, n)` with `x^2 = q (mod n)`, ascending, found exhaustively.
pub fn square_roots(q: u64, n: u64) -> Result<Vec<u64>, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroModulus);
    }
    if gcd(q % n, n) != 1 && n != 1 {
        return Err(ArithError::NotCoprime { a: q, n });
    }
    let target = q % n;
    Ok((0..n)
        .filter(|&x| (x as u128 * x as u128 % n as u128) as u64 == target)
        .collect())
}

/// Exact valuation `z` with `p^z || q^t - 1`, computed by modular powering.
pub fn valuation_of_power_minus_one(p: u64, q: u64, t: u64) -> Result<u32, ArithError> {
    let mut z = 0u32;
    let mut pz: u64 = 1;
    loop {
        let Some(next) = pz.checked_mul(p).filter(|v| *v <= u64::MAX / 4) else {
            return Err(ArithError::ValuationOverflow { p, q, t });
        };
        if mod_pow(q, t, next) != 1 % next {
            return Ok(z);
        }
        pz = next;
        z += 1;
    }
}
