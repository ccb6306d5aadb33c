//! Arithmetic functions on positive integers.
//!
//! Everything here is exact and works on `u64`. Overflow is reported as
//! [`Error::Overflow`] rather than wrapping.

use crate::error::{Error, Result};

fn nonzero(n: u64) -> Result<u64> {
    if n == 0 {
        Err(Error::Zero)
    } else {
        Ok(n)
    }
}

/// Greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// The prime factorization of a positive integer.
///
/// Primes are stored in strictly increasing order, each with an exponent of
/// at least one. The factorization of 1 is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Number of distinct prime factors.
    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }

    /// Exponent of `p` in `n`; zero when `p` does not divide `n`.
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, a)| a)
    }

    pub fn smallest_prime(&self) -> Option<u64> {
        self.factors.first().map(|&(p, _)| p)
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, a)| a == 1)
    }

    pub fn euler_phi(&self) -> u64 {
        // Each factor p^(a-1) (p - 1) divides n, so the product cannot overflow.
        self.factors
            .iter()
            .map(|&(p, a)| p.pow(a - 1) * (p - 1))
            .product()
    }

    pub fn mobius(&self) -> i64 {
        if self.is_square_free() {
            if self.factors.len() % 2 == 0 {
                1
            } else {
                -1
            }
        } else {
            0
        }
    }

    /// All divisors of `n`, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, a) in &self.factors {
            let len = out.len();
            let mut pk = 1u64;
            for _ in 0..a {
                pk *= p;
                for i in 0..len {
                    out.push(out[i] * pk);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Factorizes `n` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    let n = nonzero(n)?;
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.checked_mul(p).is_some_and(|pp| pp <= rest) {
        if rest % p == 0 {
            let mut a = 0;
            while rest % p == 0 {
                rest /= p;
                a += 1;
            }
            factors.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).is_ok_and(|f| f.factors == [(n, 1)])
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?.euler_phi())
}

/// The Möbius function.
pub fn mobius(n: u64) -> Result<i64> {
    Ok(factorize(n)?.mobius())
}

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.divisors())
}

/// The Ramanujan sum `c(k, n)`, the sum of the `k`-th powers of the
/// primitive `n`-th roots of unity.
///
/// Evaluated through `c(k, n) = μ(t) φ(n) / φ(t)` with `t = n / gcd(k, n)`.
/// `k` is reduced modulo `n` first.
pub fn ramanujan(k: u64, n: u64) -> Result<i64> {
    let n = nonzero(n)?;
    let t = n / gcd(k % n, n);
    ramanujan_from_parts(euler_phi(n)?, t)
}

fn ramanujan_from_parts(phi_n: u64, t: u64) -> Result<i64> {
    let ft = factorize(t)?;
    let mu = ft.mobius();
    if mu == 0 {
        return Ok(0);
    }
    let phi_t = ft.euler_phi();
    if phi_n % phi_t != 0 {
        return Err(Error::Inconsistent(format!(
            "phi({t}) = {phi_t} does not divide {phi_n}"
        )));
    }
    let q = i64::try_from(phi_n / phi_t).map_err(|_| Error::Overflow("ramanujan"))?;
    Ok(mu * q)
}

/// One full period `c(0, m), c(1, m), ..., c(m - 1, m)`.
///
/// The value depends on `k` only through `gcd(k, m)`, so it is evaluated once
/// per divisor of `m`.
pub fn ramanujan_period(m: u64) -> Result<Vec<i64>> {
    let fm = factorize(m)?;
    let phi_m = fm.euler_phi();
    let divs = fm.divisors();
    let by_divisor = divs
        .iter()
        .map(|&g| ramanujan_from_parts(phi_m, m / g))
        .collect::<Result<Vec<_>>>()?;
    let len = usize::try_from(m).map_err(|_| Error::Overflow("ramanujan_period"))?;
    let mut out = Vec::with_capacity(len);
    for k in 0..m {
        let g = gcd(k, m);
        // divs is sorted and always contains g
        let idx = divs.binary_search(&g).expect("gcd divides m");
        out.push(by_divisor[idx]);
    }
    Ok(out)
}
