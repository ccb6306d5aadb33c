//! Brute-force references used by the integration tests. Nothing here calls
//! into the arithmetic or spectral code paths it is used to check.

#![allow(dead_code)]

use std::f64::consts::TAU;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Totient by counting coprime residues.
pub fn phi_by_count(n: u64) -> u64 {
    (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64
}

/// Möbius by trial division, written independently of the library.
pub fn mobius_naive(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors_naive(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// `c(k, n)` as the exponential sum over units; only the real part
/// survives.
pub fn ramanujan_exp_sum(k: u64, n: u64) -> f64 {
    (1..=n)
        .filter(|&a| gcd(a, n) == 1)
        .map(|a| (TAU * ((a * k) % n) as f64 / n as f64).cos())
        .sum()
}

/// Eigenvalues of a circulant from its first row, `λ_j = Σ_i a_i ω^{ij}`,
/// evaluated as full complex sums. Returns (real, imaginary) parts.
pub fn circulant_eigenvalues(first_row: &[bool]) -> Vec<(f64, f64)> {
    let n = first_row.len();
    (0..n)
        .map(|j| {
            let mut re = 0.0;
            let mut im = 0.0;
            for (i, &a) in first_row.iter().enumerate() {
                if a {
                    let t = TAU * ((i * j) % n) as f64 / n as f64;
                    re += t.cos();
                    im += t.sin();
                }
            }
            (re, im)
        })
        .collect()
}

/// Number of 4-cycles: each cycle is counted once per diagonal pair, and
/// each vertex pair `{a, c}` with `t` common neighbours closes `C(t, 2)`
/// cycles through it.
pub fn count_quadrangles(adj: &[Vec<bool>]) -> u64 {
    let n = adj.len();
    let mut total = 0u64;
    for a in 0..n {
        for c in a + 1..n {
            let t = (0..n).filter(|&b| adj[a][b] && adj[c][b]).count() as u64;
            total += t * t.saturating_sub(1) / 2;
        }
    }
    total / 2
}

/// Adjacency built straight from the gcd rule.
pub fn adjacency_by_gcd(n: u64, ds: &[u64]) -> Vec<Vec<bool>> {
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| a != b && ds.contains(&gcd((a + n - b) % n, n)))
                .collect()
        })
        .collect()
}

/// All nonempty subsets of the proper divisors of `n`.
pub fn all_divisor_sets(n: u64) -> Vec<Vec<u64>> {
    let divs: Vec<u64> = divisors_naive(n).into_iter().filter(|&d| d < n).collect();
    (1u64..(1 << divs.len()))
        .map(|mask| {
            (0..divs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| divs[i])
                .collect()
        })
        .collect()
}

pub fn smallest_prime(n: u64) -> u64 {
    (2..=n).find(|p| n % p == 0).expect("n >= 2")
}

pub fn is_square_free(n: u64) -> bool {
    (2..=n).take_while(|p| p * p <= n).all(|p| n % (p * p) != 0)
}

pub fn prime_factors(n: u64) -> Vec<u64> {
    (2..=n)
        .filter(|&p| n % p == 0 && (2..p).all(|q| p % q != 0))
        .collect()
}

/// Largest `|λ_j|` over `j ≥ 1`.
pub fn max_abs_nontrivial(values: &[i64]) -> u64 {
    values[1..]
        .iter()
        .map(|v| v.unsigned_abs())
        .max()
        .unwrap_or(0)
}
