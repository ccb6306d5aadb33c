//! Integral circulant graphs `ICG_n(D)`.
//!
//! The vertex set is `Z_n` and `a ~ b` iff `gcd(a - b, n) ∈ D`, where `D` is
//! a nonempty set of proper divisors of `n`. The adjacency eigenvalues are
//! integers given by sums of Ramanujan sums:
//!
//! ```text
//! λ_k = Σ_{d ∈ D} c(k, n/d),   0 ≤ k < n
//! ```
//!
//! [`spectrum`] evaluates exactly that sum and never touches floating point.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numt::{self, gcd};

/// Largest `n` for which [`adjacency`] will build a dense matrix.
pub const ADJACENCY_LIMIT: u64 = 20_000;

/// A validated pair `(n, D)`.
///
/// `D` is kept sorted ascending, so two specs are equal exactly when they
/// name the same graph parameters. The derived ordering is by `n`, then
/// lexicographically by the divisor sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IcgSpec {
    n: u64,
    divisors: Vec<u64>,
}

impl IcgSpec {
    /// Validates `(n, D)`. The divisors may be given in any order but must
    /// be distinct proper divisors of `n`.
    pub fn new(n: u64, divisors: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("n must be at least 2, got {n}")));
        }
        let mut ds: Vec<u64> = divisors.into_iter().collect();
        if ds.is_empty() {
            return Err(Error::InvalidSpec("divisor set is empty".into()));
        }
        ds.sort_unstable();
        for w in ds.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidSpec(format!("duplicate divisor {}", w[0])));
            }
        }
        for &d in &ds {
            if d < 1 {
                return Err(Error::InvalidSpec("divisors must be at least 1".into()));
            }
            if d >= n {
                return Err(Error::InvalidSpec(format!(
                    "divisor {d} must be smaller than n = {n}"
                )));
            }
            if n % d != 0 {
                return Err(Error::InvalidSpec(format!("{d} does not divide {n}")));
            }
        }
        Ok(IcgSpec { n, divisors: ds })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// The divisor set, ascending.
    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn contains(&self, d: u64) -> bool {
        self.divisors.binary_search(&d).is_ok()
    }

    /// Vertex degree, `Σ_{d ∈ D} φ(n/d)`.
    pub fn degree(&self) -> u64 {
        self.divisors
            .iter()
            .map(|&d| numt::euler_phi(self.n / d).expect("n/d >= 1"))
            .sum()
    }
}

/// Validates `(n, D)`; same as [`IcgSpec::new`].
pub fn validate(n: u64, divisors: &[u64]) -> Result<IcgSpec> {
    IcgSpec::new(n, divisors.iter().copied())
}

/// Canonical text form `n:d1,d2,...,dk`.
impl fmt::Display for IcgSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for (i, d) in self.divisors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Parses the canonical text form. Divisors must already be strictly
/// ascending; unsorted input is rejected rather than reordered.
impl FromStr for IcgSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (n, ds) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| parse_err("expected n:d1,d2,..."))?;
        let n: u64 = n
            .trim()
            .parse()
            .map_err(|_| parse_err("n is not a positive integer"))?;
        let ds = ds
            .split(',')
            .map(|d| d.trim().parse::<u64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| parse_err("divisors must be positive integers"))?;
        if ds.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_err("divisors must be strictly ascending"));
        }
        IcgSpec::new(n, ds)
    }
}

impl Serialize for IcgSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IcgSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The eigenvalues `λ_0, ..., λ_{n-1}` of an integral circulant graph, in
/// index order.
///
/// Index order matters: `λ_0` is the degree and, for even `n`, `λ_{n/2}`
/// drives the mod-4 behaviour of the energy. Use [`Spectrum::sorted`] for the
/// multiset view.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Spectrum {
    values: Vec<i64>,
}

impl Spectrum {
    /// Wraps raw values. No invariants are checked; see [`Spectrum::check`].
    pub fn from_values(values: Vec<i64>) -> Self {
        Spectrum { values }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }

    pub fn get(&self, j: usize) -> i64 {
        self.values[j]
    }

    /// Eigenvalues ascending.
    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.values.clone();
        v.sort_unstable();
        v
    }

    /// `Σ |λ_j|`.
    pub fn energy(&self) -> u64 {
        self.values.iter().map(|v| v.unsigned_abs()).sum()
    }

    /// Checks the structural invariants shared by every ICG spectrum:
    /// palindromic indexing, zero trace and `λ_0` as the maximum.
    pub fn check(&self) -> Result<()> {
        let n = self.values.len();
        if n == 0 {
            return Err(Error::Inconsistent("empty spectrum".into()));
        }
        for j in 1..n {
            if self.values[j] != self.values[n - j] {
                return Err(Error::Inconsistent(format!(
                    "λ_{j} = {} but λ_{} = {}",
                    self.values[j],
                    n - j,
                    self.values[n - j]
                )));
            }
        }
        if self.values.iter().sum::<i64>() != 0 {
            return Err(Error::Inconsistent("nonzero trace".into()));
        }
        if self.values.iter().any(|&v| v > self.values[0]) {
            return Err(Error::Inconsistent(
                "λ_0 is not the largest eigenvalue".into(),
            ));
        }
        Ok(())
    }
}

/// The symbol set `S = ⋃_{d ∈ D} {k : gcd(k, n) = d, 1 ≤ k < n}`, ascending.
pub fn symbol_set(spec: &IcgSpec) -> Vec<u64> {
    (1..spec.n)
        .filter(|&k| spec.contains(gcd(k, spec.n)))
        .collect()
}

/// Dense symmetric 0/1 adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjacency {
    n: usize,
    cells: Vec<bool>,
}

impl Adjacency {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.cells[a * self.n + b]
    }

    pub fn row(&self, a: usize) -> &[bool] {
        &self.cells[a * self.n..(a + 1) * self.n]
    }

    pub fn row_sum(&self, a: usize) -> usize {
        self.row(a).iter().filter(|&&x| x).count()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.get(a, b) == self.get(b, a)))
    }
}

/// Builds the dense adjacency matrix. Refuses `n` above [`ADJACENCY_LIMIT`].
pub fn adjacency(spec: &IcgSpec) -> Result<Adjacency> {
    if spec.n > ADJACENCY_LIMIT {
        return Err(Error::TooLarge {
            what: "dense adjacency",
            n: spec.n,
            limit: ADJACENCY_LIMIT,
        });
    }
    let n = spec.n as usize;
    let mut first_row = vec![false; n];
    for s in symbol_set(spec) {
        first_row[s as usize] = true;
    }
    let mut cells = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            cells[a * n + b] = first_row[(b + n - a) % n];
        }
    }
    Ok(Adjacency { n, cells })
}

/// The exact spectrum via `λ_k = Σ_{d ∈ D} c(k, n/d)`.
pub fn spectrum(spec: &IcgSpec) -> Spectrum {
    let n = spec.n as usize;
    let mut values = vec![0i64; n];
    for &d in &spec.divisors {
        let period = numt::ramanujan_period(spec.n / d).expect("n/d >= 1");
        let m = period.len();
        for (k, v) in values.iter_mut().enumerate() {
            *v += period[k % m];
        }
    }
    Spectrum { values }
}

/// Number of connected components, `gcd(D)`. The graph is connected iff this
/// is 1.
pub fn connectivity(spec: &IcgSpec) -> u64 {
    spec.divisors.iter().fold(0, |g, &d| gcd(g, d))
}

/// Splits a graph with `gcd(D) = d` into its `d` isomorphic components,
/// returning `d` and the component `ICG_{n/d}(D/d)`.
///
/// Connected graphs come back unchanged with `d = 1`.
pub fn component_decomposition(spec: &IcgSpec) -> Result<(u64, IcgSpec)> {
    let d = connectivity(spec);
    if d == 1 {
        return Ok((1, spec.clone()));
    }
    let m = spec.n / d;
    if m < 2 {
        return Err(Error::InvalidSpec(format!(
            "degenerate quotient of order {m} for {spec}"
        )));
    }
    let quotient = IcgSpec::new(m, spec.divisors.iter().map(|&x| x / d))?;
    Ok((d, quotient))
}
