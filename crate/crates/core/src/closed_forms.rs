//! Closed-form energies for two-element divisor sets.
//!
//! Two families are covered, each split into branches by how the chosen
//! primes divide `n`. Throughout, `k` is the number of distinct primes of `n`.
//!
//! `ICG_n({1, p^γ})`:
//!
//! | branch | condition          | energy                                   |
//! |--------|--------------------|------------------------------------------|
//! | 1      | `p ∥ n`            | `2^(k-1) (φ(n) + φ(n/p))`                |
//! | 2      | `p^γ ∥ n`, `γ ≥ 2` | `2^(k-1) (2φ(n) + (p^γ - 2p + 2) φ(n/p^γ))`|
//! | 3      | `p^γ ∦ n`          | `2^k (φ(n) + (p^γ - p + 1) φ(n/p^γ))`      |
//!
//! The last factor is `φ(n/p^γ)`, not `φ(n/p)`; the two agree only for
//! `γ = 1`. At `n = 8`, `D = {1, 4}` the energy is 14, while `φ(n/p)` would
//! give 20.
//!
//! `ICG_n({p, q})` with `p < q`:
//!
//! | branch | condition                 | energy                                          |
//! |--------|---------------------------|-------------------------------------------------|
//! | 1      | `p ∥ n`, `q ∥ n`          | `2^k φ(n)`                                      |
//! | 2      | `p = 2 ∥ n`, `q² ∣ n`     | `3 · 2^(k-1) φ(n)`                              |
//! | 3      | `p ∥ n`, `q² ∣ n`, `p ≠ 2`| `2^(k-1) (2φ(n) + φ(n/q) φ(q))`                 |
//! | 4      | `p² ∣ n`, `q ∥ n`         | `2^(k-1) (2φ(n) + φ(n/p) φ(p))`                 |
//! | 5      | `p² ∣ n`, `q² ∣ n`        | `2^(k-1) (2φ(n) + φ(n/p) φ(p) + φ(n/q) φ(q))`   |

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::energy;
use crate::error::{Error, Result};
use crate::icg::IcgSpec;
use crate::numt::{self, Factorization};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    OneAndPrimePower,
    TwoPrimes,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::OneAndPrimePower => "ONE_AND_PRIME_POWER",
            Family::TwoPrimes => "TWO_PRIMES",
        })
    }
}

/// Parameters of one closed-form instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Params {
    /// `D = {1, p^γ}`.
    PrimePower { p: u64, gamma: u32 },
    /// `D = {p, q}`, `p < q`.
    TwoPrimes { p: u64, q: u64 },
}

impl Params {
    pub fn family(&self) -> Family {
        match self {
            Params::PrimePower { .. } => Family::OneAndPrimePower,
            Params::TwoPrimes { .. } => Family::TwoPrimes,
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::PrimePower { p, gamma } => write!(f, "p={p};gamma={gamma}"),
            Params::TwoPrimes { p, q } => write!(f, "p={p};q={q}"),
        }
    }
}

/// Which branch of the closed forms applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `p ∥ n`.
    PrimeExact,
    /// `p^γ ∥ n` with `γ ≥ 2`.
    FullPrimePower,
    /// `p^γ ∦ n`.
    PartialPrimePower,
    /// `p ∥ n`, `q ∥ n`.
    BothExact,
    /// `2 ∥ n`, `q² | n`.
    TwoExactSquareQ,
    /// odd `p ∥ n`, `q² | n`.
    ExactPSquareQ,
    /// `p² | n`, `q ∥ n`.
    SquarePExactQ,
    /// `p² | n`, `q² | n`.
    BothSquare,
}

impl Branch {
    /// 1-based position of the branch within its family's table.
    pub fn index(&self) -> u8 {
        match self {
            Branch::PrimeExact | Branch::BothExact => 1,
            Branch::FullPrimePower | Branch::TwoExactSquareQ => 2,
            Branch::PartialPrimePower | Branch::ExactPSquareQ => 3,
            Branch::SquarePExactQ => 4,
            Branch::BothSquare => 5,
        }
    }
}

/// A classified instance: parameters, the branch they fall in, and the
/// factorization the formulas need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormCase {
    pub n: u64,
    pub params: Params,
    pub branch: Branch,
    factorization: Factorization,
}

impl ClosedFormCase {
    pub fn family(&self) -> Family {
        self.params.family()
    }

    /// The graph this case describes.
    pub fn spec(&self) -> IcgSpec {
        let ds = match self.params {
            Params::PrimePower { p, gamma } => vec![1, p.pow(gamma)],
            Params::TwoPrimes { p, q } => vec![p, q],
        };
        IcgSpec::new(self.n, ds).expect("validated during classification")
    }

    /// Evaluates the branch formula.
    pub fn energy(&self) -> Result<u64> {
        let n = self.n;
        let f = &self.factorization;
        let k = f.num_primes() as u32;
        let overflow = || Error::Overflow("closed-form energy");
        let phi = |m: u64| numt::euler_phi(m).expect("m >= 1");
        let pow2 = |e: u32| 1u64.checked_shl(e).ok_or_else(overflow);
        let mul = |a: u64, b: u64| a.checked_mul(b).ok_or_else(overflow);
        let add = |a: u64, b: u64| a.checked_add(b).ok_or_else(overflow);
        let phi_n = phi(n);
        match (self.params, self.branch) {
            (Params::PrimePower { p, .. }, Branch::PrimeExact) => {
                mul(pow2(k - 1)?, add(phi_n, phi(n / p))?)
            }
            (Params::PrimePower { p, gamma }, Branch::FullPrimePower) => {
                // p^γ - 2p + 2 > 0 for γ >= 2
                let pg = p.pow(gamma);
                let coeff = pg + 2 - 2 * p;
                mul(pow2(k - 1)?, add(2 * phi_n, mul(coeff, phi(n / pg))?)?)
            }
            (Params::PrimePower { p, gamma }, Branch::PartialPrimePower) => {
                let pg = p.pow(gamma);
                let coeff = pg + 1 - p;
                mul(pow2(k)?, add(phi_n, mul(coeff, phi(n / pg))?)?)
            }
            (Params::TwoPrimes { .. }, Branch::BothExact) => mul(pow2(k)?, phi_n),
            (Params::TwoPrimes { .. }, Branch::TwoExactSquareQ) => {
                mul(3, mul(pow2(k - 1)?, phi_n)?)
            }
            (Params::TwoPrimes { q, .. }, Branch::ExactPSquareQ) => {
                let extra = mul(phi(n / q), phi(q))?;
                mul(pow2(k - 1)?, add(2 * phi_n, extra)?)
            }
            (Params::TwoPrimes { p, .. }, Branch::SquarePExactQ) => {
                let extra = mul(phi(n / p), phi(p))?;
                mul(pow2(k - 1)?, add(2 * phi_n, extra)?)
            }
            (Params::TwoPrimes { p, q }, Branch::BothSquare) => {
                let extra = add(mul(phi(n / p), phi(p))?, mul(phi(n / q), phi(q))?)?;
                mul(pow2(k - 1)?, add(2 * phi_n, extra)?)
            }
            (params, branch) => Err(Error::Inconsistent(format!(
                "branch {branch:?} does not belong to {params}"
            ))),
        }
    }
}

fn check_prime_divisor(n: u64, f: &Factorization, p: u64) -> Result<u32> {
    if !numt::is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    match f.exponent_of(p) {
        0 => Err(Error::Precondition(format!("{p} does not divide {n}"))),
        a => Ok(a),
    }
}

/// Recognizes `spec` as `{1, p^γ}` or `{p, q}` and returns its parameters.
pub fn params_of(spec: &IcgSpec) -> Result<Params> {
    let not_covered =
        || Error::Precondition(format!("{spec} is not of the form {{1, p^γ}} or {{p, q}}"));
    match *spec.divisors() {
        [1, m] => {
            let f = numt::factorize(m)?;
            match *f.factors() {
                [(p, gamma)] => Ok(Params::PrimePower { p, gamma }),
                _ => Err(not_covered()),
            }
        }
        [p, q] if numt::is_prime(p) && numt::is_prime(q) => Ok(Params::TwoPrimes { p, q }),
        _ => Err(not_covered()),
    }
}

/// Validates the parameters and picks the single branch that applies.
pub fn classify_case(n: u64, params: Params) -> Result<ClosedFormCase> {
    if n < 4 {
        return Err(Error::Precondition(format!(
            "closed forms need n >= 4, got {n}"
        )));
    }
    let f = numt::factorize(n)?;
    let branch = match params {
        Params::PrimePower { p, gamma } => {
            let alpha = check_prime_divisor(n, &f, p)?;
            if gamma < 1 || gamma > alpha {
                return Err(Error::Precondition(format!(
                    "γ = {gamma} must lie in 1..={alpha} for p = {p}, n = {n}"
                )));
            }
            if p.pow(gamma) == n {
                return Err(Error::Precondition(format!(
                    "p^γ = {n} is not a proper divisor"
                )));
            }
            match (alpha == 1, gamma == alpha) {
                (true, _) => Branch::PrimeExact,
                (false, true) => Branch::FullPrimePower,
                (false, false) => Branch::PartialPrimePower,
            }
        }
        Params::TwoPrimes { p, q } => {
            if p >= q {
                return Err(Error::Precondition(format!(
                    "need p < q, got p = {p}, q = {q}"
                )));
            }
            let ap = check_prime_divisor(n, &f, p)?;
            let aq = check_prime_divisor(n, &f, q)?;
            match (ap, aq) {
                (1, 1) => Branch::BothExact,
                (1, _) if p == 2 => Branch::TwoExactSquareQ,
                (1, _) => Branch::ExactPSquareQ,
                (_, 1) => Branch::SquarePExactQ,
                _ => Branch::BothSquare,
            }
        }
    };
    Ok(ClosedFormCase {
        n,
        params,
        branch,
        factorization: f,
    })
}

/// Closed-form energy of `ICG_n({1, p^γ})`.
pub fn energy_one_prime_power(n: u64, p: u64, gamma: u32) -> Result<u64> {
    classify_case(n, Params::PrimePower { p, gamma })?.energy()
}

/// Closed-form energy of `ICG_n({p, q})`, `p < q`.
pub fn energy_two_primes(n: u64, p: u64, q: u64) -> Result<u64> {
    classify_case(n, Params::TwoPrimes { p, q })?.energy()
}

/// Every admissible parameter set for one `n`, ordered by family, then
/// parameters.
pub fn admissible_params(n: u64) -> Result<Vec<Params>> {
    if n < 4 {
        return Ok(Vec::new());
    }
    let f = numt::factorize(n)?;
    let mut out = Vec::new();
    for &(p, alpha) in f.factors() {
        for gamma in 1..=alpha {
            if p.pow(gamma) != n {
                out.push(Params::PrimePower { p, gamma });
            }
        }
    }
    let primes: Vec<u64> = f.primes().collect();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            out.push(Params::TwoPrimes { p, q });
        }
    }
    Ok(out)
}

/// One row of the cross-validation report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossValidationRow {
    pub n: u64,
    pub family: Family,
    pub parameters: String,
    pub branch: u8,
    pub formula: u64,
    pub direct: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Evaluates one closed form and the direct energy of the same graph.
pub fn compare_case(n: u64, params: Params) -> Result<CrossValidationRow> {
    let case = classify_case(n, params)?;
    let formula = case.energy()?;
    let direct = energy::energy(&case.spec());
    Ok(CrossValidationRow {
        n,
        family: params.family(),
        parameters: params.to_string(),
        branch: case.branch.index(),
        formula,
        direct,
        matches: formula == direct,
    })
}

/// Evaluates every closed form for `4 <= n <= n_max` and compares it with the
/// energy of the exact spectrum.
pub fn cross_validate(n_max: u64) -> Result<Vec<CrossValidationRow>> {
    if n_max < 4 {
        return Err(Error::Precondition(format!(
            "n_max must be at least 4, got {n_max}"
        )));
    }
    cross_validate_range(4, n_max)
}

/// [`cross_validate`] restricted to `lo <= n <= hi`. Orders below 4 have no
/// admissible parameters and contribute nothing.
pub fn cross_validate_range(lo: u64, hi: u64) -> Result<Vec<CrossValidationRow>> {
    let per_n: Vec<Result<Vec<CrossValidationRow>>> = (lo.max(4)..=hi)
        .into_par_iter()
        .map(|n| {
            admissible_params(n)?
                .into_iter()
                .map(|params| compare_case(n, params))
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for r in per_n {
        rows.extend(r?);
    }
    Ok(rows)
}
