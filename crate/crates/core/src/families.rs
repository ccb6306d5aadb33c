//! Equienergetic families, cospectrality and extremal energies.
//!
//! Two constructions give non-cospectral graphs on the same vertex count with
//! equal energy:
//!
//! * first class: with `p_1, ..., p_s` the primes dividing `n` exactly once,
//!   the unitary Cayley graph `ICG_n({1})` together with every
//!   `ICG_n({p_i, p_j})`, all of energy `2^k φ(n)`;
//! * second class: for `n ≡ 2 (mod 4)`, the graphs `ICG_n({2, q})` over the
//!   primes `q` with `q² | n`, all of energy `3 · 2^(k-1) φ(n)`.
//!
//! Both are built here and checked against the exact spectra: equal energy
//! and pairwise distinct spectra are verified per `n`, not assumed.
//!
//! The search functions enumerate every divisor set of one `n`, subject to a
//! budget (see [`crate::sweep`]).

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::energy::is_hyperenergetic;
use crate::error::{Error, Result};
use crate::icg::{self, IcgSpec, Spectrum};
use crate::numt::{self, Factorization};
use crate::sweep::DivisorSets;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyClass {
    First,
    Second,
}

/// A constructed family together with what the exact spectra say about it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub n: u64,
    pub class: FamilyClass,
    pub members: Vec<IcgSpec>,
    /// Direct energies, parallel to `members`.
    pub energies: Vec<u64>,
    /// Energy of the first member.
    pub common_energy: u64,
    /// Closed-form energy the whole family is expected to share.
    pub predicted_energy: u64,
    pub equienergetic: bool,
    pub pairwise_cospectral: Vec<Vec<bool>>,
    pub all_hyperenergetic: bool,
}

impl FamilyReport {
    fn build(n: u64, class: FamilyClass, members: Vec<IcgSpec>, predicted_energy: u64) -> Self {
        let spectra: Vec<Spectrum> = members.par_iter().map(icg::spectrum).collect();
        let sorted: Vec<Vec<i64>> = spectra.iter().map(Spectrum::sorted).collect();
        let energies: Vec<u64> = spectra.iter().map(Spectrum::energy).collect();
        let common_energy = energies[0];
        let pairwise_cospectral = sorted
            .iter()
            .map(|a| sorted.iter().map(|b| a == b).collect())
            .collect();
        FamilyReport {
            n,
            class,
            equienergetic: energies.iter().all(|&e| e == common_energy),
            all_hyperenergetic: energies.iter().all(|&e| is_hyperenergetic(n, e)),
            members,
            energies,
            common_energy,
            predicted_energy,
            pairwise_cospectral,
        }
    }

    /// No two distinct members share a spectrum.
    pub fn pairwise_non_cospectral(&self) -> bool {
        let m = self.members.len();
        (0..m).all(|i| (0..m).all(|j| i == j || !self.pairwise_cospectral[i][j]))
    }

    /// Equal energies matching the closed form, and pairwise distinct spectra.
    pub fn verified(&self) -> bool {
        self.equienergetic
            && self.common_energy == self.predicted_energy
            && self.pairwise_non_cospectral()
    }
}

fn two_pow(e: usize) -> Result<u64> {
    1u64.checked_shl(e as u32)
        .ok_or(Error::Overflow("family energy"))
}

/// First class: `ICG_n({1})` and `ICG_n({p_i, p_j})` for every pair of
/// primes dividing `n` exactly once.
pub fn equienergetic_family(n: u64) -> Result<FamilyReport> {
    let f = numt::factorize(n)?;
    let simple: Vec<u64> = f
        .factors()
        .iter()
        .filter(|&&(_, a)| a == 1)
        .map(|&(p, _)| p)
        .collect();
    if simple.len() < 2 {
        return Err(Error::Precondition(format!(
            "{n} has {} prime(s) dividing it exactly once, need at least 2",
            simple.len()
        )));
    }
    let mut members = vec![IcgSpec::new(n, [1])?];
    for (i, &p) in simple.iter().enumerate() {
        for &q in &simple[i + 1..] {
            members.push(IcgSpec::new(n, [p, q])?);
        }
    }
    let predicted = two_pow(f.num_primes())?
        .checked_mul(f.euler_phi())
        .ok_or(Error::Overflow("family energy"))?;
    Ok(FamilyReport::build(
        n,
        FamilyClass::First,
        members,
        predicted,
    ))
}

/// Second class: `ICG_n({2, q})` over primes `q` with `q² | n`, for
/// `n ≡ 2 (mod 4)`.
pub fn equienergetic_family_second(n: u64) -> Result<FamilyReport> {
    if n % 4 != 2 {
        return Err(Error::Precondition(format!("need n ≡ 2 (mod 4), got {n}")));
    }
    let f = numt::factorize(n)?;
    let squares: Vec<u64> = f
        .factors()
        .iter()
        .filter(|&&(_, a)| a >= 2)
        .map(|&(p, _)| p)
        .collect();
    if squares.len() < 2 {
        return Err(Error::Precondition(format!(
            "{n} has {} prime(s) whose square divides it, need at least 2",
            squares.len()
        )));
    }
    let members = squares
        .iter()
        .map(|&q| IcgSpec::new(n, [2, q]))
        .collect::<Result<Vec<_>>>()?;
    let predicted = two_pow(f.num_primes() - 1)?
        .checked_mul(3 * f.euler_phi())
        .ok_or(Error::Overflow("family energy"))?;
    Ok(FamilyReport::build(
        n,
        FamilyClass::Second,
        members,
        predicted,
    ))
}

/// `max_{1 ≤ j < n} |λ_j|` of `ICG_n({p_i, p_j})` for square-free `n` with at
/// least three prime factors:
///
/// ```text
/// φ(n / (p_i p_j)) · max{ (p_i + p_j - 2) / φ(r), p_i - 2, p_j - 2, 2 }
/// ```
///
/// where `r` is the smallest prime dividing `n / (p_i p_j)`.
pub fn second_spectral_value(n: u64, p_i: u64, p_j: u64) -> Result<u64> {
    let f: Factorization = numt::factorize(n)?;
    if !f.is_square_free() || f.num_primes() < 3 {
        return Err(Error::Precondition(format!(
            "{n} must be square-free with at least three prime factors"
        )));
    }
    if p_i == p_j {
        return Err(Error::Precondition("primes must be distinct".into()));
    }
    for p in [p_i, p_j] {
        if f.exponent_of(p) == 0 {
            return Err(Error::Precondition(format!(
                "{p} is not a prime factor of {n}"
            )));
        }
    }
    let rest = n / (p_i * p_j);
    let fr = numt::factorize(rest)?;
    let r = fr
        .smallest_prime()
        .ok_or_else(|| Error::Precondition(format!("n / (p_i p_j) = 1 for n = {n}")))?;
    let phi_r = r - 1;
    let phi_rest = fr.euler_phi();

    // The one fractional candidate is compared by cross-multiplication.
    let frac_num = p_i + p_j - 2;
    let int_max = [p_i.saturating_sub(2), p_j.saturating_sub(2), 2]
        .into_iter()
        .max()
        .expect("nonempty");
    let (num, den) = match (frac_num).cmp(&(int_max * phi_r)) {
        Ordering::Greater => (frac_num, phi_r),
        _ => (int_max, 1),
    };
    let scaled = phi_rest
        .checked_mul(num)
        .ok_or(Error::Overflow("second spectral value"))?;
    if scaled % den != 0 {
        return Err(Error::Inconsistent(format!(
            "second spectral value {scaled}/{den} is not an integer"
        )));
    }
    Ok(scaled / den)
}

/// Spectral multiset equality. Both graphs must have the same order.
pub fn cospectral(a: &IcgSpec, b: &IcgSpec) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::Precondition(format!(
            "cospectrality needs equal orders, got {} and {}",
            a.n(),
            b.n()
        )));
    }
    Ok(a == b || icg::spectrum(a).sorted() == icg::spectrum(b).sorted())
}

/// Result of an exhaustive cospectrality check for one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoReport {
    pub n: u64,
    pub sets: u64,
    /// Pairs of distinct divisor sets with identical spectra.
    pub collisions: Vec<(IcgSpec, IcgSpec)>,
}

impl SoReport {
    pub fn verified(&self) -> bool {
        self.collisions.is_empty()
    }
}

/// Checks that no two distinct divisor sets of `n` give cospectral graphs.
pub fn so_conjecture_check(n: u64, budget: u64) -> Result<SoReport> {
    let sets = DivisorSets::new(n, budget)?;
    let mut keyed: Vec<(Vec<i64>, IcgSpec)> = sets
        .masks()
        .into_par_iter()
        .map(|m| (sets.spectrum(m).sorted(), sets.spec(m)))
        .collect();
    keyed.par_sort_unstable();
    let mut collisions = Vec::new();
    let mut start = 0;
    for i in 1..=keyed.len() {
        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
            for other in &keyed[start + 1..i] {
                collisions.push((keyed[start].1.clone(), other.1.clone()));
            }
            start = i;
        }
    }
    collisions.sort();
    Ok(SoReport {
        n,
        sets: sets.len(),
        collisions,
    })
}

/// Minimum energy over the divisor sets of one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub n: u64,
    pub connected_only: bool,
    pub min_energy: u64,
    /// Every minimizing divisor set, in canonical order.
    pub argmin_sets: Vec<Vec<u64>>,
    /// The set the characterization predicts to be extremal.
    pub predicted_set: Option<Vec<u64>>,
    pub conjecture_value: Option<u64>,
    pub conjecture_holds: Option<bool>,
}

/// The predicted extremal divisor set and energy for `n`.
///
/// Even `n`: all odd proper divisors, giving `K_{n/2,n/2}` with energy `n`.
/// Odd `n` with smallest prime `p`: all proper divisors not divisible by
/// `p`, with energy `2n(1 - 1/p)`.
pub fn predicted_extremal(n: u64) -> Result<(Vec<u64>, u64)> {
    let f = numt::factorize(n)?;
    let p = f
        .smallest_prime()
        .ok_or_else(|| Error::Precondition("n must be at least 2".into()))?;
    let divs = crate::sweep::proper_divisors(n)?;
    let set = divs.into_iter().filter(|d| d % p != 0).collect();
    let value = if p == 2 { n } else { 2 * (n - n / p) };
    Ok((set, value))
}

/// Exhaustive minimum-energy search over all (or all connected) divisor sets.
pub fn min_energy_search(n: u64, connected_only: bool, budget: u64) -> Result<ExtremalReport> {
    let sets = DivisorSets::new(n, budget)?;
    let best = sets
        .masks()
        .into_par_iter()
        .filter(|&m| !connected_only || sets.components(m) == 1)
        .map(|m| (sets.spectrum(m).energy(), vec![m]))
        .reduce_with(|a, b| match a.0.cmp(&b.0) {
            Ordering::Less => a,
            Ordering::Greater => b,
            Ordering::Equal => (a.0, [a.1, b.1].concat()),
        });
    let (min_energy, masks) =
        best.ok_or_else(|| Error::Inconsistent(format!("no divisor sets for n = {n}")))?;
    let mut argmin_sets: Vec<Vec<u64>> = masks
        .into_iter()
        .map(|m| sets.spec(m).divisors().to_vec())
        .collect();
    argmin_sets.sort();
    let (predicted, value) = predicted_extremal(n)?;
    let holds = min_energy == value && argmin_sets.contains(&predicted);
    Ok(ExtremalReport {
        n,
        connected_only,
        min_energy,
        argmin_sets,
        predicted_set: Some(predicted),
        conjecture_value: Some(value),
        conjecture_holds: Some(holds),
    })
}

/// Spectrum of `ICG_n(odd proper divisors)`, which is `K_{n/2,n/2}`.
pub fn bipartite_extremal_spectrum(n: u64) -> Result<Spectrum> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Precondition(format!("need even n >= 2, got {n}")));
    }
    let odd = crate::sweep::proper_divisors(n)?
        .into_iter()
        .filter(|d| d % 2 == 1);
    Ok(icg::spectrum(&IcgSpec::new(n, odd)?))
}
