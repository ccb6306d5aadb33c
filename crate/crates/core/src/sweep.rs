//! Exhaustive enumeration of divisor sets for a fixed `n`.
//!
//! `ICG_n(D)` ranges over the `2^t - 1` nonempty subsets of the `t` proper
//! divisors of `n`. [`DivisorSets`] caches one Ramanujan column
//! `k ↦ c(k, n/d)` per divisor so that each subset's spectrum is a sum of
//! cached columns.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::icg::{IcgSpec, Spectrum};
use crate::numt::{self, gcd};

/// Default cap on the number of divisor sets enumerated for one `n`.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Divisors `d` of `n` with `d < n`, ascending.
pub fn proper_divisors(n: u64) -> Result<Vec<u64>> {
    let mut ds = numt::divisors(n)?;
    ds.pop();
    Ok(ds)
}

/// Number of nonempty divisor sets for `n`.
pub fn set_count(n: u64) -> Result<u64> {
    let t = proper_divisors(n)?.len() as u32;
    1u64.checked_shl(t)
        .map(|x| x - 1)
        .ok_or(Error::Overflow("divisor set count"))
}

/// All nonempty divisor sets of one `n`, addressed by bitmask over the
/// ascending proper divisors.
#[derive(Debug, Clone)]
pub struct DivisorSets {
    n: u64,
    divisors: Vec<u64>,
    columns: Vec<Vec<i64>>,
}

impl DivisorSets {
    /// Fails with [`Error::BudgetExceeded`] when there are more than
    /// `budget` sets.
    pub fn new(n: u64, budget: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!(
                "n must be at least 2, got {n}"
            )));
        }
        // more than 63 proper divisors: past any budget a u64 can express
        let required = match set_count(n) {
            Err(Error::Overflow(_)) => u64::MAX,
            other => other?,
        };
        if required > budget {
            return Err(Error::BudgetExceeded {
                n,
                required,
                budget,
            });
        }
        let divisors = proper_divisors(n)?;
        let len = n as usize;
        let columns = divisors
            .iter()
            .map(|&d| {
                let period = numt::ramanujan_period(n / d)?;
                let m = period.len();
                Ok((0..len).map(|k| period[k % m]).collect())
            })
            .collect::<Result<Vec<Vec<i64>>>>()?;
        Ok(DivisorSets {
            n,
            divisors,
            columns,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn len(&self) -> u64 {
        (1u64 << self.divisors.len()) - 1
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    /// Valid masks `1..=len()`.
    pub fn masks(&self) -> std::ops::RangeInclusive<u64> {
        1..=self.len()
    }

    fn members(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.divisors.len()).filter(move |&i| mask >> i & 1 == 1)
    }

    pub fn spec(&self, mask: u64) -> IcgSpec {
        IcgSpec::new(self.n, self.members(mask).map(|i| self.divisors[i]))
            .expect("mask selects proper divisors")
    }

    /// `gcd` of the selected divisors; 1 means connected.
    pub fn components(&self, mask: u64) -> u64 {
        self.members(mask).fold(0, |g, i| gcd(g, self.divisors[i]))
    }

    pub fn spectrum(&self, mask: u64) -> Spectrum {
        let mut values = vec![0i64; self.n as usize];
        for i in self.members(mask) {
            for (v, c) in values.iter_mut().zip(&self.columns[i]) {
                *v += c;
            }
        }
        Spectrum::from_values(values)
    }

    /// Masks ordered by their canonical spec (lexicographic over the
    /// ascending divisor sequence).
    pub fn canonical_masks(&self) -> Vec<u64> {
        let mut masks: Vec<(Vec<u64>, u64)> = self
            .masks()
            .map(|m| (self.members(m).map(|i| self.divisors[i]).collect(), m))
            .collect();
        masks.par_sort_unstable();
        masks.into_iter().map(|(_, m)| m).collect()
    }
}
