//! Independent checks on the exact spectrum.
//!
//! [`spectrum_trig`] evaluates circulant eigenvalues numerically from the
//! symbol set, `λ_j = Σ_{s ∈ S} cos(2π j s / n)`, without any Ramanujan sum
//! or arithmetic function. The imaginary parts cancel because `S` is closed
//! under `s ↦ n - s`. The moment helpers recover the quadrangle count from
//! `M_4 = 8q - 2m + 2 Σ deg²(v)` and the two lower bounds on energy.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::icg::{self, IcgSpec, Spectrum};
use crate::sweep::DivisorSets;

/// Largest `n` accepted by the floating-point oracle.
pub const TRIG_LIMIT: u64 = 100_000;

/// Default absolute tolerance when comparing against the exact spectrum.
pub const DEFAULT_TOL: f64 = 1e-6;

/// Cosine table for one order `n`, reusable across divisor sets.
#[derive(Debug, Clone)]
pub struct TrigOracle {
    n: u64,
    cos: Vec<f64>,
}

impl TrigOracle {
    pub fn new(n: u64) -> Result<Self> {
        if n > TRIG_LIMIT {
            return Err(Error::TooLarge {
                what: "trigonometric oracle",
                n,
                limit: TRIG_LIMIT,
            });
        }
        if n == 0 {
            return Err(Error::Zero);
        }
        let cos = (0..n).map(|r| (TAU * r as f64 / n as f64).cos()).collect();
        Ok(TrigOracle { n, cos })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Eigenvalues of the circulant with the given symbol set. Summation
    /// runs over `symbols` in the order given.
    pub fn eigenvalues(&self, symbols: &[u64]) -> Vec<f64> {
        let n = self.n;
        (0..n)
            .map(|j| {
                symbols
                    .iter()
                    .map(|&s| self.cos[((j * s) % n) as usize])
                    .sum()
            })
            .collect()
    }

    pub fn spectrum(&self, spec: &IcgSpec) -> Result<Vec<f64>> {
        if spec.n() != self.n {
            return Err(Error::Precondition(format!(
                "oracle built for n = {}, spec has n = {}",
                self.n,
                spec.n()
            )));
        }
        Ok(self.eigenvalues(&icg::symbol_set(spec)))
    }
}

/// Floating-point eigenvalues of `ICG_n(D)` from the symbol set.
pub fn spectrum_trig(spec: &IcgSpec) -> Result<Vec<f64>> {
    TrigOracle::new(spec.n())?.spectrum(spec)
}

/// Outcome of [`compare_spectra`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumComparison {
    pub max_deviation: f64,
    /// First index whose deviation exceeds the tolerance.
    pub first_failure: Option<usize>,
    pub passed: bool,
}

/// Elementwise comparison of the exact spectrum against approximate values.
pub fn compare_spectra(exact: &Spectrum, approx: &[f64], tol: f64) -> Result<SpectrumComparison> {
    if exact.n() != approx.len() {
        return Err(Error::LengthMismatch {
            left: exact.n(),
            right: approx.len(),
        });
    }
    let mut max_deviation = 0.0f64;
    let mut first_failure = None;
    for (j, (&e, &a)) in exact.values().iter().zip(approx).enumerate() {
        let dev = (e as f64 - a).abs();
        if (dev.is_nan() || dev > tol) && first_failure.is_none() {
            first_failure = Some(j);
        }
        if dev.is_nan() {
            max_deviation = f64::NAN;
        } else if dev > max_deviation {
            max_deviation = dev;
        }
    }
    Ok(SpectrumComparison {
        max_deviation,
        first_failure,
        passed: first_failure.is_none(),
    })
}

/// Trig-oracle comparison for one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleCheck {
    pub spec: IcgSpec,
    pub n: u64,
    #[serde(rename = "D")]
    pub divisors: Vec<u64>,
    #[serde(flatten)]
    pub comparison: SpectrumComparison,
}

/// Compares the exact spectrum of `spec` with the trig oracle.
pub fn check_spec(spec: &IcgSpec, tol: f64) -> Result<OracleCheck> {
    let comparison = compare_spectra(&icg::spectrum(spec), &spectrum_trig(spec)?, tol)?;
    Ok(OracleCheck {
        spec: spec.clone(),
        n: spec.n(),
        divisors: spec.divisors().to_vec(),
        comparison,
    })
}

/// [`check_spec`] for every divisor set of `n`, in canonical order.
pub fn check_all(n: u64, tol: f64, budget: u64) -> Result<Vec<OracleCheck>> {
    let sets = DivisorSets::new(n, budget)?;
    let trig = TrigOracle::new(n)?;
    let exact = |m: u64| -> Result<OracleCheck> {
        let spec = sets.spec(m);
        let comparison = compare_spectra(&sets.spectrum(m), &trig.spectrum(&spec)?, tol)?;
        Ok(OracleCheck {
            n,
            divisors: spec.divisors().to_vec(),
            spec,
            comparison,
        })
    };
    sets.canonical_masks().into_iter().map(exact).collect()
}

/// Spectral moments and the quantities tied to them by counting identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MomentReport {
    pub n: u64,
    /// Edge count.
    pub m: u64,
    pub m2: i128,
    pub m4: i128,
    /// Number of 4-cycles, solved from the fourth moment.
    pub q: u64,
}

/// Computes `M_2`, `M_4` from the exact spectrum and solves
/// `M_4 = 8q - 2m + 2 Σ deg²` for `q`, using `Σ deg² = n r²` for an
/// `r`-regular graph.
pub fn moments(spec: &IcgSpec) -> Result<MomentReport> {
    let sp = icg::spectrum(spec);
    moments_of(spec.n(), &sp)
}

pub(crate) fn moments_of(n: u64, sp: &Spectrum) -> Result<MomentReport> {
    let overflow = || Error::Overflow("spectral moments");
    let mut m2: i128 = 0;
    let mut m4: i128 = 0;
    for &v in sp.values() {
        let sq = (v as i128).checked_mul(v as i128).ok_or_else(overflow)?;
        m2 = m2.checked_add(sq).ok_or_else(overflow)?;
        m4 = sq
            .checked_mul(sq)
            .and_then(|x| m4.checked_add(x))
            .ok_or_else(overflow)?;
    }
    let r = sp.get(0) as i128;
    let n_ = n as i128;
    let twice_m = n_ * r;
    if m2 != twice_m {
        return Err(Error::Inconsistent(format!(
            "M_2 = {m2} but n·λ_0 = {twice_m}"
        )));
    }
    let sum_deg_sq = n_.checked_mul(r * r).ok_or_else(overflow)?;
    let eight_q = m4 + twice_m - 2 * sum_deg_sq;
    if eight_q < 0 || eight_q % 8 != 0 {
        return Err(Error::Inconsistent(format!(
            "quadrangle count 8q = {eight_q} is not a nonnegative multiple of 8"
        )));
    }
    Ok(MomentReport {
        n,
        m: (twice_m / 2) as u64,
        m2,
        m4,
        q: (eight_q / 8) as u64,
    })
}

/// Lower bounds on energy valid for regular graphs of positive degree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerBounds {
    /// `M_2² / sqrt(M_2 M_4)`.
    pub moment: f64,
    /// `n`.
    pub regular: u64,
}

pub fn energy_lower_bounds(spec: &IcgSpec) -> Result<LowerBounds> {
    let mr = moments(spec)?;
    if mr.m2 == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let m2 = mr.m2 as f64;
    let m4 = mr.m4 as f64;
    Ok(LowerBounds {
        moment: m2 * m2 / (m2 * m4).sqrt(),
        regular: spec.n(),
    })
}
