//! Graph energy and its residue modulo 4.
//!
//! The energy of any graph is an even integer. For integral circulant graphs
//! the residue mod 4 is determined by `n` and `D`:
//!
//! * odd `n`: the energy is always divisible by 4;
//! * even `n`: the energy is `2 (mod 4)` exactly when `n/2 ∈ D` and
//!   `λ_{n/2} < 0`.
//!
//! The membership condition is `n/2 ∈ D`. With `n/2 ∉ D` the energy is
//! always divisible by 4 whatever the sign of `λ_{n/2}`: `ICG_6({1})` has
//! `λ_3 = -2` and energy 8.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::icg::{self, IcgSpec, Spectrum};
use crate::numt;
use crate::sweep::DivisorSets;

/// Sum of absolute eigenvalues, exact.
pub fn energy(spec: &IcgSpec) -> u64 {
    icg::spectrum(spec).energy()
}

/// `λ_{n/2} = Σ_{d ∈ D} (-1)^d φ(n/d)` for even `n`.
pub fn lambda_half(spec: &IcgSpec) -> Result<i64> {
    let n = spec.n();
    if n % 2 == 1 {
        return Err(Error::Precondition(format!(
            "λ_(n/2) needs even n, got {n}"
        )));
    }
    Ok(spec
        .divisors()
        .iter()
        .map(|&d| {
            let phi = numt::euler_phi(n / d).expect("n/d >= 1") as i64;
            if d % 2 == 0 {
                phi
            } else {
                -phi
            }
        })
        .sum())
}

/// Predicted `energy mod 4`, either 0 or 2.
pub fn mod4_predicted(spec: &IcgSpec) -> u8 {
    let n = spec.n();
    if n % 2 == 1 {
        return 0;
    }
    let half = lambda_half(spec).expect("n is even");
    if spec.contains(n / 2) && half < 0 {
        2
    } else {
        0
    }
}

/// `E > 2n - 2`, i.e. more energy than the complete graph `K_n`.
pub fn hyperenergetic(spec: &IcgSpec) -> bool {
    is_hyperenergetic(spec.n(), energy(spec))
}

pub(crate) fn is_hyperenergetic(n: u64, energy: u64) -> bool {
    energy > 2 * n - 2
}

/// Everything the mod-4 analysis knows about one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnergyReport {
    pub spec: IcgSpec,
    pub n: u64,
    #[serde(rename = "D")]
    pub divisors: Vec<u64>,
    pub energy: u64,
    pub residue4: u8,
    pub predicted4: u8,
    /// `None` for odd `n`.
    pub lambda_half: Option<i64>,
    #[serde(rename = "half_in_D")]
    pub half_in_d: bool,
    pub hyperenergetic: bool,
}

impl EnergyReport {
    pub fn conforms(&self) -> bool {
        self.residue4 == self.predicted4
    }
}

pub fn energy_report(spec: &IcgSpec) -> EnergyReport {
    report_from_spectrum(spec, &icg::spectrum(spec))
}

/// Builds the report from an already computed spectrum of `spec`.
pub fn report_from_spectrum(spec: &IcgSpec, sp: &Spectrum) -> EnergyReport {
    let n = spec.n();
    let energy = sp.energy();
    let even = n % 2 == 0;
    EnergyReport {
        spec: spec.clone(),
        n,
        divisors: spec.divisors().to_vec(),
        energy,
        residue4: (energy % 4) as u8,
        predicted4: mod4_predicted(spec),
        lambda_half: even.then(|| sp.get((n / 2) as usize)),
        half_in_d: even && spec.contains(n / 2),
        hyperenergetic: is_hyperenergetic(n, energy),
    }
}

/// Energy reports for every divisor set of `n` (optionally only the
/// connected ones), in canonical order.
pub fn mod4_sweep(n: u64, connected_only: bool, budget: u64) -> Result<Vec<EnergyReport>> {
    let sets = DivisorSets::new(n, budget)?;
    Ok(sets
        .canonical_masks()
        .into_par_iter()
        .filter(|&m| !connected_only || sets.components(m) == 1)
        .map(|m| report_from_spectrum(&sets.spec(m), &sets.spectrum(m)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::icg::validate;

    fn spec(n: u64, ds: &[u64]) -> IcgSpec {
        validate(n, ds).unwrap()
    }

    #[test]
    fn sweep_is_canonical_and_conforms() {
        let rows = mod4_sweep(12, false, 1 << 10).unwrap();
        assert_eq!(rows.len(), 31);
        assert!(rows.windows(2).all(|w| w[0].divisors < w[1].divisors));
        assert!(rows.iter().all(EnergyReport::conforms));
        let connected = mod4_sweep(12, true, 1 << 10).unwrap();
        assert!(connected
            .iter()
            .all(|r| r.divisors.iter().fold(0, |g, &d| numt::gcd(g, d)) == 1));
        assert!(connected.len() < rows.len());
    }

    #[test]
    fn energy_examples() {
        assert_eq!(energy(&spec(6, &[1, 3])), 6);
        assert_eq!(energy(&spec(4, &[1, 2])), 6);
        assert_eq!(energy(&spec(9, &[1])), 12);
    }

    #[test]
    fn lambda_half_examples() {
        assert_eq!(lambda_half(&spec(6, &[1, 3])), Ok(-3));
        assert_eq!(lambda_half(&spec(4, &[1, 2])), Ok(-1));
        assert_eq!(lambda_half(&spec(6, &[1])), Ok(-2));
        assert!(matches!(
            lambda_half(&spec(9, &[1])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn mod4_examples() {
        assert_eq!(mod4_predicted(&spec(9, &[1])), 0);
        assert_eq!(energy(&spec(9, &[1])) % 4, 0);
        assert_eq!(mod4_predicted(&spec(4, &[1, 2])), 2);
        assert_eq!(energy(&spec(4, &[1, 2])) % 4, 2);
        assert_eq!(mod4_predicted(&spec(6, &[1])), 0);
        assert_eq!(energy(&spec(6, &[1])), 8);
    }

    #[test]
    fn hyperenergetic_examples() {
        assert!(!hyperenergetic(&spec(4, &[1, 2])));
        assert!(!hyperenergetic(&spec(6, &[1, 3])));
        assert!(hyperenergetic(&spec(30, &[2, 3])));
        assert_eq!(energy(&spec(30, &[2, 3])), 64);
    }

    #[test]
    fn report_examples() {
        let r = energy_report(&spec(6, &[1, 3]));
        assert_eq!(
            (
                r.energy,
                r.residue4,
                r.predicted4,
                r.lambda_half,
                r.half_in_d,
                r.hyperenergetic
            ),
            (6, 2, 2, Some(-3), true, false)
        );
        let r = energy_report(&spec(9, &[1]));
        assert_eq!(
            (
                r.energy,
                r.residue4,
                r.predicted4,
                r.lambda_half,
                r.hyperenergetic
            ),
            (12, 0, 0, None, false)
        );
        let r = energy_report(&spec(4, &[1]));
        assert_eq!(
            (
                r.energy,
                r.residue4,
                r.predicted4,
                r.lambda_half,
                r.half_in_d,
                r.hyperenergetic
            ),
            (4, 0, 0, Some(-2), false, false)
        );
    }

    #[test]
    fn positional_lambda_half_agrees() {
        for n in (2..80).step_by(2) {
            let divs: Vec<u64> = numt::divisors(n)
                .unwrap()
                .into_iter()
                .filter(|&d| d < n)
                .collect();
            for &d in &divs {
                let s = spec(n, &[d]);
                let sp = icg::spectrum(&s);
                assert_eq!(lambda_half(&s).unwrap(), sp.get(n as usize / 2));
            }
        }
    }
}
