//! Exact spectra and energies of integral circulant graphs.
//!
//! An integral circulant graph `ICG_n(D)` lives on `Z_n`; two vertices are
//! adjacent when the gcd of their difference with `n` lies in `D`, a set of
//! proper divisors of `n`. Its eigenvalues are integers, computed here from
//! Ramanujan sums without floating point:
//!
//! ```
//! use icg_energy::{energy, icg};
//!
//! let spec: icg::IcgSpec = "6:1,3".parse()?;
//! assert_eq!(icg::spectrum(&spec).values(), &[3, 0, 0, -3, 0, 0]);
//! assert_eq!(energy::energy(&spec), 6);
//! # Ok::<(), icg_energy::Error>(())
//! ```
//!
//! Modules:
//!
//! * [`numt`]: gcd, factorization, totient, Möbius, divisors, Ramanujan sums.
//! * [`icg`]: validated specs, symbol sets, adjacency, spectra, components.
//! * [`oracle`]: floating-point circulant eigenvalues and spectral moments.
//! * [`energy`]: energy, the residue mod 4 and hyperenergetic graphs.
//! * [`closed_forms`]: closed-form energies for `{1, p^γ}` and `{p, q}`.
//! * [`families`]: equienergetic families, cospectrality, extremal search.
//! * [`sweep`]: budgeted enumeration of all divisor sets of one `n`.
//!
//! The `book/` directory at the repository root walks through the
//! mathematics; its code listings are compiled as doc-tests of this crate.

pub mod closed_forms;
pub mod energy;
mod error;
pub mod families;
pub mod icg;
pub mod numt;
pub mod oracle;
pub mod sweep;

pub use error::{Error, Result};
pub use icg::{IcgSpec, Spectrum};

// Book chapters compiled as doc-tests, one module per chapter so a failure
// points at its source file.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    mod arithmetic {}
    #[doc = include_str!("../../../book/src/spectra.md")]
    mod spectra {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/energy.md")]
    mod energy {}
    #[doc = include_str!("../../../book/src/closed_forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
