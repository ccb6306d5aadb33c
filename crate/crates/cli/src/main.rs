//! `icg`: batch frontend for the icg-energy library.
//!
//! Exit status: 0 success, 1 usage error or malformed spec, 2 a check found
//! a counterexample (printed in full), 3 enumeration budget exceeded.

mod output;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use icg_energy::families;
use icg_energy::sweep::DEFAULT_BUDGET;
use icg_energy::{closed_forms, energy, icg, oracle, Error, IcgSpec};

use output::{Format, Sink};

#[derive(Debug, Parser)]
#[command(
    name = "icg",
    version,
    about = "Spectra and energies of integral circulant graphs"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Exact spectrum of one graph, indexed by j = 0..n-1.
    Spectrum(SpecArgs),
    /// Energy of one graph.
    Energy(SpecArgs),
    /// Energy, residue mod 4 and the predicted residue for one graph.
    Report(SpecArgs),
    /// Energy reports for every divisor set of each n.
    #[command(name = "mod4-sweep")]
    Mod4Sweep {
        #[command(flatten)]
        target: RangeArgs,
        #[command(flatten)]
        connected: Connected,
        #[command(flatten)]
        budget: Budget,
    },
    /// Closed-form energy of D = {1, p^γ} or {p, q} against the direct value.
    #[command(name = "closed-form")]
    ClosedForm(SpecArgs),
    /// Every closed form for 4 <= n <= N (or over --range).
    #[command(name = "cross-validate")]
    CrossValidate {
        #[command(flatten)]
        target: RangeArgs,
    },
    /// Equienergetic family for n, with direct energies and cospectrality.
    Family {
        #[command(flatten)]
        target: RangeArgs,
        #[arg(long, value_enum, default_value_t = Class::First)]
        class: Class,
    },
    /// Looks for distinct divisor sets with identical spectra.
    #[command(name = "so-check")]
    SoCheck {
        #[command(flatten)]
        target: RangeArgs,
        #[command(flatten)]
        budget: Budget,
    },
    /// Minimum energy over the divisor sets of n and its minimizers.
    #[command(name = "min-energy")]
    MinEnergy {
        #[command(flatten)]
        target: RangeArgs,
        /// Restrict to connected graphs [default: true].
        #[arg(long, num_args = 0..=1, default_missing_value = "true", value_name = "BOOL")]
        connected_only: Option<bool>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Exact spectra against the floating-point trig oracle.
    #[command(name = "verify-oracle")]
    VerifyOracle {
        /// A spec `n:d1,...`, an order `n`, or a range `a..b`.
        target: Option<String>,
        #[arg(long, value_name = "A..B")]
        range: Option<NRange>,
        #[arg(long, default_value_t = oracle::DEFAULT_TOL, value_parser = parse_tol, allow_hyphen_values = true)]
        tol: f64,
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Debug, Args)]
struct SpecArgs {
    /// Graph in canonical form `n:d1,d2,...` with ascending divisors.
    spec: IcgSpec,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct RangeArgs {
    /// An order `n` or an inclusive range `a..b`.
    target: Option<NRange>,
    #[arg(long, value_name = "A..B", conflicts_with = "target")]
    range: Option<NRange>,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct Budget {
    /// Maximum number of divisor sets enumerated for one n.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
}

#[derive(Debug, Args)]
struct Connected {
    /// Skip disconnected graphs.
    #[arg(long, num_args = 0..=1, default_missing_value = "true", value_name = "BOOL")]
    connected_only: Option<bool>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Class {
    First,
    Second,
}

/// Inclusive range of orders. A bare `n` is the range `n..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct NRange {
    lo: u64,
    hi: u64,
    single: bool,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| format!("bad order {t:?}: {e}"))
        };
        let (lo, hi, single) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?, false),
            None => {
                let n = num(s)?;
                (n, n, true)
            }
        };
        if lo < 2 {
            return Err(format!("orders start at 2, got {lo}"));
        }
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(NRange { lo, hi, single })
    }
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
        Ok(t) => Err(format!("tolerance must be finite and nonnegative, got {t}")),
        Err(e) => Err(e.to_string()),
    }
}

impl RangeArgs {
    fn resolve(&self) -> Result<NRange, Failure> {
        self.target
            .or(self.range)
            .ok_or_else(|| Failure::Usage("an order n or --range a..b is required".into()))
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

#[derive(Serialize)]
struct SpectrumOut<'a> {
    n: u64,
    #[serde(rename = "D")]
    divisors: &'a [u64],
    spectrum: &'a [i64],
}

#[derive(Serialize)]
struct EnergyOut<'a> {
    n: u64,
    #[serde(rename = "D")]
    divisors: &'a [u64],
    energy: u64,
}

/// Runs the verb; `Ok(false)` means a counterexample was printed.
fn run(verb: Verb, out: impl Write) -> Result<bool, Failure> {
    let mut ok = true;
    match verb {
        Verb::Spectrum(a) => {
            let sp = icg::spectrum(&a.spec);
            let mut sink = Sink::new(a.format.format, out);
            sink.push(&SpectrumOut {
                n: a.spec.n(),
                divisors: a.spec.divisors(),
                spectrum: sp.values(),
            })?;
            sink.finish()?;
        }
        Verb::Energy(a) => {
            let mut sink = Sink::new(a.format.format, out);
            sink.push(&EnergyOut {
                n: a.spec.n(),
                divisors: a.spec.divisors(),
                energy: energy::energy(&a.spec),
            })?;
            sink.finish()?;
        }
        Verb::Report(a) => {
            let r = energy::energy_report(&a.spec);
            ok = r.conforms();
            let mut sink = Sink::new(a.format.format, out);
            sink.push(&r)?;
            sink.finish()?;
        }
        Verb::Mod4Sweep {
            target,
            connected,
            budget,
        } => {
            let range = target.resolve()?;
            let mut sink = Sink::new(target.format.format, out);
            for n in range.lo..=range.hi {
                let rows = energy::mod4_sweep(
                    n,
                    connected.connected_only.unwrap_or(false),
                    budget.budget,
                )?;
                for r in &rows {
                    ok &= r.conforms();
                    sink.push(r)?;
                }
            }
            sink.finish()?;
        }
        Verb::ClosedForm(a) => {
            let params = closed_forms::params_of(&a.spec)?;
            let row = closed_forms::compare_case(a.spec.n(), params)?;
            ok = row.matches;
            let mut sink = Sink::new(a.format.format, out);
            sink.push(&row)?;
            sink.finish()?;
        }
        Verb::CrossValidate { target } => {
            let range = target.resolve()?;
            let lo = if range.single { 4 } else { range.lo };
            let rows = closed_forms::cross_validate_range(lo, range.hi)?;
            let mut sink = Sink::new(target.format.format, out);
            for r in &rows {
                ok &= r.matches;
                sink.push(r)?;
            }
            sink.finish()?;
        }
        Verb::Family { target, class } => {
            let range = target.resolve()?;
            let build = match class {
                Class::First => families::equienergetic_family,
                Class::Second => families::equienergetic_family_second,
            };
            let mut sink = Sink::new(target.format.format, out);
            for n in range.lo..=range.hi {
                match build(n) {
                    Ok(r) => {
                        ok &= r.verified();
                        sink.push(&r)?;
                    }
                    // over a range, orders without a family are skipped
                    Err(Error::Precondition(_)) if !range.single => {}
                    Err(e) => return Err(e.into()),
                }
            }
            sink.finish()?;
        }
        Verb::SoCheck { target, budget } => {
            let range = target.resolve()?;
            let mut sink = Sink::new(target.format.format, out);
            for n in range.lo..=range.hi {
                let r = families::so_conjecture_check(n, budget.budget)?;
                ok &= r.verified();
                sink.push(&r)?;
            }
            sink.finish()?;
        }
        Verb::MinEnergy {
            target,
            connected_only,
            budget,
        } => {
            let range = target.resolve()?;
            let mut sink = Sink::new(target.format.format, out);
            for n in range.lo..=range.hi {
                let r =
                    families::min_energy_search(n, connected_only.unwrap_or(true), budget.budget)?;
                ok &= r.conjecture_holds != Some(false);
                sink.push(&r)?;
            }
            sink.finish()?;
        }
        Verb::VerifyOracle {
            target,
            range,
            tol,
            budget,
            format,
        } => {
            let mut sink = Sink::new(format.format, out);
            let mut emit = |checks: Vec<oracle::OracleCheck>| -> io::Result<()> {
                for c in &checks {
                    ok &= c.comparison.passed;
                    sink.push(c)?;
                }
                Ok(())
            };
            match (target, range) {
                (Some(_), Some(_)) => {
                    return Err(Failure::Usage(
                        "give either a target or --range, not both".into(),
                    ))
                }
                (None, None) => {
                    return Err(Failure::Usage(
                        "a spec, an order n or --range a..b is required".into(),
                    ))
                }
                (Some(t), None) if t.contains(':') => {
                    let spec: IcgSpec = t.parse()?;
                    emit(vec![oracle::check_spec(&spec, tol)?])?;
                }
                (t, r) => {
                    let range = match (t, r) {
                        (Some(t), _) => t.parse::<NRange>().map_err(Failure::Usage)?,
                        (None, Some(r)) => r,
                        (None, None) => unreachable!(),
                    };
                    for n in range.lo..=range.hi {
                        emit(oracle::check_all(n, tol, budget.budget)?)?;
                    }
                }
            }
            sink.finish()?;
        }
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let out = BufWriter::new(stdout.lock());
    match run(cli.verb, out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("icg: counterexample found");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e @ Error::BudgetExceeded { .. })) => {
            eprintln!("icg: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("icg: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("icg: {msg}");
            ExitCode::from(1)
        }
        // a closed pipe downstream is not an error of ours
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("icg: {e}");
            ExitCode::from(1)
        }
    }
}
