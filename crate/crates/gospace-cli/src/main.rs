//! Command-line front end: loads space and family files, runs the exact
//! checks, prints one JSON report to standard output and a short human
//! summary to standard error.
//!
//! Exit codes: 0 success, 1 a checked property is refuted or violated,
//! 2 bad input or a validation failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gospace::family::{complexify, family_verify, inclusion_audit, load_family};
use gospace::geodesic::{check_omega_realform, go_verdict, GoMode};
use gospace::invariants::invariants_report;
use gospace::natred::natred_report;
use gospace::pbw::commutator_report;
use gospace::report::{AnalyzeReport, FamilyReport, GoReport, SymmetricPairReport};
use gospace::space::Field;
use gospace::{Error, ReductiveSpace, SpaceFile};

#[derive(Parser)]
#[command(
    name = "gospace",
    version,
    about = "exact geodesic-orbit and reductivity checks for homogeneous spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural validation report for a space file
    Validate { file: PathBuf },
    /// Full report: validation, signature, symmetric pair, geodesic orbit
    /// verdict, natural reductivity, invariant dimensions, commutators, and
    /// the tag audit. Family files get the family verification report.
    Analyze { file: PathBuf },
    /// Geodesic orbit verdict: refute, sample, or certify
    CheckGo {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        bound: i64,
    },
    /// Exact natural reductivity decision
    CheckNatred { file: PathBuf },
    /// Dimensions of isotropy-invariant symmetric polynomials per degree
    Invariants {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Commutator scan of symmetrized invariants in the enveloping algebra
    Commutators {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Write the complexified space (the crown) as a space file
    Complexify { file: PathBuf },
    /// Extract and cross-check every member of a real form family
    FamilyVerify {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sample the completion variety on a space and its crown and compare
    SampleOmega {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Auto,
    Refute,
    Sample,
    Certify,
}

impl From<ModeArg> for GoMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Auto => GoMode::Auto,
            ModeArg::Refute => GoMode::Refute,
            ModeArg::Sample => GoMode::Sample,
            ModeArg::Certify => GoMode::Certify,
        }
    }
}

const DEFAULT_SAMPLES: usize = 200;
const DEFAULT_SEED: u64 = 0;
const DEFAULT_BOUND: i64 = 10;
const DEFAULT_DEGREE: usize = 4;

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() {
    if let Ok(text) = std::env::var("GOSPACE_THREADS") {
        if let Ok(n) = text.parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Error> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn load_space(path: &Path) -> Result<ReductiveSpace, Error> {
    let file = SpaceFile::read(path)?;
    let space = ReductiveSpace::from_file(&file)?;
    let report = space.validate();
    if !report.valid {
        let checks: Vec<&str> = report.failures.iter().map(|f| f.check.as_str()).collect();
        return Err(Error::input(format!(
            "{} fails validation: {}",
            space.name(),
            checks.join(", ")
        )));
    }
    Ok(space)
}

fn is_family_file(path: &Path) -> Result<bool, Error> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    Ok(value.get("members").is_some())
}

fn go_notes(space: &ReductiveSpace, report: &GoReport) {
    match report.mode.as_str() {
        "certified_linear" => {
            eprintln!(
                "note: the certificate solves the completion system with zero affine part; \
                 null initial directions are covered only by the sampled re-check"
            );
        }
        "refuted" | "sampled_consistent" if space.field() == Field::Rational => {
            eprintln!(
                "note: the null candidate stream is empty over the rationals; it contributes \
                 only on gaussian-field spaces"
            );
        }
        _ => {}
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Validate { file } => {
            let space_file = SpaceFile::read(&file)?;
            let space = ReductiveSpace::from_file(&space_file)?;
            let report = space.validate();
            print_json(&report)?;
            if report.valid {
                eprintln!("{}: valid", space.name());
                Ok(0)
            } else {
                eprintln!("{}: {} failed checks", space.name(), report.failures.len());
                Ok(2)
            }
        }
        Command::Analyze { file } => {
            if is_family_file(&file)? {
                let family = load_family(&file)?;
                let report = family_verify(
                    &family,
                    DEFAULT_SAMPLES,
                    DEFAULT_SEED,
                    DEFAULT_BOUND,
                    DEFAULT_DEGREE,
                );
                let code = family_exit(&report);
                print_json(&report)?;
                Ok(code)
            } else {
                analyze_space(&file)
            }
        }
        Command::CheckGo {
            file,
            mode,
            samples,
            seed,
            bound,
        } => {
            let space = load_space(&file)?;
            let report = go_verdict(&space, mode.into(), samples, seed, bound);
            print_json(&report)?;
            eprintln!(
                "{}: {} ({} samples, {} failures)",
                space.name(),
                report.mode,
                report.samples.tested,
                report.samples.failed
            );
            go_notes(&space, &report);
            Ok(if report.mode == "refuted" { 1 } else { 0 })
        }
        Command::CheckNatred { file } => {
            let space = load_space(&file)?;
            let report = natred_report(&space);
            print_json(&report)?;
            eprintln!(
                "{}: {}naturally reductive",
                space.name(),
                if report.natred { "" } else { "not " }
            );
            let failed = !report.natred || report.consistent == Some(false);
            Ok(if failed { 1 } else { 0 })
        }
        Command::Invariants { file, max_degree } => {
            let space = load_space(&file)?;
            let report = invariants_report(&space, max_degree);
            print_json(&report)?;
            eprintln!("{}: invariant dimensions {:?}", space.name(), report.dims);
            Ok(if report.consistent == Some(false) { 1 } else { 0 })
        }
        Command::Commutators { file, max_degree } => {
            let space = load_space(&file)?;
            let report = commutator_report(&space, max_degree);
            print_json(&report)?;
            eprintln!("{}: {}", space.name(), report.status);
            let failed =
                !report.refutations.is_empty() || report.crown_consistent == Some(false);
            Ok(if failed { 1 } else { 0 })
        }
        Command::Complexify { file } => {
            let space = load_space(&file)?;
            let crown = complexify(&space)?;
            print_json(&crown.to_file())?;
            eprintln!("{}: crown {}", space.name(), crown.name());
            Ok(0)
        }
        Command::FamilyVerify {
            file,
            samples,
            seed,
        } => {
            let family = load_family(&file)?;
            let report = family_verify(&family, samples, seed, DEFAULT_BOUND, DEFAULT_DEGREE);
            let code = family_exit(&report);
            print_json(&report)?;
            Ok(code)
        }
        Command::SampleOmega {
            file,
            samples,
            seed,
        } => {
            let space = load_space(&file)?;
            let report = check_omega_realform(&space, samples, seed, DEFAULT_BOUND)?;
            print_json(&report)?;
            eprintln!(
                "{}: {} samples, {} discrepancies against the crown",
                space.name(),
                report.samples.tested,
                report.discrepancies
            );
            Ok(if report.discrepancies > 0 { 1 } else { 0 })
        }
    }
}

fn family_exit(report: &FamilyReport) -> u8 {
    eprintln!(
        "{}: {} members, {} violations",
        report.family,
        report.members.len(),
        report.violations.len()
    );
    for violation in &report.violations {
        eprintln!("violation: {violation}");
    }
    if report.violations.is_empty() {
        0
    } else {
        1
    }
}

fn analyze_space(path: &Path) -> Result<u8, Error> {
    let space_file = SpaceFile::read(path)?;
    let space = ReductiveSpace::from_file(&space_file)?;
    let validation = space.validate();
    if !validation.valid {
        print_json(&validation)?;
        eprintln!(
            "{}: invalid space, {} failed checks",
            space.name(),
            validation.failures.len()
        );
        return Ok(2);
    }
    let (sig_plus, sig_minus) = space.signature();
    let (symmetric, witness) = space.is_symmetric_pair();
    let go = go_verdict(&space, GoMode::Auto, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_BOUND);
    let natred = natred_report(&space);
    let invariants = invariants_report(&space, DEFAULT_DEGREE);
    let commutators = commutator_report(&space, DEFAULT_DEGREE);
    let audit = inclusion_audit(&space, &go, natred.natred, symmetric);

    let inconsistent = natred.consistent == Some(false)
        || invariants.consistent == Some(false)
        || commutators.crown_consistent == Some(false);
    let failed = inconsistent || !audit.errors.is_empty();

    eprintln!(
        "{}: signature ({sig_plus}, {sig_minus}); go {}; {}naturally reductive; {}; audit {}",
        space.name(),
        go.mode,
        if natred.natred { "" } else { "not " },
        commutators.status,
        if audit.errors.is_empty() { "clean" } else { "FAILED" }
    );
    go_notes(&space, &go);
    for error in &audit.errors {
        eprintln!("audit: {error}");
    }

    let report = AnalyzeReport {
        space: space.name().to_string(),
        validation,
        signature: [sig_plus, sig_minus],
        symmetric_pair: SymmetricPairReport {
            symmetric,
            witness: witness.map(|(i, j)| [i, j]),
        },
        go,
        natred,
        invariants,
        commutators,
        inclusion_audit: audit,
    };
    print_json(&report)?;
    Ok(if failed { 1 } else { 0 })
}
