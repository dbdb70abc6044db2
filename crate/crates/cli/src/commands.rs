use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::json;

use wronski::families::Family;
use wronski::partition::{parse_list, Partition};
use wronski::polyalg::Interval;
use wronski::rational::{parse_rational, parse_rational_list_json, Rational};
use wronski::report::{sweep, to_json, write_csv};
use wronski::theorems::{
    duality_check, felder_counts, karlin_szego_check, predicted_count_generic, Status,
    VerificationReport, Verifier,
};

use crate::args::{FamilyArgs, FamilyName, Format, SweepArgs, SweepFile};
use crate::failure::{Failure, Outcome};

/// Where and how a command writes its report.
pub struct Sink {
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl Sink {
    fn write(&self, bytes: &[u8]) -> Result<(), Failure> {
        match &self.output {
            Some(path) => fs::write(path, bytes)
                .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display()))),
            None => io::stdout()
                .write_all(bytes)
                .map_err(|e| Failure::io(format!("cannot write to stdout: {e}"))),
        }
    }

    fn json<T: Serialize>(&self, value: &T) -> Result<(), Failure> {
        if self.format == Format::Csv {
            return Err(Failure::usage("--format csv is only available for sweep"));
        }
        let mut text = to_json(value);
        text.push('\n');
        self.write(text.as_bytes())
    }
}

fn rational_arg(name: &str, value: Option<&str>) -> Result<Rational, Failure> {
    let value =
        value.ok_or_else(|| Failure::usage(format!("--{name} is required for this family")))?;
    parse_rational(value).map_err(|e| Failure::usage(format!("--{name}: {e}")))
}

fn read_moments(path: &Path) -> Result<Vec<Rational>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read moments file {}: {e}", path.display())))?;
    parse_rational_list_json(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn moment_family(path: &Path, support: Option<&str>) -> Result<Family, Failure> {
    let support = support
        .ok_or_else(|| Failure::usage("--support is required with moments, e.g. --support 0,1"))?;
    let support =
        Interval::parse(support).map_err(|e| Failure::usage(format!("--support: {e}")))?;
    Ok(Family::from_moments(read_moments(path)?, support)?)
}

pub fn build_family(args: &FamilyArgs) -> Result<Family, Failure> {
    let name = match (args.family, &args.moments) {
        (Some(name), _) => name,
        (None, Some(_)) => FamilyName::Moments,
        (None, None) => {
            return Err(Failure::usage(
                "--family is required (hermite, laguerre, jacobi or moments)",
            ))
        }
    };
    match name {
        FamilyName::Hermite => Ok(Family::hermite()),
        FamilyName::Laguerre => Ok(Family::laguerre(rational_arg(
            "alpha",
            args.alpha.as_deref(),
        )?)?),
        FamilyName::Jacobi => Ok(Family::jacobi(
            rational_arg("alpha", args.alpha.as_deref())?,
            rational_arg("beta", args.beta.as_deref())?,
        )?),
        FamilyName::Moments => {
            let path = args.moments.as_deref().ok_or_else(|| {
                Failure::usage("--moments FILE is required for the moments family")
            })?;
            moment_family(path, args.support.as_deref())
        }
    }
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    text.parse()
        .map_err(|e| Failure::usage(format!("--partition {text:?}: {e}")))
}

fn verdict(report: &VerificationReport) -> Outcome {
    eprintln!(
        "{} {}: predicted {}, exact {}, origin multiplicity {}, {:?}",
        report.family,
        report.partition,
        report.predicted.total(),
        report.exact_count,
        report.exact_origin_mult,
        report.status
    );
    match report.status {
        Status::Pass => Outcome::Pass,
        Status::Mismatch => Outcome::Mismatch,
        Status::Degenerate => Outcome::Degenerate,
    }
}

fn verifier(fam: Family, probes: Option<usize>) -> Verifier {
    Verifier::new(fam).with_probe_count(probes.unwrap_or(Verifier::DEFAULT_PROBES))
}

pub fn verify(
    sink: &Sink,
    family: &FamilyArgs,
    partition: &str,
    probes: Option<usize>,
) -> Result<Outcome, Failure> {
    let lam = parse_partition(partition)?;
    let fam = build_family(family)?;
    let report = verifier(fam, probes).verify(&lam)?;
    sink.json(&report)?;
    Ok(verdict(&report))
}

pub fn moments(
    sink: &Sink,
    file: &Path,
    support: Option<&str>,
    partition: &str,
    probes: Option<usize>,
) -> Result<Outcome, Failure> {
    let lam = parse_partition(partition)?;
    let fam = moment_family(file, support)?;
    let report = verifier(fam, probes).verify(&lam)?;
    sink.json(&report)?;
    Ok(verdict(&report))
}

fn read_config(path: &Path) -> Result<SweepFile, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("config {}: {e}", path.display())))
}

pub fn sweep_cmd(
    output: Option<PathBuf>,
    format: Option<Format>,
    cli_jobs: Option<usize>,
    args: &SweepArgs,
) -> Result<Outcome, Failure> {
    let file = match &args.config {
        Some(path) => read_config(path)?,
        None => SweepFile::default(),
    };
    let family = FamilyArgs {
        family: args.family.family.or(file.family),
        alpha: args.family.alpha.clone().or(file.alpha),
        beta: args.family.beta.clone().or(file.beta),
        moments: args.family.moments.clone().or(file.moments),
        support: args.family.support.clone().or(file.support),
    };
    let max_weight = args
        .max_weight
        .or(file.max_weight)
        .ok_or_else(|| Failure::usage("--max-weight is required"))?;
    let max_length = args.max_length.or(file.max_length).unwrap_or(max_weight);
    let jobs = cli_jobs.or(file.jobs);
    if max_weight == 0 || max_length == 0 {
        return Err(Failure::usage(
            "--max-weight and --max-length must be at least 1",
        ));
    }
    if jobs == Some(0) {
        return Err(Failure::usage("--jobs must be at least 1"));
    }
    let sink = Sink {
        output: output.or(file.output),
        format: format.or(file.format).unwrap_or(Format::Json),
    };

    let fam = build_family(&family)?;
    let partitions = wronski::partition::enumerate_partitions(max_weight, max_length);
    let outcome = sweep(
        &verifier(fam, args.probes.or(file.probes)),
        &partitions,
        jobs,
    )?;
    match sink.format {
        Format::Json => {
            let mut text = to_json(&outcome);
            text.push('\n');
            sink.write(text.as_bytes())?;
        }
        Format::Csv => {
            let mut buf = Vec::new();
            write_csv(&outcome.reports, &mut buf)?;
            sink.write(&buf)?;
        }
    }
    eprintln!("{}: {}", outcome.family, outcome.summary);
    Ok(if outcome.summary.failed == 0 {
        Outcome::Pass
    } else {
        Outcome::Mismatch
    })
}

pub fn felder(sink: &Sink, mu: &str) -> Result<Outcome, Failure> {
    let mu = parse_list(mu).map_err(|e| Failure::usage(format!("--mu: {e}")))?;
    let c = felder_counts(&mu)?;
    let expected = c.expected_imaginary();
    eprintln!(
        "real {} (expected 0), imaginary {} (expected {expected})",
        c.real, c.imaginary
    );
    sink.json(&json!({
        "mu": c.mu,
        "partition": c.partition,
        "real": c.real,
        "expected_real": 0,
        "imaginary": c.imaginary,
        "expected_imaginary": expected,
        "agrees": c.agrees(),
    }))?;
    Ok(if c.agrees() {
        Outcome::Pass
    } else {
        Outcome::Mismatch
    })
}

pub fn duality(sink: &Sink, partition: &str) -> Result<Outcome, Failure> {
    let lam = parse_partition(partition)?;
    let r = duality_check(&lam)?;
    match &r.constant {
        Some(c) => eprintln!(
            "holds with constant {}",
            wronski::rational::format_rational(c)
        ),
        None => eprintln!("does not hold"),
    }
    sink.json(&r)?;
    Ok(if r.holds {
        Outcome::Pass
    } else {
        Outcome::Mismatch
    })
}

pub fn karlin(sink: &Sink, family: &FamilyArgs, n: usize, ell: usize) -> Result<Outcome, Failure> {
    if ell == 0 {
        return Err(Failure::usage("--ell must be at least 1"));
    }
    let fam = build_family(family)?;
    let r = karlin_szego_check(&fam, n, ell)?;
    let expected = predicted_count_generic(&Partition::constant(n, ell)?);
    let agrees = r.count == expected
        && r.all_simple
        && (expected == 0 || r.interlaces_with_next == Some(true));
    eprintln!(
        "{} roots (expected {expected}), interlaces with next: {}",
        r.count,
        r.interlaces_with_next
            .map_or("n/a".to_string(), |b| b.to_string())
    );
    sink.json(&json!({
        "family": fam.label(),
        "n": r.n,
        "ell": r.ell,
        "count": r.count,
        "expected_count": expected,
        "all_simple": r.all_simple,
        "next_count": r.next_count,
        "interlaces_with_next": r.interlaces_with_next,
        "agrees": agrees,
    }))?;
    Ok(if agrees {
        Outcome::Pass
    } else {
        Outcome::Mismatch
    })
}
