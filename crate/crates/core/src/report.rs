//! Parallel sweeps over partitions and their JSON / CSV output.

use std::fmt;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::theorems::{Status, VerificationReport, Verifier};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub total: usize,
    pub passed: usize,
    pub degenerate: usize,
    pub failed: usize,
}

impl SweepSummary {
    pub fn from_reports(reports: &[VerificationReport]) -> Self {
        let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
        Self {
            total: reports.len(),
            passed: count(Status::Pass),
            degenerate: count(Status::Degenerate),
            failed: count(Status::Mismatch),
        }
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "total {} / passed {} / degenerate-skipped {} / failed {}",
            self.total, self.passed, self.degenerate, self.failed
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepOutcome {
    pub family: String,
    pub summary: SweepSummary,
    pub reports: Vec<VerificationReport>,
}

/// Verifies every partition, using `jobs` worker threads (rayon's default when `None`).
///
/// Reports come back sorted by weight, length, then parts, whatever the thread count.
pub fn sweep(
    verifier: &Verifier,
    partitions: &[Partition],
    jobs: Option<usize>,
) -> Result<SweepOutcome> {
    let run = || {
        partitions
            .par_iter()
            .map(|lam| verifier.verify(lam))
            .collect::<Result<Vec<_>>>()
    };
    let mut reports = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Io(format!("cannot start worker threads: {e}")))?
            .install(run)?,
        None => run()?,
    };
    reports.sort_by(|a, b| a.partition.sweep_key().cmp(&b.partition.sweep_key()));
    Ok(SweepOutcome {
        family: verifier.family().label(),
        summary: SweepSummary::from_reports(&reports),
        reports,
    })
}

pub const CSV_COLUMNS: [&str; 9] = [
    "family",
    "partition",
    "k",
    "d_lambda",
    "predicted",
    "exact",
    "origin_mult",
    "degenerate",
    "pass",
];

fn join(v: &[usize]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn write_csv<W: Write>(reports: &[VerificationReport], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Io(format!("csv output: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS).map_err(io)?;
    for r in reports {
        w.write_record([
            r.family.clone(),
            r.partition.to_string(),
            join(&r.k),
            r.d_lambda.to_string(),
            r.predicted.total().to_string(),
            r.exact_count.to_string(),
            r.exact_origin_mult.to_string(),
            r.degenerate.to_string(),
            r.pass.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::Io(format!("csv output: {e}")))?;
    Ok(())
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize to JSON")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;
    use crate::partition::enumerate_partitions;
    use crate::rational::rat;

    #[test]
    fn small_hermite_sweep_passes() {
        let parts = enumerate_partitions(4, 2);
        let out = sweep(&Verifier::new(Family::hermite()), &parts, Some(2)).unwrap();
        assert_eq!(out.summary.failed, 0);
        assert_eq!(out.summary.degenerate, 0);
        assert_eq!(out.summary.passed, parts.len());
        let r = out
            .reports
            .iter()
            .find(|r| r.partition.parts() == [1, 2])
            .unwrap();
        assert_eq!(r.exact_origin_mult, 3);
    }

    #[test]
    fn small_laguerre_sweep_passes() {
        let parts = enumerate_partitions(4, 4);
        let fam = Family::laguerre(rat(1, 3)).unwrap();
        let out = sweep(&Verifier::new(fam), &parts, None).unwrap();
        assert_eq!(
            out.summary.failed + out.summary.degenerate,
            0,
            "{}",
            out.summary
        );
    }

    #[test]
    fn output_does_not_depend_on_thread_count() {
        let parts = enumerate_partitions(5, 3);
        let v = Verifier::new(Family::hermite());
        let one = sweep(&v, &parts, Some(1)).unwrap();
        let four = sweep(&v, &parts, Some(4)).unwrap();
        assert_eq!(to_json(&one), to_json(&four));
        let (mut a, mut b) = (Vec::new(), Vec::new());
        write_csv(&one.reports, &mut a).unwrap();
        write_csv(&four.reports, &mut b).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert!(text.starts_with(
            "family,partition,k,d_lambda,predicted,exact,origin_mult,degenerate,pass\n"
        ));
    }
}
