//! Zero-count predictors, admissibility predicates and end-to-end verification.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{Family, FamilyKind};
use crate::partition::{conjugate, d_lambda, doubled_partition, MultiIndex, Partition};
use crate::polyalg::{
    gcd, is_x, ord_at, rotate_imaginary, squarefree_decomposition, sturm_count,
    sturm_count_detailed, Interval, IsolatedRoot, RatPoly, RootIsolator,
};
use crate::rational::{self, Rational};
use crate::wronskian::WronskianEngine;

/// `Σ_j (−1)^{ℓ−j} λ_j`, the number of simple zeros in the orthogonality interval
/// for a non-symmetric family.
pub fn predicted_count_generic(lam: &Partition) -> usize {
    let alt = alternating_sum(lam);
    assert!(alt >= 0, "alternating sum of {lam} is negative");
    alt as usize
}

fn alternating_sum(lam: &Partition) -> i64 {
    let l = lam.len();
    lam.parts()
        .iter()
        .enumerate()
        .map(|(j, &p)| {
            if (l - 1 - j).is_multiple_of(2) {
                p as i64
            } else {
                -(p as i64)
            }
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricPrediction {
    pub origin_multiplicity: usize,
    pub positive_count: usize,
    pub negative_count: usize,
    pub total_distinct: usize,
}

/// Root structure of the Wronskian for an even weight.
///
/// Fails with `NonIntegerResult` if the positive-root formula does not produce
/// a nonnegative integer.
pub fn predicted_symmetric(lam: &Partition) -> Result<SymmetricPrediction> {
    let d = d_lambda(lam);
    let alt = alternating_sum(lam);
    let parity = (lam.len() % 2) as i64;
    // n₊ = ½(alt − |d + ℓ mod 2| / 2)
    let numer = 2 * alt - (d + parity).abs();
    if numer < 0 || numer % 4 != 0 {
        return Err(Error::NonIntegerResult {
            what: "positive root count",
            value: rational::format_rational(&rational::rat(numer, 4)),
        });
    }
    let positive = (numer / 4) as usize;
    let origin = (d * (d + 1) / 2) as usize;
    Ok(SymmetricPrediction {
        origin_multiplicity: origin,
        positive_count: positive,
        negative_count: positive,
        total_distinct: 2 * positive + usize::from(origin > 0),
    })
}

/// Maximal runs of consecutive integers, as `(start, length)`.
fn runs(k: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &x in k {
        match out.last_mut() {
            Some((start, len)) if *start + *len == x => *len += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// True iff `k` is a run starting at 0 (optional) followed by runs of even length.
pub fn adler_admissible(k: &MultiIndex) -> bool {
    runs(k.indices())
        .iter()
        .all(|&(start, len)| start == 0 || len % 2 == 0)
}

/// True iff `Π (n − k_j) ≥ 0` for every natural `n`.
///
/// Only the sign matters: the product vanishes on `k` and otherwise has sign
/// `(−1)^{#{k_j > n}}`, which is constant once `n > k_ℓ`.
pub fn krein_nonnegative(k: &MultiIndex) -> bool {
    let top = k.indices().last().copied().unwrap_or(0);
    (0..=top + 1)
        .all(|n| k.contains(n) || k.indices().iter().filter(|&&kj| kj > n).count() % 2 == 0)
}

/// A common root of two Wronskians inside the orthogonality interval.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegeneracyWitness {
    /// Degrees (column order) of the first Wronskian.
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    /// Their gcd, with the `x` factor removed for symmetric families.
    pub common_factor: RatPoly,
    pub roots_in_interval: usize,
}

fn common_root_witness(
    fam: &Family,
    (first, p): (&[usize], &RatPoly),
    (second, q): (&[usize], &RatPoly),
) -> Result<Option<DegeneracyWitness>> {
    let mut g = gcd(p, q)?;
    if fam.is_symmetric() {
        g = g.strip_origin();
    }
    let n = sturm_count(&g, fam.interval())?;
    Ok((n > 0).then(|| DegeneracyWitness {
        first: first.to_vec(),
        second: second.to_vec(),
        common_factor: g,
        roots_in_interval: n,
    }))
}

/// Common roots in the interval between `f_λ` and `f_{λ,m}` for each probe `m`,
/// and between `f_{λ,m}` and `f_{λ,n}` for each probe pair.
pub fn degeneracy_scan(
    fam: &Family,
    lam: &Partition,
    probes: &[usize],
) -> Result<Vec<DegeneracyWitness>> {
    let engine = WronskianEngine::new(fam.clone());
    let base = engine.wronskian_det(lam)?;
    scan_with(&engine, lam, &base.poly, probes)
}

fn scan_with(
    engine: &WronskianEngine,
    lam: &Partition,
    base: &RatPoly,
    probes: &[usize],
) -> Result<Vec<DegeneracyWitness>> {
    let fam = engine.family();
    let k = lam.to_multi_index();
    let extended = probes
        .iter()
        .map(|&m| engine.append_index(lam, m))
        .collect::<Result<Vec<_>>>()?;
    let mut witnesses = Vec::new();
    for ext in &extended {
        if let Some(w) = common_root_witness(fam, (k.indices(), base), (&ext.columns, &ext.poly))? {
            witnesses.push(w);
        }
    }
    for (i, a) in extended.iter().enumerate() {
        for b in &extended[i + 1..] {
            if let Some(w) = common_root_witness(fam, (&a.columns, &a.poly), (&b.columns, &b.poly))?
            {
                witnesses.push(w);
            }
        }
    }
    Ok(witnesses)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Simplicity {
    /// Every repeated factor, real or complex, is a power of `x`.
    pub all_simple_except_origin: bool,
    pub origin_mult: usize,
}

pub fn simplicity_of(w: &RatPoly) -> Result<Simplicity> {
    let factors = squarefree_decomposition(w)?;
    Ok(Simplicity {
        all_simple_except_origin: factors
            .iter()
            .all(|f| f.multiplicity == 1 || is_x(&f.factor)),
        origin_mult: ord_at(w, &Rational::zero())?,
    })
}

pub fn simplicity_check(fam: &Family, lam: &Partition) -> Result<Simplicity> {
    let w = WronskianEngine::new(fam.clone()).wronskian_det(lam)?;
    simplicity_of(&w.poly)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Prediction {
    Generic { count: usize },
    Symmetric(SymmetricPrediction),
}

impl Prediction {
    /// Predicted number of distinct roots in the orthogonality interval.
    pub fn total(&self) -> usize {
        match self {
            Prediction::Generic { count } => *count,
            Prediction::Symmetric(s) => s.total_distinct,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Mismatch,
    Degenerate,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EndpointRoots {
    pub lo: bool,
    pub hi: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub family: String,
    pub partition: Partition,
    pub k: Vec<usize>,
    pub d_lambda: i64,
    pub wronskian: RatPoly,
    pub predicted: Prediction,
    pub exact_count: usize,
    /// Distinct roots in the positive / negative part of the interval (symmetric families).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_positive: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_negative: Option<usize>,
    pub exact_origin_mult: usize,
    /// Multiplicity of each distinct root in the interval, left to right.
    pub root_multiplicities: Vec<usize>,
    pub endpoint_roots: EndpointRoots,
    pub simplicity: Simplicity,
    pub probes: Vec<usize>,
    pub degenerate: bool,
    pub witnesses: Vec<DegeneracyWitness>,
    pub status: Status,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// Runs full verifications for one family, sharing a derivative cache.
#[derive(Debug)]
pub struct Verifier {
    engine: WronskianEngine,
    probe_count: usize,
}

impl Verifier {
    pub const DEFAULT_PROBES: usize = 2;

    pub fn new(fam: Family) -> Self {
        Self {
            engine: WronskianEngine::new(fam),
            probe_count: Self::DEFAULT_PROBES,
        }
    }

    pub fn with_probe_count(mut self, probe_count: usize) -> Self {
        self.probe_count = probe_count;
        self
    }

    pub fn family(&self) -> &Family {
        self.engine.family()
    }

    pub fn engine(&self) -> &WronskianEngine {
        &self.engine
    }

    pub fn verify(&self, lam: &Partition) -> Result<VerificationReport> {
        let fam = self.engine.family();
        let iv = fam.interval();
        let w = self.engine.wronskian_det(lam)?.poly;
        let k = lam.to_multi_index();

        let roots = RootIsolator::new(&w, iv)?.isolate();
        let detail = sturm_count_detailed(&w, iv)?;
        debug_assert_eq!(detail.count, roots.len());
        let zero = Rational::zero();
        let simplicity = simplicity_of(&w)?;
        let origin_mult = simplicity.origin_mult;
        let origin_idx = (origin_mult > 0 && iv.contains(&zero))
            .then(|| roots.iter().position(|r| r.lo < zero && zero < r.hi))
            .flatten();
        let off_origin_simple = roots
            .iter()
            .enumerate()
            .all(|(i, r)| r.multiplicity == 1 || Some(i) == origin_idx);

        let (predicted, exact_positive, exact_negative, matches) = if fam.is_symmetric() {
            let pred = predicted_symmetric(lam)?;
            let pos = iv
                .above(&zero)
                .map_or(Ok(0), |half| sturm_count(&w, &half))?;
            let neg = iv
                .below(&zero)
                .map_or(Ok(0), |half| sturm_count(&w, &half))?;
            let matches = roots.len() == pred.total_distinct
                && origin_mult == pred.origin_multiplicity
                && pos == pred.positive_count
                && neg == pred.negative_count
                && off_origin_simple;
            (Prediction::Symmetric(pred), Some(pos), Some(neg), matches)
        } else {
            let count = predicted_count_generic(lam);
            let all_simple = roots.iter().all(|r| r.multiplicity == 1);
            (
                Prediction::Generic { count },
                None,
                None,
                roots.len() == count && all_simple,
            )
        };

        let probes = k.smallest_absent(self.probe_count);
        let witnesses = scan_with(&self.engine, lam, &w, &probes)?;
        let degenerate = !witnesses.is_empty();
        let status = match (degenerate, matches) {
            (true, _) => Status::Degenerate,
            (false, true) => Status::Pass,
            (false, false) => Status::Mismatch,
        };
        Ok(VerificationReport {
            family: fam.label(),
            partition: lam.clone(),
            k: k.indices().to_vec(),
            d_lambda: d_lambda(lam),
            wronskian: w,
            predicted,
            exact_count: roots.len(),
            exact_positive,
            exact_negative,
            exact_origin_mult: origin_mult,
            root_multiplicities: roots.iter().map(|r| r.multiplicity).collect(),
            endpoint_roots: EndpointRoots {
                lo: detail.root_at_lo,
                hi: detail.root_at_hi,
            },
            simplicity,
            probes,
            degenerate,
            witnesses,
            status,
            pass: status == Status::Pass,
            label: matches!(fam.kind(), FamilyKind::FromMoments { .. })
                .then(|| "conjecture probe".to_string()),
        })
    }
}

pub fn verify_partition(fam: &Family, lam: &Partition) -> Result<VerificationReport> {
    Verifier::new(fam.clone()).verify(lam)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DualityReport {
    pub partition: Partition,
    pub conjugate: Partition,
    pub holds: bool,
    /// `c` with `H_{λ̄}(x) = c · (−i)^{|λ|} H_λ(ix)`.
    #[serde(with = "rational::serde_str::option")]
    pub constant: Option<Rational>,
}

/// Compares the Hermite Wronskian of the conjugate partition with the rotated one.
pub fn duality_check(lam: &Partition) -> Result<DualityReport> {
    let engine = WronskianEngine::new(Family::hermite());
    let conj = conjugate(lam);
    let direct = engine.wronskian_det(&conj)?.poly;
    let rotated = rotate_imaginary(&engine.wronskian_det(lam)?.poly, lam.weight())?;
    let constant = match (direct.leading(), rotated.leading()) {
        (Some(a), Some(b)) if direct.degree() == rotated.degree() => {
            let c = a / b;
            (rotated.scale(&c) == direct).then_some(c)
        }
        _ => None,
    };
    Ok(DualityReport {
        partition: lam.clone(),
        conjugate: conj,
        holds: constant.is_some(),
        constant,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FelderCounts {
    pub mu: Vec<usize>,
    pub partition: Partition,
    pub real: usize,
    /// Distinct nonzero purely imaginary roots.
    pub imaginary: usize,
}

impl FelderCounts {
    pub fn expected_imaginary(&self) -> usize {
        2 * self.mu.iter().filter(|m| *m % 2 == 1).count()
    }

    pub fn agrees(&self) -> bool {
        self.real == 0 && self.imaginary == self.expected_imaginary()
    }
}

/// Real and imaginary root counts of the Hermite Wronskian of `(μ_1, μ_1, μ_2, μ_2, …)`.
pub fn felder_counts(mu: &[usize]) -> Result<FelderCounts> {
    let lam = doubled_partition(mu)?;
    let w = WronskianEngine::new(Family::hermite())
        .wronskian_det(&lam)?
        .poly;
    let line = Interval::real_line();
    let real = sturm_count(&w, &line)?;
    // roots iy of w are the real roots y of the rotated polynomial
    let rotated = rotate_imaginary(&w, lam.weight())?;
    let at_origin = usize::from(w.eval(&Rational::zero()).is_zero());
    let imaginary = sturm_count(&rotated, &line)? - at_origin;
    Ok(FelderCounts {
        mu: mu.to_vec(),
        partition: lam,
        real,
        imaginary,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KarlinSzegoReport {
    pub n: usize,
    pub ell: usize,
    pub count: usize,
    pub all_simple: bool,
    pub next_count: usize,
    /// `None` when neither `W(n, ℓ)` nor `W(n + 1, ℓ)` has roots in the interval.
    pub interlaces_with_next: Option<bool>,
}

/// Roots of `W(n, ℓ) = Wr[P_n, …, P_{n+ℓ−1}]` and interlacing with `W(n + 1, ℓ)`.
pub fn karlin_szego_check(fam: &Family, n: usize, ell: usize) -> Result<KarlinSzegoReport> {
    if ell == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "ell",
            value: "0".into(),
        });
    }
    let engine = WronskianEngine::new(fam.clone());
    let iv = fam.interval();
    let w = engine.wronskian_det(&Partition::constant(n, ell)?)?.poly;
    let next = engine
        .wronskian_det(&Partition::constant(n + 1, ell)?)?
        .poly;
    let roots = RootIsolator::new(&w, iv)?.isolate();
    Ok(KarlinSzegoReport {
        n,
        ell,
        count: roots.len(),
        all_simple: roots.iter().all(|r| r.multiplicity == 1),
        next_count: sturm_count(&next, iv)?,
        interlaces_with_next: strictly_interlace(&w, &next, iv)?,
    })
}

fn overlap(a: &IsolatedRoot, b: &IsolatedRoot) -> bool {
    a.lo < b.hi && b.lo < a.hi
}

/// Whether the distinct roots of `p` and `q` in `iv` strictly alternate.
///
/// Isolating intervals are bisected until no interval of `p` meets one of `q`;
/// the order of the disjoint intervals then orders the roots exactly.
pub fn strictly_interlace(p: &RatPoly, q: &RatPoly, iv: &Interval) -> Result<Option<bool>> {
    let (ip, iq) = (RootIsolator::new(p, iv)?, RootIsolator::new(q, iv)?);
    let (mut rp, mut rq) = (ip.isolate(), iq.isolate());
    if rp.is_empty() && rq.is_empty() {
        return Ok(None);
    }
    if rp.len().abs_diff(rq.len()) > 1 || sturm_count(&gcd(p, q)?, iv)? > 0 {
        return Ok(Some(false));
    }
    loop {
        let mut clash = false;
        for a in rp.iter_mut() {
            for b in rq.iter_mut() {
                if overlap(a, b) {
                    clash = true;
                    if a.width() >= b.width() {
                        ip.bisect(a);
                    } else {
                        iq.bisect(b);
                    }
                }
            }
        }
        if !clash {
            break;
        }
    }
    let mut merged: Vec<(Rational, bool)> = rp
        .into_iter()
        .map(|r| (r.lo, true))
        .chain(rq.into_iter().map(|r| (r.lo, false)))
        .collect();
    merged.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Some(merged.windows(2).all(|w| w[0].1 != w[1].1)))
}
